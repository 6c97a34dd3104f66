"""Exact n-qubit Pauli algebra over the GF(2) symplectic representation.

An operator is stored as packed X/Z bit-vectors plus a sign in {+1, -1}.
Internally a qubit with x=1, z=1 carries a Y (the Hermitian i*XZ), so
every representable operator is Hermitian. Products that would pick up a
global phase of +-i are rejected: nothing built by this package (checks,
plaquettes, loop operators, logical representatives) ever produces one,
so such a result signals a construction bug upstream.
"""

from __future__ import annotations

from dataclasses import dataclass

_PAULI_CHARS = "IXZY"  # index = x + 2*z
_CHAR_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}


class NonHermitianProductError(ValueError):
    """A Pauli product came out with a +-i global phase."""


@dataclass(frozen=True)
class PauliOperator:
    """n-qubit Hermitian Pauli with sign, immutable and hashable."""

    n: int
    x_bits: int
    z_bits: int
    sign: int = 1

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative qubit count")
        mask = (1 << self.n) - 1
        if self.x_bits & ~mask or self.z_bits & ~mask:
            raise ValueError("bit-vector exceeds qubit count")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +-1, got {self.sign}")

    @classmethod
    def identity(cls, n: int) -> "PauliOperator":
        return cls(n, 0, 0, 1)

    @classmethod
    def single(cls, n: int, qubit: int, kind: str) -> "PauliOperator":
        """Single-qubit X, Y or Z embedded in n qubits."""
        if not 0 <= qubit < n:
            raise ValueError(f"qubit {qubit} out of range for n={n}")
        x, z = _CHAR_BITS[kind]
        return cls(n, x << qubit, z << qubit)

    @classmethod
    def from_label(cls, label: str, sign: int = 1) -> "PauliOperator":
        """Build from a string like 'XIZY' (qubit 0 first)."""
        x = z = 0
        for q, ch in enumerate(label):
            xb, zb = _CHAR_BITS[ch]
            x |= xb << q
            z |= zb << q
        return cls(len(label), x, z, sign)

    def to_label(self) -> str:
        chars = []
        for q in range(self.n):
            chars.append(_PAULI_CHARS[((self.x_bits >> q) & 1) + 2 * ((self.z_bits >> q) & 1)])
        return ("+" if self.sign > 0 else "-") + "".join(chars)

    @property
    def weight(self) -> int:
        """Number of qubits acted on non-trivially."""
        return (self.x_bits | self.z_bits).bit_count()

    def support(self) -> list[int]:
        bits = self.x_bits | self.z_bits
        out = []
        q = 0
        while bits:
            if bits & 1:
                out.append(q)
            bits >>= 1
            q += 1
        return out

    def kind_at(self, qubit: int) -> str:
        return _PAULI_CHARS[((self.x_bits >> qubit) & 1) + 2 * ((self.z_bits >> qubit) & 1)]

    def __repr__(self):  # pragma: no cover - debug aid
        if self.n <= 64:
            return f"PauliOperator({self.to_label()})"
        return f"PauliOperator(n={self.n}, weight={self.weight}, sign={self.sign:+d})"


def multiply(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    """Group product a*b with exact sign tracking.

    Raises NonHermitianProductError when the result would carry a +-i
    phase (possible only for non-commuting factors).
    """
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} != {b.n}")
    xc = a.x_bits ^ b.x_bits
    zc = a.z_bits ^ b.z_bits
    # Per qubit, with P(x,z) = i^(xz) X^x Z^z:
    #   P(a)P(b) = i^(xa za + xb zb - xc zc + 2 za xb) P(c)
    exponent = (
        (a.x_bits & a.z_bits).bit_count()
        + (b.x_bits & b.z_bits).bit_count()
        - (xc & zc).bit_count()
        + 2 * (a.z_bits & b.x_bits).bit_count()
    ) % 4
    if exponent % 2:
        raise NonHermitianProductError(
            "product has a +-i global phase; composite operators here must be Hermitian"
        )
    sign = a.sign * b.sign * (1 if exponent == 0 else -1)
    return PauliOperator(a.n, xc, zc, sign)


def commutes(a: PauliOperator, b: PauliOperator) -> bool:
    """Symplectic inner product: true iff the operators commute."""
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} != {b.n}")
    return ((a.x_bits & b.z_bits).bit_count() + (a.z_bits & b.x_bits).bit_count()) % 2 == 0


def product(ops: list[PauliOperator], n: int | None = None) -> PauliOperator:
    """Product of a list of operators (identity for an empty list)."""
    if not ops:
        if n is None:
            raise ValueError("empty product needs an explicit qubit count")
        return PauliOperator.identity(n)
    acc = ops[0]
    for op in ops[1:]:
        acc = multiply(acc, op)
    return acc
