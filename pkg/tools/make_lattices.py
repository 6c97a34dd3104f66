#!/usr/bin/env python3
"""Construct and select the shipped lattice data files.

Hyperbolic family: a 16-vertex octagonal base lattice is found by direct
search (two fixed 8-cycle red faces plus an enumerated red matching);
larger members are abelian voltage covers of a base: voltages live in a
finite abelian group A, face boundary words are constrained to have
trivial voltage so faces lift to octagons, and the genus/qubit counts
scale by |A|. Candidate covers are filtered by
  * loop-form code distance == target (Table values), and
  * "strong cleanliness": every (face, face) error-signature class
    contains exactly the two endpoints of one check edge, so errors with
    identical detector patterns always have identical logical action.
Honeycomb family: covers of the 6-vertex torus lattice (K_3,3) with the
same machinery, girth 6.

Usage: python tools/make_lattices.py [--out DIR] [--quick] [--h2160]
"""

from __future__ import annotations

import argparse
import itertools
import os
import random
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hyperfloquet.lattice import ColoredLattice, LatticeError, save_lattice
from hyperfloquet import homology

# error kind -> the two face colors its detection events land on
PAIR_FACES = {"X": (2, 1), "Y": (0, 2), "Z": (0, 1)}
OWN_COLOR = {"X": 0, "Y": 1, "Z": 2}  # check color whose Pauli matches the kind


# ---------------------------------------------------------------- H16 search


def h16_base() -> ColoredLattice:
    """Deterministic 16-vertex octagonal lattice with loop-form d=2.

    Red faces fixed as two disjoint 8-cycles with alternating green/blue
    edges; the red perfect matching below is the first one (in
    enumeration order) that minimizes indistinguishability conflicts
    among the d=2 candidates.
    """
    gb_edges = []
    for base in (0, 8):
        for i in range(8):
            u = base + i
            v = base + (i + 1) % 8
            c = 0 if i % 2 == 0 else 1
            gb_edges.append((u, v, c))
    red = [(0, 2), (1, 8), (3, 10), (4, 6), (5, 12), (7, 14), (9, 11), (13, 15)]
    edges = gb_edges + [(u, v, 2) for (u, v) in red]
    return ColoredLattice(16, 8, edges, name="h16")


def mk_base() -> ColoredLattice:
    """The 16-vertex Cayley lattice of <X, Y, Z> (loop-form d=4).

    Not shipped (its loop-form distance disagrees with the true distance)
    but useful as an alternative cover base.
    """
    elems = [(p, x, z) for p in range(4) for x in (0, 1) for z in (0, 1)]
    idx = {e: i for i, e in enumerate(elems)}

    def mul(a, b):
        return ((a[0] + b[0] + 2 * a[2] * b[1]) % 4, a[1] ^ b[1], a[2] ^ b[2])

    gens = [(0, 1, 0), (1, 1, 1), (0, 0, 1)]
    edges = []
    for i, e in enumerate(elems):
        for c, g in enumerate(gens):
            j = idx[mul(e, g)]
            if i < j:
                edges.append((i, j, c))
    return ColoredLattice(16, 8, edges, name="mk16")


# ------------------------------------------------------------ cleanliness


def strongly_clean(lat: ColoredLattice) -> bool:
    """Every (face_a, face_b) class is exactly one own-color edge pair.

    Then any two error mechanisms with identical detector patterns are
    the paper's indistinguishable quadruple, whose logical actions agree.
    """
    for kind, (fa, fb) in PAIR_FACES.items():
        own = OWN_COLOR[kind]
        groups: dict[tuple[int, int], list[int]] = {}
        for q in range(lat.n):
            groups.setdefault((lat.face_at[q][fa], lat.face_at[q][fb]), []).append(q)
        for qs in groups.values():
            if len(qs) != 2:
                return False
            q1, q2 = qs
            e = lat.edge_index.get((min(q1, q2), max(q1, q2)))
            if e is None or lat.edge_color(e) != own:
                return False
    return True


# ------------------------------------------------------------ voltage covers


def face_orientation_rows(lat: ColoredLattice):
    """Integer face-boundary rows: entry +-1 per traversal direction."""
    rows = []
    for f in lat.faces:
        row = [0] * lat.n_edges
        k = len(f.vertices)
        for i in range(k):
            u = f.vertices[i]
            v = f.vertices[(i + 1) % k]
            e = f.boundary_edges[i]
            eu, ev, _ = lat.edges[e]
            row[e] += 1 if (u, v) == (eu, ev) else -1
        rows.append(row)
    return rows


def solution_basis_mod(rows, n_cols, modulus):
    """Generators of {x in Z_m^E : rows . x = 0 mod m} via Smith normal form."""
    from sympy import Matrix
    from sympy.matrices.normalforms import smith_normal_form

    M = Matrix(rows)
    # SNF: D = U*M*V, solutions of M x = 0 mod m are x = V y with D y = 0 mod m
    D = smith_normal_form(M)
    m_rows, m_cols = M.shape
    # recover U, V by tracking: sympy lacks a public transform API, so do
    # the reduction manually (small matrices only).
    U = Matrix.eye(m_rows)
    V = Matrix.eye(m_cols)
    A = M[:, :]

    def min_nonzero(A, s):
        best = None
        for i in range(s, A.rows):
            for j in range(s, A.cols):
                if A[i, j] != 0 and (best is None or abs(A[i, j]) < abs(A[best[0], best[1]])):
                    best = (i, j)
        return best

    s = 0
    while True:
        piv = min_nonzero(A, s)
        if piv is None:
            break
        i, j = piv
        A.row_swap(s, i); U.row_swap(s, i)
        A.col_swap(s, j); V.col_swap(s, j)
        progress = True
        while progress:
            progress = False
            for r in range(s + 1, A.rows):
                if A[r, s] != 0:
                    q = A[r, s] // A[s, s]
                    A[r, :] = A[r, :] - q * A[s, :]
                    U[r, :] = U[r, :] - q * U[s, :]
                    if A[r, s] != 0:
                        A.row_swap(s, r); U.row_swap(s, r)
                        progress = True
            for c in range(s + 1, A.cols):
                if A[s, c] != 0:
                    q = A[s, c] // A[s, s]
                    A[:, c] = A[:, c] - q * A[:, s]
                    V[:, c] = V[:, c] - q * V[:, s]
                    if A[s, c] != 0:
                        A.col_swap(s, c); V.col_swap(s, c)
                        progress = True
        s += 1
    # columns of V for y-coordinates with D[y,y] == 0 mod m are free mod m;
    # coordinates with d | gcd structure give torsion generators m//gcd(d, m)
    import math
    gens = []
    for y in range(m_cols):
        d = abs(A[y, y]) if y < min(A.rows, A.cols) else 0
        if d % modulus == 0:
            # free coordinate: x = V[:, y], order m
            vec = [int(V[r, y]) % modulus for r in range(m_cols)]
            gens.append((vec, modulus))
        else:
            g = math.gcd(d, modulus)
            if g != modulus:
                # torsion: (m//g) * V[:, y] satisfies M x = 0 mod m
                scale = modulus // g
                vec = [(int(V[r, y]) * scale) % modulus for r in range(m_cols)]
                gens.append((vec, g))
    return gens


class VoltageSpace:
    """Parametrized solutions of the face-triviality constraints mod m."""

    def __init__(self, lat: ColoredLattice, modulus: int):
        self.lat = lat
        self.modulus = modulus
        rows = face_orientation_rows(lat)
        self.gens = solution_basis_mod(rows, lat.n_edges, modulus)

    def assignment(self, coeffs) -> list[int]:
        E = self.lat.n_edges
        out = [0] * E
        for c, (vec, order) in zip(coeffs, self.gens):
            for e in range(E):
                out[e] = (out[e] + c * vec[e]) % self.modulus
        return out

    def coeff_space(self):
        return [order for (_, order) in self.gens]


def build_cover(lat: ColoredLattice, voltage_cols: list[list[int]],
                moduli: list[int], name: str) -> ColoredLattice:
    """Cover with voltage group Z_m1 x Z_m2 x ...; one voltage column per factor."""
    import numpy as np
    groups = [range(m) for m in moduli]
    sheets = list(itertools.product(*groups))
    sidx = {s: i for i, s in enumerate(sheets)}
    m = len(sheets)
    edges = []
    for e, (u, v, c) in enumerate(lat.edges):
        for s in sheets:
            t = tuple((s[k] + voltage_cols[k][e]) % moduli[k] for k in range(len(moduli)))
            edges.append((u * m + sidx[s], v * m + sidx[t], c))
    return ColoredLattice(lat.n * m, lat.girth, edges, name=name)


def cover_search(base: ColoredLattice, moduli: list[int], target_d: int,
                 name: str, max_tries: int | None = None, seed: int = 7,
                 verbose: bool = True):
    """Search voltage assignments for a strongly-clean cover with the
    target loop-form distance. Enumerates when feasible, samples otherwise."""
    spaces = [VoltageSpace(base, m) for m in moduli]
    coeff_orders = [sp.coeff_space() for sp in spaces]
    n_cells = 1
    for m in moduli:
        n_cells *= m
    total = 1
    for orders in coeff_orders:
        for o in orders:
            total *= o
    rng = random.Random(seed)

    def candidate(coeff_sets):
        cols = [sp.assignment(cs) for sp, cs in zip(spaces, coeff_sets)]
        try:
            lat = build_cover(base, cols, moduli, name)
        except LatticeError:
            return None
        if not strongly_clean(lat):
            return None
        basis = homology.cocycle_basis(lat)
        d = homology.code_distance(lat, basis)
        if d != target_d:
            return None
        return lat

    tried = 0
    t0 = time.time()
    if max_tries is None and total <= 200_000:
        spaces_iter = itertools.product(*[
            itertools.product(*[range(o) for o in orders]) for orders in coeff_orders
        ])
        for coeff_sets in spaces_iter:
            tried += 1
            lat = candidate(coeff_sets)
            if lat is not None:
                if verbose:
                    print(f"  {name}: hit after {tried} candidates "
                          f"({time.time()-t0:.1f}s)")
                return lat, coeff_sets
    else:
        cap = max_tries or 200_000
        while tried < cap:
            tried += 1
            coeff_sets = [tuple(rng.randrange(o) for o in orders)
                          for orders in coeff_orders]
            lat = candidate(coeff_sets)
            if lat is not None:
                if verbose:
                    print(f"  {name}: hit after {tried} samples "
                          f"({time.time()-t0:.1f}s)")
                return lat, coeff_sets
    return None, None


# ------------------------------------------------------------ honeycomb base


def hc6_base() -> ColoredLattice:
    """Smallest honeycomb torus (K_3,3 with a hexagonal 3-coloring)."""
    # bipartition {0,1,2} x {3,4,5}; color = (i + j) % 3 gives three
    # disjoint perfect matchings whose pairwise unions are 6-cycles
    edges = []
    for i in range(3):
        for j in range(3):
            edges.append((i, 3 + j, (i + j) % 3))
    return ColoredLattice(6, 6, edges, name="hc6")


# ------------------------------------------------------------ driver


def report(lat: ColoredLattice):
    basis = homology.cocycle_basis(lat)
    d = homology.code_distance(lat, basis)
    k = basis.h1_dim
    clean = strongly_clean(lat)
    print(f"  {lat.name}: [[{lat.n}, {k}, {d}]] genus={lat.genus} "
          f"faces={lat.n_faces} strongly_clean={clean}")
    return d, k, clean


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(
        os.path.dirname(__file__), "..", "src", "hyperfloquet", "data"))
    ap.add_argument("--quick", action="store_true",
                    help="only H16/H64 and small honeycombs")
    ap.add_argument("--h2160", action="store_true",
                    help="also search the 2160-qubit cover (slow)")
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)

    made = {}

    print("H16 base:")
    h16 = h16_base()
    report(h16)
    made["h16"] = h16

    print("H64 search (|A|=4 covers of H16):")
    for moduli in ([2, 2], [4]):
        lat, _ = cover_search(h16, moduli, target_d=4, name="h64")
        if lat is not None:
            made["h64"] = lat
            report(lat)
            break

    if not args.quick:
        print("H144 search (|A|=9 covers of H16):")
        for moduli in ([3, 3], [9]):
            lat, _ = cover_search(h16, moduli, target_d=6, name="h144")
            if lat is not None:
                made["h144"] = lat
                report(lat)
                break

        print("H400 search (|A|=25 covers of H16):")
        for moduli in ([5, 5], [25]):
            lat, _ = cover_search(h16, moduli, target_d=8, name="h400",
                                  max_tries=400_000)
            if lat is not None:
                made["h400"] = lat
                report(lat)
                break

    if args.h2160:
        print("H2160 search (|A|=135 covers of H16 / |A|=15 of H144):")
        lat, _ = cover_search(h16, [3, 45], target_d=10, name="h2160",
                              max_tries=30_000)
        if lat is None and "h144" in made:
            lat, _ = cover_search(made["h144"], [15], target_d=10, name="h2160",
                                  max_tries=30_000)
        if lat is not None:
            made["h2160"] = lat
            report(lat)

    print("Honeycombs (covers of K_3,3):")
    hc6 = hc6_base()
    hc_targets = {"hc24": ([2, 2], 4), "hc42": ([7], 6), "hc54": ([3, 3], 6),
                  "hc96": ([4, 4], 8)}
    if args.quick:
        hc_targets = {"hc24": ([2, 2], 4)}
    for name, (moduli, want_d) in hc_targets.items():
        best = None
        for d_try in range(want_d, 1, -2):
            lat, _ = cover_search(hc6, moduli, target_d=d_try, name=name)
            if lat is not None:
                best = lat
                break
        if best is not None:
            made[name] = best
            report(best)

    for name, lat in made.items():
        path = os.path.join(args.out, f"{name}.lat")
        save_lattice(lat, path)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
