"""Hyperbolic Floquet codes: lattices, homology, decoding, thresholds."""

from .pauli import PauliOperator, multiply, commutes, NonHermitianProductError
from .lattice import (
    ColoredLattice,
    Face,
    GREEN,
    BLUE,
    RED,
    LatticeError,
    UncolorableError,
    SearchBudgetExceededError,
    check_operator,
    find_coloring,
    load_lattice,
    parse_lattice,
    plaquette_operator,
    round_color,
    save_lattice,
    write_lattice,
)

__version__ = "0.1.0"

__all__ = [
    "PauliOperator", "multiply", "commutes", "NonHermitianProductError",
    "ColoredLattice", "Face", "GREEN", "BLUE", "RED",
    "LatticeError", "UncolorableError", "SearchBudgetExceededError",
    "check_operator", "find_coloring", "load_lattice", "parse_lattice",
    "plaquette_operator", "round_color", "save_lattice", "write_lattice",
    "__version__",
]
