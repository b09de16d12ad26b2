"""Finite lattices, residuated maps and invertible matrices over Res(L).

Elements are dense indices into ``Lattice.labels``. A residuated map is the
tuple of its values; a matrix is a list of rows of such tuples.
"""

from ._resmat import (
    Error,
    Lattice,
    aut_count,
    count_invertible,
    factor,
    generated_semiring_size,
    invert,
    is_invertible,
    is_irreducible,
    mat_mul,
    oracle_is_invertible,
    product,
    random_invertible,
    residuated_maps,
    validate_semiring,
)


def identity(lattice, n):
    """The n x n identity matrix over Res(lattice)."""
    one = list(range(lattice.size))
    zero = [lattice.bottom] * lattice.size
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


__all__ = [
    "Error",
    "Lattice",
    "aut_count",
    "count_invertible",
    "factor",
    "generated_semiring_size",
    "identity",
    "invert",
    "is_invertible",
    "is_irreducible",
    "mat_mul",
    "oracle_is_invertible",
    "product",
    "random_invertible",
    "residuated_maps",
    "validate_semiring",
]
