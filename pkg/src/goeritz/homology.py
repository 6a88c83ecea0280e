"""Homological shadows: Sp(4, Z) images of the modeled mapping classes.

Basis of H1 is ([a1], [b1], [a2], [b2]); the intersection form is the
block-diagonal standard symplectic form J.  Matrices act on column
vectors; the shadow of a composition is the product of shadows in the
same (rightmost-first) order.
"""

import numpy as np

from .words import GENERATORS, exponent_sum

J = np.array([
    [0, 1, 0, 0],
    [-1, 0, 0, 0],
    [0, 0, 0, 1],
    [0, 0, -1, 0],
], dtype=np.int64)


def abelianization_matrix(f):
    """4x4 integer matrix whose g-th column is the exponent-sum vector of
    f(g).  Raises ValueError if the result is not symplectic."""
    M = np.array([exponent_sum(f.images[g]) for g in GENERATORS],
                 dtype=np.int64).T
    if not is_symplectic(M):
        raise ValueError("abelianization is not symplectic:\n%r" % M)
    return M


def is_symplectic(M):
    return bool(np.array_equal(M.T @ J @ M, J))


def intersection_number(u, v):
    """Algebraic intersection of homology classes (as exponent-sum vectors
    or words)."""
    cu = np.asarray(exponent_sum(u) if isinstance(u, tuple) else u, dtype=np.int64)
    cv = np.asarray(exponent_sum(v) if isinstance(v, tuple) else v, dtype=np.int64)
    return int(cu @ J @ cv)


def transvection(c, sign):
    """Homological action of a twist about a curve with class c:
    x -> x + sign * <x, c> * c, where <x, c> = x^T J c."""
    c = np.asarray(c, dtype=np.int64).reshape(4)
    return np.eye(4, dtype=np.int64) - sign * np.outer(c, c @ J)


def matrix_product(*Ms):
    """Rightmost-first product, matching compose_all."""
    out = np.eye(4, dtype=np.int64)
    for M in Ms:
        out = out @ M
    return out


def serialize_matrix(M):
    """Row-major list of 16 ints."""
    return [int(x) for x in np.asarray(M, dtype=np.int64).reshape(-1)]


def parse_matrix(vals):
    M = np.array(list(vals), dtype=np.int64).reshape(4, 4)
    return M
