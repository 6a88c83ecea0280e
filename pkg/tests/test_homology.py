"""Shadows: symplectic structure, functoriality, transvections."""

import random

import numpy as np
import pytest

from goeritz.aut import Endo, compose
from goeritz.homology import (J, abelianization_matrix, intersection_number,
                              is_symplectic, matrix_product, parse_matrix,
                              serialize_matrix, transvection)
from goeritz.twists import CURVES, TWIST_CURVES, twist_library
from goeritz.words import exponent_sum


def test_form_is_standard():
    assert np.array_equal(J.T, -J)
    assert np.array_equal(J @ J, -np.eye(4, dtype=np.int64))
    assert intersection_number((1,), (2,)) == 1
    assert intersection_number((2,), (1,)) == -1
    assert intersection_number((1,), (3,)) == 0
    assert intersection_number(CURVES["delta1"], CURVES["mu1"]) == 0


def test_shadow_functorial():
    rng = random.Random(31)
    lib = twist_library()
    names = sorted(lib)
    for _ in range(300):
        f = lib[rng.choice(names)].forward
        g = lib[rng.choice(names)].forward
        Mf, Mg = abelianization_matrix(f), abelianization_matrix(g)
        assert np.array_equal(abelianization_matrix(compose(f, g)), Mf @ Mg)


def test_shadows_symplectic():
    lib = twist_library()
    for name in sorted(lib):
        assert is_symplectic(abelianization_matrix(lib[name].forward)), name


def test_non_symplectic_rejected():
    # collapsing a handle is a perfectly good endomorphism with a
    # degenerate shadow
    f = Endo({1: (1,), 2: (2,), 3: (), 4: ()})
    with pytest.raises(ValueError):
        abelianization_matrix(f)


def test_transvections_match_twists():
    lib = twist_library()
    for name in sorted(lib):
        c = exponent_sum(CURVES[TWIST_CURVES[name]])
        M = abelianization_matrix(lib[name].forward)
        assert np.array_equal(M, transvection(c, -1)), name


def test_transvection_symplectic_any_class():
    rng = random.Random(32)
    for _ in range(200):
        c = [rng.randint(-3, 3) for _ in range(4)]
        for s in (1, -1):
            assert is_symplectic(transvection(c, s))


def test_matrix_serialization():
    M = transvection((1, 0, 1, 0), -1)
    vals = serialize_matrix(M)
    assert len(vals) == 16 and all(isinstance(v, int) for v in vals)
    assert np.array_equal(parse_matrix(vals), M)


def test_matrix_product_order():
    lib = twist_library()
    A = abelianization_matrix(lib["T_a1"].forward)
    B = abelianization_matrix(lib["T_b1"].forward)
    assert np.array_equal(matrix_product(A, B), A @ B)
    assert np.array_equal(matrix_product(), np.eye(4, dtype=np.int64))
