"""Endomorphisms, composition order, inner detection, model contract."""

import random

from goeritz.aut import (Endo, compose, compose_all, identity_endo, is_inner,
                         model_compose, model_power, parse_endo,
                         verify_mapping_class)
from goeritz.twists import BOUNDARY, twist_library
from goeritz.words import invert, multiply, reduce

LETTERS = (1, -1, 2, -2, 3, -3, 4, -4)


def _rand_word(rng, n):
    return reduce([rng.choice(LETTERS) for _ in range(rng.randint(0, n))])


def test_endo_is_homomorphism():
    rng = random.Random(21)
    lib = twist_library()
    for name in sorted(lib):
        f = lib[name].forward
        for _ in range(100):
            u, v = _rand_word(rng, 10), _rand_word(rng, 10)
            assert f(multiply(u, v)) == multiply(f(u), f(v))
            assert f(invert(u)) == invert(f(u))


def test_compose_order():
    # compose(f, g) applies g first
    f = Endo({1: (1, 2), 2: (2,), 3: (3,), 4: (4,)})
    g = Endo({1: (1,), 2: (2, 3), 3: (3,), 4: (4,)})
    fg = compose(f, g)
    assert fg.images[2] == (2, 3)          # g moved b1, f fixed the result
    gf = compose(g, f)
    assert gf.images[1] == (1, 2, 3)       # f then g expands b1
    # compose_all is rightmost-first
    assert compose_all(f, g).images == fg.images
    assert compose_all(g, f).images == gf.images
    assert compose_all().images == identity_endo().images


def test_serialize_round_trip():
    lib = twist_library()
    for name in sorted(lib):
        f = lib[name].forward
        assert parse_endo(f.serialize()).images == f.images
    try:
        parse_endo("a1 = a1\nb1 = b1")
        assert False, "expected ValueError on missing images"
    except ValueError:
        pass


def test_is_inner():
    rng = random.Random(22)
    for _ in range(80):
        w = _rand_word(rng, 5)
        f = Endo({g: multiply(w, (g,), invert(w)) for g in (1, 2, 3, 4)})
        got = is_inner(f)
        assert got is not None
        assert all(multiply(got, (g,), invert(got)) == f.images[g]
                   for g in (1, 2, 3, 4))
    lib = twist_library()
    assert is_inner(lib["T_a1"].forward) is None
    assert is_inner(lib["T_bd"].forward) is not None  # conjugation by boundary
    assert is_inner(lib["T_d1"].forward) is None      # only half the letters


def test_model_contract():
    lib = twist_library()
    for name in sorted(lib):
        assert verify_mapping_class(lib[name], BOUNDARY)["ok"], name
    # breaking the inverse breaks the contract
    broken = lib["T_a1"]
    report = verify_mapping_class(
        type(broken)(broken.name, broken.forward, broken.forward), BOUNDARY)
    assert not report["ok"]
    assert not report["left_inverse"]


def test_model_power_and_compose():
    lib = twist_library()
    m = lib["T_a1"]
    sq = model_power(m, 2)
    assert sq.forward.images[2] == (2, 1, 1)
    assert model_power(m, -1).forward.images == m.backward.images
    assert model_power(m, 0).forward.images == identity_endo().images
    both = model_compose("w", m, lib["T_b1"])
    assert verify_mapping_class(both, BOUNDARY)["ok"]
