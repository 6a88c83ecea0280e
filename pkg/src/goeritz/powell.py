"""Generator models and constrained discovery.

Three of the four generators have closed forms: the half twist D_omega
(a cube of elementary twists), the handle swap D_eta12, and boundary
twists.  The slide generator D_theta and the spin class D_nu are found
by constrained exhaustive search over boundary-fixing endomorphisms with
the prescribed homological shadow; candidates are returned in a
deterministic shortlex order, each packaged with an inverse found in the
same search space.
"""

from dataclasses import dataclass

import numpy as np

from .aut import (Endo, MappingClassModel, compose, identity_endo,
                  model_compose, model_power, verify_mapping_class)
from .homology import abelianization_matrix, parse_matrix, serialize_matrix
from .twists import (ACCEPTED_SIGN, BOUNDARY, CURVES, DELTA1, DELTA2,
                     boundary_twists, elementary_twists)
from .words import (GENERATORS, all_words, canonical_cycle, cyclic_core,
                    conjugacy_solutions, exponent_sum, invert, multiply,
                    words_with_exponent_sum)


def half_twist():
    """D_omega: half twist on handle 1, the cube of a T_a1 T_b1 pair."""
    t = elementary_twists()
    pair = model_compose("_", t["T_a1"], t["T_b1"])
    m = model_power(pair, 3)
    return MappingClassModel("D_omega", m.forward, m.backward)


_S0_FWD = Endo({
    1: (3,),
    2: (4,),
    3: multiply(invert(DELTA2), (1,), DELTA2),
    4: multiply(invert(DELTA2), (2,), DELTA2),
})
_S0_BWD = Endo({
    1: multiply(DELTA1, (3,), invert(DELTA1)),
    2: multiply(DELTA1, (4,), invert(DELTA1)),
    3: (1,),
    4: (2,),
})


def swap(variant=0, sign=ACCEPTED_SIGN):
    """D_eta12: handle interchange.  Variants (toggle t6) differ by
    inversion or by boundary-twist factors; all conjugate D_omega to the
    same D_omega'."""
    base = MappingClassModel("D_eta12", _S0_FWD, _S0_BWD)
    if variant == 0:
        return base
    bt = boundary_twists(sign)
    forms = {
        1: base.inverse(),
        2: model_compose("D_eta12", base, bt["T_d1"]),
        3: model_compose("D_eta12", base, bt["T_d2"]),
        4: model_compose("D_eta12", base, bt["T_d1"].inverse()),
        5: model_compose("D_eta12", base, bt["T_d2"].inverse()),
    }
    m = forms[variant]
    return MappingClassModel("D_eta12", m.forward, m.backward)


SWAP_VARIANTS = (0, 1, 2, 3, 4, 5)


def conjugated_half_twist(eta, omega=None):
    """D_omega' = D_eta12 o D_omega o D_eta12^-1 (variant-independent)."""
    omega = omega or half_twist()
    m = model_compose("D_omega'", eta, omega, eta.inverse())
    return MappingClassModel("D_omega'", m.forward, m.backward)


def power_realizations(sign=ACCEPTED_SIGN):
    """How boundary twists arise as powers: exponents e with
    D_omega^2 = T_d1^e, D_omega'^2 = T_d2^e', and the swap square
    D_eta12^2 = T_bd^x T_d1^y T_d2^z.  Returns the exponent record."""
    bt = boundary_twists(sign)
    omega, eta = half_twist(), swap(0, sign)
    omega2 = model_power(omega, 2).forward
    oprime2 = model_power(conjugated_half_twist(eta, omega), 2).forward
    eta2 = model_power(eta, 2).forward

    def match_power(f, m, lo=-2, hi=2):
        for e in range(lo, hi + 1):
            if f == model_power(m, e).forward:
                return e
        return None

    rec = {
        "half_sq_d1": match_power(omega2, bt["T_d1"]),
        "conj_half_sq_d2": match_power(oprime2, bt["T_d2"]),
    }
    swap_sq = None
    for x in range(-2, 3):
        for y in range(-2, 3):
            for z in range(-2, 3):
                cand = model_compose("_", model_power(bt["T_bd"], x),
                                     model_power(bt["T_d1"], y),
                                     model_power(bt["T_d2"], z))
                if cand.forward == eta2:
                    swap_sq = (x, y, z)
                    break
            if swap_sq:
                break
        if swap_sq:
            break
    rec["swap_sq_bd_d1_d2"] = swap_sq
    rec["ok"] = None not in rec.values() and swap_sq is not None
    return rec


@dataclass(frozen=True)
class ConstraintProfile:
    """Search space for a discovered generator.

    kind "slide": images of the two anchor letters are short conjugates,
    one middle column is enumerated over words with the shadow's
    exponent-sum, the other is solved exactly from the boundary relation.
    kind "spin": handle-1 letters share one conjugator over the
    {a2, delta1} alphabet, a2 gets an independent conjugator, b2 is
    solved from the boundary relation; trivial shadow.
    """
    name: str
    kind: str
    direction: int = 1
    max_image_len: int = 8
    enum_len: int = 6
    anchor_len: int = 2
    slot_symbols: int = 2
    shadow: tuple = ()
    fixed_curves: tuple = ()

    def to_config(self):
        return {
            "name": self.name, "kind": self.kind, "direction": self.direction,
            "max_image_len": self.max_image_len, "enum_len": self.enum_len,
            "anchor_len": self.anchor_len, "slot_symbols": self.slot_symbols,
            "shadow": list(self.shadow), "fixed_curves": list(self.fixed_curves),
        }

    @staticmethod
    def from_config(d):
        return ConstraintProfile(
            name=d["name"], kind=d["kind"], direction=d["direction"],
            max_image_len=d["max_image_len"], enum_len=d["enum_len"],
            anchor_len=d["anchor_len"], slot_symbols=d["slot_symbols"],
            shadow=tuple(d["shadow"]), fixed_curves=tuple(d["fixed_curves"]))

    def shadow_matrix(self):
        return parse_matrix(self.shadow)


def _slide_shadow(direction):
    M = np.eye(4, dtype=np.int64)
    M[3, 1] = direction
    M[0, 2] = -direction
    return M


def slide_profile(direction=1, max_image_len=8):
    """Profile for D_theta: fixes mu1 and lambda2, crosses the handles
    with the minimal nontrivial shadow."""
    return ConstraintProfile(
        name="D_theta", kind="slide", direction=direction,
        max_image_len=max_image_len, enum_len=6, anchor_len=2,
        shadow=tuple(serialize_matrix(_slide_shadow(direction))),
        fixed_curves=("mu1", "lambda2"))


def spin_profile(direction=1, max_image_len=11):
    """Profile for D_nu: trivial shadow, fixes mu1, lambda1, mu2 up to
    conjugacy, handle-1 conjugator confined to the {a2, delta1} alphabet."""
    return ConstraintProfile(
        name="D_nu", kind="spin", direction=direction,
        max_image_len=max_image_len, slot_symbols=2,
        shadow=tuple(serialize_matrix(np.eye(4, dtype=np.int64))),
        fixed_curves=("mu1", "lambda1", "mu2"))


def _anchor_conjugates(letter, maxlen):
    """Deterministic list of p with |p| <= maxlen and p letter p^-1 reduced
    without cancellation (one representative per image)."""
    out, seen = [], set()
    for p in all_words(maxlen):
        if p and p[-1] in (letter, -letter):
            continue
        img = multiply(p, (letter,), invert(p))
        if img not in seen:
            seen.add(img)
            out.append(p)
    return out


def _slide_candidates(direction, max_image_len, enum_len, anchor_len):
    """One direction of the slide search; returns forward Endos."""
    M = _slide_shadow(direction)
    col_enum = 3 if direction > 0 else 2       # the enumerated generator
    col_solve = 2 if direction > 0 else 3      # the solved generator
    enum_ab = tuple(int(x) for x in M[:, col_enum - 1])
    solve_ab = tuple(int(x) for x in M[:, col_solve - 1])

    enum_words = [w for w in words_with_exponent_sum(enum_ab, enum_len)
                  if len(w) <= max_image_len]
    anchors1 = _anchor_conjugates(1, anchor_len)
    anchors4 = _anchor_conjugates(4, anchor_len)

    found = {}
    for p in anchors1:
        A1 = multiply(p, (1,), invert(p))
        if len(A1) > max_image_len:
            continue
        for q in anchors4:
            B2 = multiply(q, (4,), invert(q))
            if len(B2) > max_image_len:
                continue
            for W in enum_words:
                if direction > 0:
                    X = W  # image of a2
                    R = multiply(BOUNDARY,
                                 invert(multiply(X, B2, invert(X), invert(B2))))
                    # [A1, Y] = R  <=>  Y A1^-1 Y^-1 = A1^-1 R; the base is
                    # conjugate to a single letter, so the target's cyclic
                    # core must be exactly that letter
                    target = multiply(invert(A1), R)
                    if cyclic_core(target) != (-1,):
                        continue
                    sols = conjugacy_solutions(target, invert(A1),
                                               max_image_len)
                    for Y in sols:
                        if exponent_sum(Y) != solve_ab:
                            continue
                        f = Endo({1: A1, 2: Y, 3: X, 4: B2})
                        _consider_slide(found, f, M, max_image_len)
                else:
                    Y = W  # image of b1
                    R = multiply(
                        invert(multiply(A1, Y, invert(A1), invert(Y))),
                        BOUNDARY)
                    # [X, B2] = R  <=>  X B2 X^-1 = R B2
                    target = multiply(R, B2)
                    if cyclic_core(target) != (4,):
                        continue
                    sols = conjugacy_solutions(target, B2, max_image_len)
                    for X in sols:
                        if exponent_sum(X) != solve_ab:
                            continue
                        f = Endo({1: A1, 2: Y, 3: X, 4: B2})
                        _consider_slide(found, f, M, max_image_len)
    return sorted(found.values(), key=lambda f: f.key())


def _consider_slide(found, f, M, max_image_len):
    if f.max_image_len() > max_image_len:
        return
    if f(BOUNDARY) != BOUNDARY:
        return
    cols = np.array([exponent_sum(f.images[g]) for g in GENERATORS],
                    dtype=np.int64).T
    if not np.array_equal(cols, M):
        return
    found.setdefault(f.key(), f)


_SPIN_SYMBOLS = ((3,), (-3,), DELTA1, invert(DELTA1))


def _spin_slots(slot_symbols):
    """All reduced products of at most slot_symbols alphabet symbols."""
    out, seen = [()], {()}
    frontier = [()]
    for _ in range(slot_symbols):
        nxt = []
        for w in frontier:
            for s in _SPIN_SYMBOLS:
                v = multiply(w, s)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        out.extend(nxt)
        frontier = nxt
    return out


def _spin_candidates(max_image_len, slot_symbols):
    slots = _spin_slots(slot_symbols)
    found = {}
    for h in slots:
        A1 = multiply(h, (1,), invert(h))
        B1 = multiply(h, (2,), invert(h))
        if max(len(A1), len(B1)) > max_image_len:
            continue
        fD1 = multiply(h, DELTA1, invert(h))
        need = multiply(invert(fD1), BOUNDARY)   # required image of delta2
        for u in slots:
            A2 = multiply(u, (3,), invert(u))
            if len(A2) > max_image_len:
                continue
            sols = conjugacy_solutions(multiply(invert(A2), need),
                                       invert(A2), max_image_len)
            for Y in sols:
                f = Endo({1: A1, 2: B1, 3: A2, 4: Y})
                if f.max_image_len() > max_image_len:
                    continue
                if f(BOUNDARY) != BOUNDARY:
                    continue
                if exponent_sum(Y) != (0, 0, 0, 1):
                    continue
                found.setdefault(f.key(), f)
    return sorted(found.values(), key=lambda f: f.key())


def _pair_inverses(name, fwds, bwds):
    """Package forward candidates whose exact inverse appears among the
    backward candidates; unpaired candidates are dropped."""
    ident = identity_endo()
    out = []
    for f in fwds:
        mate = None
        for g in bwds:
            if compose(f, g) == ident and compose(g, f) == ident:
                mate = g
                break
        if mate is not None:
            out.append(MappingClassModel(name, f, mate))
    return out


def discover(profile):
    """Exhaustive search over the profile's space.  Returns validated
    MappingClassModels in shortlex order of their forward images; every
    candidate's inverse was found in the mirror (slide) or same (spin)
    space."""
    if profile.kind == "slide":
        fwds = _slide_candidates(profile.direction, profile.max_image_len,
                                 profile.enum_len, profile.anchor_len)
        bwds = _slide_candidates(-profile.direction, profile.max_image_len,
                                 profile.enum_len, profile.anchor_len)
        models = _pair_inverses(profile.name, fwds, bwds)
    elif profile.kind == "spin":
        cands = _spin_candidates(profile.max_image_len, profile.slot_symbols)
        models = _pair_inverses(profile.name, cands, cands)
        if profile.direction < 0:
            models = [MappingClassModel(profile.name, m.backward, m.forward)
                      for m in models]
            models.sort(key=lambda m: m.key())
    else:
        raise ValueError("unknown profile kind %r" % profile.kind)

    checked = []
    for m in models:
        if not verify_mapping_class(m, BOUNDARY)["ok"]:
            continue
        M = abelianization_matrix(m.forward)
        if not np.array_equal(M, profile.shadow_matrix()):
            continue
        if not _fixes_curves(m.forward, profile.fixed_curves):
            continue
        checked.append(m)
    return checked


def _fixes_curves(f, curve_names):
    return all(
        canonical_cycle(f(CURVES[c])) == canonical_cycle(CURVES[c])
        for c in curve_names)
