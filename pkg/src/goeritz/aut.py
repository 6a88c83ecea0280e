"""Endomorphisms of the rank-4 free group and mapping-class models.

An Endo is determined by the images of the four generators.  A mapping
class of the genus-2 one-holed surface is modeled as a pair of mutually
inverse Endos, each fixing the boundary word exactly.
"""

from dataclasses import dataclass

from .words import (GENERATORS, LETTER_NAMES, NAME_LETTERS, are_conjugate,
                    format_word, invert, multiply, parse_word, reduce,
                    word_key)


class Endo:
    """Endomorphism of F4, stored as images of the positive generators."""

    __slots__ = ("images",)

    def __init__(self, images):
        self.images = {g: tuple(images[g]) for g in GENERATORS}

    def __call__(self, u):
        out = []
        for x in u:
            img = self.images[abs(x)]
            out.extend(img if x > 0 else invert(img))
        return reduce(out)

    def __eq__(self, other):
        return isinstance(other, Endo) and self.images == other.images

    def __hash__(self):
        return hash(tuple(self.images[g] for g in GENERATORS))

    def __repr__(self):
        return "Endo(%s)" % ", ".join(
            "%s->%s" % (LETTER_NAMES[g], format_word(self.images[g]) or "1")
            for g in GENERATORS)

    def key(self):
        """Deterministic total-order key (shortlex on the image tuple)."""
        return tuple(word_key(self.images[g]) for g in GENERATORS)

    def max_image_len(self):
        return max(len(self.images[g]) for g in GENERATORS)

    def serialize(self):
        """Four lines `letter = word`, canonical word grammar."""
        return "\n".join("%s = %s" % (LETTER_NAMES[g], format_word(self.images[g]))
                         for g in GENERATORS)


def parse_endo(text):
    """Inverse of Endo.serialize (blank lines ignored)."""
    images = {}
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        name, _, rhs = line.partition("=")
        g = NAME_LETTERS[name.strip()]
        images[g] = parse_word(rhs)
    missing = [g for g in GENERATORS if g not in images]
    if missing:
        raise ValueError("missing images for %s" %
                         ", ".join(LETTER_NAMES[g] for g in missing))
    return Endo(images)


def identity_endo():
    return Endo({g: (g,) for g in GENERATORS})


def apply(f, u):
    return f(u)


def compose(f, g):
    """f after g: compose(f, g)(u) = f(g(u))."""
    return Endo({x: f(g.images[x]) for x in GENERATORS})


def compose_all(*fs):
    """Rightmost-first product: compose_all(f, g, h) = f o g o h."""
    out = identity_endo()
    for f in reversed(fs):
        out = compose(f, out)
    return out


def endo_power(f, f_inv, n):
    base = f if n >= 0 else f_inv
    out = identity_endo()
    for _ in range(abs(n)):
        out = compose(base, out)
    return out


def is_inner(f):
    """If f is conjugation u -> w u w^-1, return w; else None.

    Any such w conjugates a1 to f(a1), so w = w0 a1^k for the conjugacy
    witness w0 (the centralizer of a1 is <a1>).  The b1 image pins |k|:
    |f(b1)| >= 2|k| - 2|w0| + 1, so sweeping |k| up to the maximum image
    length is complete.
    """
    w0 = are_conjugate(f.images[1], (1,))
    if w0 is None:
        return None
    bound = f.max_image_len()
    for k in range(-bound, bound + 1):
        w = multiply(w0, ((1,) * k if k >= 0 else (-1,) * -k))
        if all(f.images[g] == multiply(w, (g,), invert(w)) for g in GENERATORS):
            return w
    return None


@dataclass(frozen=True)
class MappingClassModel:
    """A mapping class: forward/backward Endos, mutually inverse, each
    fixing the boundary word."""
    name: str
    forward: Endo
    backward: Endo

    def inverse(self):
        return MappingClassModel(_invert_name(self.name), self.backward,
                                 self.forward)

    def key(self):
        return self.forward.key()


def _invert_name(name):
    return name[:-3] if name.endswith("^-1") else name + "^-1"


def model_compose(name, *models):
    """Rightmost-first composite of MappingClassModels."""
    fwd = compose_all(*[m.forward for m in models])
    bwd = compose_all(*[m.backward for m in reversed(models)])
    return MappingClassModel(name, fwd, bwd)


def model_power(m, n):
    f = endo_power(m.forward, m.backward, n)
    b = endo_power(m.forward, m.backward, -n)
    name = m.name if n == 1 else "%s^%d" % (m.name, n)
    return MappingClassModel(name, f, b)


def verify_mapping_class(m, boundary):
    """Check the model contract; returns a report dict with an `ok` flag."""
    checks = {
        "fixes_boundary_forward": m.forward(boundary) == boundary,
        "fixes_boundary_backward": m.backward(boundary) == boundary,
        "left_inverse": compose(m.backward, m.forward) == identity_endo(),
        "right_inverse": compose(m.forward, m.backward) == identity_endo(),
    }
    checks["ok"] = all(checks.values())
    return checks
