"""Free-group core for the rank-4 surface group.

Letters are nonzero ints: 1=a1, 2=b1, 3=a2, 4=b2, negative = inverse.
A Word is a freely reduced tuple of letters; () is the identity.  A
CyclicWord is a cyclically reduced word stored in its canonical rotation
(least rotation under LETTER_ORDER).  All values are immutable and all
functions are pure.

Commutator convention, fixed globally: [x, y] = x y x^-1 y^-1.
"""

GENERATORS = (1, 2, 3, 4)
LETTERS = (1, -1, 2, -2, 3, -3, 4, -4)
LETTER_NAMES = {1: "a1", 2: "b1", 3: "a2", 4: "b2"}
NAME_LETTERS = {v: k for k, v in LETTER_NAMES.items()}

# total order on letters used for canonical rotations:
# a1 < a1^-1 < b1 < b1^-1 < a2 < a2^-1 < b2 < b2^-1
LETTER_ORDER = {1: 0, -1: 1, 2: 2, -2: 3, 3: 4, -3: 5, 4: 6, -4: 7}


def reduce(raw):
    """Freely reduce a letter sequence to a Word."""
    out = []
    for x in raw:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def multiply(u, v, *rest):
    """Reduced product of reduced words (associative, so varargs)."""
    w = list(u)
    for piece in (v,) + rest:
        for x in piece:
            if w and w[-1] == -x:
                w.pop()
            else:
                w.append(x)
    return tuple(w)


def invert(u):
    return tuple(-x for x in reversed(u))


def power(u, n):
    if n < 0:
        return power(invert(u), -n)
    w = ()
    for _ in range(n):
        w = multiply(w, u)
    return w


def conjugate(u, w):
    """w u w^-1."""
    return multiply(w, u, invert(w))


def commutator(u, v):
    """[u, v] = u v u^-1 v^-1."""
    return multiply(u, v, invert(u), invert(v))


def word_key(u):
    """Shortlex key under LETTER_ORDER; total order used everywhere output
    must be deterministic."""
    return (len(u), tuple(LETTER_ORDER[x] for x in u))


def _least_rotation(c):
    if not c:
        return ()
    best = min(range(len(c)), key=lambda i: tuple(LETTER_ORDER[x] for x in c[i:] + c[:i]))
    return c[best:] + c[:best]


def cyclic_core(u):
    """Cyclically reduced form of u without rotation canonicalization;
    cheap necessary-condition filter for conjugacy."""
    i, j = 0, len(u)
    while j - i >= 2 and u[i] == -u[j - 1]:
        i += 1
        j -= 1
    return u[i:j]


def cyclic_reduce(u):
    """Return (c, w) with u = w c w^-1, c the canonical CyclicWord."""
    core = list(u)
    prefix = []
    while len(core) >= 2 and core[0] == -core[-1]:
        prefix.append(core[0])
        core = core[1:-1]
    core = tuple(core)
    canon = _least_rotation(core)
    if canon != core:
        # core = alpha . canon . alpha^-1 cyclically: find the rotation offset
        for i in range(len(core)):
            if core[i:] + core[:i] == canon:
                prefix.extend(core[:i])
                break
    return canon, reduce(prefix)


def canonical_cycle(u):
    """Canonical CyclicWord of the conjugacy class of u."""
    return cyclic_reduce(u)[0]


def are_conjugate(u, v):
    """Witness w with u = w v w^-1, or None if not conjugate."""
    cu, wu = cyclic_reduce(u)
    cv, wv = cyclic_reduce(v)
    if cu != cv:
        return None
    return multiply(wu, invert(wv))


def primitive_root(u):
    """(r, n) with u = r^n, r not a proper power (u nonempty)."""
    assert u
    m = len(u)
    for d in range(1, m + 1):
        if m % d:
            continue
        r = u[:d]
        if power(r, m // d) == u:
            return r, m // d
    raise AssertionError("unreachable")


def conjugacy_solutions(target, base, maxlen):
    """All z with z base z^-1 = target and |z| <= maxlen, sorted.

    Complete: every solution is w0 * c with c in the centralizer of base,
    which (base != 1) is cyclic on the primitive root r of base, so the
    solution set is {w0 r^k}.  |w0 r^k| >= k|root(c)| - 2|wb| - |w0| bounds
    the sweep.
    """
    if not base:
        return all_words(maxlen) if not target else []
    w0 = are_conjugate(target, base)
    if w0 is None:
        return []
    cb, wb = cyclic_reduce(base)
    root, _ = primitive_root(cb)
    rb = multiply(wb, root, invert(wb))
    out = set()
    k = 0
    while k * len(root) - 2 * len(wb) - len(w0) <= maxlen:
        for s in ((0,) if k == 0 else (k, -k)):
            z = multiply(w0, power(rb, s))
            if len(z) <= maxlen:
                out.add(z)
        k += 1
    return sorted(out, key=word_key)


def parse_word(text):
    """Parse the word grammar: whitespace-separated tokens `a1 b1 a2 b2`,
    each with optional `^<signed int>`; empty string is the identity."""
    out = []
    for i, tok in enumerate(text.split()):
        if "^" in tok:
            name, _, exp = tok.partition("^")
            try:
                n = int(exp)
            except ValueError:
                raise ValueError("bad exponent %r at token %d" % (exp, i))
        else:
            name, n = tok, 1
        if name not in NAME_LETTERS:
            raise ValueError("unknown letter %r at token %d" % (name, i))
        x = NAME_LETTERS[name]
        out.extend([x if n > 0 else -x] * abs(n))
    return reduce(out)


def format_word(u):
    """Canonical text form: runs collapsed to exponents, e.g. `a1 b1^-2 a2`."""
    toks = []
    i = 0
    while i < len(u):
        j = i
        while j < len(u) and u[j] == u[i]:
            j += 1
        n = (j - i) * (1 if u[i] > 0 else -1)
        name = LETTER_NAMES[abs(u[i])]
        toks.append(name if n == 1 else "%s^%d" % (name, n))
        i = j
    return " ".join(toks)


def all_words(maxlen, alphabet=LETTERS):
    """All reduced words of length <= maxlen, in generation order."""
    out = [()]
    frontier = [()]
    for _ in range(maxlen):
        nxt = []
        for w in frontier:
            for x in alphabet:
                if w and x == -w[-1]:
                    continue
                nxt.append(w + (x,))
        out.extend(nxt)
        frontier = nxt
    return out


def words_with_exponent_sum(target, maxlen):
    """All reduced words u, |u| <= maxlen, with exponent-sum vector target.
    DFS with an L1 reachability prune."""
    out = []
    t = tuple(target)

    def go(w, v, depth):
        if v == (0, 0, 0, 0):
            out.append(tuple(w))
        if depth == 0:
            return
        for x in LETTERS:
            if w and x == -w[-1]:
                continue
            i = abs(x) - 1
            nv = list(v)
            nv[i] -= 1 if x > 0 else -1
            if sum(abs(c) for c in nv) > depth - 1:
                continue
            w.append(x)
            go(w, tuple(nv), depth - 1)
            w.pop()

    go([], t, maxlen)
    return out


def exponent_sum(u):
    v = [0, 0, 0, 0]
    for x in u:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(v)
