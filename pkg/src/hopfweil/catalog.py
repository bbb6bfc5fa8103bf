"""Catalog of test Hopf algebras: group algebras, sweedler4, taft(n)."""

from itertools import permutations

from .fields import QQ, CyclotomicField
from .hopf import build_hopf


class CatalogError(ValueError):
    pass


def _group_algebra(field, elements, op, inverse, labels):
    """Group algebra over field: group-like basis, S(g) = g^{-1}."""
    index = {g: i for i, g in enumerate(elements)}
    m = len(elements)
    one = field.one
    mul = [[{index[op(a, b)]: one} for b in elements] for a in elements]
    unit_idx = next(i for i, g in enumerate(elements) if op(g, g) == g)
    unit = {unit_idx: one}
    coproduct = [{(i, i): one} for i in range(m)]
    counit = [one] * m
    antipode = [{index[inverse(g)]: one} for g in elements]
    return build_hopf(field, labels, mul, unit, coproduct, counit, antipode)


def cyclic_group_algebra(n, field=QQ):
    elements = list(range(n))
    return _group_algebra(
        field,
        elements,
        lambda a, b: (a + b) % n,
        lambda a: (-a) % n,
        ["t%d" % a for a in elements],
    )


def symmetric_group_algebra(n, field=QQ):
    elements = sorted(permutations(range(n)))
    compose = lambda p, q: tuple(p[q[i]] for i in range(n))
    invert = lambda p: tuple(sorted(range(n), key=lambda i: p[i]))
    labels = ["p" + "".join(map(str, p)) for p in elements]
    return _group_algebra(field, elements, compose, invert, labels)


def sweedler4(field=QQ):
    """Basis (1, g, x, gx): g^2 = 1, x^2 = 0, x g = -g x,
    coproduct of x is x(x)1 + g(x)x."""
    one = field.one
    zero = field.zero
    neg = -one
    labels = ("1", "g", "x", "gx")
    mul = [[{} for _ in range(4)] for _ in range(4)]
    table = {
        (0, 0): {0: one}, (0, 1): {1: one}, (0, 2): {2: one}, (0, 3): {3: one},
        (1, 0): {1: one}, (1, 1): {0: one}, (1, 2): {3: one}, (1, 3): {2: one},
        (2, 0): {2: one}, (2, 1): {3: neg}, (2, 2): {}, (2, 3): {},
        (3, 0): {3: one}, (3, 1): {2: neg}, (3, 2): {}, (3, 3): {},
    }
    for (i, j), v in table.items():
        mul[i][j] = v
    unit = {0: one}
    coproduct = [
        {(0, 0): one},
        {(1, 1): one},
        {(2, 0): one, (1, 2): one},
        {(3, 1): one, (0, 3): one},
    ]
    counit = [one, one, zero, zero]
    antipode = [{0: one}, {1: one}, {3: neg}, {2: one}]
    return build_hopf(field, labels, mul, unit, coproduct, counit, antipode)


def taft(n):
    """Taft algebra of dimension n^2 over QQ(zeta_n).

    Basis g^a x^b indexed by b*n + a; relations g^n = 1, x^n = 0,
    x g = zeta g x; x is (g,1)-skew-primitive.
    """
    if n < 2:
        raise CatalogError("taft(n) needs n >= 2")
    field = CyclotomicField(n)
    zeta = field.zeta
    one = field.one
    m = n * n
    idx = lambda a, b: b * n + a
    labels = []
    for b in range(n):
        for a in range(n):
            name = "1" if (a, b) == (0, 0) else ("g%d" % a if a else "") + ("x%d" % b if b else "")
            labels.append(name.replace("g1", "g").replace("x1", "x") or "1")

    zpow = [one]
    for _ in range(2 * n):
        zpow.append(zpow[-1] * zeta)

    mul = [[{} for _ in range(m)] for _ in range(m)]
    for b1 in range(n):
        for a1 in range(n):
            for b2 in range(n):
                for a2 in range(n):
                    if b1 + b2 < n:
                        c = zpow[(b1 * a2) % n] if b1 * a2 else one
                        mul[idx(a1, b1)][idx(a2, b2)] = {idx((a1 + a2) % n, b1 + b2): c}
    unit = {idx(0, 0): one}

    def tensor_mul(t1, t2):
        out = {}
        for (p1, q1), c1 in t1.items():
            for (p2, q2), c2 in t2.items():
                c = c1 * c2
                for r1, d1 in mul[p1][p2].items():
                    for r2, d2 in mul[q1][q2].items():
                        key = (r1, r2)
                        cur = out.get(key)
                        val = c * d1 * d2
                        out[key] = val if cur is None else cur + val
        return {k: v for k, v in out.items() if v}

    cop_g = {(idx(1, 0), idx(1, 0)): one}
    cop_x = {(idx(0, 1), idx(0, 0)): one, (idx(1, 0), idx(0, 1)): one}
    coproduct = []
    for b in range(n):
        for a in range(n):
            t = {(idx(0, 0), idx(0, 0)): one}
            for _ in range(a):
                t = tensor_mul(t, cop_g)
            for _ in range(b):
                t = tensor_mul(t, cop_x)
            coproduct.append(t)

    counit = [one if b == 0 else field.zero for b in range(n) for _ in range(n)]

    s_g = {idx(n - 1, 0): one}
    s_x = {idx(n - 1, 1): -one}

    def el_mul(e1, e2):
        out = {}
        for p, c1 in e1.items():
            for q, c2 in e2.items():
                for r, d in mul[p][q].items():
                    cur = out.get(r)
                    val = c1 * c2 * d
                    out[r] = val if cur is None else cur + val
        return {k: v for k, v in out.items() if v}

    antipode = []
    for b in range(n):
        for a in range(n):
            # antihomomorphism: S(g^a x^b) = S(x)^b S(g)^a
            e = {idx(0, 0): one}
            for _ in range(b):
                e = el_mul(e, s_x)
            for _ in range(a):
                e = el_mul(e, s_g)
            antipode.append(e)

    return build_hopf(field, labels, mul, unit, coproduct, counit, antipode)


_CYCLIC = {"z%d" % n: n for n in range(2, 13)}


def catalog(name):
    """Named test algebra; see CATALOG_NAMES for the accepted names."""
    key = name.strip().lower()
    if key in _CYCLIC:
        return cyclic_group_algebra(_CYCLIC[key])
    if key == "s3":
        return symmetric_group_algebra(3)
    if key == "sweedler4":
        return sweedler4()
    if key.startswith("taft"):
        digits = key[4:].strip("()")
        if not digits.isdigit():
            raise CatalogError("malformed taft order in %r" % name)
        return taft(int(digits))
    raise CatalogError("unknown catalog algebra %r" % name)


CATALOG_NAMES = sorted(_CYCLIC) + ["s3", "sweedler4", "taft2", "taft3"]
