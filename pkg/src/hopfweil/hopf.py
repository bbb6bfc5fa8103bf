"""Finite-dimensional Hopf algebras given by structure constants.

Elements are sparse dicts {basis index: scalar}.  Tensors over H^(x)k are
sparse dicts keyed by index k-tuples.  All axioms are validated exactly on
basis tuples at build time; bilinearity extends them.
"""


class HopfAxiomError(ValueError):
    """A Hopf axiom failed; carries the axiom name and a witness tuple."""

    def __init__(self, axiom, witness, detail=""):
        self.axiom = axiom
        self.witness = witness
        msg = "Hopf axiom %r failed at basis tuple %r" % (axiom, (witness,))
        if detail:
            msg += ": " + detail
        super().__init__(msg)


def add_into(acc, key, value):
    if not value:
        return
    cur = acc.get(key)
    if cur is None:
        acc[key] = value
    else:
        cur = cur + value
        if cur:
            acc[key] = cur
        else:
            del acc[key]


def scaled(el, c):
    if not c:
        return {}
    return {k: c * v for k, v in el.items()}


def el_sub(a, b):
    out = dict(a)
    for k, v in b.items():
        add_into(out, k, -v)
    return out


def el_eq(a, b):
    return not el_sub(a, b)


class HopfAlgebra:
    """Structure-constant data with exact element arithmetic.

    mul[i][j], coproduct[i], antipode[i] are sparse; unit is a sparse
    element; counit is a dense scalar list.  Immutable after build; the
    iterated-coproduct cache is write-once per key (idempotent recompute),
    so concurrent readers are safe.
    """

    def __init__(self, field, labels, mul, unit, coproduct, counit, antipode):
        self.field = field
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.mul = mul
        self.unit = unit
        self.coproduct = coproduct
        self.counit = counit
        self.antipode = antipode
        self._itcop_cache = {}
        self._ad_cache = {}

    # --- element arithmetic -------------------------------------------------

    def multiply(self, a, b):
        out = {}
        for i, ca in a.items():
            if not ca:
                continue
            row = self.mul[i]
            for j, cb in b.items():
                c = ca * cb
                if c:
                    for k, ck in row[j].items():
                        add_into(out, k, c * ck)
        return out

    def counit_of(self, el):
        acc = self.field.zero
        for i, c in el.items():
            if c and self.counit[i]:
                acc = acc + c * self.counit[i]
        return acc

    def antipode_of(self, el):
        out = {}
        for i, c in el.items():
            if c:
                for j, cj in self.antipode[i].items():
                    add_into(out, j, c * cj)
        return out

    def coproduct_of(self, el):
        out = {}
        for i, c in el.items():
            if c:
                for key, ck in self.coproduct[i].items():
                    add_into(out, key, c * ck)
        return out

    def tensor_multiply(self, a, b):
        """Product in H (x) H of sparse pair-keyed tensors."""
        out = {}
        for (i1, i2), ca in a.items():
            for (j1, j2), cb in b.items():
                c = ca * cb
                if not c:
                    continue
                for k1, c1 in self.mul[i1][j1].items():
                    for k2, c2 in self.mul[i2][j2].items():
                        add_into(out, (k1, k2), c * c1 * c2)
        return out

    def basis_element(self, i):
        return {i: self.field.one}

    # --- derived structure --------------------------------------------------

    def ad_basis(self, r, s):
        """Right adjoint action ad(e_r) e_s = sum S(e_r^(1)) e_s e_r^(2)."""
        key = (r, s)
        hit = self._ad_cache.get(key)
        if hit is not None:
            return hit
        out = {}
        g = self.basis_element(s)
        for (u, v), c in self.coproduct[r].items():
            left = self.antipode[u]
            term = self.multiply(self.multiply(left, g), self.basis_element(v))
            for k, ck in term.items():
                add_into(out, k, c * ck)
        self._ad_cache[key] = out
        return out

    def ad(self, h, g):
        """ad(h) g for sparse elements, linear in both arguments."""
        out = {}
        for r, cr in h.items():
            if not cr:
                continue
            for s, cs in g.items():
                c = cr * cs
                if not c:
                    continue
                for k, ck in self.ad_basis(r, s).items():
                    add_into(out, k, c * ck)
        return out

    def iterated_coproduct_basis(self, i, k):
        """Order-k coproduct legs of e_i, leftmost expansion, cached."""
        if k < 1:
            raise ValueError("iterated coproduct needs arity >= 1")
        key = (i, k)
        hit = self._itcop_cache.get(key)
        if hit is not None:
            return hit
        if k == 1:
            out = {(i,): self.field.one}
        else:
            out = {}
            for tup, c in self.iterated_coproduct_basis(i, k - 1).items():
                for (a, b), cd in self.coproduct[tup[0]].items():
                    add_into(out, (a, b) + tup[1:], c * cd)
        self._itcop_cache[key] = out
        return out

    def iterated_coproduct(self, el, k):
        out = {}
        for i, c in el.items():
            if c:
                for tup, ck in self.iterated_coproduct_basis(i, k).items():
                    add_into(out, tup, c * ck)
        return out

    def __repr__(self):
        return "HopfAlgebra(dim %d over %s)" % (self.dim, self.field.describe())


def build_hopf(field, labels, mul, unit, coproduct, counit, antipode):
    """Validate every Hopf axiom exactly on all basis tuples, then wrap.

    Raises HopfAxiomError naming the failed axiom and a witness tuple.
    """
    alg = HopfAlgebra(field, labels, mul, unit, coproduct, counit, antipode)
    m = alg.dim

    for i in range(m):
        for j in range(m):
            for k in range(m):
                lhs = alg.multiply(alg.mul[i][j], alg.basis_element(k))
                rhs = alg.multiply(alg.basis_element(i), alg.mul[j][k])
                if not el_eq(lhs, rhs):
                    raise HopfAxiomError("associativity", (i, j, k))

    for i in range(m):
        e = alg.basis_element(i)
        if not el_eq(alg.multiply(unit, e), e) or not el_eq(alg.multiply(e, unit), e):
            raise HopfAxiomError("unit", (i,))

    for i in range(m):
        left = {}
        right = {}
        for (a, b), c in alg.coproduct[i].items():
            for (a1, a2), ca in alg.coproduct[a].items():
                add_into(left, (a1, a2, b), c * ca)
            for (b1, b2), cb in alg.coproduct[b].items():
                add_into(right, (a, b1, b2), c * cb)
        if left != right and any(el_sub(left, right).values()):
            raise HopfAxiomError("coassociativity", (i,))

    for i in range(m):
        lhs = {}
        rhs = {}
        for (a, b), c in alg.coproduct[i].items():
            add_into(lhs, b, c * alg.counit[a])
            add_into(rhs, a, c * alg.counit[b])
        e = alg.basis_element(i)
        if not el_eq(lhs, e) or not el_eq(rhs, e):
            raise HopfAxiomError("counit", (i,))

    unit_tensor = {}
    for (a, ca) in unit.items():
        for (b, cb) in unit.items():
            add_into(unit_tensor, (a, b), ca * cb)
    if any(el_sub(alg.coproduct_of(unit), unit_tensor).values()):
        raise HopfAxiomError("coproduct_homomorphism", ("unit",))
    for i in range(m):
        for j in range(m):
            lhs = alg.coproduct_of(alg.mul[i][j])
            rhs = alg.tensor_multiply(alg.coproduct[i], alg.coproduct[j])
            if any(el_sub(lhs, rhs).values()):
                raise HopfAxiomError("coproduct_homomorphism", (i, j))

    if alg.counit_of(unit) != field.one:
        raise HopfAxiomError("counit_homomorphism", ("unit",))
    for i in range(m):
        for j in range(m):
            if alg.counit_of(alg.mul[i][j]) != alg.counit[i] * alg.counit[j]:
                raise HopfAxiomError("counit_homomorphism", (i, j))

    for i in range(m):
        left = {}
        right = {}
        for (a, b), c in alg.coproduct[i].items():
            for k, ck in alg.multiply(alg.antipode[a], alg.basis_element(b)).items():
                add_into(left, k, c * ck)
            for k, ck in alg.multiply(alg.basis_element(a), alg.antipode[b]).items():
                add_into(right, k, c * ck)
        target = scaled(unit, alg.counit[i])
        if not el_eq(left, target) or not el_eq(right, target):
            raise HopfAxiomError("antipode", (i,))

    return alg
