"""Degree-truncated graded differential algebras carrying a Hopf operation.

An operation is the family of degree(-1) contraction operators i_h; the
degree-0 action is L_h = d i_h + i_h d + eps(h) I.  Everything here works
on exact matrices per degree: axiom verification, invariant/horizontal/
basic subspaces and their cohomology, the contraction-length filtration
and its first spectral-sequence terms.
"""

from .linalg import Matrix, Subspace, image_space, kernel_basis, preimage_basis, stack


class DegreeError(ValueError):
    pass


class DGATruncation:
    """Graded differential algebra up to a degree cutoff.

    dims[n] is the dimension of degree n; diff[n] is the matrix of
    d: degree n -> n+1 for n < cutoff; product_basis(p, q, i, j) returns
    the sparse product of the i-th and j-th basis elements (p+q <= cutoff).
    """

    def __init__(self, field, dims, unit, product_basis, diff, name=""):
        self.field = field
        self.dims = list(dims)
        self.cutoff = len(dims) - 1
        self.unit = list(unit)
        self.product_basis = product_basis
        self.diff = list(diff)
        self.name = name
        assert len(self.diff) == self.cutoff
        for n, d in enumerate(self.diff):
            assert d.nrows == self.dims[n + 1] and d.ncols == self.dims[n]

    def product_vec(self, p, q, u, v):
        """Bilinear product of coordinate vectors from degrees p and q."""
        out = [self.field.zero] * self.dims[p + q]
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                c = a * b
                if c:
                    for k, ck in self.product_basis(p, q, i, j).items():
                        out[k] = out[k] + c * ck
        return out

    def d_vec(self, n, vec):
        return self.diff[n].mulvec(vec)


class FiniteHopfContext:
    """Basis-indexed view of a finite-dimensional HopfAlgebra."""

    def __init__(self, algebra):
        self.algebra = algebra
        self.dim = algebra.dim
        self.labels = algebra.labels

    def unit_element(self):
        return dict(self.algebra.unit)

    def counit(self, r):
        return self.algebra.counit[r]

    def coproduct(self, r):
        return self.algebra.coproduct[r]

    def product(self, r, s):
        return self.algebra.mul[r][s]

    def ad_basis(self, r, s):
        return self.algebra.ad_basis(r, s)

    def antipode(self, r):
        return self.algebra.antipode[r]


class HOperation:
    """A DGA truncation with contraction matrices per Hopf basis element.

    l_provider, when given, supplies closed-form action matrices (usable
    at the top degree, where the derived form needs an unavailable d);
    consistency with the derived form is part of verify_axioms.
    """

    def __init__(self, dga, ctx, i_provider, l_provider=None, name=""):
        self.dga = dga
        self.ctx = ctx
        self._i_provider = i_provider
        self._l_provider = l_provider
        self.name = name or dga.name
        self._imat = {}
        self._lmat = {}
        self._lder = {}
        self._filt = {}

    # --- operator matrices ----------------------------------------------

    def imat(self, r, n):
        key = (r, n)
        hit = self._imat.get(key)
        if hit is None:
            if n == 0:
                hit = Matrix.zeros(self.dga.field, 0, self.dga.dims[0])
            else:
                hit = self._i_provider(r, n)
            self._imat[key] = hit
        return hit

    def i_element(self, el, n):
        acc = Matrix.zeros(self.dga.field, self.dga.dims[n - 1] if n else 0, self.dga.dims[n])
        for r, c in el.items():
            if c:
                acc = acc + self.imat(r, n).scale(c)
        return acc

    def derived_lmat(self, r, n):
        """L from the homotopy formula; needs d out of degree n."""
        if n >= self.dga.cutoff:
            raise DegreeError("derived action needs degree < cutoff")
        key = (r, n)
        hit = self._lder.get(key)
        if hit is None:
            dga = self.dga
            m = self.imat(r, n + 1).mul(dga.diff[n])
            if n > 0:
                m = m + dga.diff[n - 1].mul(self.imat(r, n))
            eps = self.ctx.counit(r)
            if eps:
                m = m + Matrix.identity(dga.field, dga.dims[n]).scale(eps)
            self._lder[key] = hit = m
        return hit

    def lmat(self, r, n):
        key = (r, n)
        hit = self._lmat.get(key)
        if hit is None:
            if self._l_provider is not None:
                hit = self._l_provider(r, n)
            else:
                hit = self.derived_lmat(r, n)
            self._lmat[key] = hit
        return hit

    def l_element(self, el, n):
        acc = Matrix.zeros(self.dga.field, self.dga.dims[n], self.dga.dims[n])
        for r, c in el.items():
            if c:
                acc = acc + self.lmat(r, n).scale(c)
        return acc

    def l_max_degree(self):
        return self.dga.cutoff if self._l_provider is not None else self.dga.cutoff - 1

    # --- distinguished subspaces ------------------------------------------

    def invariants(self, n):
        """Kernel of the stacked (L_h - eps(h) I) over the Hopf basis."""
        if n > self.l_max_degree():
            raise DegreeError("invariants at degree %d exceed the action range" % n)
        dga = self.dga
        blocks = []
        for r in range(self.ctx.dim):
            m = self.lmat(r, n)
            eps = self.ctx.counit(r)
            if eps:
                m = m - Matrix.identity(dga.field, dga.dims[n]).scale(eps)
            blocks.append(m)
        return Subspace(dga.field, dga.dims[n], kernel_basis(stack(blocks)))

    def horizontals(self, n):
        """Joint kernel of the contraction operators."""
        if n > self.dga.cutoff:
            raise DegreeError("degree beyond cutoff")
        if n == 0:
            return Subspace.full(self.dga.field, self.dga.dims[0])
        blocks = [self.imat(r, n) for r in range(self.ctx.dim)]
        return Subspace(self.dga.field, self.dga.dims[n], kernel_basis(stack(blocks)))

    def basics(self, n):
        return self.invariants(n).intersect(self.horizontals(n))

    def subspace(self, variant, n):
        if variant == "full":
            return Subspace.full(self.dga.field, self.dga.dims[n])
        if variant == "invariant":
            return self.invariants(n)
        if variant == "horizontal":
            return self.horizontals(n)
        if variant == "basic":
            return self.basics(n)
        raise ValueError("unknown subspace variant %r" % variant)

    def cohomology(self, variant, n):
        """(dimension, representative vectors) of H^n of the chosen subcomplex."""
        dga = self.dga
        if n + 1 > dga.cutoff:
            raise DegreeError("cohomology at degree %d needs the outgoing differential" % n)
        space = self.subspace(variant, n)
        cols = [dga.diff[n].mulvec(b) for b in space.basis]
        coords = kernel_basis(Matrix.from_columns(dga.field, cols, dga.dims[n + 1]))
        cycle_vecs = []
        for k in coords:
            v = [dga.field.zero] * dga.dims[n]
            for c, b in zip(k, space.basis):
                if c:
                    v = [a + c * x for a, x in zip(v, b)]
            cycle_vecs.append(v)
        cycles = Subspace(dga.field, dga.dims[n], cycle_vecs)
        if n == 0:
            boundaries = Subspace.zero(dga.field, dga.dims[n])
        else:
            below = self.subspace(variant, n - 1)
            boundaries = Subspace(
                dga.field, dga.dims[n], [dga.diff[n - 1].mulvec(b) for b in below.basis]
            )
        reps = boundaries.complement_in(cycles)
        return len(reps), reps

    # --- filtration by contraction length ---------------------------------

    def filtration(self, p, n):
        """F^p at degree n: all length-(n-p+1) contraction strings vanish."""
        if n > self.dga.cutoff:
            raise DegreeError("filtration beyond cutoff")
        if p <= 0:
            return Subspace.full(self.dga.field, self.dga.dims[n])
        if n < p:
            return Subspace.zero(self.dga.field, self.dga.dims[n])
        key = (p, n)
        hit = self._filt.get(key)
        if hit is None:
            if n == p:
                hit = self.horizontals(n)
            else:
                inner = self.filtration(p, n - 1)
                pairs = [(self.imat(r, n), inner) for r in range(self.ctx.dim)]
                hit = preimage_basis(pairs, self.dga.dims[n], self.dga.field)
            self._filt[key] = hit
        return hit

    def _cycle_space(self, r, p, n):
        """Z_r at (p, n-p): elements of F^p(n) whose d lands in F^{p+r}(n+1)."""
        if n >= self.dga.cutoff:
            raise DegreeError("cycle space needs the outgoing differential")
        base = self.filtration(p, n)
        target = self.filtration(p + r, n + 1)
        cols = [target.reduce(self.dga.diff[n].mulvec(b)) for b in base.basis]
        coords = kernel_basis(Matrix.from_columns(self.dga.field, cols, self.dga.dims[n + 1]))
        vecs = []
        for k in coords:
            v = [self.dga.field.zero] * self.dga.dims[n]
            for c, b in zip(k, base.basis):
                if c:
                    v = [a + c * x for a, x in zip(v, b)]
            vecs.append(v)
        return Subspace(self.dga.field, self.dga.dims[n], vecs)

    def _boundary_image(self, r, p, n):
        """d applied to Z_r at (p, n); zero space below degree 0."""
        if n < 0:
            return Subspace.zero(self.dga.field, self.dga.dims[n + 1])
        z = self._cycle_space(r, p, n)
        vecs = [self.dga.diff[n].mulvec(b) for b in z.basis]
        return Subspace(self.dga.field, self.dga.dims[n + 1], vecs)

    def spectral_terms(self, rmax=2):
        """Dimension table {(r, p, q): dim} for r <= rmax (<= 2).

        E_0 covers p+q <= cutoff; E_1 and E_2 need one degree of headroom
        and cover p+q <= cutoff-1.
        """
        if rmax > 2:
            raise ValueError("only E_0, E_1, E_2 are exposed")
        N = self.dga.cutoff
        table = {}
        for n in range(N + 1):
            for p in range(n + 1):
                q = n - p
                table[(0, p, q)] = self.filtration(p, n).dim - self.filtration(p + 1, n).dim
        if rmax >= 1:
            for n in range(N):
                for p in range(n + 1):
                    q = n - p
                    z1 = self._cycle_space(1, p, n)
                    denom = self.filtration(p + 1, n)
                    if n > 0:
                        dF = [self.dga.diff[n - 1].mulvec(b) for b in self.filtration(p, n - 1).basis]
                        denom = denom.sum(Subspace(self.dga.field, self.dga.dims[n], dF))
                    table[(1, p, q)] = z1.dim - denom.dim
        if rmax >= 2:
            for n in range(N):
                for p in range(n + 1):
                    q = n - p
                    z2 = self._cycle_space(2, p, n)
                    if q >= 1:
                        denom = self._cycle_space(1, p + 1, n)
                    else:
                        denom = Subspace.zero(self.dga.field, self.dga.dims[n])
                    denom = denom.sum(self._boundary_image(1, p - 1, n - 1))
                    table[(2, p, q)] = z2.dim - denom.dim
        return table


def _aggregate(records, name, degree, ok, witness):
    for rec in records:
        if rec["name"] == name and rec["degree"] == degree:
            if not ok and rec["pass"]:
                rec["pass"] = False
                rec["witness"] = witness
            rec["checked"] += 1
            return
    records.append(
        {"name": name, "degree": degree, "pass": ok, "witness": None if ok else witness, "checked": 1}
    )


def verify_axioms(op):
    """Exact check of every operation axiom on basis data up to the cutoff.

    Returns a list of {name, degree, pass, witness, checked} records,
    aggregated per axiom and degree; the witness names the first failing
    instance.
    """
    dga = op.dga
    ctx = op.ctx
    N = dga.cutoff
    m = ctx.dim
    field = dga.field
    records = []
    lmax = op.l_max_degree()

    unit_el = ctx.unit_element()
    for n in range(1, N + 1):
        mat = op.i_element(unit_el, n)
        _aggregate(records, "unit_contraction", n, mat.is_zero(), {"degree": n})

    if op._l_provider is not None:
        for n in range(N):
            for r in range(m):
                ok = op.lmat(r, n) == op.derived_lmat(r, n)
                _aggregate(records, "lie_consistency", n, ok, {"h": ctx.labels[r]})

    # L_1 = I and L_h(unit) = eps(h) unit
    for n in range(lmax + 1):
        lm = op.l_element(unit_el, n)
        ok = lm == Matrix.identity(field, dga.dims[n])
        _aggregate(records, "lie_unit", n, ok, {"degree": n})
    for r in range(m):
        lu = op.lmat(r, 0).mulvec(dga.unit)
        target = [ctx.counit(r) * u for u in dga.unit]
        ok = all(a == b for a, b in zip(lu, target))
        _aggregate(records, "unit_action", 0, ok, {"h": ctx.labels[r]})

    # product rule for contractions (graded, with action twist)
    for p in range(N + 1):
        for q in range(N + 1 - p):
            n = p + q
            if n == 0 or n > N:
                continue
            if p >= 1 and q > lmax:
                continue
            sign = field.one if p % 2 == 0 else -field.one
            for r in range(m):
                legs = ctx.coproduct(r)
                icols_p = [op.imat(a, p) for a in range(m)] if p >= 1 else None
                for i in range(dga.dims[p]):
                    ei = [field.zero] * dga.dims[p]
                    ei[i] = field.one
                    for j in range(dga.dims[q]):
                        ej = [field.zero] * dga.dims[q]
                        ej[j] = field.one
                        prod = dga.product_basis(p, q, i, j)
                        lhs = [field.zero] * (dga.dims[n - 1] if n else 0)
                        im = op.imat(r, n)
                        for k, ck in prod.items():
                            if ck:
                                col = im.column(k)
                                lhs = [a + ck * b for a, b in zip(lhs, col)]
                        rhs = [field.zero] * dga.dims[n - 1]
                        if p >= 1:
                            for (a, b), c in legs.items():
                                ia = icols_p[a].column(i)
                                if not any(ia):
                                    continue
                                lb = op.lmat(b, q).column(j)
                                term = dga.product_vec(p - 1, q, ia, lb)
                                rhs = [x + c * y for x, y in zip(rhs, term)]
                        if q >= 1:
                            ib = op.imat(r, q).column(j)
                            if any(ib):
                                term = dga.product_vec(p, q - 1, ei, ib)
                                rhs = [x + sign * y for x, y in zip(rhs, term)]
                        ok = all(a == b for a, b in zip(lhs, rhs))
                        if not ok:
                            _aggregate(
                                records, "product_rule", n, False,
                                {"h": ctx.labels[r], "bidegree": [p, q], "pair": [i, j]},
                            )
                        else:
                            _aggregate(records, "product_rule", n, True, None)

    # product rule for the action
    for p in range(lmax + 1):
        for q in range(lmax + 1 - p):
            n = p + q
            if n > lmax:
                continue
            for r in range(m):
                legs = ctx.coproduct(r)
                for i in range(dga.dims[p]):
                    for j in range(dga.dims[q]):
                        prod = dga.product_basis(p, q, i, j)
                        ln = op.lmat(r, n)
                        lhs = [field.zero] * dga.dims[n]
                        for k, ck in prod.items():
                            if ck:
                                col = ln.column(k)
                                lhs = [a + ck * b for a, b in zip(lhs, col)]
                        rhs = [field.zero] * dga.dims[n]
                        for (a, b), c in legs.items():
                            la = op.lmat(a, p).column(i)
                            if not any(la):
                                continue
                            lb = op.lmat(b, q).column(j)
                            term = dga.product_vec(p, q, la, lb)
                            rhs = [x + c * y for x, y in zip(rhs, term)]
                        ok = all(a == b for a, b in zip(lhs, rhs))
                        _aggregate(
                            records, "product_action", n, ok,
                            None if ok else {"h": ctx.labels[r], "bidegree": [p, q], "pair": [i, j]},
                        )

    # twisted commutation between contraction and action
    for n in range(1, min(lmax, N) + 1):
        for g in range(m):
            for h in range(m):
                lhs = op.imat(g, n).mul(op.lmat(h, n))
                rhs = Matrix.zeros(field, dga.dims[n - 1], dga.dims[n])
                for (a, b), c in ctx.coproduct(h).items():
                    iad = op.i_element(ctx.ad_basis(b, g), n)
                    rhs = rhs + op.lmat(a, n - 1).mul(iad).scale(c)
                ok = lhs == rhs
                _aggregate(
                    records, "twisted_commutation", n, ok,
                    None if ok else {"g": ctx.labels[g], "h": ctx.labels[h]},
                )

    # multiplicativity of the action in the Hopf argument
    for n in range(lmax + 1):
        for i in range(m):
            for j in range(m):
                prod = ctx.product(i, j)
                if prod is None:
                    continue
                lhs = op.lmat(i, n).mul(op.lmat(j, n))
                rhs = op.l_element(prod, n)
                ok = lhs == rhs
                _aggregate(
                    records, "action_homomorphism", n, ok,
                    None if ok else {"h": ctx.labels[i], "g": ctx.labels[j]},
                )

    # action commutes with the differential
    for n in range(min(lmax - 1, N - 1) + 1):
        if n + 1 > lmax:
            continue
        for r in range(m):
            ok = op.lmat(r, n + 1).mul(dga.diff[n]) == dga.diff[n].mul(op.lmat(r, n))
            _aggregate(
                records, "differential_commutes", n, ok, None if ok else {"h": ctx.labels[r]}
            )

    # ad-equivariance of the contraction and of the action
    for n in range(1, min(lmax, N) + 1):
        for g in range(m):
            for h in range(m):
                acc = Matrix.zeros(field, dga.dims[n - 1], dga.dims[n])
                for (a, b), c in ctx.coproduct(h).items():
                    ls = Matrix.zeros(field, dga.dims[n - 1], dga.dims[n - 1])
                    for t, ct in ctx.antipode(a).items():
                        ls = ls + op.lmat(t, n - 1).scale(ct)
                    acc = acc + ls.mul(op.imat(g, n)).mul(op.lmat(b, n)).scale(c)
                rhs = op.i_element(ctx.ad_basis(h, g), n)
                ok = acc == rhs
                _aggregate(
                    records, "ad_equivariance_contraction", n, ok,
                    None if ok else {"g": ctx.labels[g], "h": ctx.labels[h]},
                )
    for n in range(lmax + 1):
        for g in range(m):
            for h in range(m):
                acc = Matrix.zeros(field, dga.dims[n], dga.dims[n])
                for (a, b), c in ctx.coproduct(h).items():
                    ls = Matrix.zeros(field, dga.dims[n], dga.dims[n])
                    for t, ct in ctx.antipode(a).items():
                        ls = ls + op.lmat(t, n).scale(ct)
                    acc = acc + ls.mul(op.lmat(g, n)).mul(op.lmat(b, n)).scale(c)
                rhs = op.l_element(ctx.ad_basis(h, g), n)
                ok = acc == rhs
                _aggregate(
                    records, "ad_equivariance_action", n, ok,
                    None if ok else {"g": ctx.labels[g], "h": ctx.labels[h]},
                )

    return records


def check_superalgebra_relations(op):
    """Operator identities of the graded triple (d, L_h, i_h) per degree.

    The anticommutator [d, i_h] must be L_h - eps(h) I, the contraction
    twists past the action exactly as in verify_axioms, d commutes with
    the action, and d squares to zero.
    """
    dga = op.dga
    ctx = op.ctx
    field = dga.field
    N = dga.cutoff
    records = []
    lmax = op.l_max_degree()

    for n in range(N - 1):
        ok = dga.diff[n + 1].mul(dga.diff[n]).is_zero()
        _aggregate(records, "differential_squares_to_zero", n, ok, {"degree": n})

    for n in range(min(lmax, N - 1) + 1):
        for r in range(ctx.dim):
            anti = op.imat(r, n + 1).mul(dga.diff[n])
            if n > 0:
                anti = anti + dga.diff[n - 1].mul(op.imat(r, n))
            eps = ctx.counit(r)
            if eps:
                anti = anti + Matrix.identity(field, dga.dims[n]).scale(eps)
            ok = anti == op.lmat(r, n)
            _aggregate(records, "cartan_homotopy", n, ok, None if ok else {"h": ctx.labels[r]})

    for n in range(1, min(lmax, N) + 1):
        for g in range(ctx.dim):
            for h in range(ctx.dim):
                lhs = op.imat(g, n).mul(op.lmat(h, n))
                rhs = Matrix.zeros(field, dga.dims[n - 1], dga.dims[n])
                for (a, b), c in ctx.coproduct(h).items():
                    iad = op.i_element(ctx.ad_basis(b, g), n)
                    rhs = rhs + op.lmat(a, n - 1).mul(iad).scale(c)
                ok = lhs == rhs
                _aggregate(
                    records, "contraction_action_twist", n, ok,
                    None if ok else {"g": ctx.labels[g], "h": ctx.labels[h]},
                )

    for n in range(min(lmax - 1, N - 1) + 1):
        for r in range(ctx.dim):
            ok = op.lmat(r, n + 1).mul(dga.diff[n]) == dga.diff[n].mul(op.lmat(r, n))
            _aggregate(
                records, "action_differential_commutator", n, ok,
                None if ok else {"h": ctx.labels[r]},
            )

    return records


def all_pass(records):
    return all(rec["pass"] for rec in records)
