"""Connections on a Hopf operation and their curvature.

A connection is its degree-1 data: a matrix sending each dual-basis
functional to a degree-1 element of the operation; the multiplicative
extension to all form degrees is implicit.  The affine solution space is
cut out by the contraction normalization and ad-equivariance at degree 1.
"""

from .cforms import FormComplex, d_hochschild, dual_form
from .hopf import add_into
from .linalg import Matrix, solve_affine
from .operation import DegreeError


class Connection:
    """rows[j] = image of the j-th dual-basis functional in degree 1."""

    def __init__(self, op, rows):
        self.op = op
        self.rows = [list(r) for r in rows]
        assert len(self.rows) == op.ctx.dim
        assert all(len(r) == op.dga.dims[1] for r in self.rows)
        self._cform = None

    @property
    def algebra(self):
        return self.op.ctx.algebra

    def cform(self):
        if self._cform is None:
            self._cform = FormComplex(self.algebra, cutoff=max(2, self.op.dga.cutoff - 1))
        return self._cform

    def extend(self, form):
        """Multiplicative extension applied to a form; coordinate vector."""
        dga = self.op.dga
        n = form.degree
        if n > dga.cutoff:
            raise DegreeError("form degree beyond the operation cutoff")
        out = [dga.field.zero] * dga.dims[n]
        for key, c in form.data.items():
            vec = list(dga.unit)
            deg = 0
            for t in key:
                vec = dga.product_vec(deg, 1, vec, self.rows[t])
                deg += 1
            for k, v in enumerate(vec):
                if v:
                    out[k] = out[k] + c * v
        return out

    def curvature(self, form):
        """d alpha - alpha d applied to a form; lands one degree higher."""
        dga = self.op.dga
        n = form.degree
        if n + 1 > dga.cutoff:
            raise DegreeError("curvature needs one degree of headroom")
        left = dga.diff[n].mulvec(self.extend(form))
        right = self.extend(d_hochschild(form))
        return [a - b for a, b in zip(left, right)]

    def curvature_rows(self):
        """Curvature on the dual basis: the degree-2 companion of rows."""
        alg = self.algebra
        return [self.curvature(dual_form(alg, (j,))) for j in range(alg.dim)]

    def is_flat(self, max_degree=2):
        alg = self.algebra
        for n in range(1, max_degree + 1):
            for key in self.cform().tuples(n):
                if any(self.curvature(dual_form(alg, key))):
                    return False
        return True


def solve_connection_space(op):
    """Affine space of connections: (particular, kernel rows) or None.

    Unknowns are the degree-1 images of the dual basis; constraints are
    the contraction normalization i_h a(psi) = psi(h) - eps(h) psi(1) and
    ad-equivariance L_h a(psi) = a(psi o ad h), both per basis element.
    """
    dga = op.dga
    ctx = op.ctx
    field = dga.field
    m = ctx.dim
    w0, w1 = dga.dims[0], dga.dims[1]
    unknowns = m * w1
    rows = []
    rhs = []
    alg = ctx.algebra
    unit = alg.unit
    for r in range(m):
        imat = op.imat(r, 1)
        lmat = op.lmat(r, 1)
        eps_r = alg.counit[r]
        for j in range(m):
            target = (field.one if j == r else field.zero) - eps_r * unit.get(j, field.zero)
            for t in range(w0):
                row = [field.zero] * unknowns
                for k in range(w1):
                    if imat.rows[t][k]:
                        row[j * w1 + k] = imat.rows[t][k]
                rows.append(row)
                rhs.append(target * dga.unit[t])
            # psi_j o ad(e_r) = sum_s <ad(e_r) e_s, psi_j> psi_s
            twist = [alg.ad_basis(r, s).get(j, field.zero) for s in range(m)]
            for t in range(w1):
                row = [field.zero] * unknowns
                for k in range(w1):
                    if lmat.rows[t][k]:
                        row[j * w1 + k] = lmat.rows[t][k]
                for s in range(m):
                    if twist[s]:
                        row[s * w1 + t] = row[s * w1 + t] - twist[s]
                rows.append(row)
                rhs.append(field.zero)
    solved = solve_affine(Matrix(field, rows, unknowns), rhs)
    if solved is None:
        return None
    particular, kernel = solved
    chop = lambda x: [x[j * w1 : (j + 1) * w1] for j in range(m)]
    return Connection(op, chop(particular)), [chop(k) for k in kernel]


def _record(records, name, ok, witness):
    for rec in records:
        if rec["name"] == name:
            if not ok and rec["pass"]:
                rec["pass"] = False
                rec["witness"] = witness
            rec["checked"] += 1
            return
    records.append({"name": name, "degree": None, "pass": ok, "witness": None if ok else witness, "checked": 1})


def verify_connection(conn, max_source_degree=2):
    """Exact identity checks for a connection on dual-basis generators.

    Covers: compatibility of the extension with contraction and action,
    vanishing of the curvature on scalars, horizontality and
    ad-equivariance of the curvature, its graded product rule, and the
    differential Bianchi identity.  Degrees are capped so every needed
    operator stays inside the operation cutoff.
    """
    op = conn.op
    dga = op.dga
    alg = conn.algebra
    field = dga.field
    m = alg.dim
    cx = conn.cform()
    records = []
    lmax = op.l_max_degree()

    def vec_eq(a, b):
        return all(x == y for x, y in zip(a, b))

    # extension intertwines contraction and action
    for n in range(1, max_source_degree + 1):
        if n > dga.cutoff:
            break
        for key in cx.tuples(n):
            psi = dual_form(alg, key)
            avec = conn.extend(psi)
            for r in range(m):
                lhs = op.imat(r, n).mulvec(avec) if n else []
                rhs = conn.extend(cx.contract(alg.basis_element(r), psi))
                _record(records, "extension_contraction", vec_eq(lhs, rhs), {"h": alg.labels[r], "key": list(key)})
                if n <= lmax:
                    lhs2 = op.lmat(r, n).mulvec(avec)
                    rhs2 = conn.extend(cx.lie(alg.basis_element(r), psi))
                    _record(records, "extension_action", vec_eq(lhs2, rhs2), {"h": alg.labels[r], "key": list(key)})

    # curvature vanishes on scalars
    from .cforms import scalar_form

    zvec = conn.curvature(scalar_form(alg, field.one))
    _record(records, "curvature_scalars_vanish", not any(zvec), {"degree": 0})

    # curvature of degree-1 generators: horizontal and ad-equivariant
    phi1 = conn.curvature_rows()
    for j in range(m):
        for r in range(m):
            iv = op.imat(r, 2).mulvec(phi1[j])
            _record(records, "curvature_horizontal", not any(iv), {"h": alg.labels[r], "j": j})
            if 2 <= lmax:
                lv = op.lmat(r, 2).mulvec(phi1[j])
                twist = [field.zero] * dga.dims[2]
                for s in range(m):
                    c = alg.ad_basis(r, s).get(j, field.zero)
                    if c:
                        twist = [a + c * b for a, b in zip(twist, phi1[s])]
                _record(records, "curvature_equivariant", vec_eq(lv, twist), {"h": alg.labels[r], "j": j})

    # general curvature compatibility on degree-2 forms
    if 3 <= dga.cutoff:
        for key in cx.tuples(2):
            psi = dual_form(alg, key)
            phiv = conn.curvature(psi)
            for r in range(m):
                lhs = op.imat(r, 3).mulvec(phiv)
                rhs = conn.curvature(cx.contract(alg.basis_element(r), psi))
                neg = [-x for x in rhs]
                _record(records, "curvature_anticontraction", vec_eq(lhs, neg), {"h": alg.labels[r], "key": list(key)})
                if 3 <= lmax:
                    lhs2 = op.lmat(r, 3).mulvec(phiv)
                    rhs2 = conn.curvature(cx.lie(alg.basis_element(r), psi))
                    _record(records, "curvature_action", vec_eq(lhs2, rhs2), {"h": alg.labels[r], "key": list(key)})

    # graded product rule of the curvature on pairs of generators
    if 3 <= dga.cutoff:
        from .cforms import form_product

        for j in range(m):
            for k in range(m):
                a, b = dual_form(alg, (j,)), dual_form(alg, (k,))
                lhs = conn.curvature(form_product(a, b))
                t1 = dga.product_vec(2, 1, phi1[j], conn.rows[k])
                t2 = dga.product_vec(1, 2, conn.rows[j], phi1[k])
                rhs = [x - y for x, y in zip(t1, t2)]
                _record(records, "curvature_product_rule", vec_eq(lhs, rhs), {"pair": [j, k]})

    # differential Bianchi identity on generators up to the cutoff
    for n in range(1, max_source_degree + 1):
        if n + 2 > dga.cutoff:
            break
        for key in cx.tuples(n):
            psi = dual_form(alg, key)
            lhs = dga.diff[n + 1].mulvec(conn.curvature(psi))
            rhs = [-x for x in conn.curvature(d_hochschild(psi))]
            _record(records, "bianchi", vec_eq(lhs, rhs), {"key": list(key)})

    return records


# --- element form over H (x) Omega -------------------------------------


def _elt_product(op, p, q, A, B):
    """Product in H (x) Omega of elements given as lists of degree vectors."""
    alg = op.ctx.algebra
    dga = op.dga
    m = alg.dim
    out = [[dga.field.zero] * dga.dims[p + q] for _ in range(m)]
    for a in range(m):
        if not any(A[a]):
            continue
        for b in range(m):
            if not any(B[b]):
                continue
            vec = dga.product_vec(p, q, A[a], B[b])
            for c, cc in alg.mul[a][b].items():
                row = out[c]
                for k, v in enumerate(vec):
                    if v:
                        row[k] = row[k] + cc * v
    return out


def connection_element(conn):
    """The connection as an element of H (x) degree-1, one row per basis."""
    return [list(r) for r in conn.rows]


def element_to_rows(op, element):
    """Inverse of connection_element; the round trip is the identity."""
    return [list(r) for r in element]


def curvature_element(conn):
    """Element form of the curvature in H (x) degree-2.

    Computed as dA + A^2 - (E A + A E) where E = 1_H (x) alpha(eps); this
    is the element whose pairing with every functional reproduces the
    curvature map on degree-1 forms.
    """
    op = conn.op
    dga = op.dga
    alg = conn.algebra
    field = dga.field
    m = alg.dim
    A = connection_element(conn)
    dA = [dga.diff[1].mulvec(row) for row in A]
    A2 = _elt_product(op, 1, 1, A, A)
    aeps = [field.zero] * dga.dims[1]
    for j in range(m):
        c = alg.counit[j]
        if c:
            aeps = [x + c * y for x, y in zip(aeps, A[j])]
    E = [[field.zero] * dga.dims[1] for _ in range(m)]
    for u, cu in alg.unit.items():
        E[u] = [cu * x for x in aeps]
    EA = _elt_product(op, 1, 1, E, A)
    AE = _elt_product(op, 1, 1, A, E)
    F = []
    for j in range(m):
        F.append([w + x - y - z for w, x, y, z in zip(dA[j], A2[j], EA[j], AE[j])])
    return F


def element_bianchi_holds(conn):
    """dF + (A-E) F - F (A-E) = 0 in H (x) degree-3 (exact for flat eps-part)."""
    op = conn.op
    dga = op.dga
    alg = conn.algebra
    field = dga.field
    m = alg.dim
    if dga.cutoff < 3:
        raise DegreeError("element Bianchi check needs cutoff >= 3")
    A = connection_element(conn)
    F = curvature_element(conn)
    aeps = [field.zero] * dga.dims[1]
    for j in range(m):
        c = alg.counit[j]
        if c:
            aeps = [x + c * y for x, y in zip(aeps, A[j])]
    Abar = [list(r) for r in A]
    for u, cu in alg.unit.items():
        Abar[u] = [x - cu * y for x, y in zip(Abar[u], aeps)]
    dF = [dga.diff[2].mulvec(row) for row in F]
    AF = _elt_product(op, 1, 2, Abar, F)
    FA = _elt_product(op, 2, 1, F, Abar)
    for j in range(m):
        for a, b, c in zip(dF[j], AF[j], FA[j]):
            if a + b - c:
                return False
    return True
