"""Multilinear forms on a Hopf algebra as a graded differential algebra.

Degree n holds the n-linear forms; the product is the tensor product.
Two differentials are supported: the bar-type d0 (alternating sum over
adjacent products) and the Hochschild differential for the trivial
bimodule, d = d0 + eps.w + (-1)^(n+1) w.eps.  The contraction operators
use the iterated coproduct and the right adjoint action; together with
the induced degree-0 action they make the whole complex a Hopf operation.

Forms are sparse dicts keyed by basis-index tuples.  Whole-degree
operator matrices are built on demand by FormComplex and cached; the
sparse per-form functions below never materialize a full degree, so they
stay usable for algebras whose tensor powers exceed the dense cap.
"""

import os
from itertools import product as iproduct

from .hopf import add_into
from .linalg import Matrix
from .operation import DGATruncation, FiniteHopfContext, HOperation

DEFAULT_MAX_DIM = 5000


class DimensionCapError(ValueError):
    pass


def max_degree_dim():
    raw = os.environ.get("HOPFWEIL_MAX_DIM", "").strip()
    return int(raw) if raw else DEFAULT_MAX_DIM


class Form:
    """Exact multilinear form of fixed degree, sparse in the basis tuples."""

    __slots__ = ("algebra", "degree", "data")

    def __init__(self, algebra, degree, data=None):
        self.algebra = algebra
        self.degree = degree
        self.data = {k: v for k, v in (data or {}).items() if v}

    def __add__(self, other):
        assert self.algebra is other.algebra and self.degree == other.degree
        out = dict(self.data)
        for k, v in other.data.items():
            add_into(out, k, v)
        return Form(self.algebra, self.degree, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Form(self.algebra, self.degree, {k: -v for k, v in self.data.items()})

    def scale(self, c):
        return Form(self.algebra, self.degree, {k: c * v for k, v in self.data.items()})

    def __eq__(self, other):
        return (
            isinstance(other, Form)
            and self.degree == other.degree
            and self.data == other.data
        )

    def is_zero(self):
        return not self.data

    def __call__(self, *indices):
        """Value on a tuple of basis elements given by index."""
        assert len(indices) == self.degree
        return self.data.get(tuple(indices), self.algebra.field.zero)

    def __repr__(self):
        return "Form(deg %d, %d terms)" % (self.degree, len(self.data))


def dual_form(algebra, indices):
    """Dual-basis form of the given basis-index tuple."""
    return Form(algebra, len(indices), {tuple(indices): algebra.field.one})


def scalar_form(algebra, value):
    return Form(algebra, 0, {(): value})


def counit_form(algebra):
    return Form(
        algebra, 1, {(i,): c for i, c in enumerate(algebra.counit) if c}
    )


def form_product(a, b):
    """(ab)(h_1..h_{p+q}) = a(h_1..h_p) b(h_{p+1}..h_{p+q})."""
    if a.algebra is not b.algebra:
        raise ValueError("forms live over different algebras")
    out = {}
    for ka, va in a.data.items():
        for kb, vb in b.data.items():
            add_into(out, ka + kb, va * vb)
    return Form(a.algebra, a.degree + b.degree, out)


def _product_factors(algebra):
    """factors[t]: all (a, b, c) with c = coefficient of e_t in e_a e_b."""
    cached = getattr(algebra, "_prod_factors", None)
    if cached is not None:
        return cached
    factors = [[] for _ in range(algebra.dim)]
    for a in range(algebra.dim):
        for b in range(algebra.dim):
            for t, c in algebra.mul[a][b].items():
                factors[t].append((a, b, c))
    algebra._prod_factors = factors
    return factors


def d0(form):
    """Bar-type differential: alternating sum over merged adjacent slots."""
    algebra = form.algebra
    n = form.degree
    factors = _product_factors(algebra)
    out = {}
    for key, c in form.data.items():
        for k in range(1, n + 1):
            cc = -c if k % 2 else c
            head, t, tail = key[: k - 1], key[k - 1], key[k:]
            for a, b, mc in factors[t]:
                add_into(out, head + (a, b) + tail, cc * mc)
    return Form(algebra, n + 1, out)


def d_hochschild(form):
    """Hochschild differential for the trivial bimodule."""
    eps = counit_form(form.algebra)
    out = d0(form) + form_product(eps, form)
    tail = form_product(form, eps)
    if form.degree % 2:
        return out + tail
    return out - tail


class FormComplex:
    """Dense operator matrices for the form complex up to a cutoff."""

    def __init__(self, algebra, cutoff=4, differential="hochschild"):
        if differential not in ("hochschild", "d0"):
            raise ValueError("differential must be 'hochschild' or 'd0'")
        self.algebra = algebra
        self.cutoff = cutoff
        self.differential = differential
        m = algebra.dim
        self.dims = [m**n for n in range(cutoff + 1)]
        cap = max_degree_dim()
        if self.dims[-1] > cap:
            raise DimensionCapError(
                "degree %d has dimension %d > cap %d (HOPFWEIL_MAX_DIM)"
                % (cutoff, self.dims[-1], cap)
            )
        self._dmat = {}
        self._imat = {}
        self._lmat = {}
        self._operation = None

    # --- index bookkeeping ---------------------------------------------

    def index_of(self, key):
        m = self.algebra.dim
        idx = 0
        for t in key:
            idx = idx * m + t
        return idx

    def tuples(self, n):
        return list(iproduct(range(self.algebra.dim), repeat=n))

    def form_to_vec(self, form):
        vec = [self.algebra.field.zero] * self.dims[form.degree]
        for key, c in form.data.items():
            vec[self.index_of(key)] = c
        return vec

    def vec_to_form(self, n, vec):
        data = {}
        for key, c in zip(self.tuples(n), vec):
            if c:
                data[key] = c
        return Form(self.algebra, n, data)

    # --- operator matrices ----------------------------------------------

    def dmat(self, n):
        hit = self._dmat.get(n)
        if hit is None:
            d = d_hochschild if self.differential == "hochschild" else d0
            cols = [self.form_to_vec(d(dual_form(self.algebra, t))) for t in self.tuples(n)]
            hit = Matrix.from_columns(self.algebra.field, cols, self.dims[n + 1])
            self._dmat[n] = hit
        return hit

    def imat(self, r, n):
        """Contraction by the r-th basis element on degree n."""
        key = (r, n)
        hit = self._imat.get(key)
        if hit is None:
            alg = self.algebra
            field = alg.field
            one = field.one
            eps_r = alg.counit[r]
            rows = []
            for G in self.tuples(n - 1):
                row = {}
                # final slot gets h - eps(h) 1
                last = {r: one}
                for u, cu in alg.unit.items():
                    add_into(last, u, -(eps_r * cu))
                sign = one if (n - 1) % 2 == 0 else -one
                for s, c in last.items():
                    add_into(row, self.index_of(G + (s,)), sign * c)
                # twisted insertions at earlier slots
                for p in range(n - 1):
                    legs = alg.iterated_coproduct_basis(r, n - p)
                    sgn = one if p % 2 == 0 else -one
                    for tup, c in legs.items():
                        first = {tup[0]: one}
                        eps_first = alg.counit[tup[0]]
                        if eps_first:
                            for u, cu in alg.unit.items():
                                add_into(first, u, -(eps_first * cu))
                        combos = [((s,), cs) for s, cs in first.items()]
                        for k in range(1, n - p):
                            vec = alg.ad_basis(tup[k], G[p + k - 1])
                            combos = [
                                (suf + (t,), cc * ct)
                                for suf, cc in combos
                                for t, ct in vec.items()
                            ]
                        for suf, cc in combos:
                            add_into(row, self.index_of(G[:p] + suf), sgn * c * cc)
                rows.append(row)
            mat = Matrix.zeros(field, self.dims[n - 1], self.dims[n])
            for i, row in enumerate(rows):
                for j, c in row.items():
                    mat.rows[i][j] = c
            self._imat[key] = hit = mat
        return hit

    def lmat(self, r, n):
        """Degree-0 action: simultaneous right-adjoint twist of every slot."""
        key = (r, n)
        hit = self._lmat.get(key)
        if hit is None:
            alg = self.algebra
            field = alg.field
            if n == 0:
                hit = Matrix(field, [[alg.counit[r]]], 1)
            else:
                mat = Matrix.zeros(field, self.dims[n], self.dims[n])
                legs = alg.iterated_coproduct_basis(r, n)
                for i, G in enumerate(self.tuples(n)):
                    row = {}
                    for tup, c in legs.items():
                        combos = [((), c)]
                        for k in range(n):
                            vec = alg.ad_basis(tup[k], G[k])
                            combos = [
                                (suf + (t,), cc * ct)
                                for suf, cc in combos
                                for t, ct in vec.items()
                            ]
                        for suf, cc in combos:
                            add_into(row, self.index_of(suf), cc)
                    for j, c in row.items():
                        mat.rows[i][j] = c
                hit = mat
            self._lmat[key] = hit
        return hit

    # --- library entry points -------------------------------------------

    def contract(self, h_el, form):
        """i_h applied to a form (h a sparse Hopf element)."""
        n = form.degree
        if n == 0:
            return scalar_form(self.algebra, self.algebra.field.zero)
        vec = self.form_to_vec(form)
        out = [self.algebra.field.zero] * self.dims[n - 1]
        for r, c in h_el.items():
            if c:
                part = self.imat(r, n).mulvec(vec)
                out = [a + c * b for a, b in zip(out, part)]
        return self.vec_to_form(n - 1, out)

    def lie(self, h_el, form):
        """L_h applied to a form."""
        n = form.degree
        vec = self.form_to_vec(form)
        out = [self.algebra.field.zero] * self.dims[n]
        for r, c in h_el.items():
            if c:
                part = self.lmat(r, n).mulvec(vec)
                out = [a + c * b for a, b in zip(out, part)]
        return self.vec_to_form(n, out)

    def as_operation(self):
        if self._operation is None:
            alg = self.algebra
            one = alg.field.one
            dims = self.dims

            def product_basis(p, q, i, j):
                return {i * dims[q] + j: one}

            dga = DGATruncation(
                alg.field,
                dims,
                [one],
                product_basis,
                [self.dmat(n) for n in range(self.cutoff)],
                name="forms(%s,%s)" % (self.differential, ",".join(alg.labels[:2])),
            )
            self._operation = HOperation(
                dga, FiniteHopfContext(alg), self.imat, self.lmat, name=dga.name
            )
        return self._operation


def canonical_flat_connection(complex_):
    """The identity of the form complex packaged as a connection."""
    from .connection import Connection

    field = complex_.algebra.field
    rows = Matrix.identity(field, complex_.algebra.dim).rows
    return Connection(complex_.as_operation(), rows)
