"""Coefficient fields: rationals, prime fields, cyclotomic extensions.

Scalars are plain objects with exact operator arithmetic (+, -, *, /,
==, bool = nonzero).  A Field instance carries construction, parsing and
formatting; it is the variant tag of its scalars.
"""

from . import _rat
from ._rat import rat, rat_from_str, rat_to_str


class FieldError(ValueError):
    pass


class Field:
    """Common interface; subclasses fix the scalar representation."""

    tag = "?"

    def __call__(self, value):
        return self.from_int(value)

    def scale(self, q, x):
        """Multiply scalar x by a rational q (exactly)."""
        return self.from_rational(q) * x

    def __eq__(self, other):
        return type(self) is type(other) and self.key() == other.key()

    def __hash__(self):
        return hash((type(self).__name__,) + self.key())

    def key(self):
        return ()

    def __repr__(self):
        return self.describe()


class RationalField(Field):
    tag = "rational"
    zero = _rat.RZERO
    one = _rat.RONE

    def from_int(self, n):
        return rat(n)

    def from_rational(self, q):
        return rat(q.numerator, q.denominator)

    def parse(self, text):
        return rat_from_str(text)

    def fmt(self, x):
        return rat_to_str(x)

    def to_json(self, x):
        return rat_to_str(x)

    def describe(self):
        return "QQ"


class FpScalar:
    """Element of Z/p; p is carried for safety, arithmetic stays mod p."""

    __slots__ = ("p", "v")

    def __init__(self, p, v):
        self.p = p
        self.v = v % p

    def __add__(self, other):
        return FpScalar(self.p, self.v + other.v)

    def __sub__(self, other):
        return FpScalar(self.p, self.v - other.v)

    def __neg__(self):
        return FpScalar(self.p, -self.v)

    def __mul__(self, other):
        return FpScalar(self.p, self.v * other.v)

    def __truediv__(self, other):
        if other.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return FpScalar(self.p, self.v * pow(other.v, self.p - 2, self.p))

    def __eq__(self, other):
        return isinstance(other, FpScalar) and self.p == other.p and self.v == other.v

    def __bool__(self):
        return self.v != 0

    def __hash__(self):
        return hash((self.p, self.v))

    def __repr__(self):
        return "%d (mod %d)" % (self.v, self.p)


class PrimeField(Field):
    tag = "prime"

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise FieldError("modulus %r is not prime" % (p,))
        self.p = p
        self.zero = FpScalar(p, 0)
        self.one = FpScalar(p, 1)

    def key(self):
        return (self.p,)

    def from_int(self, n):
        return FpScalar(self.p, n)

    def from_rational(self, q):
        return self.from_int(q.numerator) / self.from_int(q.denominator)

    def parse(self, text):
        q = rat_from_str(text)
        return self.from_rational(q)

    def fmt(self, x):
        return str(x.v)

    def to_json(self, x):
        return str(x.v)

    def describe(self):
        return "GF(%d)" % self.p


def _cyclotomic_poly(n):
    """Coefficients of the n-th cyclotomic polynomial, ascending, exact."""
    # x^n - 1 = prod_{d | n} Phi_d; divide out the proper divisors.
    poly = [rat(-1)] + [_rat.RZERO] * (n - 1) + [rat(1)]
    for d in range(1, n):
        if n % d:
            continue
        phi_d = _cyclotomic_poly(d)
        poly = _poly_divexact(poly, phi_d)
    return poly


def _poly_divexact(num, den):
    num = list(num)
    out = [_rat.RZERO] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] / den[-1]
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    assert all(not c for c in num[: len(den) - 1])
    return out


class CycScalar:
    """Element of QQ(zeta_n): rational polynomial in zeta modulo Phi_n."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs  # tuple, length = deg Phi_n

    def __add__(self, other):
        return CycScalar(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return CycScalar(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CycScalar(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        return CycScalar(self.field, self.field._mulmod(self.coeffs, other.coeffs))

    def __truediv__(self, other):
        return self * other._inverse()

    def _inverse(self):
        if not self:
            raise ZeroDivisionError("division by zero in %s" % self.field.describe())
        return CycScalar(self.field, self.field._invmod(self.coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, CycScalar)
            and self.field.n == other.field.n
            and self.coeffs == other.coeffs
        )

    def __bool__(self):
        return any(self.coeffs)

    def __hash__(self):
        return hash((self.field.n, self.coeffs))

    def __repr__(self):
        return "Cyc%d%r" % (self.field.n, tuple(rat_to_str(c) for c in self.coeffs))


class CyclotomicField(Field):
    """QQ(zeta_n) as QQ[x] / Phi_n(x); one exact tower over the rationals."""

    tag = "cyclotomic"

    def __init__(self, n):
        if n < 1:
            raise FieldError("cyclotomic order must be >= 1")
        self.n = n
        self.modulus = tuple(_cyclotomic_poly(n))
        self.degree = len(self.modulus) - 1
        # x^degree reduced mod Phi_n, reused by _mulmod.
        lead = self.modulus[-1]
        self._xdeg = tuple(-c / lead for c in self.modulus[:-1])
        self.zero = CycScalar(self, (_rat.RZERO,) * self.degree)
        self.one = CycScalar(self, (_rat.RONE,) + (_rat.RZERO,) * (self.degree - 1))

    def key(self):
        return (self.n,)

    @property
    def zeta(self):
        if self.degree == 1:
            return CycScalar(self, (self._xdeg[0],))
        coeffs = [_rat.RZERO] * self.degree
        coeffs[1] = _rat.RONE
        return CycScalar(self, tuple(coeffs))

    def from_int(self, n):
        return self.from_rational(rat(n))

    def from_rational(self, q):
        return CycScalar(self, (rat(q.numerator, q.denominator),) + (_rat.RZERO,) * (self.degree - 1))

    def _mulmod(self, a, b):
        d = self.degree
        prod = [_rat.RZERO] * (2 * d - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
        # reduce degrees >= d downward
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if not c:
                continue
            prod[k] = _rat.RZERO
            for j, xj in enumerate(self._xdeg):
                if xj:
                    prod[k - d + j] += c * xj
        return tuple(prod[:d])

    def _invmod(self, a):
        # extended Euclid in QQ[x] against Phi_n
        r0, r1 = list(self.modulus), list(a)
        t0, t1 = [_rat.RZERO], [_rat.RONE]
        while any(r1):
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
        lead = _poly_trim(r0)
        if len(lead) != 1:
            raise FieldError("Phi_%d not irreducible over the given element" % self.n)
        inv = [c / lead[0] for c in t0]
        inv = (inv + [_rat.RZERO] * self.degree)[: self.degree]
        return tuple(inv)

    def parse(self, text):
        parts = [p.strip() for p in text.split(",")]
        if len(parts) > self.degree:
            raise FieldError("cyclotomic literal %r has more than %d coefficients" % (text, self.degree))
        coeffs = [rat_from_str(p) for p in parts]
        coeffs += [_rat.RZERO] * (self.degree - len(coeffs))
        return CycScalar(self, tuple(coeffs))

    def fmt(self, x):
        return ",".join(rat_to_str(c) for c in x.coeffs)

    def to_json(self, x):
        return [rat_to_str(c) for c in x.coeffs]

    def as_rational(self, x):
        """Rational value of a degree-1 field element (n in {1, 2})."""
        if self.degree != 1:
            raise FieldError("QQ(zeta_%d) does not embed in QQ" % self.n)
        return x.coeffs[0]

    def describe(self):
        return "QQ(zeta_%d)" % self.n


def _poly_trim(p):
    out = list(p)
    while out and not out[-1]:
        out.pop()
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [_rat.RZERO] * (n - len(a))
    b = list(b) + [_rat.RZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_mul(a, b):
    out = [_rat.RZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return out


def _poly_divmod(a, b):
    a = _poly_trim(a)
    b = _poly_trim(b)
    q = [_rat.RZERO] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    while len(_poly_trim(r)) >= len(b):
        r = _poly_trim(r)
        shift = len(r) - len(b)
        c = r[-1] / b[-1]
        q[shift] = c
        for j, bj in enumerate(b):
            r[shift + j] -= c * bj
        r = r[:-1]
    return q, r


QQ = RationalField()


def field_from_spec(kind, param=None):
    """Field from a definition-file header: rational | prime p | cyclotomic n."""
    if kind == "rational":
        return QQ
    if kind == "prime":
        return PrimeField(int(param))
    if kind == "cyclotomic":
        return CyclotomicField(int(param))
    raise FieldError("unknown field kind %r" % (kind,))
