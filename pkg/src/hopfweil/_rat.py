"""Exact rational scalar backend.

Selected once at import: gmpy2.mpq (GMP-backed) when available, else
fractions.Fraction.  Both expose numerator/denominator and exact +,-,*,/,
so everything downstream is backend-agnostic.  Force a backend with
HOPFWEIL_RATIONAL_BACKEND=gmpy2|fractions (used by the benchmark).
"""

import os
from fractions import Fraction

_forced = os.environ.get("HOPFWEIL_RATIONAL_BACKEND", "").strip().lower()

if _forced in ("", "gmpy2"):
    try:
        from gmpy2 import mpq as rat

        BACKEND = "gmpy2"
    except ImportError:
        if _forced == "gmpy2":
            raise
        rat = Fraction
        BACKEND = "fractions"
elif _forced == "fractions":
    rat = Fraction
    BACKEND = "fractions"
else:
    raise RuntimeError("unknown HOPFWEIL_RATIONAL_BACKEND %r" % _forced)

RZERO = rat(0)
RONE = rat(1)


def rat_from_str(text):
    """Parse an exact rational literal 'p' or 'p/q'. Floats are rejected."""
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        return rat(int(num), int(den))
    return rat(int(text))


def rat_to_str(value):
    num, den = value.numerator, value.denominator
    if den == 1:
        return str(num)
    return "%d/%d" % (num, den)
