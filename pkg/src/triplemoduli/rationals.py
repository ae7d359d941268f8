"""Exact rational helpers.

Every quantity in this library is an integer or a ``fractions.Fraction``;
floats never appear. ``None`` is the conventional marker for +infinity in
interval endpoints. These helpers give rationals a stable wire format:
``"num/den"`` with the denominator omitted when it is 1, so integers stay
JSON numbers and nothing ever round-trips through binary floating point.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


def rat(num: int, den: int = 1) -> Fraction:
    """Build a Fraction; kept for readable call sites."""
    return Fraction(num, den)


def rat_str(x: Fraction | int) -> str:
    """Render exactly: ``5`` -> "5", ``Fraction(5, 2)`` -> "5/2"."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def parse_rat(text: str) -> Fraction:
    """Parse "num/den" or "num". Raises ValueError on anything else.

    Only integer numerator/denominator are accepted: this is the CLI wire
    format, not a general number parser, so "2.5" and "1e3" are rejected.
    """
    s = text.strip()
    if "/" in s:
        num_s, _, den_s = s.partition("/")
        return Fraction(int(num_s), int(den_s))
    return Fraction(int(s))


def jsonable(x):
    """Map a value to the JSON wire format.

    Fractions become ints when integral, "num/den" strings otherwise; the
    infinity marker ``None`` is left for the caller to rename (null means
    "absent" in reports, so infinite endpoints are mapped to "inf" at the
    report-building layer, not here).
    """
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return rat_str(x)
    if isinstance(x, str):
        return x
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    raise TypeError("cannot serialize %r" % (type(x),))
