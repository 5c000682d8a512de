"""Double-double arithmetic built from error-free transformations.

A value is a pair ``(hi, lo)`` of floats with ``|lo| <= ulp(hi)/2``.  Only the
handful of operations needed by the series engine are provided.
"""

import math

_SPLITTER = 134217729.0  # 2**27 + 1
_SPLIT_LIMIT = 6.69692879491417e299  # 2**996


def two_sum(a, b):
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a, b):
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _split(a):
    if abs(a) > _SPLIT_LIMIT:
        raise OverflowError("value too large for exact splitting")
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a, b):
    p = a * b
    if not math.isfinite(p):
        raise OverflowError("product overflow")
    ah, al = _split(a)
    bh, bl = _split(b)
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


def add(x, y):
    s, e = two_sum(x[0], y[0])
    t, f = two_sum(x[1], y[1])
    e += t
    s, e = quick_two_sum(s, e)
    e += f
    return quick_two_sum(s, e)


def add_float(x, b):
    s, e = two_sum(x[0], b)
    e += x[1]
    return quick_two_sum(s, e)


def mul(x, y):
    p, e = two_prod(x[0], y[0])
    e += x[0] * y[1] + x[1] * y[0]
    return quick_two_sum(p, e)


def mul_float(x, b):
    p, e = two_prod(x[0], b)
    e += x[1] * b
    return quick_two_sum(p, e)


def div(x, y):
    q1 = x[0] / y[0]
    r = add(x, neg(mul_float(y, q1)))
    q2 = r[0] / y[0]
    r = add(r, neg(mul_float(y, q2)))
    q3 = r[0] / y[0]
    q1, q2 = quick_two_sum(q1, q2)
    return add_float((q1, q2), q3)


def neg(x):
    return -x[0], -x[1]


def from_float(a):
    return float(a), 0.0
