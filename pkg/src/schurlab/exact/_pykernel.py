"""Pure-Python sparse polynomial kernels.

Polynomials reach this layer as plain dicts mapping a packed exponent key to
a coefficient. A key stores one ``bits``-wide field per variable, variable 0
in the most significant field, so multiplying monomials is adding keys.
"""


def field_sum(key, bits, fields):
    """Sum of the exponent fields listed in ``fields`` (absolute bit shifts)."""
    mask = (1 << bits) - 1
    return sum((key >> s) & mask for s in fields)


def mul_terms(a, b, bits, xshifts, cap):
    """Product of two term dicts.

    When ``cap >= 0`` every product monomial whose degree over the fields at
    ``xshifts`` exceeds ``cap`` is dropped.
    """
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    if cap < 0:
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
    else:
        mask = (1 << bits) - 1
        bl = sorted(
            ((sum((kb >> s) & mask for s in xshifts), kb, cb) for kb, cb in b.items()),
            key=lambda t: t[0],
        )
        for ka, ca in a.items():
            room = cap - sum((ka >> s) & mask for s in xshifts)
            if room < 0:
                continue
            for db, kb, cb in bl:
                if db > room:
                    break
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def add_terms(a, b, sign=1):
    out = dict(a)
    get = out.get
    for k, c in b.items():
        v = get(k, 0) + (c if sign > 0 else -c)
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out
