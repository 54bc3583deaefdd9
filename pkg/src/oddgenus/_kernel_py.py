"""Pure-Python term-dict kernels.

Terms are dicts mapping exponent keys to nonzero coefficients.  A key is a
tuple of ints ``(e_1, ..., e_m, odd)`` where ``e_i`` is the exponent of the
i-th even generator (cohomological degree 2 each) and ``odd`` is the degree
of the odd marker (0 when absent).  The compiled twin in ``_kernels.pyx``
implements the same three functions.
"""

BACKEND = "python"


def term_degree(key):
    odd = key[-1]
    s = 0
    for e in key[:-1]:
        s += e
    return 2 * s + odd


def add_terms(a, b):
    out = dict(a)
    for k, v in b.items():
        cur = out.get(k)
        if cur is None:
            out[k] = v
        else:
            s = cur + v
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def mul_terms(a, b, degree_cap):
    if len(a) > len(b):
        a, b = b, a
    bitems = []
    for kb, vb in b.items():
        bitems.append((kb, vb, term_degree(kb)))
    out = {}
    for ka, va in a.items():
        oa = ka[-1]
        da = term_degree(ka)
        room = degree_cap - da
        for kb, vb, db in bitems:
            if db > room:
                continue
            if oa and kb[-1]:
                raise ValueError("product of two odd generators is not defined")
            key = tuple(x + y for x, y in zip(ka, kb))
            cur = out.get(key)
            if cur is None:
                out[key] = va * vb
            else:
                out[key] = cur + va * vb
    return {k: v for k, v in out.items() if v}
