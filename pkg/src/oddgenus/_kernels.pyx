# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term-dict kernels; see _kernel_py.py for the contract."""

BACKEND = "cython"


cpdef long term_degree(tuple key):
    cdef Py_ssize_t i, n = len(key)
    cdef long s = 0
    for i in range(n - 1):
        s += <long> key[i]
    return 2 * s + <long> key[n - 1]


def add_terms(dict a, dict b):
    cdef dict out = dict(a)
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


def mul_terms(dict a, dict b, long degree_cap):
    cdef dict out = {}
    cdef list bkeys, bvals
    cdef long[::1] bdegs
    cdef Py_ssize_t i, j, nb, nk
    cdef long da, db, oa, room
    cdef tuple ka, kb, key

    if len(a) > len(b):
        a, b = b, a
    nb = len(b)
    bkeys = list(b.keys())
    bvals = [b[k] for k in bkeys]
    import array
    degs = array.array("l", [0] * nb)
    bdegs = degs
    for i in range(nb):
        bdegs[i] = term_degree(<tuple> bkeys[i])

    for ka, va in a.items():
        nk = len(ka)
        oa = <long> ka[nk - 1]
        da = term_degree(ka)
        room = degree_cap - da
        for i in range(nb):
            db = bdegs[i]
            if db > room:
                continue
            kb = <tuple> bkeys[i]
            if oa and <long> kb[nk - 1]:
                raise ValueError("product of two odd generators is not defined")
            key = tuple([<long> ka[j] + <long> kb[j] for j in range(nk)])
            cur = out.get(key)
            if cur is None:
                out[key] = va * bvals[i]
            else:
                out[key] = cur + va * bvals[i]
    return {k: v for k, v in out.items() if v}
