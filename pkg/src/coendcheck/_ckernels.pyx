# Compiled twin of _pykernels.py; keep the two in lockstep.
from fractions import Fraction


cdef inline object norm(object x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


cdef inline object inv(object x):
    if type(x) is int:
        if x == 1 or x == -1:
            return x
        return Fraction(1, x)
    return norm(1 / x)


def matmul(list a, Py_ssize_t n, Py_ssize_t m, list b, Py_ssize_t p):
    cdef Py_ssize_t i, j, k, t, base, obase, nnz
    cdef list bcols = [None] * m
    cdef list bvals = [None] * m
    cdef list cols, vals, out
    cdef object v, aik
    cdef bint touched
    for k in range(m):
        cols = []
        vals = []
        base = k * p
        for j in range(p):
            v = b[base + j]
            if v:
                cols.append(j)
                vals.append(v)
        bcols[k] = cols
        bvals[k] = vals
    out = [0] * (n * p)
    for i in range(n):
        base = i * m
        obase = i * p
        touched = False
        for k in range(m):
            aik = a[base + k]
            if not aik:
                continue
            cols = <list>bcols[k]
            vals = <list>bvals[k]
            nnz = len(cols)
            for t in range(nnz):
                j = obase + <Py_ssize_t>cols[t]
                out[j] = out[j] + aik * vals[t]
            touched = True
        if touched:
            for j in range(obase, obase + p):
                v = out[j]
                if type(v) is Fraction and v.denominator == 1:
                    out[j] = v.numerator
    return out


def kron(list a, Py_ssize_t ar, Py_ssize_t ac, list b, Py_ssize_t br, Py_ssize_t bc):
    cdef Py_ssize_t i, j, k, l, rows, cols, obase, bbase
    cdef object x, y
    rows = ar * br
    cols = ac * bc
    cdef list out = [0] * (rows * cols)
    for i in range(ar):
        for j in range(ac):
            x = a[i * ac + j]
            if not x:
                continue
            for k in range(br):
                obase = (i * br + k) * cols + j * bc
                bbase = k * bc
                for l in range(bc):
                    y = b[bbase + l]
                    if y:
                        out[obase + l] = norm(x * y)
    return out


def rref(list a, Py_ssize_t n, Py_ssize_t m):
    cdef Py_ssize_t i, j, c, r, piv
    cdef list rows = [a[i * m:(i + 1) * m] for i in range(n)]
    cdef list pivots = []
    cdef list prow, row, out
    cdef object s, f
    r = 0
    for c in range(m):
        if r == n:
            break
        piv = -1
        for i in range(r, n):
            if (<list>rows[i])[c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            rows[piv], rows[r] = rows[r], rows[piv]
        prow = <list>rows[r]
        s = inv(prow[c])
        if s != 1:
            for j in range(c, m):
                if prow[j]:
                    prow[j] = norm(prow[j] * s)
        for i in range(n):
            if i == r:
                continue
            row = <list>rows[i]
            f = row[c]
            if not f:
                continue
            for j in range(c, m):
                if prow[j]:
                    row[j] = norm(row[j] - f * prow[j])
        pivots.append(c)
        r += 1
    out = []
    for row in rows:
        out.extend(row)
    return out, pivots
