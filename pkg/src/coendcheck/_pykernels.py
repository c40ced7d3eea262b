"""Pure-Python inner loops over row-major lists of exact rationals.

Entries are ``int`` or ``Fraction``; every returned entry is normalized so
that integral values are plain ints.  ``_ckernels.pyx`` mirrors this file
line for line and must stay behaviourally identical.
"""

from fractions import Fraction


def norm(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def inv(x):
    if type(x) is int:
        if x == 1 or x == -1:
            return x
        return Fraction(1, x)
    return norm(1 / x)


def matmul(a, n, m, b, p):
    """Product of an n x m and an m x p matrix; zero entries are skipped."""
    bcols = []
    bvals = []
    for k in range(m):
        cols = []
        vals = []
        base = k * p
        for j in range(p):
            v = b[base + j]
            if v:
                cols.append(j)
                vals.append(v)
        bcols.append(cols)
        bvals.append(vals)
    out = [0] * (n * p)
    for i in range(n):
        base = i * m
        obase = i * p
        touched = False
        for k in range(m):
            aik = a[base + k]
            if not aik:
                continue
            cols = bcols[k]
            vals = bvals[k]
            for t in range(len(cols)):
                j = obase + cols[t]
                out[j] = out[j] + aik * vals[t]
            touched = True
        if touched:
            for j in range(obase, obase + p):
                v = out[j]
                if type(v) is Fraction and v.denominator == 1:
                    out[j] = v.numerator
    return out


def kron(a, ar, ac, b, br, bc):
    rows = ar * br
    cols = ac * bc
    out = [0] * (rows * cols)
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


def rref(a, n, m):
    """Reduced row echelon form with leftmost-nonzero pivoting.

    Returns ``(entries, pivots)``; pivot columns are listed in row order.
    """
    rows = [list(a[i * m:(i + 1) * m]) for i in range(n)]
    pivots = []
    r = 0
    for c in range(m):
        if r == n:
            break
        piv = -1
        for i in range(r, n):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            rows[piv], rows[r] = rows[r], rows[piv]
        prow = rows[r]
        s = inv(prow[c])
        if s != 1:
            for j in range(c, m):
                if prow[j]:
                    prow[j] = norm(prow[j] * s)
        for i in range(n):
            if i == r:
                continue
            row = rows[i]
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
