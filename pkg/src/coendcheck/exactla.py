"""Exact rational dense linear algebra.

Scalars are exact rationals: plain ``int`` when integral, ``Fraction``
otherwise.  ``Mat`` is an immutable row-major matrix of such scalars.  Tensor
products of spaces flatten with the first factor outermost, so the basis
vector ``e_i (x) e_k`` of ``V (x) W`` sits at index ``i * dim W + k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from coendcheck import kernels


class SingularMatrixError(ArithmeticError):
    pass


def Q(x) -> int | Fraction:
    """Coerce ``x`` to a canonical exact rational.

    Accepts ints, Fractions, other ``numbers.Rational`` values and strings of
    the form ``"p"`` or ``"p/q"``.  Floats are rejected.
    """
    if type(x) is int:
        return x
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, str):
        x = Fraction(x.strip())
    elif isinstance(x, Rational):
        x = Fraction(x.numerator, x.denominator)
    else:
        raise TypeError(f"not an exact rational: {x!r}")
    if x.denominator == 1:
        return x.numerator
    return x


def fmt(x) -> str:
    """Serialize a rational as ``"p/q"``, or ``"p"`` when integral."""
    x = Q(x)
    if type(x) is int:
        return str(x)
    return f"{x.numerator}/{x.denominator}"


class Mat:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimension")
        if entries is None:
            entries = (0,) * (rows * cols)
        else:
            entries = tuple(Q(x) for x in entries)
            if len(entries) != rows * cols:
                raise ValueError(
                    f"{len(entries)} entries for a {rows}x{cols} matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def _raw(cls, rows, cols, entries):
        # entries already normalized by a kernel
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "entries", tuple(entries))
        return m

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> Mat:
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, cols or 0)
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        if cols is not None and cols != width:
            raise ValueError(f"expected {cols} columns, got {width}")
        return cls(len(rows), width, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Mat:
        return cls._raw(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Mat:
        e = [0] * (n * n)
        for i in range(n):
            e[i * n + i] = 1
        return cls._raw(n, n, e)

    @classmethod
    def column(cls, values) -> Mat:
        values = list(values)
        return cls(len(values), 1, values)

    @classmethod
    def row(cls, values) -> Mat:
        values = list(values)
        return cls(1, len(values), values)

    @classmethod
    def unit_column(cls, n: int, k: int) -> Mat:
        e = [0] * n
        e[k] = 1
        return cls._raw(n, 1, e)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row_values(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col_values(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def tolist(self) -> list[list]:
        return [list(self.row_values(i)) for i in range(self.rows)]

    def to_json(self) -> list[list[str]]:
        return [[fmt(x) for x in self.row_values(i)] for i in range(self.rows)]

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols}, {self.to_json()})"

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __matmul__(self, other: Mat) -> Mat:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = kernels.matmul(list(self.entries), self.rows, self.cols,
                             list(other.entries), other.cols)
        return Mat._raw(self.rows, other.cols, out)

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: Mat) -> Mat:
        self._check_same(other)
        return Mat(self.rows, self.cols,
                   [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: Mat) -> Mat:
        self._check_same(other)
        return Mat(self.rows, self.cols,
                   [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> Mat:
        return Mat._raw(self.rows, self.cols, [-a for a in self.entries])

    def __mul__(self, scalar) -> Mat:
        if isinstance(scalar, Mat):
            return NotImplemented
        s = Q(scalar)
        return Mat(self.rows, self.cols, [s * a for a in self.entries])

    __rmul__ = __mul__

    @property
    def T(self) -> Mat:
        r, c = self.rows, self.cols
        e = self.entries
        return Mat._raw(c, r, [e[i * c + j] for j in range(c) for i in range(r)])

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Mat.identity(self.rows)

    def first_nonzero(self):
        """Row-major first nonzero entry as ``(row, col, value)``, or None."""
        for k, x in enumerate(self.entries):
            if x:
                return divmod(k, self.cols) + (x,)
        return None

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> Mat:
        c = self.cols
        e = self.entries
        return Mat._raw(r1 - r0, c1 - c0,
                        [e[i * c + j] for i in range(r0, r1) for j in range(c0, c1)])

    def take_rows(self, idx) -> Mat:
        """Rows ``idx[0], idx[1], ...`` of ``self``; a permutation applied on the left."""
        out = []
        for i in idx:
            out.extend(self.row_values(i))
        return Mat._raw(len(idx), self.cols, out)

    def columns(self, idx) -> Mat:
        idx = list(idx)
        c = self.cols
        e = self.entries
        return Mat._raw(self.rows, len(idx),
                        [e[i * c + j] for i in range(self.rows) for j in idx])


def hstack(mats, rows: int | None = None) -> Mat:
    mats = list(mats)
    if not mats:
        return Mat.zeros(rows or 0, 0)
    n = mats[0].rows
    if any(m.rows != n for m in mats):
        raise ValueError("hstack row mismatch")
    e = []
    for i in range(n):
        for m in mats:
            e.extend(m.row_values(i))
    return Mat._raw(n, sum(m.cols for m in mats), e)


def vstack(mats, cols: int | None = None) -> Mat:
    mats = list(mats)
    if not mats:
        return Mat.zeros(0, cols or 0)
    n = mats[0].cols
    if any(m.cols != n for m in mats):
        raise ValueError("vstack column mismatch")
    e = []
    for m in mats:
        e.extend(m.entries)
    return Mat._raw(sum(m.rows for m in mats), n, e)


def kron(a: Mat, b: Mat) -> Mat:
    """Kronecker product: ``kron(a, b)[i*b.rows + k, j*b.cols + l] = a[i,j] b[k,l]``."""
    out = kernels.kron(list(a.entries), a.rows, a.cols,
                       list(b.entries), b.rows, b.cols)
    return Mat._raw(a.rows * b.rows, a.cols * b.cols, out)


def kron_all(*mats: Mat) -> Mat:
    out = mats[0]
    for m in mats[1:]:
        out = kron(out, m)
    return out


def transpose_dual(m: Mat) -> Mat:
    """Matrix of ``f* : W* -> V*`` in dual bases, for ``f : V -> W``."""
    return m.T


def swap_map(m: int, n: int) -> Mat:
    """Permutation ``V (x) W -> W (x) V`` sending ``e_i (x) e_j`` to ``e_j (x) e_i``."""
    size = m * n
    e = [0] * (size * size)
    for i in range(m):
        for j in range(n):
            e[(j * m + i) * size + (i * n + j)] = 1
    return Mat._raw(size, size, e)


def factor_permutation(dims, order) -> list[int]:
    """Source index of each target index for ``V_0 (x) ... -> V_order[0] (x) ...``.

    ``m.take_rows(factor_permutation(dims, order))`` equals ``P @ m`` for the
    permutation matrix ``P`` that reorders tensor factors.
    """
    dims = list(dims)
    new_dims = [dims[k] for k in order]
    n = len(dims)
    strides = [1] * n
    for k in range(n - 2, -1, -1):
        strides[k] = strides[k + 1] * dims[k + 1]
    src = []
    total = 1
    for d in dims:
        total *= d
    for t in range(total):
        rest, old = t, 0
        for pos in range(n - 1, -1, -1):
            rest, digit = divmod(rest, new_dims[pos])
            old += digit * strides[order[pos]]
        src.append(old)
    return src


def rref(m: Mat) -> tuple[Mat, list[int]]:
    entries, pivots = kernels.rref(list(m.entries), m.rows, m.cols)
    return Mat._raw(m.rows, m.cols, entries), pivots


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def kernel(m: Mat) -> Mat:
    """Basis of ``{v : m v = 0}`` as columns, one per free column of the RREF.

    Each basis vector is signed so that its first nonzero entry is positive.
    """
    r, pivots = rref(m)
    n = m.cols
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    e = [0] * (n * len(free))
    k = len(free)
    for t, fcol in enumerate(free):
        e[fcol * k + t] = 1
        for i, pc in enumerate(pivots):
            x = r.entries[i * n + fcol]
            if x:
                e[pc * k + t] = -x
        # leading entry positive
        lead = next(e[j * k + t] for j in range(n) if e[j * k + t])
        if lead < 0:
            for j in range(n):
                e[j * k + t] = -e[j * k + t]
    return Mat._raw(n, k, e)


def inverse(m: Mat) -> Mat:
    if m.rows != m.cols:
        raise SingularMatrixError(f"non-square {m.shape} matrix")
    n = m.rows
    aug, pivots = rref(hstack([m, Mat.identity(n)]))
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrixError("matrix is singular")
    return aug.submatrix(0, n, n, 2 * n)


def is_invertible(m: Mat) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


def solve(a: Mat, b: Mat) -> Mat | None:
    """One solution ``x`` of ``a x = b`` (free variables set to 0), or None."""
    aug, pivots = rref(hstack([a, b]))
    n = a.cols
    if any(p >= n for p in pivots):
        return None
    x = [0] * (n * b.cols)
    w = aug.cols
    for i, pc in enumerate(pivots):
        for j in range(b.cols):
            x[pc * b.cols + j] = aug.entries[i * w + n + j]
    return Mat._raw(n, b.cols, x)


@dataclass(frozen=True)
class QuotientSpace:
    """``k^ambient_dim`` modulo a relation subspace.

    The quotient basis is the set of *free* ambient coordinates left after
    row-reducing the relations; ``sect`` sends quotient basis vector ``t`` to
    ambient basis vector ``free[t]`` and ``proj`` rewrites every ambient
    vector in that basis.
    """

    ambient_dim: int
    proj: Mat
    sect: Mat
    free: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.proj.rows


def quotient_by(ambient_dim: int, relations: Mat) -> QuotientSpace:
    if relations.rows != ambient_dim:
        raise ValueError(
            f"relations have {relations.rows} rows, ambient is {ambient_dim}")
    r, pivots = rref(relations.T)
    n = ambient_dim
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    q = len(free)
    slot = {c: t for t, c in enumerate(free)}
    proj = [0] * (q * n)
    for c, t in slot.items():
        proj[t * n + c] = 1
    for i, pc in enumerate(pivots):
        for c, t in slot.items():
            x = r.entries[i * n + c]
            if x:
                proj[t * n + pc] = -x
    sect = [0] * (n * q)
    for c, t in slot.items():
        sect[c * q + t] = 1
    return QuotientSpace(n, Mat._raw(q, n, proj), Mat._raw(n, q, sect), tuple(free))
