"""Hand-built inputs shared by the test modules."""

from itertools import product

from coendcheck.axioms import AlgebraDatum
from coendcheck.exactla import Mat
from coendcheck.fibre import FibreFunctor
from coendcheck.lincat import CatPresentation, MonoidalData

ONE = Mat.identity(1)


def make_split_unit(r=None):
    """One object whose endomorphisms are k x k (two orthogonal idempotents).

    Tensor of morphisms is the product, U(I) = k^2 with U(e_a) = diag(e_a),
    r multiplies coordinates, i is the diagonal.  The coend relations are
    nontrivial here, which makes descent failures observable.
    """
    prod = Mat.from_rows([[1, 0, 0, 0], [0, 0, 0, 1]])
    unit = Mat.column([1, 1])
    cat = CatPresentation(("I",), {("I", "I"): 2}, {("I", "I", "I"): prod}, {"I": unit})
    mon = MonoidalData("I", {("I", "I"): "I"}, {("I", "I", "I", "I"): prod},
                       {("I", "I"): unit}, {"I": "I"}, {"I": unit}, {"I": unit})
    e1 = Mat.from_rows([[1, 0], [0, 0]])
    e2 = Mat.from_rows([[0, 0], [0, 1]])
    r = prod if r is None else r
    U = FibreFunctor({"I": 2}, {("I", "I"): (e1, e2)}, {("I", "I"): r}, unit,
                     {("I", "I"): prod.T}, unit.T, {"I": Mat.identity(2)})
    return cat, mon, U


def corrupted_split_unit():
    """Split unit with r sending e1 (x) e2 to e1: not natural."""
    return make_split_unit(Mat.from_rows([[1, 1, 0, 0], [0, 0, 0, 1]]))


def group_table(elements, mul):
    n = len(elements)
    idx = {g: k for k, g in enumerate(elements)}
    return n, idx, {(a, b): idx[mul(a, b)] for a, b in product(elements, elements)}


def group_algebra(elements, mul, inv):
    """Hopf algebra k[G]: delta g = g (x) g, eps g = 1, S g = g^-1."""
    n, idx, table = group_table(elements, mul)
    mu = [[0] * (n * n) for _ in range(n)]
    for (a, b), c in table.items():
        mu[c][idx[a] * n + idx[b]] = 1
    eta = [1 if g == elements[0] else 0 for g in elements]
    delta = [[0] * n for _ in range(n * n)]
    for g in elements:
        delta[idx[g] * n + idx[g]][idx[g]] = 1
    S = [[0] * n for _ in range(n)]
    for g in elements:
        S[idx[inv(g)]][idx[g]] = 1
    return AlgebraDatum(n, Mat.from_rows(mu), Mat.column(eta), Mat.from_rows(delta),
                        Mat.row([1] * n), Mat.from_rows(S))


def cyclic(n):
    return list(range(n)), (lambda a, b: (a + b) % n), (lambda a: (-a) % n)


def symmetric3():
    from itertools import permutations
    els = sorted(permutations(range(3)))
    mul = lambda a, b: tuple(a[b[i]] for i in range(3))
    inv = lambda a: tuple(sorted(range(3), key=lambda i: a[i]))
    return els, mul, inv
