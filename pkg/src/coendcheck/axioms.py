"""Exact axiom checks for finite-dimensional algebra/coalgebra data.

Every verdict is a literal equality with zero; there is no tolerance.  Maps
act on column vectors and tensor powers flatten with the first factor
outermost, so ``kron(a, b)`` is ``a (x) b``.
"""

from __future__ import annotations

from dataclasses import dataclass

from coendcheck.exactla import Mat, factor_permutation, fmt, inverse, kron, kron_all
from coendcheck.report import FAIL, INFO, PASS, CheckReport, Collector, entry_witness


@dataclass(frozen=True)
class AlgebraDatum:
    dim: int
    mu: Mat
    eta: Mat
    delta: Mat | None = None
    eps: Mat | None = None
    antipode: Mat | None = None
    dim_UI: object = 1

    def __post_init__(self):
        n = self.dim
        want = {"mu": (n, n * n), "eta": (n, 1), "delta": (n * n, n),
                "eps": (1, n), "antipode": (n, n)}
        for field, shape in want.items():
            m = getattr(self, field)
            if m is not None and m.shape != shape:
                raise ValueError(f"shape mismatch: {field} is {m.shape}, expected {shape}")

    def require(self, *fields):
        missing = [f for f in fields if getattr(self, f) is None]
        if missing:
            raise ValueError(f"datum lacks {', '.join(missing)}")

    def replace(self, **changes) -> AlgebraDatum:
        kw = {f: getattr(self, f) for f in
              ("dim", "mu", "eta", "delta", "eps", "antipode", "dim_UI")}
        kw.update(changes)
        return AlgebraDatum(**kw)


def _id(d: AlgebraDatum) -> Mat:
    return Mat.identity(d.dim)


def check_algebra(d: AlgebraDatum) -> CheckReport:
    I = _id(d)
    col = Collector("algebra")
    col.residual("associativity", d.mu @ kron(d.mu, I) - d.mu @ kron(I, d.mu))
    col.residual("left unit", d.mu @ kron(d.eta, I) - I)
    col.residual("right unit", d.mu @ kron(I, d.eta) - I)
    return col.report()


def check_coalgebra(d: AlgebraDatum) -> CheckReport:
    d.require("delta", "eps")
    I = _id(d)
    col = Collector("coalgebra")
    col.residual("coassociativity", kron(d.delta, I) @ d.delta - kron(I, d.delta) @ d.delta)
    col.residual("left counit", kron(d.eps, I) @ d.delta - I)
    col.residual("right counit", kron(I, d.eps) @ d.delta - I)
    return col.report()


def check_very_weak_bialgebra(d: AlgebraDatum) -> CheckReport:
    """``delta mu = (mu (x) mu)(1 (x) c (x) 1)(delta (x) delta)``."""
    d.require("delta", "eps")
    n = d.dim
    middle = kron(d.delta, d.delta).take_rows(factor_permutation([n] * 4, [0, 2, 1, 3]))
    col = Collector("very_weak_bialgebra")
    col.residual("delta mu", d.delta @ d.mu - kron(d.mu, d.mu) @ middle)
    return col.report()


def _delta3(d):
    return kron(_id(d), d.delta) @ d.delta


def _with_antipode(d):
    I = _id(d)
    return kron_all(I, d.antipode, I)


def check_vn_core(d: AlgebraDatum) -> CheckReport:
    """``mu_3 (1 (x) S (x) 1) delta_3 = 1``."""
    d.require("delta", "antipode")
    I = _id(d)
    mu3 = d.mu @ kron(I, d.mu)
    col = Collector("vn_core")
    col.residual("mu3 (1 S 1) delta3 = 1", mu3 @ _with_antipode(d) @ _delta3(d) - I)
    return col.report()


def check_unital_core(d: AlgebraDatum) -> CheckReport:
    """``(1 (x) mu)(1 (x) S (x) 1) delta_3 = 1 (x) eta``."""
    d.require("delta", "antipode")
    I = _id(d)
    left = kron(I, d.mu) @ _with_antipode(d) @ _delta3(d)
    col = Collector("unital_core")
    col.residual("(1 mu)(1 S 1) delta3 = 1 eta", left - kron(I, d.eta))
    return col.report()


def fusion_operators(d: AlgebraDatum) -> tuple[Mat, Mat]:
    """``f = (1 (x) mu)(delta (x) 1)`` and ``g = (1 (x) mu)(1 (x) S (x) 1)(delta (x) 1)``."""
    d.require("delta", "antipode")
    I = _id(d)
    dI = kron(d.delta, I)
    f = kron(I, d.mu) @ dI
    g = kron(I, d.mu) @ _with_antipode(d) @ dI
    return f, g


def check_fusion(d: AlgebraDatum) -> tuple[CheckReport, ...]:
    f, g = fusion_operators(d)
    n = d.dim
    gf = g @ f
    out = [
        _single("fusion.gf_identity", "g f = 1", gf - Mat.identity(n * n)),
        _single("fusion.fgf", "f g f = f", f @ gf - f),
        _single("fusion.gfg", "g f g = g", gf @ g - g),
    ]
    # f12 f13 f23 = f23 f12 on the triple tensor power; informational
    I = _id(d)
    f12, f23 = kron(f, I), kron(I, f)
    p23 = factor_permutation([n] * 3, [0, 2, 1])
    f13 = f12.take_rows(p23).T.take_rows(p23).T
    res = f12 @ f13 @ f23 - f23 @ f12
    w = entry_witness(res, law="f12 f13 f23 = f23 f12")
    out.append(CheckReport("fusion.equation", INFO, w, {"holds": w is None}))
    return tuple(out)


def check_counit_unit_defects(d: AlgebraDatum) -> tuple[CheckReport, ...]:
    """(a) ``eps mu - eps (x) eps``, informational; (b) ``dim UI delta eta - eta (x) eta``."""
    d.require("delta", "eps")
    res = d.eps @ d.mu - kron(d.eps, d.eps)
    w = entry_witness(res, law="eps mu = eps eps")
    a = CheckReport("defect.counit_multiplicative", INFO, w, {"holds": w is None})
    res = d.delta @ d.eta * d.dim_UI - kron(d.eta, d.eta)
    b = _single("defect.rescaled_unit", "dim UI delta eta = eta eta", res,
                dim_UI=fmt(d.dim_UI))
    return a, b


def _single(name, law, residual, **info) -> CheckReport:
    w = entry_witness(residual, law=law)
    return CheckReport(name, PASS if w is None else FAIL, w, info)


def dualize(d: AlgebraDatum) -> AlgebraDatum:
    """The datum on the dual space: transpose every map and swap the roles."""
    d.require("delta", "eps")
    return AlgebraDatum(
        d.dim, d.delta.T, d.eps.T, d.mu.T, d.eta.T,
        None if d.antipode is None else d.antipode.T, d.dim_UI)


def transport(d: AlgebraDatum, T: Mat) -> AlgebraDatum:
    """Conjugate every map by the invertible change of basis ``T``."""
    Ti = inverse(T)
    return AlgebraDatum(
        d.dim,
        T @ d.mu @ kron(Ti, Ti),
        T @ d.eta,
        None if d.delta is None else kron(T, T) @ d.delta @ Ti,
        None if d.eps is None else d.eps @ Ti,
        None if d.antipode is None else T @ d.antipode @ Ti,
        d.dim_UI)


def implication(name: str, premises, conclusion: CheckReport,
                informational: bool = False) -> CheckReport:
    """Meta-check: fails only when every premise holds and ``conclusion`` does not."""
    if isinstance(premises, CheckReport):
        premises = [premises]
    ok = not all(p.holds for p in premises) or conclusion.holds
    info = {"premises": {p.name: p.holds for p in premises},
            "conclusion": {conclusion.name: conclusion.holds}}
    if informational:
        info["holds"] = ok
        return CheckReport(name, INFO, None, info)
    return CheckReport(name, PASS if ok else FAIL, None, info)


def core_suite(d: AlgebraDatum) -> list[CheckReport]:
    return [check_algebra(d), check_coalgebra(d), check_very_weak_bialgebra(d),
            check_vn_core(d), check_unital_core(d)]


def implication_chain(reports) -> list[CheckReport]:
    """``unital core => (vn core => g f = 1)``.

    The bare link ``vn core => g f = 1`` is reported too, but only as
    information: the left inverse is a consequence of the unital axiom.
    """
    by = {r.name: r for r in reports}
    unital, vn, gf = by["unital_core"], by["vn_core"], by["fusion.gf_identity"]
    return [
        implication("implies.unital_core=>vn_core", unital, vn),
        implication("implies.unital_core=>(vn_core=>fusion.gf_identity)", [unital, vn], gf),
        implication("implies.vn_core=>fusion.gf_identity", vn, gf, informational=True),
    ]


__all__ = [
    "AlgebraDatum", "CheckReport", "check_algebra", "check_coalgebra",
    "check_very_weak_bialgebra", "check_vn_core", "check_unital_core", "check_fusion",
    "check_counit_unit_defects", "dualize", "transport", "fusion_operators",
    "implication", "implication_chain", "core_suite",
]
