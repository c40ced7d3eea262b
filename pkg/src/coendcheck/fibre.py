"""Fibre functors into finite-dimensional vector spaces.

A ``FibreFunctor`` carries a monoidal structure ``(r, r0)``, a comonoidal
structure ``(i, i0)`` and duality pairings ``u``.  ``u[A]`` is the matrix of
``U(A*) -> UA*`` with ``UA*`` in the dual basis, so the pairing of ``v`` in
``U(A*)`` with ``x`` in ``UA`` is ``(u[A] v)^T x``.

On the vector-space side, coevaluation ``k -> V (x) V*`` and evaluation
``V* (x) V -> k`` are the coordinate ones in the standard basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from coendcheck.exactla import Mat, fmt, inverse, is_invertible, kron, swap_map
from coendcheck.lincat import (CatPresentation, MonoidalData, Morphism, braiding,
                               coevaluation, compute_utrace, dual_morphism,
                               evaluation, tensor)
from coendcheck.report import INFO, CheckReport, Collector, PresentationError


def coev_vector(n: int) -> Mat:
    """``k -> V (x) V*``, ``1 |-> sum_j b_j (x) beta_j``."""
    return Mat._raw(n * n, 1, Mat.identity(n).entries)


def ev_covector(n: int) -> Mat:
    """``V* (x) V -> k``, ``beta_j (x) b_k |-> delta_jk``."""
    return Mat._raw(1, n * n, Mat.identity(n).entries)


@dataclass(frozen=True)
class FibreFunctor:
    dim: dict
    mor: dict
    r: dict
    r0: Mat
    i: dict
    i0: Mat
    u: dict

    def apply(self, f: Morphism) -> Mat:
        mats = self.mor.get((f.src, f.tgt), ())
        out = Mat.zeros(self.dim[f.tgt], self.dim[f.src])
        for k, x in enumerate(f.vec.entries):
            if x:
                out = out + mats[k] * x
        return out

    @property
    def dim_unit_value(self) -> int:
        return self.r0.rows


def check_functor_structure(cat: CatPresentation, mon: MonoidalData, U: FibreFunctor):
    """Referential integrity and shapes; raises ``PresentationError``."""
    obs = cat.objects
    for a in obs:
        if U.dim.get(a) is None or U.dim[a] < 0:
            raise PresentationError(f"dim U({a}) missing or negative")
    for a, b in product(obs, obs):
        mats = U.mor.get((a, b), ())
        if len(mats) != cat.hom(a, b):
            raise PresentationError(
                f"U on hom({a},{b}) needs {cat.hom(a, b)} matrices, got {len(mats)}")
        for k, m in enumerate(mats):
            if m.shape != (U.dim[b], U.dim[a]):
                raise PresentationError(f"U of basis {k} of hom({a},{b}) mis-shaped")
    dI = U.dim[mon.unit]
    if dI == 0:
        raise PresentationError("dim U(I) = 0 is not allowed")
    if U.r0.shape != (dI, 1) or U.i0.shape != (1, dI):
        raise PresentationError("r0 / i0 mis-shaped")
    for a, b in product(obs, obs):
        ab = mon.obj(a, b)
        r, i = U.r.get((a, b)), U.i.get((a, b))
        want = (U.dim[ab], U.dim[a] * U.dim[b])
        if r is None or r.shape != want:
            raise PresentationError(f"r[{a}][{b}] missing or mis-shaped")
        if i is None or i.shape != want[::-1]:
            raise PresentationError(f"i[{a}][{b}] missing or mis-shaped")
    for a in obs:
        m = U.u.get(a)
        if m is None or m.shape != (U.dim[a], U.dim[mon.dual(a)]):
            raise PresentationError(f"u[{a}] missing or mis-shaped")


def validate_functor(cat: CatPresentation, mon: MonoidalData, U: FibreFunctor) -> CheckReport:
    """Functoriality of U and naturality of r and i over basis morphisms."""
    check_functor_structure(cat, mon, U)
    col = Collector("functor")
    obs = cat.objects
    nz = cat.nonzero_homs()
    for a in obs:
        col.residual("identity", U.apply(cat.identity(a)) - Mat.identity(U.dim[a]),
                     objects=[a])
    for (a, b), (b2, c) in product(nz, nz):
        if b != b2:
            continue
        for i, f in enumerate(cat.basis_morphisms(a, b)):
            for j, g in enumerate(cat.basis_morphisms(b, c)):
                res = U.apply(cat.compose(g, f)) - U.apply(g) @ U.apply(f)
                col.residual("composition", res, objects=[a, b, c], basis=[j, i])
    for (a, a2), (b, b2) in product(nz, nz):
        for i, f in enumerate(cat.basis_morphisms(a, a2)):
            uf = U.apply(f)
            for j, g in enumerate(cat.basis_morphisms(b, b2)):
                ug = U.apply(g)
                ufg = U.apply(tensor(cat, mon, f, g))
                res = ufg @ U.r[(a, b)] - U.r[(a2, b2)] @ kron(uf, ug)
                col.residual("r naturality", res, objects=[a, a2, b, b2], basis=[i, j])
                res = U.i[(a2, b2)] @ ufg - kron(uf, ug) @ U.i[(a, b)]
                col.residual("i naturality", res, objects=[a, a2, b, b2], basis=[i, j])
    return col.report()


def check_coherence(cat: CatPresentation, mon: MonoidalData, U: FibreFunctor) -> CheckReport:
    """Strict (co)monoidal coherence of ``(U, r, r0)`` and ``(U, i, i0)``."""
    col = Collector("coherence")
    obs = cat.objects
    unit = mon.unit
    for a, b, c in product(obs, repeat=3):
        ab, bc = mon.obj(a, b), mon.obj(b, c)
        ida, idc = Mat.identity(U.dim[a]), Mat.identity(U.dim[c])
        left = U.r[(ab, c)] @ kron(U.r[(a, b)], idc)
        right = U.r[(a, bc)] @ kron(ida, U.r[(b, c)])
        col.residual("r associativity", left - right, objects=[a, b, c])
        left = kron(U.i[(a, b)], idc) @ U.i[(ab, c)]
        right = kron(ida, U.i[(b, c)]) @ U.i[(a, bc)]
        col.residual("i coassociativity", left - right, objects=[a, b, c])
    for a in obs:
        ida = Mat.identity(U.dim[a])
        col.residual("r left unit", U.r[(unit, a)] @ kron(U.r0, ida) - ida, objects=[a])
        col.residual("r right unit", U.r[(a, unit)] @ kron(ida, U.r0) - ida, objects=[a])
        col.residual("i left counit", kron(U.i0, ida) @ U.i[(unit, a)] - ida, objects=[a])
        col.residual("i right counit", kron(ida, U.i0) @ U.i[(a, unit)] - ida, objects=[a])
    return col.report()


def check_separability(cat: CatPresentation, mon: MonoidalData, U: FibreFunctor) -> CheckReport:
    """``r i = 1`` for all pairs and ``i0 r0 = dim U(I)``."""
    col = Collector("separability")
    for a, b in product(cat.objects, repeat=2):
        ab = mon.obj(a, b)
        col.residual("r i = 1", U.r[(a, b)] @ U.i[(a, b)] - Mat.identity(U.dim[ab]),
                     objects=[a, b])
    dI = U.dim[mon.unit]
    i0r0 = (U.i0 @ U.r0)[0, 0]
    col.info["i0r0"] = fmt(i0r0)
    col.info["dim_UI"] = dI
    if i0r0 != dI:
        col.fail("i0 r0 = dim UI", {"value": fmt(i0r0), "expected": dI})
    return col.report()


def check_frobenius_conditions(cat: CatPresentation, mon: MonoidalData,
                               U: FibreFunctor) -> CheckReport:
    """Mixed r/i interchange laws; recorded, never gating."""
    col = Collector("frobenius")
    for a, b, c in product(cat.objects, repeat=3):
        ab, bc = mon.obj(a, b), mon.obj(b, c)
        ida, idc = Mat.identity(U.dim[a]), Mat.identity(U.dim[c])
        left = kron(U.r[(a, b)], idc) @ kron(ida, U.i[(b, c)])
        right = U.i[(ab, c)] @ U.r[(a, bc)]
        col.residual("(r x 1)(1 x i) = i r", left - right, objects=[a, b, c])
        left = kron(ida, U.r[(b, c)]) @ kron(U.i[(a, b)], idc)
        right = U.i[(a, bc)] @ U.r[(ab, c)]
        col.residual("(1 x r)(i x 1) = i r", left - right, objects=[a, b, c])
    rep = col.report()
    info = dict(rep.info)
    info["holds"] = rep.passed
    return CheckReport(rep.name, INFO, rep.witness, info)


def check_braided_compat(cat: CatPresentation, mon: MonoidalData, U: FibreFunctor) -> CheckReport:
    """``U(c_{A,B}) r[A][B] = r[B][A] swap``."""
    col = Collector("braided")
    for a, b in product(cat.objects, repeat=2):
        left = U.apply(braiding(mon, a, b)) @ U.r[(a, b)]
        right = U.r[(b, a)] @ swap_map(U.dim[a], U.dim[b])
        col.residual("U(c) r = r swap", left - right, objects=[a, b])
    return col.report()


def check_duality_compat(cat: CatPresentation, mon: MonoidalData, U: FibreFunctor) -> CheckReport:
    """The two triangles tying ``u`` to (co)evaluation, plus invertibility of ``u``."""
    col = Collector("duality")
    for a in cat.objects:
        ad = mon.dual(a)
        da = U.dim[a]
        u = U.u[a]
        if not is_invertible(u):
            col.fail("u invertible", {"objects": [a]})
            continue
        uinv = inverse(u)
        left = U.r[(a, ad)] @ kron(Mat.identity(da), uinv) @ coev_vector(da)
        right = U.apply(coevaluation(mon, a)) @ U.r0
        col.residual("(n,r,r0)", left - right, objects=[a])
        left = ev_covector(da) @ kron(u, Mat.identity(da)) @ U.i[(ad, a)]
        right = U.i0 @ U.apply(evaluation(mon, a))
        col.residual("(e,i,i0)", left - right, objects=[a])
    return col.report()


def check_u_naturality(cat: CatPresentation, mon: MonoidalData, U: FibreFunctor) -> CheckReport:
    """``u_A U(f*) = (Uf)^T u_B`` for every basis ``f : A -> B``."""
    col = Collector("u-naturality")
    for a, b in cat.nonzero_homs():
        for k, f in enumerate(cat.basis_morphisms(a, b)):
            fd = dual_morphism(cat, mon, f)
            res = U.u[a] @ U.apply(fd) - U.apply(f).T @ U.u[b]
            col.residual("u natural", res, objects=[a, b], basis=[k])
    return col.report()


def check_utrace_compat(cat: CatPresentation, mon: MonoidalData, U: FibreFunctor) -> CheckReport:
    """``dim UI * U(d(A)) r0 = dim UA * r0`` and ``dim UA != 0``."""
    col = Collector("trace")
    dI = U.dim[mon.unit]
    for a in cat.objects:
        t = compute_utrace(cat, mon, a)
        if not t.invertible:
            col.fail("trace invertible", {"objects": [a]})
        if U.dim[a] == 0:
            col.fail("dim UA != 0", {"objects": [a]})
        ud = U.apply(Morphism(mon.unit, mon.unit, t.vec))
        res = (ud @ U.r0) * dI - U.r0 * U.dim[a]
        col.residual("dim UI U(d) r0 = dim UA r0", res, objects=[a])
    return col.report()


def check_u_irreducibility(cat: CatPresentation, U: FibreFunctor) -> tuple[CheckReport, dict]:
    """Nonzero homs only between objects of equal U-dimension.

    Also returns the grading ``{n: [objects with dim U = n]}`` in object order.
    """
    col = Collector("irreducibility")
    for a, b in cat.nonzero_homs():
        if U.dim[a] != U.dim[b]:
            col.fail("dim UA = dim UB", {"objects": [a, b],
                                         "dims": [U.dim[a], U.dim[b]]})
    grading: dict[int, list[str]] = {}
    for a in cat.objects:
        grading.setdefault(U.dim[a], []).append(a)
    grading = dict(sorted(grading.items()))
    col.info["grading"] = {str(n): objs for n, objs in grading.items()}
    return col.report(), grading


def change_fibre_basis(cat: CatPresentation, mon: MonoidalData, U: FibreFunctor,
                       T: dict) -> FibreFunctor:
    """Transport U along invertible ``T[A] : UA -> UA`` (new coordinates = T old)."""
    Ti = {a: inverse(t) for a, t in T.items()}
    mor = {}
    for (a, b), mats in U.mor.items():
        mor[(a, b)] = tuple(T[b] @ m @ Ti[a] for m in mats)
    r, i = {}, {}
    for (a, b), m in U.r.items():
        ab = mon.obj(a, b)
        r[(a, b)] = T[ab] @ m @ kron(Ti[a], Ti[b])
        i[(a, b)] = kron(T[a], T[b]) @ U.i[(a, b)] @ Ti[ab]
    unit = mon.unit
    u = {a: Ti[a].T @ U.u[a] @ Ti[mon.dual(a)] for a in cat.objects}
    return FibreFunctor(dict(U.dim), mor, r, T[unit] @ U.r0, i, U.i0 @ Ti[unit], u)


__all__ = [
    "FibreFunctor", "check_functor_structure", "validate_functor", "check_coherence",
    "check_separability", "check_frobenius_conditions", "check_braided_compat",
    "check_duality_compat", "check_u_naturality", "check_utrace_compat",
    "check_u_irreducibility", "change_fibre_basis", "coev_vector", "ev_covector",
]
