"""The coend ``E = (+)_A UA* (x) UA / ~`` of a fibre functor and its structure maps.

Block ``A`` of the ambient space has basis ``beta_j (x) b_k`` at local index
``j * dim UA + k``, where ``b_k`` is the standard basis of ``UA`` and
``beta_j`` its dual basis.  Each structure map is first written on the
ambient space, checked to vanish on the relations, and only then pushed to
the quotient through the chosen section.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from coendcheck.axioms import AlgebraDatum
from coendcheck.exactla import (Mat, QuotientSpace, SingularMatrixError, fmt, hstack,
                                inverse, is_invertible, kron, kron_all, quotient_by,
                                swap_map)
from coendcheck.fibre import FibreFunctor, coev_vector, ev_covector
from coendcheck.lincat import CatPresentation, MonoidalData
from coendcheck.report import CheckReport, Collector, ConstructionError, DescentError


@dataclass(frozen=True)
class Block:
    obj: str
    dim: int
    offset: int

    @property
    def size(self) -> int:
        return self.dim * self.dim


@dataclass(frozen=True)
class CoendSpace:
    blocks: tuple[Block, ...]
    ambient_dim: int
    relations: Mat
    relation_labels: tuple
    quot: QuotientSpace
    copr: dict

    @property
    def q(self) -> int:
        return self.quot.q

    def block(self, obj: str) -> Block:
        for b in self.blocks:
            if b.obj == obj:
                return b
        raise KeyError(obj)

    def block_table(self) -> list[dict]:
        return [{"object": b.obj, "dim_U": b.dim, "offset": b.offset} for b in self.blocks]


def build_coend(cat: CatPresentation, U: FibreFunctor) -> CoendSpace:
    blocks, off = [], 0
    for a in cat.objects:
        blocks.append(Block(a, U.dim[a], off))
        off += U.dim[a] ** 2
    pos = {b.obj: b for b in blocks}
    cols, labels = [], []
    for a, b in cat.nonzero_homs():
        da, db = U.dim[a], U.dim[b]
        oa, ob = pos[a].offset, pos[b].offset
        for n, F in enumerate(U.mor[(a, b)]):
            for j, k in product(range(db), range(da)):
                # (Uf)^T beta_j (x) b_k  -  beta_j (x) (Uf) b_k
                v = {}
                for l in range(da):
                    x = F[j, l]
                    if x:
                        v[oa + l * da + k] = v.get(oa + l * da + k, 0) + x
                for m in range(db):
                    x = F[m, k]
                    if x:
                        v[ob + j * db + m] = v.get(ob + j * db + m, 0) - x
                if any(v.values()):
                    cols.append(v)
                    labels.append((a, b, n, j, k))
    e = [0] * (off * len(cols))
    for c, v in enumerate(cols):
        for i, x in v.items():
            e[i * len(cols) + c] = x
    relations = Mat(off, len(cols), e)
    quot = quotient_by(off, relations)
    copr = {b.obj: quot.proj.columns(range(b.offset, b.offset + b.size)) for b in blocks}
    return CoendSpace(tuple(blocks), off, relations, tuple(labels), quot, copr)


def _relation_witness(E: CoendSpace, col: int, extra=None) -> dict:
    a, b, n, j, k = E.relation_labels[col]
    w = {"morphism": {"source": a, "target": b, "basis": n}, "dual_index": j, "index": k}
    if extra:
        w.update(extra)
    return w


def _descend(name: str, E: CoendSpace, ambient: Mat) -> Mat:
    """Check ``ambient`` kills the relations, then restrict to the section."""
    if E.relations.cols:
        hit = (ambient @ E.relations).first_nonzero()
        if hit is not None:
            raise DescentError(f"{name} does not descend to the coend",
                               _relation_witness(E, hit[1], {"map": name,
                                                             "value": fmt(hit[2])}))
    return ambient @ E.quot.sect


def _descend_binary(name: str, E: CoendSpace, ambient: Mat) -> Mat:
    """Same for a map out of ``E (x) E``; relations in either slot."""
    N = E.ambient_dim
    R = E.relations
    if R.cols:
        for slot, probe in (("left", kron(R, Mat.identity(N))),
                            ("right", kron(Mat.identity(N), R))):
            hit = (ambient @ probe).first_nonzero()
            if hit is not None:
                if slot == "left":
                    rel, other = divmod(hit[1], N)
                else:
                    other, rel = divmod(hit[1], R.cols)
                raise DescentError(f"{name} does not descend to the coend",
                                   _relation_witness(E, rel, {"map": name, "slot": slot,
                                                              "other_ambient_index": other,
                                                              "value": fmt(hit[2])}))
    return ambient @ kron(E.quot.sect, E.quot.sect)


def build_mu_eta(cat: CatPresentation, mon: MonoidalData, U: FibreFunctor,
                 E: CoendSpace) -> tuple[Mat, Mat]:
    N, q = E.ambient_dim, E.q
    mu_amb = [0] * (q * N * N)
    for bc, bd in product(E.blocks, E.blocks):
        C, D = bc.obj, bd.obj
        dC, dD = bc.dim, bd.dim
        reorder = kron_all(Mat.identity(dC), swap_map(dC, dD), Mat.identity(dD))
        blk = E.copr[mon.obj(C, D)] @ kron(U.i[(C, D)].T, U.r[(C, D)]) @ reorder
        w = bd.size
        for p, s in product(range(bc.size), range(w)):
            col = (bc.offset + p) * N + bd.offset + s
            for t in range(q):
                x = blk.entries[t * blk.cols + p * w + s]
                if x:
                    mu_amb[t * N * N + col] = x
    mu = _descend_binary("mu", E, Mat._raw(q, N * N, mu_amb))
    eta = E.copr[mon.unit] @ kron(U.i0.T, U.r0)
    return mu, eta


def _on_blocks(E: CoendSpace, rows: int, block_maps: dict) -> Mat:
    """Ambient map whose restriction to block ``A`` is ``block_maps[A]``."""
    return hstack([block_maps[b.obj] for b in E.blocks], rows)


def build_eps_delta(cat: CatPresentation, U: FibreFunctor, E: CoendSpace) -> tuple[Mat, Mat]:
    eps_amb = _on_blocks(E, 1, {b.obj: ev_covector(b.dim) for b in E.blocks})
    deltas = {}
    for b in E.blocks:
        c = E.copr[b.obj]
        ins = kron_all(Mat.identity(b.dim), coev_vector(b.dim), Mat.identity(b.dim))
        deltas[b.obj] = kron(c, c) @ ins
    delta_amb = _on_blocks(E, E.q * E.q, deltas)
    return _descend("eps", E, eps_amb), _descend("delta", E, delta_amb)


def sigma_block(U: FibreFunctor, mon: MonoidalData, a: str) -> Mat:
    """``UA* (x) UA -> U(A*)* (x) U(A*)``, ``phi (x) x -> u^T x (x) u^-1 phi``."""
    u = U.u[a]
    dd = U.dim[mon.dual(a)]
    return swap_map(dd, dd) @ kron(inverse(u), u.T)


def build_antipode(cat: CatPresentation, mon: MonoidalData, U: FibreFunctor,
                   E: CoendSpace, grading: dict | None = None) -> tuple[dict, Mat]:
    """Blockwise ``S_A = (dim UI / n) sigma_A`` landing in block ``A*``.

    ``n`` is the U-dimension class of ``A`` in ``grading`` (by default its own
    dimension).  Irreducibility is not assumed: a violation shows up as a
    descent failure.
    """
    dI = U.dim[mon.unit]
    cls = {a: n for n, objs in (grading or {}).items() for a in objs}
    sigmas, parts = {}, {}
    for b in E.blocks:
        a = b.obj
        n = cls.get(a, b.dim)
        if n == 0:
            raise ConstructionError("antipode needs dim UA != 0", {"object": a})
        try:
            sigmas[a] = sigma_block(U, mon, a)
        except SingularMatrixError:
            raise ConstructionError("u is not invertible", {"object": a}) from None
        scale = Fraction(dI, n)
        parts[a] = E.copr[mon.dual(a)] @ sigmas[a] * scale
    S = _descend("antipode", E, _on_blocks(E, E.q, parts))
    if not is_invertible(S):
        raise ConstructionError("antipode is not invertible", {"map": "antipode"})
    return sigmas, S


def check_density(cat: CatPresentation, U: FibreFunctor, gens) -> CheckReport:
    """``alpha_C : (+)_{A in gens} hom(A, C) (x) UA / ~ -> UC`` invertible for every C."""
    gens = [a for a in cat.objects if a in set(gens)]
    col = Collector("density")
    col.info["generators"] = gens
    for c in cat.objects:
        offs, off = {}, 0
        for a in gens:
            offs[a] = off
            off += cat.hom(a, c) * U.dim[a]
        rels = []
        # h o f (x) x  ~  h (x) (Uf) x   for f : A -> A', h : A' -> C
        for a, a2 in product(gens, gens):
            da, da2 = U.dim[a], U.dim[a2]
            for f in cat.basis_morphisms(a, a2):
                F = U.apply(f)
                for hk, h in enumerate(cat.basis_morphisms(a2, c)):
                    hf = cat.compose(h, f).vec
                    for x in range(da):
                        v = [0] * off
                        for t in range(cat.hom(a, c)):
                            v[offs[a] + t * da + x] += hf.entries[t]
                        for m in range(da2):
                            v[offs[a2] + hk * da2 + m] -= F[m, x]
                        if any(v):
                            rels.append(v)
        R = Mat(off, len(rels), [rels[j][i] for i in range(off) for j in range(len(rels))])
        quot = quotient_by(off, R)
        alpha = hstack([hstack([U.apply(h) for h in cat.basis_morphisms(a, c)],
                               U.dim[c]) for a in gens], U.dim[c])
        if R.cols and not (alpha @ R).is_zero():
            col.fail("alpha descends", {"objects": [c]})
            continue
        a_bar = alpha @ quot.sect
        if not is_invertible(a_bar):
            col.fail("alpha invertible", {"objects": [c], "dim_U": U.dim[c],
                                          "coend_dim": quot.q})
    return col.report()


@dataclass(frozen=True)
class CoreMaps:
    mu: Mat
    eta: Mat
    delta: Mat
    eps: Mat
    sigma_blocks: dict
    antipode: Mat


def build_core_maps(cat: CatPresentation, mon: MonoidalData, U: FibreFunctor,
                    E: CoendSpace, grading: dict | None = None) -> CoreMaps:
    mu, eta = build_mu_eta(cat, mon, U, E)
    eps, delta = build_eps_delta(cat, U, E)
    sigmas, S = build_antipode(cat, mon, U, E, grading)
    return CoreMaps(mu, eta, delta, eps, sigmas, S)


def export_algebra_datum(E: CoendSpace, maps: CoreMaps, dim_UI) -> AlgebraDatum:
    return AlgebraDatum(E.q, maps.mu, maps.eta, maps.delta, maps.eps, maps.antipode, dim_UI)
