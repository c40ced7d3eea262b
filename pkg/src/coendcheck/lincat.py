"""Finite strict braided monoidal k-linear categories given by structure constants.

Morphisms are coordinate columns over fixed hom bases.  Composition is the
linear map ``comp[A, B, C] : hom(B, C) (x) hom(A, B) -> hom(A, C)``; the tensor
of morphisms is ``tensor_mor[A, B, C, D] : hom(A, B) (x) hom(C, D) ->
hom(A (x) C, B (x) D)``.  The monoidal structure is strict: the object table
is literally associative and unital.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from coendcheck.exactla import Mat, fmt, hstack, is_invertible, kron, rank, solve
from coendcheck.report import CheckReport, Collector, PresentationError


@dataclass(frozen=True)
class Morphism:
    src: str
    tgt: str
    vec: Mat

    def __add__(self, other: Morphism) -> Morphism:
        if (self.src, self.tgt) != (other.src, other.tgt):
            raise ValueError("adding morphisms with different endpoints")
        return Morphism(self.src, self.tgt, self.vec + other.vec)

    def __rmul__(self, scalar) -> Morphism:
        return Morphism(self.src, self.tgt, self.vec * scalar)


@dataclass(frozen=True)
class CatPresentation:
    objects: tuple[str, ...]
    hom_dim: dict
    comp: dict
    id_vec: dict

    def __post_init__(self):
        obs = self.objects
        if len(set(obs)) != len(obs):
            raise PresentationError("duplicate object identifiers")
        for a, b in product(obs, obs):
            d = self.hom_dim.get((a, b))
            if d is None or d < 0:
                raise PresentationError(f"hom_dim[{a}][{b}] missing or negative")
        for key in self.hom_dim:
            if key[0] not in obs or key[1] not in obs:
                raise PresentationError(f"hom_dim references unknown object {key}")
        for key, m in self.comp.items():
            if len(key) != 3 or any(x not in obs for x in key):
                raise PresentationError(f"comp references unknown objects {key}")
            a, b, c = key
            want = (self.hom(a, c), self.hom(b, c) * self.hom(a, b))
            if m.shape != want:
                raise PresentationError(
                    f"comp[{a},{b},{c}] has shape {m.shape}, expected {want}")
        for a in obs:
            v = self.id_vec.get(a)
            if v is None or v.shape != (self.hom(a, a), 1):
                raise PresentationError(f"identity vector of {a} missing or mis-shaped")

    def hom(self, a: str, b: str) -> int:
        return self.hom_dim[(a, b)]

    def comp_matrix(self, a: str, b: str, c: str) -> Mat:
        m = self.comp.get((a, b, c))
        if m is None:
            return Mat.zeros(self.hom(a, c), self.hom(b, c) * self.hom(a, b))
        return m

    def identity(self, a: str) -> Morphism:
        return Morphism(a, a, self.id_vec[a])

    def basis(self, a: str, b: str, k: int) -> Morphism:
        return Morphism(a, b, Mat.unit_column(self.hom(a, b), k))

    def basis_morphisms(self, a: str, b: str):
        return [self.basis(a, b, k) for k in range(self.hom(a, b))]

    def nonzero_homs(self):
        return [(a, b) for a, b in product(self.objects, self.objects)
                if self.hom(a, b)]

    def compose(self, g: Morphism, f: Morphism) -> Morphism:
        """``g o f``."""
        if f.tgt != g.src:
            raise ValueError(f"cannot compose {g.src}->{g.tgt} after {f.src}->{f.tgt}")
        m = self.comp_matrix(f.src, f.tgt, g.tgt)
        return Morphism(f.src, g.tgt, m @ kron(g.vec, f.vec))

    def compose_all(self, *ms: Morphism) -> Morphism:
        """Composite of ``ms`` in diagrammatic order (first applied first)."""
        out = ms[0]
        for m in ms[1:]:
            out = self.compose(m, out)
        return out


@dataclass(frozen=True)
class MonoidalData:
    unit: str
    tensor_obj: dict
    tensor_mor: dict
    braid: dict
    dual_obj: dict
    ev: dict
    coev: dict

    def obj(self, a: str, b: str) -> str:
        return self.tensor_obj[(a, b)]

    def dual(self, a: str) -> str:
        return self.dual_obj[a]


def check_monoidal_structure(cat: CatPresentation, mon: MonoidalData):
    """Referential integrity and shapes of the monoidal data; raises on error."""
    obs = cat.objects
    if mon.unit not in obs:
        raise PresentationError(f"unit {mon.unit} is not an object")
    for a, b in product(obs, obs):
        t = mon.tensor_obj.get((a, b))
        if t not in obs:
            raise PresentationError(f"tensor_obj[{a}][{b}] missing or unknown: {t}")
    for a in obs:
        if mon.dual_obj.get(a) not in obs:
            raise PresentationError(f"dual_obj[{a}] missing or unknown")
    for key, m in mon.tensor_mor.items():
        if len(key) != 4 or any(x not in obs for x in key):
            raise PresentationError(f"tensor_mor references unknown objects {key}")
        a, b, c, d = key
        want = (cat.hom(mon.obj(a, c), mon.obj(b, d)), cat.hom(a, b) * cat.hom(c, d))
        if m.shape != want:
            raise PresentationError(
                f"tensor_mor[{a},{b},{c},{d}] has shape {m.shape}, expected {want}")
    for a, b in product(obs, obs):
        v = mon.braid.get((a, b))
        want = (cat.hom(mon.obj(a, b), mon.obj(b, a)), 1)
        if v is None or v.shape != want:
            raise PresentationError(f"braid[{a}][{b}] missing or mis-shaped")
    for a in obs:
        ad = mon.dual(a)
        v = mon.ev.get(a)
        if v is None or v.shape != (cat.hom(mon.obj(ad, a), mon.unit), 1):
            raise PresentationError(f"ev[{a}] missing or mis-shaped")
        v = mon.coev.get(a)
        if v is None or v.shape != (cat.hom(mon.unit, mon.obj(a, ad)), 1):
            raise PresentationError(f"coev[{a}] missing or mis-shaped")


def tensor(cat: CatPresentation, mon: MonoidalData, f: Morphism, g: Morphism) -> Morphism:
    m = mon.tensor_mor.get((f.src, f.tgt, g.src, g.tgt))
    src, tgt = mon.obj(f.src, g.src), mon.obj(f.tgt, g.tgt)
    if m is None:
        m = Mat.zeros(cat.hom(src, tgt), cat.hom(f.src, f.tgt) * cat.hom(g.src, g.tgt))
    return Morphism(src, tgt, m @ kron(f.vec, g.vec))


def braiding(mon: MonoidalData, a: str, b: str) -> Morphism:
    return Morphism(mon.obj(a, b), mon.obj(b, a), mon.braid[(a, b)])


def evaluation(mon: MonoidalData, a: str) -> Morphism:
    return Morphism(mon.obj(mon.dual(a), a), mon.unit, mon.ev[a])


def coevaluation(mon: MonoidalData, a: str) -> Morphism:
    return Morphism(mon.unit, mon.obj(a, mon.dual(a)), mon.coev[a])


def dual_morphism(cat: CatPresentation, mon: MonoidalData, f: Morphism) -> Morphism:
    """``f* : B* -> A*`` for ``f : A -> B``, via evaluation and coevaluation."""
    a, b = f.src, f.tgt
    ad, bd = mon.dual(a), mon.dual(b)
    step1 = tensor(cat, mon, cat.identity(bd), coevaluation(mon, a))
    step2 = tensor(cat, mon, tensor(cat, mon, cat.identity(bd), f), cat.identity(ad))
    step3 = tensor(cat, mon, evaluation(mon, b), cat.identity(ad))
    return cat.compose_all(step1, step2, step3)


def validate_category(cat: CatPresentation) -> CheckReport:
    col = Collector("category")
    obs = cat.objects
    for a, b in cat.nonzero_homs():
        ida, idb = cat.identity(a), cat.identity(b)
        for k, f in enumerate(cat.basis_morphisms(a, b)):
            col.residual("left identity", cat.compose(idb, f).vec - f.vec,
                         objects=[a, b], basis=[k])
            col.residual("right identity", cat.compose(f, ida).vec - f.vec,
                         objects=[a, b], basis=[k])
    for a, b, c, d in product(obs, repeat=4):
        hab, hbc, hcd = cat.hom(a, b), cat.hom(b, c), cat.hom(c, d)
        if not (hab and hbc and hcd):
            continue
        # both sides as maps hom(C,D) (x) hom(B,C) (x) hom(A,B) -> hom(A,D)
        left = cat.comp_matrix(a, b, d) @ kron(cat.comp_matrix(b, c, d), Mat.identity(hab))
        right = cat.comp_matrix(a, c, d) @ kron(Mat.identity(hcd), cat.comp_matrix(a, b, c))
        res = left - right
        hit = res.first_nonzero()
        if hit is not None:
            col_idx = hit[1]
            h, rest = divmod(col_idx, hbc * hab)
            g, f = divmod(rest, hab)
            col.fail("associativity", {"objects": [a, b, c, d], "basis": [h, g, f],
                                       "entry": [hit[0], col_idx], "value": fmt(hit[2])})
    return col.report()


def _interchange(cat, mon, col):
    obs = cat.objects
    nz = cat.nonzero_homs()
    by_src = {}
    for a, b in nz:
        by_src.setdefault(a, []).append(b)
    # (h o f) (x) (k o g) = (h (x) k) o (f (x) g)
    for a, b in nz:
        for c in by_src.get(b, []):
            for d, e in nz:
                for f_ in by_src.get(e, []):
                    for fi, f in enumerate(cat.basis_morphisms(a, b)):
                        for hi, h in enumerate(cat.basis_morphisms(b, c)):
                            hf = cat.compose(h, f)
                            for gi, g in enumerate(cat.basis_morphisms(d, e)):
                                for ki, k in enumerate(cat.basis_morphisms(e, f_)):
                                    left = tensor(cat, mon, hf, cat.compose(k, g))
                                    right = cat.compose(tensor(cat, mon, h, k),
                                                        tensor(cat, mon, f, g))
                                    col.residual("interchange", left.vec - right.vec,
                                                 objects=[a, b, c, d, e, f_],
                                                 basis=[fi, hi, gi, ki])
    for a, b in product(obs, obs):
        left = tensor(cat, mon, cat.identity(a), cat.identity(b))
        col.residual("tensor of identities", left.vec - cat.id_vec[mon.obj(a, b)],
                     objects=[a, b])


def validate_monoidal(cat: CatPresentation, mon: MonoidalData) -> CheckReport:
    """Strict monoidal, braiding and duality axioms over all basis morphisms."""
    check_monoidal_structure(cat, mon)
    col = Collector("monoidal")
    obs = cat.objects
    unit = mon.unit
    for a, b, c in product(obs, repeat=3):
        if mon.obj(mon.obj(a, b), c) != mon.obj(a, mon.obj(b, c)):
            col.fail("object associativity", {"objects": [a, b, c]})
    for a in obs:
        if mon.obj(unit, a) != a or mon.obj(a, unit) != a:
            col.fail("object unit", {"objects": [a]})
        if mon.dual(mon.dual(a)) != a:
            col.fail("dual involution", {"objects": [a]})
    if col.failures:
        # later laws index objects through the table
        return col.report()

    _interchange(cat, mon, col)
    nz = cat.nonzero_homs()
    idI = cat.identity(unit)
    for a, b in nz:
        for k, f in enumerate(cat.basis_morphisms(a, b)):
            col.residual("left unit", tensor(cat, mon, idI, f).vec - f.vec,
                         objects=[a, b], basis=[k])
            col.residual("right unit", tensor(cat, mon, f, idI).vec - f.vec,
                         objects=[a, b], basis=[k])
    for (a, b), (c, d), (e, g_) in product(nz, repeat=3):
        for i, f in enumerate(cat.basis_morphisms(a, b)):
            for j, g in enumerate(cat.basis_morphisms(c, d)):
                fg = tensor(cat, mon, f, g)
                for k, h in enumerate(cat.basis_morphisms(e, g_)):
                    left = tensor(cat, mon, fg, h)
                    right = tensor(cat, mon, f, tensor(cat, mon, g, h))
                    col.residual("tensor associativity", left.vec - right.vec,
                                 objects=[a, b, c, d, e, g_], basis=[i, j, k])

    # braiding: naturality, invertibility, hexagons
    for (a, a2), (b, b2) in product(nz, repeat=2):
        for i, f in enumerate(cat.basis_morphisms(a, a2)):
            for j, g in enumerate(cat.basis_morphisms(b, b2)):
                left = cat.compose(braiding(mon, a2, b2), tensor(cat, mon, f, g))
                right = cat.compose(tensor(cat, mon, g, f), braiding(mon, a, b))
                col.residual("braid naturality", left.vec - right.vec,
                             objects=[a, a2, b, b2], basis=[i, j])
    for a, b in product(obs, obs):
        c_ab = braiding(mon, a, b)
        if not _is_iso(cat, c_ab):
            col.fail("braid invertibility", {"objects": [a, b]})
    for a, b, c in product(obs, repeat=3):
        left = braiding(mon, a, mon.obj(b, c))
        right = cat.compose(tensor(cat, mon, cat.identity(b), braiding(mon, a, c)),
                            tensor(cat, mon, braiding(mon, a, b), cat.identity(c)))
        col.residual("hexagon (left)", left.vec - right.vec, objects=[a, b, c])
        left = braiding(mon, mon.obj(a, b), c)
        right = cat.compose(tensor(cat, mon, braiding(mon, a, c), cat.identity(b)),
                            tensor(cat, mon, cat.identity(a), braiding(mon, b, c)))
        col.residual("hexagon (right)", left.vec - right.vec, objects=[a, b, c])

    for a in obs:
        ad = mon.dual(a)
        ida, idad = cat.identity(a), cat.identity(ad)
        n, e = coevaluation(mon, a), evaluation(mon, a)
        snake = cat.compose(tensor(cat, mon, ida, e), tensor(cat, mon, n, ida))
        col.residual("snake (A)", snake.vec - ida.vec, objects=[a])
        snake = cat.compose(tensor(cat, mon, e, idad), tensor(cat, mon, idad, n))
        col.residual("snake (A*)", snake.vec - idad.vec, objects=[a])
    return col.report()


def _is_iso(cat: CatPresentation, f: Morphism) -> bool:
    """Whether ``f`` has a two-sided inverse, by solving ``x o f = id``."""
    a, b = f.src, f.tgt
    hba = cat.hom(b, a)
    if cat.hom(a, a) == 0 and cat.hom(b, b) == 0:
        return True
    # x -> x o f is linear in x: comp(A,B,A) (x (x) f)
    left_op = cat.comp_matrix(a, b, a) @ kron(Mat.identity(hba), f.vec)
    x = solve(left_op, cat.id_vec[a])
    if x is None:
        return False
    back = cat.compose(f, Morphism(b, a, x))
    return back.vec == cat.id_vec[b]


def hom_algebra_unit_dim(cat: CatPresentation, mon: MonoidalData) -> tuple[int, Mat]:
    """Dimension of ``hom(I, I)`` and the coordinates of its unit."""
    return cat.hom(mon.unit, mon.unit), cat.id_vec[mon.unit]


@dataclass(frozen=True)
class EndoOfI:
    vec: Mat
    invertible: bool


def compute_utrace(cat: CatPresentation, mon: MonoidalData, a: str) -> EndoOfI:
    """``d(A) = e_A o c_{A,A*} o n_A`` in ``hom(I, I)``."""
    d = cat.compose_all(coevaluation(mon, a), braiding(mon, a, mon.dual(a)),
                        evaluation(mon, a))
    unit = mon.unit
    n = cat.hom(unit, unit)
    # invertible iff left multiplication by d is a bijection of hom(I, I)
    mult = cat.comp_matrix(unit, unit, unit) @ kron(d.vec, Mat.identity(n))
    return EndoOfI(d.vec, n > 0 and rank(mult) == n)


def utrace_report(cat: CatPresentation, mon: MonoidalData) -> CheckReport:
    col = Collector("utrace")
    traces = {}
    for a in cat.objects:
        t = compute_utrace(cat, mon, a)
        traces[a] = [fmt(x) for x in t.vec.entries]
        if not t.invertible:
            col.fail("trace invertible", {"objects": [a], "trace": traces[a]})
    col.info["traces"] = traces
    return col.report()
