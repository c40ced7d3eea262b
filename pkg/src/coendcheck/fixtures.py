"""Worked examples: a trivial category, representations of small elementary
abelian 2-groups, and the separable functor ``UC = (+)_{a,b} hom(a, C (x) b)``
on the representations of the 2-element group.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from coendcheck.exactla import Mat
from coendcheck.fibre import FibreFunctor
from coendcheck.lincat import (CatPresentation, MonoidalData, Morphism, braiding,
                               evaluation, tensor)

FIXTURE_NAMES = ("trivial", "rep-c2", "rep-c2c2", "ho-c2")

ONE = Mat.identity(1)


def pointed_category(objects, mult: dict, unit: str, braid_sign: dict | None = None):
    """Semisimple category with one simple per group element.

    ``hom(a, a) = k`` and all other homs vanish; ``mult`` is the group law on
    object names.  ``braid_sign[(a, b)]`` overrides the braiding scalar.
    """
    objects = tuple(objects)
    braid_sign = braid_sign or {}
    hom_dim = {(a, b): int(a == b) for a, b in product(objects, objects)}
    comp = {(a, a, a): ONE for a in objects}
    id_vec = {a: ONE for a in objects}
    cat = CatPresentation(objects, hom_dim, comp, id_vec)
    tensor_obj = {(a, b): mult[(a, b)] for a, b in product(objects, objects)}
    tensor_mor = {(a, a, c, c): ONE for a, c in product(objects, objects)}
    braid = {(a, b): Mat.column([braid_sign.get((a, b), 1)])
             for a, b in product(objects, objects)}
    dual_obj = {a: next(b for b in objects if mult[(a, b)] == unit) for a in objects}
    ev = {a: ONE for a in objects}
    coev = {a: ONE for a in objects}
    mon = MonoidalData(unit, tensor_obj, tensor_mor, braid, dual_obj, ev, coev)
    return cat, mon


def forgetful_functor(cat: CatPresentation, mon: MonoidalData) -> FibreFunctor:
    """U = k on every object; r, i, u all identities."""
    obs = cat.objects
    dim = {a: 1 for a in obs}
    mor = {(a, b): tuple(ONE for _ in range(cat.hom(a, b))) for a, b in product(obs, obs)}
    r = {(a, b): ONE for a, b in product(obs, obs)}
    return FibreFunctor(dim, mor, r, ONE, dict(r), ONE, {a: ONE for a in obs})


def make_trivial():
    cat, mon = pointed_category(["I"], {("I", "I"): "I"}, "I")
    return cat, mon, forgetful_functor(cat, mon)


_GROUPS = {
    "c2": (["1", "sigma"], {"1": (0,), "sigma": (1,)}),
    "c2c2": (["1", "a", "b", "ab"], {"1": (0, 0), "a": (1, 0), "b": (0, 1), "ab": (1, 1)}),
}


def elementary_2group(group: str):
    """Object names and multiplication table of the character group."""
    try:
        names, bits = _GROUPS[group]
    except KeyError:
        raise ValueError(f"unknown group {group!r}; expected one of {sorted(_GROUPS)}")
    by_bits = {v: k for k, v in bits.items()}
    mult = {(a, b): by_bits[tuple(x ^ y for x, y in zip(bits[a], bits[b]))]
            for a, b in product(names, names)}
    return names, mult


def make_rep_group(group: str):
    """1-dimensional characters of ``c2`` or ``c2c2`` with the forgetful functor."""
    names, mult = elementary_2group(group)
    cat, mon = pointed_category(names, mult, "1")
    return cat, mon, forgetful_functor(cat, mon)


def _coord(m: Morphism):
    # coordinate in a hom space of dimension <= 1
    return m.vec.entries[0] if m.vec.rows else 0


def hom_sum_functor(cat: CatPresentation, mon: MonoidalData) -> FibreFunctor:
    """``UC = (+)_{a,b} hom(a, C (x) b)`` for a category with all homs of dim <= 1.

    Summands are ordered with ``a`` outer and ``b`` inner, both in object
    order.  ``r`` glues ``h : c -> C b`` and ``g : a -> D c`` into
    ``(c_{D,C} (x) 1)(1 (x) h) g : a -> C D b``; ``i`` inverts it on the one
    matching summand.  ``r0`` is the sum of identities, ``i0`` its adjoint,
    and ``u`` pairs ``h' : a -> C* b`` with ``h : b -> C a`` through ``e_C``.
    """
    obs = cat.objects
    if any(cat.hom(a, b) > 1 for a, b in product(obs, obs)):
        raise ValueError("hom_sum_functor needs every hom space of dimension <= 1")
    T = mon.obj
    summ = {C: [(a, b) for a in obs for b in obs if cat.hom(a, T(C, b))] for C in obs}
    pos = {C: {p: k for k, p in enumerate(s)} for C, s in summ.items()}
    dim = {C: len(s) for C, s in summ.items()}

    def gen(C, a, b):
        return cat.basis(a, T(C, b), 0)

    mor = {}
    for C, C2 in product(obs, obs):
        mats = []
        for f in cat.basis_morphisms(C, C2):
            e = [[0] * dim[C] for _ in range(dim[C2])]
            for k, (a, b) in enumerate(summ[C]):
                img = cat.compose(tensor(cat, mon, f, cat.identity(b)), gen(C, a, b))
                if (a, b) in pos[C2]:
                    e[pos[C2][(a, b)]][k] = _coord(img)
            mats.append(Mat.from_rows(e, dim[C]) if dim[C2] else Mat.zeros(0, dim[C]))
        mor[(C, C2)] = tuple(mats)

    r, i = {}, {}
    for C, D in product(obs, obs):
        CD = T(C, D)
        dC, dD, dCD = dim[C], dim[D], dim[CD]
        re = [[0] * (dC * dD) for _ in range(dCD)]
        hits = {}
        for x, (c, b) in enumerate(summ[C]):
            for y, (a, d) in enumerate(summ[D]):
                if c != d:
                    continue
                m = cat.compose_all(gen(D, a, c),
                                    tensor(cat, mon, cat.identity(D), gen(C, c, b)),
                                    tensor(cat, mon, braiding(mon, D, C), cat.identity(b)))
                coef = _coord(m)
                if coef:
                    row = pos[CD][(a, b)]
                    re[row][x * dD + y] = coef
                    hits.setdefault(row, []).append((x * dD + y, coef))
        ie = [[0] * dCD for _ in range(dC * dD)]
        for row, cols in hits.items():
            if len(cols) > 1:
                raise ValueError(f"summand {summ[CD][row]} of U({CD}) is hit twice")
            col, coef = cols[0]
            ie[col][row] = Fraction(1) / coef
        r[(C, D)] = Mat(dCD, dC * dD, [x for row in re for x in row])
        i[(C, D)] = Mat(dC * dD, dCD, [x for row in ie for x in row])

    unit = mon.unit
    r0 = [0] * dim[unit]
    i0 = [0] * dim[unit]
    for k, (a, b) in enumerate(summ[unit]):
        if a == b:
            x = cat.id_vec[a].entries[0]
            r0[k] = x
            i0[k] = Fraction(1) / x
    r0, i0 = Mat.column(r0), Mat.row(i0)

    u = {}
    for C in obs:
        Cd = mon.dual(C)
        e = [[0] * dim[Cd] for _ in range(dim[C])]
        for col, (a, b) in enumerate(summ[Cd]):
            if (b, a) not in pos[C]:
                continue
            m = cat.compose_all(gen(Cd, a, b),
                                tensor(cat, mon, cat.identity(Cd), gen(C, b, a)),
                                tensor(cat, mon, evaluation(mon, C), cat.identity(a)))
            e[pos[C][(b, a)]][col] = Fraction(_coord(m)) / cat.id_vec[a].entries[0]
        u[C] = Mat(dim[C], dim[Cd], [x for row in e for x in row])
    return FibreFunctor(dim, mor, r, r0, i, i0, u)


def make_ho_c2():
    names, mult = elementary_2group("c2")
    cat, mon = pointed_category(names, mult, "1")
    return cat, mon, hom_sum_functor(cat, mon)


def make_fixture(name: str):
    if name == "trivial":
        return make_trivial()
    if name == "rep-c2":
        return make_rep_group("c2")
    if name == "rep-c2c2":
        return make_rep_group("c2c2")
    if name == "ho-c2":
        return make_ho_c2()
    raise ValueError(f"unknown fixture {name!r}; expected one of {', '.join(FIXTURE_NAMES)}")


_DESCRIPTIONS = {
    "trivial": "one object, everything one-dimensional",
    "rep-c2": "characters of the 2-element group, forgetful functor",
    "rep-c2c2": "characters of the Klein four-group, forgetful functor",
    "ho-c2": ("characters of the 2-element group with U C = sum over a, b of hom(a, C b); "
              "summands ordered (a, b) with a outer"),
}


def emit_fixture(name: str, path) -> None:
    from coendcheck.specfile import Spec, dump_spec

    cat, mon, U = make_fixture(name)
    text = dump_spec(Spec(cat, mon, U, {"name": name, "description": _DESCRIPTIONS[name]}))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
