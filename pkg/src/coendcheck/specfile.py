"""JSON spec files: one document holding a category, its monoidal data and a
fibre functor.

Rationals are written as strings ``"p/q"`` (or ``"p"``); matrices are
row-major nested lists.  Structure constants and per-pair matrices are lists
of records keyed by an ``objects`` array, e.g.::

    {"objects": ["A", "B", "C"], "matrix": [["1"]]}

Errors carry the JSON field path (``functor.r[2].matrix``) or, for syntax
errors, the line and column.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

from coendcheck.exactla import Mat, Q, fmt
from coendcheck.fibre import FibreFunctor, check_functor_structure
from coendcheck.lincat import CatPresentation, MonoidalData, check_monoidal_structure
from coendcheck.report import PresentationError

FORMAT_VERSION = 1


class SpecError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


@dataclass(frozen=True)
class Spec:
    cat: CatPresentation
    mon: MonoidalData
    U: FibreFunctor
    meta: dict = field(default_factory=dict)

    @property
    def name(self) -> str:
        return self.meta.get("name", "")


def _get(obj, key, path, kind=None):
    if not isinstance(obj, dict):
        raise SpecError(path, "expected an object")
    if key not in obj:
        raise SpecError(f"{path}.{key}" if path else key, "missing field")
    v = obj[key]
    p = f"{path}.{key}" if path else key
    if kind is not None and not isinstance(v, kind):
        raise SpecError(p, f"expected {kind.__name__}, got {type(v).__name__}")
    return v, p


def _scalar(x, path):
    if isinstance(x, (bool, float)) or not isinstance(x, (int, str)):
        raise SpecError(path, f"expected a rational string like \"p/q\", got {x!r}")
    try:
        return Q(x)
    except (ValueError, ZeroDivisionError):
        raise SpecError(path, f"malformed rational {x!r}") from None


def _matrix(value, rows, cols, path) -> Mat:
    if not isinstance(value, list):
        raise SpecError(path, "expected a matrix (list of rows)")
    if len(value) != rows:
        raise SpecError(path, f"expected {rows}x{cols} matrix, got {len(value)} rows")
    out = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != cols:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise SpecError(f"{path}[{i}]", f"expected {cols} entries, got {got}")
        out.extend(_scalar(x, f"{path}[{i}][{j}]") for j, x in enumerate(row))
    return Mat(rows, cols, out)


def _vector(value, n, path) -> Mat:
    if not isinstance(value, list) or len(value) != n:
        got = len(value) if isinstance(value, list) else type(value).__name__
        raise SpecError(path, f"expected a vector of length {n}, got {got}")
    return Mat.column([_scalar(x, f"{path}[{i}]") for i, x in enumerate(value)])


def _object(x, objects, path):
    if x not in objects:
        raise SpecError(path, f"unknown object {x!r}")
    return x


def _records(value, path, arity, objects):
    if not isinstance(value, list):
        raise SpecError(path, "expected a list of records")
    for n, rec in enumerate(value):
        p = f"{path}[{n}]"
        key, kp = _get(rec, "objects", p, list)
        if len(key) != arity:
            raise SpecError(kp, f"expected {arity} objects")
        yield p, tuple(_object(x, objects, f"{kp}[{k}]") for k, x in enumerate(key)), rec


def _table(value, path, objects, leaf):
    """``{A: {B: x}}`` over all object pairs."""
    if not isinstance(value, dict):
        raise SpecError(path, "expected an object keyed by object ids")
    out = {}
    for a in objects:
        row, rp = _get(value, a, path, dict)
        for b in objects:
            x, xp = _get(row, b, rp)
            out[(a, b)] = leaf(x, xp, a, b)
    return out


def _per_object(value, path, objects, leaf):
    if not isinstance(value, dict):
        raise SpecError(path, "expected an object keyed by object ids")
    for k in value:
        _object(k, objects, f"{path}.{k}")
    out = {}
    for a in objects:
        x, xp = _get(value, a, path)
        out[a] = leaf(a, x, xp)
    return out


def _count(x, path):
    if isinstance(x, bool) or not isinstance(x, int) or x < 0:
        raise SpecError(path, f"expected a non-negative integer, got {x!r}")
    return x


def parse_spec(doc) -> Spec:
    if not isinstance(doc, dict):
        raise SpecError("", "top level must be a JSON object")
    meta = doc.get("meta", {})
    if not isinstance(meta, dict):
        raise SpecError("meta", "expected an object")

    cdoc, cp = _get(doc, "category", "", dict)
    objects, op = _get(cdoc, "objects", cp, list)
    for n, a in enumerate(objects):
        if not isinstance(a, str):
            raise SpecError(f"{op}[{n}]", "object ids must be strings")
    if len(set(objects)) != len(objects):
        raise SpecError(op, "duplicate object ids")
    objects = tuple(objects)
    hv, hp = _get(cdoc, "hom_dims", cp)
    hom = _table(hv, hp, objects, lambda x, xp, a, b: _count(x, xp))
    comp = {}
    cv, ccp = _get(cdoc, "comp", cp)
    for p, (a, b, c), rec in _records(cv, ccp, 3, objects):
        m, mp = _get(rec, "matrix", p)
        comp[(a, b, c)] = _matrix(m, hom[(a, c)], hom[(b, c)] * hom[(a, b)], mp)
    iv, ip = _get(cdoc, "ids", cp)
    ids = _per_object(iv, ip, objects, lambda a, x, xp: _vector(x, hom[(a, a)], xp))
    cat = CatPresentation(objects, hom, comp, ids)

    mdoc, mp_ = _get(doc, "monoidal", "", dict)
    unit, up = _get(mdoc, "unit", mp_)
    _object(unit, objects, up)
    tv, tp = _get(mdoc, "tensor_obj", mp_)
    tensor_obj = _table(tv, tp, objects, lambda x, xp, a, b: _object(x, objects, xp))
    dv, dp = _get(mdoc, "dual_obj", mp_)
    dual = _per_object(dv, dp, objects, lambda a, x, xp: _object(x, objects, xp))
    tensor_mor = {}
    tmv, tmp = _get(mdoc, "tensor_mor", mp_)
    for p, (a, b, c, d), rec in _records(tmv, tmp, 4, objects):
        m, mpp = _get(rec, "matrix", p)
        rows = hom[(tensor_obj[(a, c)], tensor_obj[(b, d)])]
        tensor_mor[(a, b, c, d)] = _matrix(m, rows, hom[(a, b)] * hom[(c, d)], mpp)
    bv, bp = _get(mdoc, "braid", mp_)
    braid = _table(bv, bp, objects, lambda x, xp, a, b: _vector(
        x, hom[(tensor_obj[(a, b)], tensor_obj[(b, a)])], xp))
    ev_v, evp = _get(mdoc, "ev", mp_)
    ev = _per_object(ev_v, evp, objects, lambda a, x, xp: _vector(
        x, hom[(tensor_obj[(dual[a], a)], unit)], xp))
    co_v, cop = _get(mdoc, "coev", mp_)
    coev = _per_object(co_v, cop, objects, lambda a, x, xp: _vector(
        x, hom[(unit, tensor_obj[(a, dual[a])])], xp))
    mon = MonoidalData(unit, tensor_obj, tensor_mor, braid, dual, ev, coev)
    check_monoidal_structure(cat, mon)

    fdoc, fp = _get(doc, "functor", "", dict)
    dv, dp = _get(fdoc, "dim_U", fp)
    dim = _per_object(dv, dp, objects, lambda a, x, xp: _count(x, xp))
    if dim[unit] == 0:
        raise SpecError(f"{dp}.{unit}", "dim U(I) must be nonzero")
    mor = {k: [None] * hom[k] for k in hom}
    mv, mvp = _get(fdoc, "mor_mat", fp)
    for p, (a, b), rec in _records(mv, mvp, 2, objects):
        k, kp = _get(rec, "basis", p)
        k = _count(k, kp)
        if k >= hom[(a, b)]:
            raise SpecError(kp, f"hom({a},{b}) has dimension {hom[(a, b)]}")
        if mor[(a, b)][k] is not None:
            raise SpecError(p, "duplicate record")
        m, mpp = _get(rec, "matrix", p)
        mor[(a, b)][k] = _matrix(m, dim[b], dim[a], mpp)
    for (a, b), mats in mor.items():
        for k, m in enumerate(mats):
            if m is None:
                raise SpecError(mvp, f"no matrix for basis {k} of hom({a},{b})")
    mor = {k: tuple(v) for k, v in mor.items()}

    def pair_records(key, transpose):
        v, p_ = _get(fdoc, key, fp)
        out = {}
        for p, (a, b), rec in _records(v, p_, 2, objects):
            m, mpp = _get(rec, "matrix", p)
            shape = (dim[tensor_obj[(a, b)]], dim[a] * dim[b])
            if transpose:
                shape = shape[::-1]
            out[(a, b)] = _matrix(m, *shape, mpp)
        for a, b in product(objects, objects):
            if (a, b) not in out:
                raise SpecError(p_, f"no record for ({a}, {b})")
        return out

    r = pair_records("r", False)
    i = pair_records("i", True)
    v, p = _get(fdoc, "r0", fp)
    r0 = _matrix(v, dim[unit], 1, p)
    v, p = _get(fdoc, "i0", fp)
    i0 = _matrix(v, 1, dim[unit], p)
    uv, up_ = _get(fdoc, "u", fp)
    u = _per_object(uv, up_, objects,
                    lambda a, x, xp: _matrix(x, dim[a], dim[dual[a]], xp))
    U = FibreFunctor(dim, mor, r, r0, i, i0, u)
    check_functor_structure(cat, mon, U)
    return Spec(cat, mon, U, dict(meta))


def loads_spec(text: str) -> Spec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    try:
        return parse_spec(doc)
    except PresentationError as exc:
        raise SpecError("", str(exc)) from None


def load_spec(path) -> Spec:
    with open(path, encoding="utf-8") as fh:
        return loads_spec(fh.read())


def _m(m: Mat):
    return m.to_json()


def _v(m: Mat):
    return [fmt(x) for x in m.entries]


def spec_document(spec: Spec) -> dict:
    cat, mon, U = spec.cat, spec.mon, spec.U
    obs = cat.objects
    pairs = list(product(obs, obs))
    comp = [{"objects": list(k), "matrix": _m(m)}
            for k in product(obs, repeat=3) if (m := cat.comp.get(k)) is not None]
    tensor_mor = [{"objects": list(k), "matrix": _m(m)}
                  for k in product(obs, repeat=4) if (m := mon.tensor_mor.get(k)) is not None]
    mor = [{"objects": [a, b], "basis": k, "matrix": _m(m)}
           for a, b in pairs for k, m in enumerate(U.mor[(a, b)])]
    return {
        "format": FORMAT_VERSION,
        "meta": dict(spec.meta),
        "category": {
            "objects": list(obs),
            "hom_dims": {a: {b: cat.hom(a, b) for b in obs} for a in obs},
            "comp": comp,
            "ids": {a: _v(cat.id_vec[a]) for a in obs},
        },
        "monoidal": {
            "unit": mon.unit,
            "tensor_obj": {a: {b: mon.obj(a, b) for b in obs} for a in obs},
            "tensor_mor": tensor_mor,
            "braid": {a: {b: _v(mon.braid[(a, b)]) for b in obs} for a in obs},
            "dual_obj": {a: mon.dual(a) for a in obs},
            "ev": {a: _v(mon.ev[a]) for a in obs},
            "coev": {a: _v(mon.coev[a]) for a in obs},
        },
        "functor": {
            "dim_U": {a: U.dim[a] for a in obs},
            "mor_mat": mor,
            "r": [{"objects": [a, b], "matrix": _m(U.r[(a, b)])} for a, b in pairs],
            "r0": _m(U.r0),
            "i": [{"objects": [a, b], "matrix": _m(U.i[(a, b)])} for a, b in pairs],
            "i0": _m(U.i0),
            "u": {a: _m(U.u[a]) for a in obs},
        },
    }


def _emit(obj, depth: int) -> str:
    pad = "  " * (depth + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_emit(v, depth + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * depth + "}"
    if isinstance(obj, list):
        if all(not isinstance(x, (dict, list)) for x in obj):
            return json.dumps(obj)
        if all(isinstance(x, list) and all(not isinstance(y, (dict, list)) for y in x)
               for x in obj):
            # matrix: one row per line
            return "[" + ", ".join(json.dumps(x) for x in obj) + "]"
        items = [pad + _emit(x, depth + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + "  " * depth + "]"
    return json.dumps(obj)


def dumps_json(doc) -> str:
    """Deterministic pretty JSON: nested objects indented, matrices kept inline."""
    return _emit(doc, 0) + "\n"


def dump_spec(spec: Spec) -> str:
    return dumps_json(spec_document(spec))
