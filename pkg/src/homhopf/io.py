"""The structure-constant file format: JSON-compatible, one self-describing
entry per structure, discriminated by which blocks are present.

Scalars are integers or "a/b" strings.  A nested ``mu[i][j]`` block holds the
coefficients of the product of the i-th and j-th basis vectors; ``delta[i]``
holds a dim x dim table of tensor-square coefficients; maps are row-major
matrices.  Module-like entries reference their base structure by name, which
must resolve within the same namespace (the parsed files plus, in the CLI,
the built-in catalog).  Serialization is deterministic: fixed key order,
two-space indentation, one trailing newline, so identical data round-trips
byte-identically.
"""

import json
from dataclasses import dataclass

from .errors import ParseError, ValidationError
from .linalg import CoTensor, Mat, MulTensor, Vec
from .modules import LeftModule, ModuleAlgebra, RightComodule, RightModule, YDModule
from .scalars import GF, QQ, render_scalar
from .structures import (HomAlgebra, HomBialgebra, HomCoalgebra,
                         HomHopfAlgebra)

FORMAT = "homhopf-v1"

_KEY_ORDER = [
    "name", "kind", "field", "dim", "mu", "delta", "alpha", "unit", "counit",
    "antipode", "r_matrix", "matrix", "module_of", "comodule_of", "yd_of",
    "carrier", "side", "unital", "counital", "action", "coaction",
    "twists", "r", "q", "note",
]


@dataclass(frozen=True)
class NamedStructure:
    name: str
    kind: str
    obj: object
    refs: dict


def parse_field(spec, path):
    if spec == "rational":
        return QQ
    if isinstance(spec, dict) and set(spec) == {"prime"}:
        try:
            return GF(spec["prime"])
        except ValidationError as exc:
            raise ParseError(str(exc), path=path) from exc
    raise ParseError("unknown field spec %r" % (spec,), path=path)


def field_spec(field):
    if field is QQ or field == QQ:
        return "rational"
    return {"prime": field.p}


def _scalar(field, v, path):
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ParseError("scalar must be an integer or 'a/b' string, got %r"
                         % (v,), path=path)
    try:
        return field(v)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ParseError("bad scalar %r: %s" % (v, exc), path=path) from exc


def _vector(field, data, path):
    if not isinstance(data, list):
        raise ParseError("expected a list of scalars", path=path)
    return Vec(field, [_scalar(field, v, "%s[%d]" % (path, i))
                       for i, v in enumerate(data)])


def _matrix(field, data, path):
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ParseError("expected a matrix (list of rows)", path=path)
    return Mat(field, [[_scalar(field, v, "%s[%d][%d]" % (path, i, j))
                        for j, v in enumerate(row)]
                       for i, row in enumerate(data)])


def _mul_tensor(field, data, dim, path, what="mu"):
    errs = []
    if len(data) != dim or any(len(row) != dim for row in data):
        errs.append("%s must be a dim x dim table of vectors" % what)
    for i, row in enumerate(data):
        for j, cell in enumerate(row):
            if len(cell) != dim:
                errs.append("%s[%d][%d] has length %d, expected %d"
                            % (what, i, j, len(cell), dim))
    if errs:
        raise ValidationError(errs)
    table = [[[_scalar(field, v, "%s[%d][%d][%d]" % (path, i, j, k))
               for k, v in enumerate(cell)]
              for j, cell in enumerate(row)]
             for i, row in enumerate(data)]
    return MulTensor.from_table(field, table)


def _co_tensor(field, data, dim, path):
    errs = []
    if len(data) != dim:
        errs.append("delta must list one table per basis vector")
    for i, tab in enumerate(data):
        if len(tab) != dim or any(len(r) != dim for r in tab):
            errs.append("delta[%d] must be a dim x dim table" % i)
    if errs:
        raise ValidationError(errs)
    table = [[[_scalar(field, v, "%s[%d][%d][%d]" % (path, i, j, k))
               for k, v in enumerate(row)]
              for j, row in enumerate(tab)]
             for i, tab in enumerate(data)]
    return CoTensor.from_table(field, table)


def parse_string(text, source="<string>"):
    """Parse one file's text into a list of raw entry dicts (validated JSON)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("invalid JSON in %s: %s" % (source, exc.msg),
                         line=exc.lineno, column=exc.colno) from exc
    if isinstance(doc, dict) and "structures" in doc:
        entries = doc["structures"]
    elif isinstance(doc, dict):
        entries = [doc]
    else:
        raise ParseError("top level must be an object", path=source)
    if not isinstance(entries, list):
        raise ParseError("'structures' must be a list", path=source)
    for i, e in enumerate(entries):
        if not isinstance(e, dict):
            raise ParseError("structures[%d] is not an object" % i, path=source)
        if "name" not in e:
            raise ParseError("structures[%d] lacks a name" % i, path=source)
    return entries


def parse_path(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_string(fh.read(), source=str(path))


def _infer_kind(entry):
    if "matrix" in entry:
        return "map"
    if "twists" in entry:
        return "twisting"
    if "yd_of" in entry:
        return "yd"
    if "module_of" in entry:
        return "module"
    if "comodule_of" in entry:
        return "comodule"
    if "mu" in entry and "delta" in entry and "antipode" in entry:
        return "hopf"
    if "mu" in entry and "delta" in entry:
        return "bialgebra"
    if "mu" in entry:
        return "algebra"
    if "delta" in entry:
        return "coalgebra"
    raise ValidationError("entry %r has no recognizable blocks"
                          % entry.get("name"))


def resolve(entries, namespace=None):
    """Build domain objects from raw entries, resolving named references.

    ``namespace`` supplies structures already in scope (earlier files, the
    catalog).  Returns an ordered name -> NamedStructure dict."""
    scope = dict(namespace or {})
    out = {}
    for entry in entries:
        name = entry["name"]
        if name in out:
            raise ValidationError("duplicate structure name %r" % name)
        ns = _build(entry, scope)
        out[name] = ns
        scope[name] = ns
    return out


def _build(entry, scope):
    name = entry["name"]
    kind = _infer_kind(entry)
    if "kind" in entry and entry["kind"] != kind:
        raise ValidationError(
            "entry %s declares kind %r but its blocks say %r"
            % (name, entry["kind"], kind))
    field = parse_field(entry.get("field", "rational"), name)
    violations = []

    def need(key):
        if key not in entry:
            violations.append("%s: missing block %r" % (name, key))
            return False
        return True

    if kind == "map":
        m = _matrix(field, entry["matrix"], name + ".matrix")
        dim = entry.get("dim", m.rows)
        if m.rows != dim or m.cols != dim:
            raise ValidationError("%s: matrix is %dx%d, expected %dx%d"
                                  % (name, m.rows, m.cols, dim, dim))
        return NamedStructure(name, kind, m, {})

    if kind in ("algebra", "bialgebra", "hopf", "coalgebra"):
        if not need("dim") or not need("alpha"):
            raise ValidationError(violations)
        dim = entry["dim"]
        alpha = _matrix(field, entry["alpha"], name + ".alpha")
        if alpha.rows != dim or alpha.cols != dim:
            violations.append("%s: alpha is %dx%d on dim %d"
                              % (name, alpha.rows, alpha.cols, dim))
            raise ValidationError(violations)
        mul = comul = unit = counit = antipode = None
        if "mu" in entry:
            mul = _mul_tensor(field, entry["mu"], dim, name + ".mu")
        if "delta" in entry:
            comul = _co_tensor(field, entry["delta"], dim, name + ".delta")
        if "unit" in entry:
            unit = _vector(field, entry["unit"], name + ".unit")
            if unit.dim != dim:
                raise ValidationError("%s: unit has dim %d" % (name, unit.dim))
        if "counit" in entry:
            counit = _vector(field, entry["counit"], name + ".counit")
            if counit.dim != dim:
                raise ValidationError("%s: counit has dim %d" % (name, counit.dim))
        if "antipode" in entry:
            antipode = _matrix(field, entry["antipode"], name + ".antipode")
            if antipode.rows != dim or antipode.cols != dim:
                raise ValidationError("%s: antipode shape" % name)
        refs = {}
        if "r_matrix" in entry:
            r = _vector(field, entry["r_matrix"], name + ".r_matrix")
            if r.dim != dim * dim:
                raise ValidationError(
                    "%s: r_matrix has dim %d, expected %d" % (name, r.dim, dim * dim))
            refs["r_matrix"] = r
        if kind == "algebra":
            obj = HomAlgebra(mul, alpha, unit)
        elif kind == "coalgebra":
            obj = HomCoalgebra(comul, alpha, counit)
        elif kind == "bialgebra":
            obj = HomBialgebra(mul, comul, alpha, unit, counit)
        else:
            if unit is None or counit is None:
                raise ValidationError(
                    "%s: a hopf entry needs unit and counit" % name)
            obj = HomHopfAlgebra(mul, comul, alpha, unit, counit, antipode)
        return NamedStructure(name, kind, obj, refs)

    if kind in ("module", "comodule", "yd"):
        base_key = {"module": "module_of", "comodule": "comodule_of",
                    "yd": "yd_of"}[kind]
        base_name = entry[base_key]
        if base_name not in scope:
            raise ValidationError("%s: unresolved reference %r" % (name, base_name))
        base = scope[base_name].obj
        if not need("alpha"):
            raise ValidationError(violations)
        alpha = _matrix(field, entry["alpha"], name + ".alpha")
        mdim = alpha.rows
        if kind in ("module", "yd"):
            side = entry.get("side", "left")
            action = _action_matrix(field, entry.get("action"), base.dim, mdim,
                                    side, name)
        if kind in ("comodule", "yd"):
            coaction = _coaction_matrix(field, entry.get("coaction"), base.dim,
                                        mdim, name)
        if kind == "module":
            cls = LeftModule if side == "left" else RightModule
            mod = cls(base, alpha, action, unital=entry.get("unital", False))
            carrier = entry.get("carrier")
            refs = {"module_of": base_name}
            if carrier is not None:
                if carrier not in scope:
                    raise ValidationError(
                        "%s: unresolved carrier %r" % (name, carrier))
                carrier_obj = scope[carrier].obj
                if carrier_obj.alpha != alpha:
                    raise ValidationError(
                        "%s: carrier %r has a different structure map"
                        % (name, carrier))
                obj = ModuleAlgebra(base, carrier_obj, action, side=side,
                                    unital=entry.get("unital", False))
                refs["carrier"] = carrier
                return NamedStructure(name, "module-algebra", obj, refs)
            return NamedStructure(name, kind, mod, refs)
        if kind == "comodule":
            obj = RightComodule(base, alpha, coaction,
                                counital=entry.get("counital", False))
            return NamedStructure(name, kind, obj, {"comodule_of": base_name})
        mod = LeftModule(base, alpha, action, unital=True)
        com = RightComodule(base, alpha, coaction, counital=True)
        return NamedStructure(name, kind, YDModule(base, mod, com),
                              {"yd_of": base_name})

    if kind == "twisting":
        names = entry["twists"]
        if not isinstance(names, list) or len(names) != 2:
            raise ValidationError("%s: 'twists' must name two algebras" % name)
        for n in names:
            if n not in scope:
                raise ValidationError("%s: unresolved reference %r" % (name, n))
        a = scope[names[0]].obj
        b = scope[names[1]].obj
        r = _matrix(field, entry["r"], name + ".r")
        ab = a.dim * b.dim
        if r.rows != ab or r.cols != ab:
            raise ValidationError("%s: r must be %dx%d" % (name, ab, ab))
        refs = {"twists": tuple(names)}
        if "q" in entry:
            q = _matrix(field, entry["q"], name + ".q")
            if q.rows != ab or q.cols != ab:
                raise ValidationError("%s: q must be %dx%d" % (name, ab, ab))
            from .twisting import LRData
            return NamedStructure(name, "lr-twisting", LRData(a, b, r, q), refs)
        from .twisting import TwistingMap
        return NamedStructure(
            name, kind,
            TwistingMap(a, b, r, unital=entry.get("unital", False)), refs)

    raise ValidationError("entry %s: unsupported kind %r" % (name, kind))


def _action_matrix(field, data, adim, mdim, side, name):
    if data is None:
        raise ValidationError("%s: missing block 'action'" % name)
    rows, cols = (adim, mdim) if side == "left" else (mdim, adim)
    if len(data) != rows or any(len(r) != cols for r in data):
        raise ValidationError("%s: action table must be %dx%d vectors"
                              % (name, rows, cols))
    zero = field.zero
    out = [[zero] * (adim * mdim) for _ in range(mdim)]
    for i, row in enumerate(data):
        for j, cell in enumerate(row):
            if len(cell) != mdim:
                raise ValidationError("%s: action[%d][%d] must have dim %d"
                                      % (name, i, j, mdim))
            col = i * cols + j
            for k, v in enumerate(cell):
                out[k][col] = _scalar(field, v, "%s.action[%d][%d][%d]"
                                      % (name, i, j, k))
    return Mat(field, out)


def _coaction_matrix(field, data, cdim, mdim, name):
    if data is None:
        raise ValidationError("%s: missing block 'coaction'" % name)
    if len(data) != mdim:
        raise ValidationError("%s: coaction lists one table per basis vector"
                              % name)
    zero = field.zero
    out = [[zero] * mdim for _ in range(mdim * cdim)]
    for m, tab in enumerate(data):
        if len(tab) != mdim or any(len(r) != cdim for r in tab):
            raise ValidationError("%s: coaction[%d] must be %dx%d"
                                  % (name, m, mdim, cdim))
        for i, row in enumerate(tab):
            for j, v in enumerate(row):
                out[i * cdim + j][m] = _scalar(
                    field, v, "%s.coaction[%d][%d][%d]" % (name, m, i, j))
    return Mat(field, out)


# --- serialization ---------------------------------------------------------

def _render_vec(v):
    return [render_scalar(x) for x in v.entries]


def _render_mat(m):
    return [[render_scalar(x) for x in row] for row in m.data]


def entry_for(name, obj, refs=None, note=None):
    """The canonical raw entry for a domain object."""
    refs = refs or {}
    e = {"name": name}
    if isinstance(obj, Mat):
        e["kind"] = "map"
        e["field"] = field_spec(obj.field)
        e["dim"] = obj.rows
        e["matrix"] = _render_mat(obj)
    elif isinstance(obj, (HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfAlgebra)):
        kind = {HomAlgebra: "algebra", HomCoalgebra: "coalgebra",
                HomBialgebra: "bialgebra", HomHopfAlgebra: "hopf"}[type(obj)]
        e["kind"] = kind
        e["field"] = field_spec(obj.field)
        e["dim"] = obj.dim
        if getattr(obj, "mul", None) is not None:
            e["mu"] = [[_render_vec(obj.mul.c(i, j)) for j in range(obj.dim)]
                       for i in range(obj.dim)]
        if getattr(obj, "comul", None) is not None:
            e["delta"] = [[[render_scalar(x) for x in row] for row in tab]
                          for tab in obj.comul.table()]
        e["alpha"] = _render_mat(obj.alpha)
        if getattr(obj, "unit", None) is not None:
            e["unit"] = _render_vec(obj.unit)
        if getattr(obj, "counit", None) is not None:
            e["counit"] = _render_vec(obj.counit)
        if getattr(obj, "antipode", None) is not None:
            e["antipode"] = _render_mat(obj.antipode)
        if "r_matrix" in refs:
            e["r_matrix"] = _render_vec(refs["r_matrix"])
    elif isinstance(obj, (LeftModule, RightModule, ModuleAlgebra)):
        side = "left" if isinstance(obj, LeftModule) else "right"
        if isinstance(obj, ModuleAlgebra):
            side = obj.side
            e["carrier"] = refs["carrier"]
        base = obj.algebra if not isinstance(obj, ModuleAlgebra) else obj.base
        e["kind"] = "module"
        e["field"] = field_spec(base.field)
        e["module_of"] = refs["module_of"]
        e["side"] = side
        mdim = obj.action.rows
        e["dim"] = mdim
        alpha = obj.alpha if not isinstance(obj, ModuleAlgebra) else obj.algebra.alpha
        e["alpha"] = _render_mat(alpha)
        e["unital"] = obj.unital
        adim = base.dim
        if side == "left":
            e["action"] = [[_render_vec(obj.action.col(i * mdim + j))
                            for j in range(mdim)] for i in range(adim)]
        else:
            e["action"] = [[_render_vec(obj.action.col(i * adim + j))
                            for j in range(adim)] for i in range(mdim)]
    elif isinstance(obj, RightComodule):
        e["kind"] = "comodule"
        e["field"] = field_spec(obj.field)
        e["comodule_of"] = refs["comodule_of"]
        e["dim"] = obj.mdim
        e["alpha"] = _render_mat(obj.alpha)
        e["counital"] = obj.counital
        cdim = obj.coalgebra.dim
        e["coaction"] = [
            [[render_scalar(obj.coaction.data[i * cdim + j][m])
              for j in range(cdim)] for i in range(obj.mdim)]
            for m in range(obj.mdim)]
    else:
        raise TypeError("cannot serialize %r" % (type(obj).__name__,))
    if note:
        e["note"] = note
    return {k: e[k] for k in _KEY_ORDER if k in e}


def render(entries):
    """Deterministic text for a list of raw entries."""
    doc = {"format": FORMAT, "structures": entries}
    return json.dumps(doc, indent=2) + "\n"


def write_path(path, entries):
    text = render(entries)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text
