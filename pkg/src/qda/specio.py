"""Algebra spec files: parsing and validation, plus the dual spec writer."""

from __future__ import annotations

import json
from importlib import resources

import jsonschema

from qda.exactnum import MODES, ModeError, Span, parse_rational
from qda.quadalg import algebra, from_relations
from qda.rmatrix import BUILTINS, RMatrix, builtin


class SpecError(ValueError):
    """Malformed spec file; the message carries a location."""


def load_schema(name):
    text = resources.files("qda").joinpath("schemas", name).read_text()
    return json.loads(text)


class AlgebraSpec:
    """A parsed spec: either an R-matrix or a bare relation span."""

    def __init__(self, name, n, mode, R=None, relations=None, raw=None):
        self.name = name
        self.n = n
        self.mode = mode
        self.R = R
        self.relations = relations
        self.raw = raw or {}

    def algebra(self):
        if self.R is not None:
            return algebra(self.R)
        return from_relations(self.n, self.relations, self.mode)

    def require_R(self, command):
        if self.R is None:
            raise SpecError(f"'{command}' needs an R-matrix; this spec only lists relations")
        return self.R


def _path(err):
    out = "$"
    for p in err.absolute_path:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


def parse_spec(text, source="<spec>"):
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecError(f"{source}:{e.lineno}:{e.colno}: invalid JSON: {e.msg}") from None
    try:
        jsonschema.validate(raw, load_schema("spec.schema.json"))
    except jsonschema.ValidationError as e:
        raise SpecError(f"{source}: {_path(e)}: {e.message}") from None
    n = raw["n"]
    mode = MODES[raw.get("scalar", "rational")]
    name = raw.get("name", "")
    nn = n * n

    def scalar(tok, where):
        try:
            return mode.parse(tok)
        except (ValueError, ModeError) as e:
            raise SpecError(f"{source}: {where}: {e}") from None

    if "R" in raw:
        rows = raw["R"]
        if len(rows) != nn:
            raise SpecError(f"{source}: $.R: expected {nn} rows for n={n}, got {len(rows)}")
        for i, row in enumerate(rows):
            if len(row) != nn:
                raise SpecError(f"{source}: $.R[{i}]: expected {nn} entries, got {len(row)}")
        E = [[scalar(x, f"$.R[{i}][{j}]") for j, x in enumerate(row)] for i, row in enumerate(rows)]
        return AlgebraSpec(name, n, mode, R=RMatrix(n, E, mode, name=name or None), raw=raw)
    if "builtin" in raw:
        b = raw["builtin"]
        params = dict(b.get("params", {}))
        if "n" in params and params["n"] != n:
            raise SpecError(f"{source}: $.builtin.params.n: disagrees with top-level n")
        q = params.get("q")
        if q is not None:
            try:
                q = parse_rational(q)
            except ValueError as e:
                raise SpecError(f"{source}: $.builtin.params.q: {e}") from None
        try:
            R = builtin(b["name"], n, signs=params.get("signs"), q=q, mode=mode)
        except ValueError as e:
            raise SpecError(f"{source}: $.builtin: {e}") from None
        return AlgebraSpec(name, n, mode, R=R, raw=raw)
    vecs = []
    for i, row in enumerate(raw["relations"]):
        if len(row) != nn:
            raise SpecError(f"{source}: $.relations[{i}]: expected {nn} entries, got {len(row)}")
        vecs.append({j: v for j, x in enumerate(row) if (v := scalar(x, f"$.relations[{i}][{j}]"))})
    return AlgebraSpec(name, n, mode, relations=vecs, raw=raw)


def load_spec(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise SpecError(f"{path}: {e.strerror}") from None
    return parse_spec(text, str(path))


def dump_matrix(rows, mode):
    return [[mode.dump(x) for x in row] for row in rows]


_NEGATED = {"flip": "neg_flip", "neg_flip": "flip",
            "identity": "neg_identity", "neg_identity": "identity"}


def dual_spec(spec):
    """Spec of the Koszul dual.

    Involutive ``R`` dualizes to ``-R^T`` (``-R`` when symmetric); builtins map
    to their sign-flipped partners.  Anything else is written as an explicit
    relation span.
    """
    name = f"dual({spec.name})" if spec.name else "dual"
    out = {"name": name, "n": spec.n, "scalar": spec.mode.name}
    R = spec.R
    if R is not None and R.properties().involutive:
        b = spec.raw.get("builtin")
        if b is not None and b["name"] in _NEGATED:
            out["builtin"] = {"name": _NEGATED[b["name"]]}
            return out
        if b is not None and b["name"] == "diag_signs":
            signs = R.params["signs"]
            out["builtin"] = {"name": "diag_signs",
                              "params": {"signs": [[-s for s in row] for row in signs]}}
            return out
        out["R"] = dump_matrix(R.negated_transpose().dense, spec.mode)
        return out
    alg = spec.algebra()
    ann = alg.rel_span.annihilator()
    zero = spec.mode.zero()
    out["relations"] = [[spec.mode.dump(v.get(j, zero)) for j in range(spec.n ** 2)]
                        for v in ann.basis]
    return out


def same_relations(a, b):
    """Two specs define the same quadratic algebra (equal canonical relation spans)."""
    sa = a.algebra().rel_span
    sb = b.algebra().rel_span
    return isinstance(sa, Span) and sa == sb


__all__ = ["AlgebraSpec", "SpecError", "parse_spec", "load_spec", "dual_spec",
           "same_relations", "load_schema", "BUILTINS"]
