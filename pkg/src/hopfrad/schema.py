"""JSON definition files for Hopf module algebras.

Tensors are stored as sparse triples ``[i, j, k, value]`` with omitted
entries zero.  Rational scalars are strings like ``"-3/2"`` so nothing ever
travels through floating point; prime-field scalars are plain integers.
A ``schema_version`` field guards future format changes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .fields import FieldSpec, GF, QQ
from .action import HModuleAlgebra
from .algebra import FiniteDimAlgebra, HopfAlgebraData
from .fixtures import Fixture

SCHEMA_VERSION = 1


class ParseError(ValueError):
    """A definition file that does not conform to the schema."""


def _scalar_to_json(field: FieldSpec, x):
    if field.is_rational:
        return str(x)
    return int(x)


def _scalar_from_json(field: FieldSpec, raw, where: str):
    try:
        if field.is_rational:
            if isinstance(raw, bool) or not isinstance(raw, (str, int)):
                raise ValueError
            return field.coerce(Fraction(raw))
        if isinstance(raw, bool):
            raise ValueError
        if isinstance(raw, str):
            raw = int(raw)
        if not isinstance(raw, int):
            raise ValueError
        return field.coerce(raw)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{where}: bad scalar {raw!r}") from None


def _field_to_json(field: FieldSpec):
    if field.is_rational:
        return {"kind": "Q"}
    return {"kind": "GF", "p": field.p}


def _field_from_json(raw) -> FieldSpec:
    if not isinstance(raw, dict) or "kind" not in raw:
        raise ParseError("field: expected an object with a 'kind'")
    if raw["kind"] == "Q":
        return QQ
    if raw["kind"] == "GF":
        try:
            return GF(int(raw["p"]))
        except (KeyError, ValueError, TypeError) as exc:
            raise ParseError(f"field: bad prime ({exc})") from None
    raise ParseError(f"field: unknown kind {raw['kind']!r}")


def _tensor_to_triples(field: FieldSpec, tensor):
    out = []
    for i, plane in enumerate(tensor):
        for j, row in enumerate(plane):
            for k, v in enumerate(row):
                if not field.is_zero(v):
                    out.append([i, j, k, _scalar_to_json(field, v)])
    return out


def _tensor_from_triples(field: FieldSpec, triples, dims, where: str):
    d0, d1, d2 = dims
    tensor = [[[field.zero()] * d2 for _ in range(d1)] for _ in range(d0)]
    if not isinstance(triples, list):
        raise ParseError(f"{where}: expected a list of [i, j, k, value] entries")
    for n, entry in enumerate(triples):
        if not (isinstance(entry, list) and len(entry) == 4):
            raise ParseError(f"{where}[{n}]: expected [i, j, k, value]")
        i, j, k, v = entry
        for idx, bound in ((i, d0), (j, d1), (k, d2)):
            if not isinstance(idx, int) or not 0 <= idx < bound:
                raise ParseError(f"{where}[{n}]: index {idx!r} out of range 0..{bound - 1}")
        tensor[i][j][k] = field.add(
            tensor[i][j][k], _scalar_from_json(field, v, f"{where}[{n}]")
        )
    return tensor


def _vector_to_json(field: FieldSpec, v):
    return [_scalar_to_json(field, x) for x in v]


def _vector_from_json(field: FieldSpec, raw, dim: int, where: str):
    if not isinstance(raw, list) or len(raw) != dim:
        raise ParseError(f"{where}: expected a length-{dim} list")
    return tuple(_scalar_from_json(field, x, where) for x in raw)


def module_algebra_to_dict(M: HModuleAlgebra, name: str, expected_level: str = "unital"):
    F = M.field
    doc = {
        "schema_version": SCHEMA_VERSION,
        "metadata": {"name": name, "expected_level": expected_level},
        "field": _field_to_json(F),
        "R": {
            "dim": M.R.dim,
            "mult": _tensor_to_triples(F, M.R.mult),
        },
        "H": {
            "dim": M.H.dim,
            "mult": _tensor_to_triples(F, M.H.algebra.mult),
            "unit": _vector_to_json(F, M.H.algebra.unit),
            "comult": _tensor_to_triples(F, M.H.comult),
            "counit": _vector_to_json(F, M.H.counit),
            "antipode": [_vector_to_json(F, row) for row in M.H.antipode],
        },
        "action": _tensor_to_triples(F, M.action),
    }
    if M.R.unit is not None:
        doc["R"]["unit"] = _vector_to_json(F, M.R.unit)
    return doc


def module_algebra_from_dict(doc) -> Fixture:
    if not isinstance(doc, dict):
        raise ParseError("top level: expected an object")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ParseError(f"schema_version: expected {SCHEMA_VERSION}, got {version!r}")
    meta = doc.get("metadata", {})
    if not isinstance(meta, dict):
        raise ParseError("metadata: expected an object")
    name = meta.get("name", "unnamed")
    level = meta.get("expected_level", "unital")
    if level not in ("weak", "module", "unital"):
        raise ParseError(f"metadata.expected_level: unknown level {level!r}")
    F = _field_from_json(doc.get("field"))

    rraw = doc.get("R")
    if not isinstance(rraw, dict) or not isinstance(rraw.get("dim"), int):
        raise ParseError("R: expected an object with an integer 'dim'")
    n = rraw["dim"]
    rmult = _tensor_from_triples(F, rraw.get("mult", []), (n, n, n), "R.mult")
    runit = None
    if "unit" in rraw:
        runit = _vector_from_json(F, rraw["unit"], n, "R.unit")
    R = FiniteDimAlgebra.create(F, n, rmult, unit=runit)

    hraw = doc.get("H")
    if not isinstance(hraw, dict) or not isinstance(hraw.get("dim"), int):
        raise ParseError("H: expected an object with an integer 'dim'")
    m = hraw["dim"]
    hmult = _tensor_from_triples(F, hraw.get("mult", []), (m, m, m), "H.mult")
    if "unit" not in hraw:
        raise ParseError("H.unit: required")
    hunit = _vector_from_json(F, hraw["unit"], m, "H.unit")
    HA = FiniteDimAlgebra.create(F, m, hmult, unit=hunit)
    comult = _tensor_from_triples(F, hraw.get("comult", []), (m, m, m), "H.comult")
    counit = _vector_from_json(F, hraw.get("counit"), m, "H.counit")
    araw = hraw.get("antipode")
    if not isinstance(araw, list) or len(araw) != m:
        raise ParseError(f"H.antipode: expected {m} rows")
    antipode = [_vector_from_json(F, row, m, f"H.antipode[{i}]") for i, row in enumerate(araw)]
    H = HopfAlgebraData.create(HA, comult, counit, antipode)

    act = _tensor_from_triples(F, doc.get("action", []), (m, n, n), "action")
    M = HModuleAlgebra.create(R, H, act)
    return Fixture(name, M, level)


def dump_fixture(fx: Fixture) -> str:
    doc = module_algebra_to_dict(fx.M, fx.name, fx.expected_level)
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def load_fixture(path: str) -> Fixture:
    with open(path) as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None
    return module_algebra_from_dict(doc)


def write_builtin_fixtures(directory: str) -> list:
    """Export every builtin fixture as <name>.json; returns the paths."""
    import os

    from .fixtures import builtin_fixtures

    os.makedirs(directory, exist_ok=True)
    paths = []
    for fx in builtin_fixtures():
        path = os.path.join(directory, f"{fx.name}.json")
        with open(path, "w") as fh:
            fh.write(dump_fixture(fx))
        paths.append(path)
    return paths
