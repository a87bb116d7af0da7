"""Canonical document format for every object kind.

One self-describing JSON schema covers all kinds (the kind tag lives inside
the document), so whatever one command emits another can consume.  Emission
is canonical: sorted entry lists, reduced rationals, sorted keys and fixed
separators, so equal objects serialize to identical bytes and
``serialize(parse(b)) == b`` for every well-formed document.  Tensor indices
are row-major, matching the in-memory convention.
"""
from __future__ import annotations

import json

from .classification import LazyCocycle
from .fields import PrimeField, QQ
from .groups import GroupTable
from .linalg import BasedSpace, LinMap, tensor_space
from .reports import Report
from .special import CrossedDatum, MatchedPair
from .structures import (
    FDAlgebra,
    FDBialgebra,
    FDCoalgebra,
    FDHopf,
    UnitalCoalgebra,
)
from .unified import ExtendingDatum

FORMAT_VERSION = "hopfprod/1"


class MalformedDocumentError(ValueError):
    pass


class CocycleMap(LinMap):
    """A linear map parsed from (and re-serialized as) a cocycle document."""


def _field_obj(field):
    if field == QQ:
        return {"kind": "rational"}
    return {"kind": "mod-p", "p": field.p}


def _field_from(obj):
    if not isinstance(obj, dict) or "kind" not in obj:
        raise MalformedDocumentError("missing field descriptor")
    if obj["kind"] == "rational":
        return QQ
    if obj["kind"] == "mod-p":
        try:
            return PrimeField(int(obj["p"]))
        except (KeyError, ValueError) as exc:
            raise MalformedDocumentError(f"bad modulus: {exc}") from exc
    raise MalformedDocumentError(f"unknown field kind {obj['kind']!r}")


def _space_obj(space: BasedSpace):
    return {"dim": space.dim, "labels": list(space.labels)}


def _space_from(obj):
    try:
        labels = [str(x) for x in obj["labels"]]
        if int(obj["dim"]) != len(labels):
            raise MalformedDocumentError("dim does not match the label count")
        return BasedSpace(labels)
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedDocumentError(f"bad space: {exc}") from exc


def _entries_obj(field, m: LinMap):
    out = []
    for i in sorted(m.cols):
        for j, v in m.cols[i]:
            num, den = field.to_pair(v)
            out.append([i, j, num, den])
    return out


def _entries_from(field, obj, domain, codomain) -> LinMap:
    cols: dict[int, dict] = {}
    try:
        for rec in obj:
            i, j, num, den = rec
            cols.setdefault(int(i), {})[int(j)] = field.of(int(num), int(den))
    except (TypeError, ValueError) as exc:
        raise MalformedDocumentError(f"bad entry record: {exc}") from exc
    try:
        return LinMap(field, domain, codomain, cols)
    except ValueError as exc:
        raise MalformedDocumentError(str(exc)) from exc


def _vector_obj(field, v: dict):
    out = []
    for i in sorted(v):
        num, den = field.to_pair(v[i])
        out.append([i, num, den])
    return out


def _vector_from(field, obj, dim) -> dict:
    out = {}
    try:
        for rec in obj:
            i, num, den = rec
            if not 0 <= int(i) < dim:
                raise MalformedDocumentError(f"vector index {i} out of range")
            out[int(i)] = field.of(int(num), int(den))
    except (TypeError, ValueError) as exc:
        raise MalformedDocumentError(f"bad vector record: {exc}") from exc
    return out


def _coalgebra_obj(field, c: FDCoalgebra, unit: dict | None):
    obj = {
        "space": _space_obj(c.space),
        "delta": _entries_obj(field, c.delta),
        "epsilon": _entries_obj(field, c.epsilon),
    }
    if unit is not None:
        obj["unit"] = _vector_obj(field, unit)
    return obj


def _coalgebra_from(field, obj):
    try:
        space = _space_from(obj["space"])
    except KeyError as exc:
        raise MalformedDocumentError("coalgebra payload lacks a space") from exc
    from .linalg import SCALAR_SPACE

    delta = _entries_from(field, obj.get("delta", []), space,
                          tensor_space(space, space))
    epsilon = _entries_from(field, obj.get("epsilon", []), space, SCALAR_SPACE)
    coalg = FDCoalgebra(field, space, delta, epsilon)
    if "unit" in obj:
        return UnitalCoalgebra(coalg, _vector_from(field, obj["unit"], space.dim))
    return coalg


def _bialgebra_obj(field, b: FDBialgebra):
    obj = _coalgebra_obj(field, b.coalgebra, None)
    obj["mult"] = _entries_obj(field, b.mult)
    obj["unit"] = _vector_obj(field, b.unit)
    if isinstance(b, FDHopf):
        obj["antipode"] = _entries_obj(field, b.antipode)
    return obj


def _bialgebra_from(field, obj, want_hopf: bool):
    coalg = _coalgebra_from(field, {k: obj[k] for k in ("space", "delta", "epsilon")
                                    if k in obj})
    if isinstance(coalg, UnitalCoalgebra):  # pragma: no cover - unit key is mult's
        coalg = coalg.coalg
    space = coalg.space
    mult = _entries_from(field, obj.get("mult", []), tensor_space(space, space), space)
    unit = _vector_from(field, obj.get("unit", []), space.dim)
    alg = FDAlgebra(field, space, mult, unit, associative="yes")
    if want_hopf or "antipode" in obj:
        if "antipode" not in obj:
            raise MalformedDocumentError("hopf document lacks an antipode")
        antipode = _entries_from(field, obj["antipode"], space, space)
        return FDHopf(coalg, alg, antipode)
    return FDBialgebra(coalg, alg)


def _sub_bialgebra_obj(field, b: FDBialgebra):
    return {"kind": "hopf" if isinstance(b, FDHopf) else "bialgebra",
            "value": _bialgebra_obj(field, b)}


def _sub_bialgebra_from(field, obj):
    try:
        return _bialgebra_from(field, obj["value"], obj["kind"] == "hopf")
    except (KeyError, TypeError) as exc:
        raise MalformedDocumentError(f"bad bialgebra block: {exc}") from exc


def to_document(obj) -> dict:
    """The canonical dict form of any serializable object."""
    if isinstance(obj, Report):
        return {"format": FORMAT_VERSION, "field": {"kind": "rational"},
                "kind": "report", "payload": obj.to_obj()}
    if isinstance(obj, GroupTable):
        return {"format": FORMAT_VERSION, "field": {"kind": "rational"},
                "kind": "group-table",
                "payload": {"labels": list(obj.labels),
                            "table": [list(row) for row in obj.table]}}
    if isinstance(obj, UnitalCoalgebra):
        field = obj.field
        return {"format": FORMAT_VERSION, "field": _field_obj(field),
                "kind": "coalgebra",
                "payload": _coalgebra_obj(field, obj.coalg, obj.unit)}
    if isinstance(obj, FDCoalgebra):
        return {"format": FORMAT_VERSION, "field": _field_obj(obj.field),
                "kind": "coalgebra",
                "payload": _coalgebra_obj(obj.field, obj, None)}
    if isinstance(obj, FDBialgebra):
        kind = "hopf" if isinstance(obj, FDHopf) else "bialgebra"
        return {"format": FORMAT_VERSION, "field": _field_obj(obj.field),
                "kind": kind, "payload": _bialgebra_obj(obj.field, obj)}
    if isinstance(obj, ExtendingDatum):
        field = obj.field
        return {"format": FORMAT_VERSION, "field": _field_obj(field),
                "kind": "extending-datum",
                "payload": {
                    "base": _sub_bialgebra_obj(field, obj.base),
                    "ext": _coalgebra_obj(field, obj.ext.coalg, obj.ext.unit),
                    "dot": _entries_obj(field, obj.dot),
                    "ract": _entries_obj(field, obj.ract),
                    "lact": _entries_obj(field, obj.lact),
                    "cocycle": _entries_obj(field, obj.cocycle),
                }}
    if isinstance(obj, MatchedPair):
        field = obj.field
        return {"format": FORMAT_VERSION, "field": _field_obj(field),
                "kind": "matched-pair",
                "payload": {
                    "a": _sub_bialgebra_obj(field, obj.a),
                    "h": _sub_bialgebra_obj(field, obj.h),
                    "ract": _entries_obj(field, obj.ract),
                    "lact": _entries_obj(field, obj.lact),
                }}
    if isinstance(obj, CrossedDatum):
        field = obj.field
        return {"format": FORMAT_VERSION, "field": _field_obj(field),
                "kind": "crossed-datum",
                "payload": {
                    "a": _sub_bialgebra_obj(field, obj.a),
                    "h": _sub_bialgebra_obj(field, obj.h),
                    "lact": _entries_obj(field, obj.lact),
                    "cocycle": _entries_obj(field, obj.cocycle),
                }}
    if isinstance(obj, LazyCocycle):
        obj = obj.linmap
        kind = "cocycle"
    elif isinstance(obj, CocycleMap):
        kind = "cocycle"
    elif isinstance(obj, LinMap):
        kind = "linmap"
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return {"format": FORMAT_VERSION, "field": _field_obj(obj.field),
            "kind": kind,
            "payload": {"domain": _space_obj(obj.domain),
                        "codomain": _space_obj(obj.codomain),
                        "entries": _entries_obj(obj.field, obj)}}


def serialize(obj) -> bytes:
    """Canonical bytes: sorted keys, compact separators, trailing newline."""
    doc = obj if isinstance(obj, dict) else to_document(obj)
    return (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n").encode()


def parse(data: bytes):
    """Parse a document back into the corresponding object."""
    try:
        doc = json.loads(data.decode())
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise MalformedDocumentError(f"not a JSON document: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedDocumentError("top level is not an object")
    if doc.get("format") != FORMAT_VERSION:
        raise MalformedDocumentError(f"unsupported format {doc.get('format')!r}")
    kind = doc.get("kind")
    payload = doc.get("payload")
    if not isinstance(payload, dict):
        raise MalformedDocumentError("missing payload")
    field = _field_from(doc.get("field"))
    try:
        if kind == "report":
            rep = Report(str(payload.get("title", "")))
            for item in payload.get("checks", []):
                rep.add(str(item["condition"]), bool(item["passed"]),
                        item.get("witness"))
            return rep
        if kind == "group-table":
            return GroupTable(payload["table"], [str(x) for x in payload["labels"]])
        if kind == "coalgebra":
            return _coalgebra_from(field, payload)
        if kind in ("bialgebra", "hopf"):
            return _bialgebra_from(field, payload, kind == "hopf")
        if kind == "extending-datum":
            base = _sub_bialgebra_from(field, payload["base"])
            ext = _coalgebra_from(field, payload["ext"])
            if not isinstance(ext, UnitalCoalgebra):
                raise MalformedDocumentError("extending-datum needs a unit on H")
            hs, as_ = ext.space, base.space
            return ExtendingDatum(
                base=base, ext=ext,
                dot=_entries_from(field, payload["dot"], tensor_space(hs, hs), hs),
                ract=_entries_from(field, payload["ract"], tensor_space(hs, as_), hs),
                lact=_entries_from(field, payload["lact"], tensor_space(hs, as_), as_),
                cocycle=_entries_from(field, payload["cocycle"],
                                      tensor_space(hs, hs), as_),
            )
        if kind == "matched-pair":
            a = _sub_bialgebra_from(field, payload["a"])
            h = _sub_bialgebra_from(field, payload["h"])
            hs, as_ = h.space, a.space
            return MatchedPair(
                a=a, h=h,
                ract=_entries_from(field, payload["ract"], tensor_space(hs, as_), hs),
                lact=_entries_from(field, payload["lact"], tensor_space(hs, as_), as_),
            )
        if kind == "crossed-datum":
            a = _sub_bialgebra_from(field, payload["a"])
            h = _sub_bialgebra_from(field, payload["h"])
            hs, as_ = h.space, a.space
            return CrossedDatum(
                a=a, h=h,
                lact=_entries_from(field, payload["lact"], tensor_space(hs, as_), as_),
                cocycle=_entries_from(field, payload["cocycle"],
                                      tensor_space(hs, hs), as_),
            )
        if kind in ("cocycle", "linmap"):
            domain = _space_from(payload["domain"])
            codomain = _space_from(payload["codomain"])
            m = _entries_from(field, payload.get("entries", []), domain, codomain)
            if kind == "cocycle":
                return CocycleMap(field, domain, codomain,
                                  {i: m.col(i) for i in m.cols})
            return m
    except MalformedDocumentError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedDocumentError(f"bad {kind} payload: {exc}") from exc
    raise MalformedDocumentError(f"unknown document kind {kind!r}")


def save(path, obj):
    with open(path, "wb") as fh:
        fh.write(serialize(obj))


def load(path):
    with open(path, "rb") as fh:
        return parse(fh.read())
