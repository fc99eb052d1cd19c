"""JSON round-tripping for wall systems, Gram matrices, packings, targets.

Every exact value travels as its string form ("1/2", "2*sqrt(3)", ...) so
files stay human-readable and nothing is lost to floats.  All documents carry
"format": 1.
"""

from __future__ import annotations

import json
from pathlib import Path

from .coxeter import GramMatrix
from .errors import PackingLabError
from .exactnum import QuadExt
from .geometrize import DisjointFree, Exact, TargetSpec
from .inversive import InversiveVector
from .orbit import Packing, SphereRecord, WallSystem

FORMAT = 1


class FormatError(PackingLabError):
    pass


def _check_format(doc: dict, expected_kind: str) -> None:
    if not isinstance(doc, dict):
        raise FormatError("document is not a JSON object")
    if doc.get("format") != FORMAT:
        raise FormatError(f"unsupported format marker {doc.get('format')!r}")
    if doc.get("kind") != expected_kind:
        raise FormatError(f"expected kind {expected_kind!r}, got {doc.get('kind')!r}")


def _vector_to_obj(v: InversiveVector) -> dict:
    return {
        "cobend": str(v.cobend),
        "bend": str(v.bend),
        "bz": [str(c) for c in v.bz],
    }


def _vector_from_obj(obj: dict) -> InversiveVector:
    try:
        coords = [QuadExt.parse(obj["cobend"]), QuadExt.parse(obj["bend"])]
        coords.extend(QuadExt.parse(s) for s in obj["bz"])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad vector object: {exc}") from exc
    return InversiveVector.from_coords(coords)


def system_to_obj(system: WallSystem) -> dict:
    return {
        "format": FORMAT,
        "kind": "system",
        "dim": system.dim,
        "walls": [_vector_to_obj(w) for w in system.walls],
        "cluster": sorted(system.cluster_idx),
        "cocluster": sorted(system.cocluster_idx),
    }


def system_from_obj(doc: dict) -> WallSystem:
    _check_format(doc, "system")
    walls = tuple(_vector_from_obj(o) for o in doc["walls"])
    return WallSystem(
        walls=walls,
        cluster_idx=frozenset(doc["cluster"]),
        cocluster_idx=frozenset(doc["cocluster"]),
    )


def gram_to_obj(gram: GramMatrix) -> dict:
    return {
        "format": FORMAT,
        "kind": "gram",
        "size": gram.size,
        "entries": [[str(e) for e in row] for row in gram.entries],
        "placeholders": sorted([i, j] for (i, j) in gram.placeholders),
        "signature_hint": gram.signature_hint,
    }


def gram_from_obj(doc: dict) -> GramMatrix:
    _check_format(doc, "gram")
    rows = [[QuadExt.parse(s) for s in row] for row in doc["entries"]]
    placeholders = frozenset((i, j) for i, j in doc.get("placeholders", []))
    return GramMatrix.from_rows(rows, placeholders=placeholders,
                                signature_hint=doc.get("signature_hint"))


def packing_to_obj(packing: Packing) -> dict:
    spheres = []
    for rec in packing.spheres:
        obj = _vector_to_obj(rec.vector)
        obj["word_length"] = rec.word_length
        obj["parent_generator"] = rec.parent_generator
        spheres.append(obj)
    return {
        "format": FORMAT,
        "kind": "packing",
        "dim": packing.dim,
        "bend_bound": str(packing.bend_bound),
        "max_word": packing.max_word,
        "saturated": packing.saturated,
        "boundary_walls": packing.boundary_walls,
        "generators": sorted(packing.generator_idx),
        "spheres": spheres,
    }


def packing_from_obj(doc: dict) -> Packing:
    _check_format(doc, "packing")
    spheres = [
        SphereRecord(
            vector=_vector_from_obj(o),
            word_length=o["word_length"],
            parent_generator=o["parent_generator"],
        )
        for o in doc["spheres"]
    ]
    return Packing(
        spheres=spheres,
        saturated=doc["saturated"],
        bend_bound=QuadExt.parse(doc["bend_bound"]),
        max_word=doc["max_word"],
        generator_idx=tuple(doc["generators"]),
        dim=doc["dim"],
        boundary_walls=doc.get("boundary_walls", 0),
    )


def target_to_obj(spec: TargetSpec) -> dict:
    targets = []
    for (i, j), t in sorted(spec.targets.items()):
        value = str(t.value) if isinstance(t, Exact) else "free"
        targets.append({"i": i, "j": j, "value": value})
    doc = {
        "format": FORMAT,
        "kind": "target",
        "dim": spec.dim,
        "wall_count": spec.wall_count,
        "targets": targets,
    }
    if spec.init_hint is not None:
        doc["init_hint"] = [list(row) for row in spec.init_hint]
    return doc


def target_from_obj(doc: dict) -> TargetSpec:
    _check_format(doc, "target")
    targets: dict[tuple[int, int], Exact | DisjointFree] = {}
    for o in doc["targets"]:
        key = (o["i"], o["j"])
        targets[key] = DisjointFree() if o["value"] == "free" else Exact(QuadExt.parse(o["value"]))
    hint = doc.get("init_hint")
    return TargetSpec(
        doc["wall_count"],
        targets,
        dim=doc.get("dim", 2),
        init_hint=tuple(map(tuple, hint)) if hint else None,
    )


_DUMPERS = {
    WallSystem: system_to_obj,
    GramMatrix: gram_to_obj,
    Packing: packing_to_obj,
    TargetSpec: target_to_obj,
}

_LOADERS = {
    "system": system_from_obj,
    "gram": gram_from_obj,
    "packing": packing_from_obj,
    "target": target_from_obj,
}


def dumps(obj) -> str:
    for cls, dump in _DUMPERS.items():
        if isinstance(obj, cls):
            return json.dumps(dump(obj), indent=2, sort_keys=True) + "\n"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("kind") not in _LOADERS:
        raise FormatError(f"unknown document kind {doc.get('kind') if isinstance(doc, dict) else None!r}")
    return _LOADERS[doc["kind"]](doc)


def save(obj, path) -> None:
    Path(path).write_text(dumps(obj))


def load(path):
    return loads(Path(path).read_text())
