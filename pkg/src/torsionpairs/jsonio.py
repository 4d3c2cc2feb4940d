"""JSON forms for quivers, partitions, torsion pairs and certificates.

Certificates carry the schema tag "torsion/1".  All collections are
emitted in sorted order so identical inputs serialize byte-identically.
"""

from __future__ import annotations

import json
from typing import Any

from .decompose import DecompositionResult
from .intervals import Interval
from .quiver import (
    CYCLIC,
    LINEAR,
    LINEAR_UNION,
    PARTITION_KINDS,
    STRONG_ONE,
    STRONG_TWO,
    PartPartition,
    Quiver,
    cyclic_an,
    linear_an,
)
from .torsion import NTorsionPair, TorsionPair
from .tube import TubeModule, TubeSubcatDescriptor
from .tubepairs import TubeTorsionPair, partition_to_tube_tp, tube_tp_to_partition

SCHEMA = "torsion/1"


class CertificateError(ValueError):
    """Malformed or unreadable certificate data."""


def dumps_canonical(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# -- quivers ----------------------------------------------------------------


def quiver_to_obj(q: Quiver) -> dict:
    if q.shape == LINEAR:
        return {"shape": LINEAR, "n": len(q.vertices)}
    if q.shape == CYCLIC:
        return {"shape": CYCLIC, "n": len(q.vertices)}
    return {"shape": LINEAR_UNION, "components": [list(c) for c in q.components]}


def quiver_from_obj(obj: Any) -> Quiver:
    try:
        shape = obj["shape"]
        if shape == LINEAR:
            return linear_an(int(obj["n"]))
        if shape == CYCLIC:
            return cyclic_an(int(obj["n"]))
        if shape == LINEAR_UNION:
            comps = [tuple(int(v) for v in c) for c in obj["components"]]
            vertices = tuple(sorted(v for c in comps for v in c))
            arrows = tuple((c[i], c[i + 1]) for c in comps for i in range(len(c) - 1))
            return Quiver(vertices, arrows, LINEAR_UNION)
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateError(f"bad quiver object: {exc}") from exc
    raise CertificateError(f"unknown quiver shape {obj!r}")


# -- partitions and intervals -------------------------------------------------


def partition_to_obj(p: PartPartition) -> dict:
    return {
        "parts": [sorted(part) for part in p.parts],
        "kind": p.kind,
        "complete": p.complete,
    }


def partition_from_obj(obj: Any) -> PartPartition:
    try:
        kind = obj["kind"]
        if kind not in PARTITION_KINDS:
            raise CertificateError(f"unknown partition kind {kind!r}")
        return PartPartition(
            tuple(frozenset(int(v) for v in part) for part in obj["parts"]),
            kind,
            bool(obj["complete"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, CertificateError):
            raise
        raise CertificateError(f"bad partition object: {exc}") from exc


def intervals_to_obj(modules) -> list[list[int]]:
    return [[X.a, X.b] for X in sorted(modules)]


def intervals_from_obj(obj: Any) -> frozenset[Interval]:
    try:
        return frozenset(Interval(int(a), int(b)) for a, b in obj)
    except (TypeError, ValueError) as exc:
        raise CertificateError(f"bad interval list: {exc}") from exc


# -- certificates -------------------------------------------------------------


def pair_certificate(q: Quiver, tp: TorsionPair) -> dict:
    return {
        "schema": SCHEMA,
        "category": quiver_to_obj(q),
        "torsion": intervals_to_obj(tp.torsion),
        "free": intervals_to_obj(tp.free),
    }


def ntp_certificate(q: Quiver, ntp: NTorsionPair) -> dict:
    return {
        "schema": SCHEMA,
        "category": quiver_to_obj(q),
        "parts": [intervals_to_obj(part) for part in ntp.parts],
    }


def tube_certificate(data: TubeTorsionPair) -> dict:
    partition = tube_tp_to_partition(data)
    return {
        "schema": SCHEMA,
        "rank": data.rank,
        "kind": data.kind,
        "delta": sorted(data.delta),
        "residual_partition": [sorted(p) for p in partition.parts[1:]],
    }


def tube_pair_from_obj(obj: Any) -> TubeTorsionPair:
    try:
        rank = int(obj["rank"])
        kind = int(obj["kind"])
        delta = frozenset(int(v) for v in obj["delta"])
        tail = tuple(frozenset(int(v) for v in p) for p in obj["residual_partition"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateError(f"bad tube certificate: {exc}") from exc
    kind_name = STRONG_ONE if kind == 1 else STRONG_TWO
    partition = PartPartition((delta,) + tail, kind_name, complete=True)
    try:
        return partition_to_tube_tp(partition, kind)
    except ValueError as exc:
        raise CertificateError(f"bad tube certificate: {exc}") from exc


def certificate_kind(obj: Any) -> str:
    """One of "pair", "ntp", "tube" based on the fields present."""
    if not isinstance(obj, dict):
        raise CertificateError("certificate must be a JSON object")
    if obj.get("schema") != SCHEMA:
        raise CertificateError(f"certificate schema must be {SCHEMA!r}")
    if "rank" in obj:
        return "tube"
    if "parts" in obj:
        return "ntp"
    if "torsion" in obj and "free" in obj:
        return "pair"
    raise CertificateError("certificate carries none of the known payloads")


def pair_from_obj(obj: Any) -> tuple[Quiver, TorsionPair]:
    q = quiver_from_obj(obj.get("category"))
    tp = TorsionPair(intervals_from_obj(obj["torsion"]), intervals_from_obj(obj["free"]))
    return q, tp


def ntp_from_obj(obj: Any) -> tuple[Quiver, NTorsionPair]:
    q = quiver_from_obj(obj.get("category"))
    try:
        parts = tuple(intervals_from_obj(part) for part in obj["parts"])
    except (KeyError, TypeError) as exc:
        raise CertificateError(f"bad parts list: {exc}") from exc
    return q, NTorsionPair(parts)


# -- tube modules and descriptors ---------------------------------------------


def tube_module_to_obj(X: TubeModule) -> dict:
    return {"socle": X.socle, "length": X.length}


def descriptor_to_obj(desc: TubeSubcatDescriptor) -> dict:
    return {
        "kind": desc.kind,
        "delta": sorted(desc.delta),
        "finite": [
            tube_module_to_obj(X)
            for X in sorted(desc.finite_part, key=TubeModule.sort_key)
        ],
    }


# -- decomposition results -----------------------------------------------------


def decomposition_to_obj(result: DecompositionResult) -> dict:
    return {
        "partition": partition_to_obj(result.partition),
        "residual": {
            "torsion": intervals_to_obj(result.residual.torsion),
            "free": intervals_to_obj(result.residual.free),
        },
        "residual_category": quiver_to_obj(result.residual_quiver),
        "trace": [
            {"stage": t.index, "side": t.side, "vertices": sorted(t.vertices)}
            for t in result.trace
        ],
    }
