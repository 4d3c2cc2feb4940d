"""Decomposition of torsion pairs by projectives and injectives, and the
resulting classification over linearly oriented A-type quivers.

Peeling a torsion pair alternates two moves: collect the vertices of the
indecomposable projectives of the current support quiver lying in the
torsion class, then the vertices of the current injectives lying in the
free class, restricting the support after each move.  On A-type quivers
the residual pair is always empty, the recorded vertex sets form a
complete strong part partition, and the peeling is a bijection onto those
partitions; this yields the Catalan count of torsion pairs, canonical
generator sets, and the tilting/cotilting criteria.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .intervals import (
    Interval,
    cogen_closure,
    extension_closure,
    gen_closure,
    model_for,
)
from .quiver import (
    STRONG_ONE,
    STRONG_TWO,
    PartPartition,
    Quiver,
    linear_an,
    subquiver,
    validate_partition,
)
from .torsion import (
    NTorsionPair,
    TorsionPair,
    ext_injectives_in,
    ext_projectives_in,
    is_torsion_pair,
    filtration,
)

PROJECTIVE = "projective"
INJECTIVE = "injective"


@dataclass(frozen=True)
class TraceStage:
    index: int
    side: str
    vertices: frozenset[int]


@dataclass(frozen=True)
class DecompositionResult:
    partition: PartPartition
    residual: TorsionPair
    residual_quiver: Quiver
    trace: tuple[TraceStage, ...]


def _require_torsion_pair(q: Quiver, tp: TorsionPair) -> None:
    check = is_torsion_pair(model_for(q), tp.torsion, tp.free)
    if not check:
        raise ValueError(f"not a torsion pair: {check.reason}")


def decompose(q: Quiver, tp: TorsionPair, side: str = "left") -> DecompositionResult:
    """Peel a torsion pair into a part partition plus a residual pair.

    side="left" starts on the projective side and produces a 1-type
    partition; side="right" starts on the injective side and produces the
    2-type mirror.  Stage zero may be empty; the first later empty stage
    stops the peeling.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    _require_torsion_pair(q, tp)
    support = set(q.vertices)
    torsion, free = set(tp.torsion), set(tp.free)
    parts: list[frozenset[int]] = []
    trace: list[TraceStage] = []
    stage = 0
    while True:
        sub = subquiver(q, support)
        model = model_for(sub)
        projective_turn = (stage % 2 == 0) == (side == "left")
        if projective_turn:
            found = frozenset(P.a for P in model.projectives() if P in torsion)
            taken = TraceStage(stage, PROJECTIVE, found)
        else:
            found = frozenset(I.b for I in model.injectives() if I in free)
            taken = TraceStage(stage, INJECTIVE, found)
        if stage > 0 and not found:
            break
        parts.append(found)
        trace.append(taken)
        support -= found
        torsion = {X for X in torsion if set(model_for(q).support(X)) <= support}
        free = {X for X in free if set(model_for(q).support(X)) <= support}
        stage += 1
        if not support:
            break
    residual_quiver = subquiver(q, support)
    residual = TorsionPair(frozenset(torsion), frozenset(free))
    kind = STRONG_ONE if side == "left" else STRONG_TWO
    partition = PartPartition(tuple(parts), kind, complete=not support)
    if not validate_partition(q, partition):
        raise RuntimeError(f"peeling produced an invalid partition {partition}")
    return DecompositionResult(partition, residual, residual_quiver, tuple(trace))


def decompose_left(q: Quiver, tp: TorsionPair) -> DecompositionResult:
    return decompose(q, tp, "left")


def decompose_right(q: Quiver, tp: TorsionPair) -> DecompositionResult:
    return decompose(q, tp, "right")


def _residual_in_e(q: Quiver, residual: TorsionPair) -> bool:
    """Residual lies in E: no projective in the torsion class, no injective
    in the free class, over the residual quiver."""
    model = model_for(q)
    check = is_torsion_pair(model, residual.torsion, residual.free)
    if not check:
        return False
    if any(P in residual.torsion for P in model.projectives()):
        return False
    if any(I in residual.free for I in model.injectives()):
        return False
    return True


def _stage_supports(q: Quiver, partition: PartPartition) -> list[frozenset[int]]:
    supports = []
    current = frozenset(q.vertices)
    for part in partition.parts:
        supports.append(current)
        current -= part
    supports.append(current)
    return supports


def assemble(q: Quiver, partition: PartPartition, residual: TorsionPair | None = None) -> TorsionPair:
    """Rebuild the torsion pair from a partition and a residual pair.

    1-type partitions assign even stages to generated-by-projectives
    pieces and odd stages to cogenerated-by-injectives pieces; 2-type
    partitions mirror this.  Inverse to `decompose` on valid inputs.
    """
    if not validate_partition(q, partition):
        raise ValueError(f"invalid partition {partition}")
    supports = _stage_supports(q, partition)
    residual_quiver = subquiver(q, supports[-1])
    if residual is None:
        residual = TorsionPair(frozenset(), frozenset())
    if not _residual_in_e(residual_quiver, residual):
        raise ValueError("residual pair must avoid residual projectives and injectives")
    left = partition.kind in (STRONG_ONE, "1")
    torsion = set(residual.torsion)
    free = set(residual.free)
    for j, part in enumerate(partition.parts):
        stage_model = model_for(subquiver(q, supports[j]))
        projective_turn = (j % 2 == 0) == left
        if projective_turn:
            gens = [P for P in stage_model.projectives() if P.a in part]
            torsion |= gen_closure(q, gens)
        else:
            cogens = [I for I in stage_model.injectives() if I.b in part]
            free |= cogen_closure(q, cogens)
    pair = TorsionPair(extension_closure(q, torsion), extension_closure(q, free))
    check = is_torsion_pair(model_for(q), pair.torsion, pair.free)
    if not check:
        raise RuntimeError(f"assembly produced a non torsion pair: {check.reason}")
    return pair


def residuals_agree(q: Quiver, tp: TorsionPair) -> bool:
    """Left and right peelings end in the same residual pair."""
    left = decompose(q, tp, "left")
    right = decompose(q, tp, "right")
    return (
        left.residual == right.residual
        and left.residual_quiver == right.residual_quiver
    )


def partition_to_tp(q: Quiver, partition: PartPartition) -> TorsionPair:
    """Torsion pair of a complete strong partition (empty residual)."""
    return assemble(q, partition)


def tp_to_partition(q: Quiver, tp: TorsionPair) -> PartPartition:
    """Complete strong 1-type partition of a torsion pair."""
    return decompose(q, tp, "left").partition


def enumerate_torsion_pairs(q: Quiver) -> list[TorsionPair]:
    """All torsion pairs, through the partition bijection, in partition order."""
    from .quiver import enumerate_partitions

    return [
        partition_to_tp(q, S)
        for S in enumerate_partitions(q, STRONG_ONE, complete=True)
    ]


def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


def count_torsion_pairs(n: int, check: bool = False) -> int:
    """Number of torsion pairs on the linear quiver with n vertices.

    With check=True the closed form is compared against the partition
    enumeration and the exhaustive oracle search.
    """
    if n < 1:
        raise ValueError("n must be positive")
    value = catalan(n + 1)
    if check:
        from .oracle import enumerate_torsion_pairs_bruteforce
        from .quiver import enumerate_partitions

        q = linear_an(n)
        by_partition = len(enumerate_partitions(q, STRONG_ONE, complete=True))
        by_oracle = len(enumerate_torsion_pairs_bruteforce(n))
        if not value == by_partition == by_oracle:
            raise RuntimeError(
                f"count mismatch at n={n}: formula {value}, "
                f"partitions {by_partition}, oracle {by_oracle}"
            )
    return value


def generators(q: Quiver, tp: TorsionPair) -> tuple[frozenset[Interval], frozenset[Interval]]:
    """Minimal (T_gen, F_cog) with Gen(T_gen) = T and Cogen(F_cog) = F.

    These are the stage projectives and stage injectives of the peeling;
    their total count is the number of vertices.
    """
    result = decompose(q, tp, "left")
    supports = _stage_supports(q, result.partition)
    t_gen: set[Interval] = set()
    f_cog: set[Interval] = set()
    for j, part in enumerate(result.partition.parts):
        stage_model = model_for(subquiver(q, supports[j]))
        if j % 2 == 0:
            t_gen.update(P for P in stage_model.projectives() if P.a in part)
        else:
            f_cog.update(I for I in stage_model.injectives() if I.b in part)
    return frozenset(t_gen), frozenset(f_cog)


def is_tilting_induced(q: Quiver, tp: TorsionPair) -> bool:
    """True when the torsion class contains every injective.

    Equivalently the 1-type partition's stage zero contains every source
    vertex; both characterizations are computed and must agree.
    """
    _require_torsion_pair(q, tp)
    direct = all(I in tp.torsion for I in model_for(q).injectives())
    delta0 = decompose(q, tp, "left").partition.parts[0] if q.vertices else frozenset()
    via_partition = q.sources <= delta0
    if direct != via_partition:
        raise RuntimeError("tilting criteria disagree; model defect")
    return direct


def is_cotilting_induced(q: Quiver, tp: TorsionPair) -> bool:
    """True when the free class contains every projective.

    Equivalently the 2-type partition's stage zero contains every sink
    vertex; both characterizations are computed and must agree.
    """
    _require_torsion_pair(q, tp)
    direct = all(P in tp.free for P in model_for(q).projectives())
    delta0 = decompose(q, tp, "right").partition.parts[0] if q.vertices else frozenset()
    via_partition = q.sinks <= delta0
    if direct != via_partition:
        raise RuntimeError("cotilting criteria disagree; model defect")
    return direct


def trace_ntp(q: Quiver, result: DecompositionResult) -> NTorsionPair:
    """The (m+2)-torsion pair recorded by a peeling trace.

    Even-stage pieces in peeling order, then the residual classes, then
    the odd-stage pieces in reverse order.
    """
    supports = _stage_supports(q, result.partition)
    left_parts: list[frozenset[Interval]] = []
    right_parts: list[frozenset[Interval]] = []
    for stage, part in enumerate(result.partition.parts):
        stage_model = model_for(subquiver(q, supports[stage]))
        if result.trace[stage].side == PROJECTIVE:
            gens = [P for P in stage_model.projectives() if P.a in part]
            left_parts.append(gen_closure(q, gens))
        else:
            cogens = [I for I in stage_model.injectives() if I.b in part]
            right_parts.append(cogen_closure(q, cogens))
    middle = [result.residual.torsion, result.residual.free]
    parts = left_parts + middle + right_parts[::-1]
    return NTorsionPair(tuple(parts))


def projective_correspondence(q: Quiver, ntp: NTorsionPair) -> dict[Interval, tuple[int, Interval]]:
    """Send each indecomposable projective to its last nonzero filtration factor.

    The image at index i consists of members of part i that are
    Ext-projective in the extension closure of parts i..end; the map is a
    bijection onto the union of those sets.
    """
    model = model_for(q)
    out = {}
    for P in model.projectives():
        filt = filtration(model, ntp, P)
        nonzero = filt.nonzero_factors()
        index, factor = nonzero[-1]
        out[P] = (index, factor)
    return out


def injective_correspondence(q: Quiver, ntp: NTorsionPair) -> dict[Interval, tuple[int, Interval]]:
    """Send each indecomposable injective to its first nonzero filtration factor."""
    model = model_for(q)
    out = {}
    for I in model.injectives():
        filt = filtration(model, ntp, I)
        nonzero = filt.nonzero_factors()
        index, factor = nonzero[0]
        out[I] = (index, factor)
    return out


def suffix_ext_projectives(q: Quiver, ntp: NTorsionPair, index: int) -> frozenset[Interval]:
    """Members of part `index` (1-based) Ext-projective in the closure of parts index..end."""
    suffix = extension_closure(q, frozenset().union(*ntp.parts[index - 1 :]))
    return ext_projectives_in(model_for(q), ntp.parts[index - 1], suffix)


def prefix_ext_injectives(q: Quiver, ntp: NTorsionPair, index: int) -> frozenset[Interval]:
    """Members of part `index` (1-based) Ext-injective in the closure of parts 1..index."""
    prefix = extension_closure(q, frozenset().union(*ntp.parts[:index]))
    return ext_injectives_in(model_for(q), ntp.parts[index - 1], prefix)
