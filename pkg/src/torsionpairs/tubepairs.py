"""Classification of torsion pairs on the tube of rank n.

Every torsion pair on the tube falls into one of two families indexed by
a nonempty vertex set Delta of the cycle together with a torsion pair on
the residual union of linear segments:

  kind 1:  (Coray(Delta) + T', F')  with (T', F') cotilting-induced,
  kind 2:  (T', F' + Ray(Delta))    with (T', F') tilting-induced.

Kind 1 pairs have an infinite torsion class and kind 2 pairs a finite
one, so the two families never overlap.  Both are also indexed by the
complete strong part partitions of the cycle whose leading part is
nonempty: dropping the leading part Delta and prepending an empty stage
turns the remainder into a partition of the residual segments.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .decompose import (
    assemble,
    decompose,
    enumerate_torsion_pairs,
    is_cotilting_induced,
    is_tilting_induced,
)
from .intervals import Interval, model_for
from .quiver import (
    STRONG_ONE,
    STRONG_TWO,
    PartPartition,
    Quiver,
    cyclic_an,
    subquiver,
)
from .torsion import TorsionPair
from .tube import (
    CORAY_FINITE,
    FINITE,
    RAY_FINITE,
    TubeModule,
    TubeSubcatDescriptor,
    l_r_sets,
    truncate,
)

TORSION = "torsion"
FREE = "free"
NEITHER = "neither"


class ClassificationDefectError(RuntimeError):
    """A classified pair violates a structural law (collision, empty L and R)."""


def _interval_to_tube(q: Quiver, rank: int, X: Interval) -> TubeModule:
    """Reread an interval on a residual segment as a tube module."""
    return TubeModule(X.b, model_for(q).length(X), rank)


def _tube_to_interval(q: Quiver, U: TubeModule) -> Interval | None:
    """Inverse rereading, when the module is supported on the residual."""
    ci_pos = q.position.get(U.socle)
    if ci_pos is None:
        return None
    ci, pos = ci_pos
    comp = q.components[ci]
    if U.length > pos + 1:
        return None
    return Interval(comp[pos - U.length + 1], U.socle)


@dataclass(frozen=True)
class TubeTorsionPair:
    """One classified torsion pair on the tube of the given rank."""

    rank: int
    kind: int
    delta: frozenset[int]
    residual_quiver: Quiver
    residual_pair: TorsionPair

    def __post_init__(self) -> None:
        if self.kind not in (1, 2):
            raise ValueError("kind must be 1 or 2")
        if not self.delta:
            raise ValueError("delta must be nonempty")

    def _finite_side(self, intervals: frozenset[Interval]) -> frozenset[TubeModule]:
        return frozenset(
            _interval_to_tube(self.residual_quiver, self.rank, X) for X in intervals
        )

    @property
    def torsion_descriptor(self) -> TubeSubcatDescriptor:
        finite = self._finite_side(self.residual_pair.torsion)
        if self.kind == 1:
            return TubeSubcatDescriptor(CORAY_FINITE, self.rank, self.delta, finite)
        return TubeSubcatDescriptor(FINITE, self.rank, frozenset(), finite)

    @property
    def free_descriptor(self) -> TubeSubcatDescriptor:
        finite = self._finite_side(self.residual_pair.free)
        if self.kind == 2:
            return TubeSubcatDescriptor(RAY_FINITE, self.rank, self.delta, finite)
        return TubeSubcatDescriptor(FINITE, self.rank, frozenset(), finite)

    def membership(self, X: TubeModule) -> str:
        """Side of X, or "neither" for the modules with a proper canonical
        sequence (a torsion pair does not partition the indecomposables)."""
        if X.rank != self.rank:
            raise ValueError("module rank does not match the classification")
        if self.torsion_descriptor.contains(X):
            return TORSION
        if self.free_descriptor.contains(X):
            return FREE
        return NEITHER

    def fingerprint(self, cap: int) -> tuple[frozenset, frozenset]:
        return (
            frozenset(truncate(self.torsion_descriptor, cap)),
            frozenset(truncate(self.free_descriptor, cap)),
        )

    def sort_key(self) -> tuple:
        return (
            self.kind,
            tuple(sorted(self.delta)),
            tuple(sorted((X.a, X.b) for X in self.residual_pair.torsion)),
        )


def tube_membership(data: TubeTorsionPair, X: TubeModule) -> str:
    return data.membership(X)


def check_l_r(data: TubeTorsionPair) -> tuple[frozenset[int], frozenset[int]]:
    """Tops of the infinite torsion family and socles of the infinite free
    family; a classified pair must have at least one of them nonempty."""
    l_t = l_r_sets(data.torsion_descriptor)[0]
    r_f = l_r_sets(data.free_descriptor)[1]
    if not l_t and not r_f:
        raise ClassificationDefectError("both infinite-direction sets are empty")
    return l_t, r_f


def _nonempty_subsets(vertices: Sequence[int]):
    for k in range(1, len(vertices) + 1):
        for combo in combinations(vertices, k):
            yield frozenset(combo)


def enumerate_tube_tps(rank: int) -> list[TubeTorsionPair]:
    """All torsion pairs on the tube of the given rank.

    Kind collisions are impossible (finite versus infinite torsion class)
    but membership fingerprints are still compared and any collision is
    reported as a defect.
    """
    if rank < 1:
        raise ValueError("rank must be positive")
    cycle = cyclic_an(rank)
    data: list[TubeTorsionPair] = []
    for kind in (1, 2):
        for delta in _nonempty_subsets(cycle.vertices):
            residual = subquiver(cycle, frozenset(cycle.vertices) - delta)
            for tp in enumerate_torsion_pairs(residual):
                wanted = (
                    is_cotilting_induced(residual, tp)
                    if kind == 1
                    else is_tilting_induced(residual, tp)
                )
                if wanted:
                    data.append(TubeTorsionPair(rank, kind, delta, residual, tp))
    cap = 2 * rank + 2
    seen: dict[tuple, TubeTorsionPair] = {}
    unique: list[TubeTorsionPair] = []
    for datum in data:
        fp = datum.fingerprint(cap)
        if fp in seen:
            raise ClassificationDefectError(
                f"kind {seen[fp].kind} and kind {datum.kind} describe the same pair"
            )
        seen[fp] = datum
        unique.append(datum)
    unique.sort(key=TubeTorsionPair.sort_key)
    return unique


def partition_to_tube_tp(S: PartPartition, kind: int) -> TubeTorsionPair:
    """Torsion pair of a complete strong partition of the cycle with
    nonempty leading part.

    Kind 1 takes a strong 1-type partition; the tail, read with an empty
    leading stage, is a partition of the residual segments whose pair is
    cotilting-induced.  Kind 2 is the mirror.
    """
    if kind not in (1, 2):
        raise ValueError("kind must be 1 or 2")
    want = STRONG_ONE if kind == 1 else STRONG_TWO
    if S.kind != want:
        raise ValueError(f"kind {kind} needs a {want} partition")
    if not S.parts or not S.parts[0]:
        raise ValueError("the leading part must be nonempty")
    if not S.complete:
        raise ValueError("the partition must be complete")
    rank = len(S.support)
    cycle = cyclic_an(rank)
    from .quiver import validate_partition

    if not validate_partition(cycle, S):
        raise ValueError(f"invalid partition {S}")
    delta = S.parts[0]
    residual = subquiver(cycle, frozenset(cycle.vertices) - delta)
    tail = PartPartition((frozenset(),) + S.parts[1:], want, complete=True)
    tp = assemble(residual, tail)
    return TubeTorsionPair(rank, kind, delta, residual, tp)


def tube_tp_to_partition(data: TubeTorsionPair) -> PartPartition:
    """Complete strong partition of the cycle indexing a classified pair."""
    side = "left" if data.kind == 1 else "right"
    tail = decompose(data.residual_quiver, data.residual_pair, side).partition
    if tail.parts and tail.parts[0]:
        raise ClassificationDefectError("residual pair is not of the induced kind")
    parts = (data.delta,) + tail.parts[1:]
    kind = STRONG_ONE if data.kind == 1 else STRONG_TWO
    return PartPartition(parts, kind, complete=True)


@dataclass(frozen=True)
class CombinedTorsionPair:
    """Componentwise torsion pair on a Hom-orthogonal direct sum of categories."""

    components: tuple

    def membership(self, index: int, X) -> str:
        part = self.components[index]
        if isinstance(part, TubeTorsionPair):
            return part.membership(X)
        if X in part.torsion:
            return TORSION
        if X in part.free:
            return FREE
        return NEITHER


def combine_components(per_component: Sequence) -> CombinedTorsionPair:
    """Direct-sum torsion pair from one torsion pair per component."""
    return CombinedTorsionPair(tuple(per_component))


def count_combinations(per_component_choices: Iterable[Sequence]) -> int:
    """Number of torsion pairs on the direct sum: the product of the counts."""
    total = 1
    for choices in per_component_choices:
        total *= len(choices)
    return total


def truncated_check(data: TubeTorsionPair, cap: int):
    """Run the independent truncated torsion pair check on a classified pair."""
    from .oracle import check_tube_tp_truncated

    return check_tube_tp_truncated(
        data.rank, data.torsion_descriptor, data.free_descriptor, cap
    )
