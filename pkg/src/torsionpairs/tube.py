"""Tube modules: finite-dimensional nilpotent representations of an oriented cycle.

The cycle of rank n carries the arrows i -> i+1 (mod n), extending the
linear orientation 1 -> 2 -> ... -> n.  Every indecomposable is uniserial
and determined by its socle and length: U(s, l) has socle S_s, composition
factors S_{s-l+1}, ..., S_{s-1}, S_s read from the top, hence top vertex
s - l + 1 (mod n).  Submodules share the socle, quotients share the top,
and the AR translate shifts the socle forward along the cycle:

    tau U(s, l) = U(s+1, l),      Ext^1(X, Y) = Hom(Y, tau X).

Vertex arithmetic is 1-based with wraparound to 1..n.  Infinite
subcategories are represented by descriptors carrying a membership
predicate; explicit sets are always truncations by length.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

FINITE = "finite"
CORAY_FINITE = "coray+finite"
RAY_FINITE = "ray+finite"
DESCRIPTOR_KINDS = (FINITE, CORAY_FINITE, RAY_FINITE)


def norm_vertex(v: int, n: int) -> int:
    """Map an integer to the representative in 1..n."""
    return (v - 1) % n + 1


@dataclass(frozen=True)
class TubeModule:
    """Uniserial nilpotent module with the given socle and length."""

    socle: int
    length: int
    rank: int

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if not 1 <= self.socle <= self.rank:
            raise ValueError("socle vertex out of range")
        if self.length < 1:
            raise ValueError("length must be positive")

    @property
    def top(self) -> int:
        return norm_vertex(self.socle - self.length + 1, self.rank)

    def __repr__(self) -> str:
        return f"U({self.socle},{self.length})"

    def sort_key(self) -> tuple[int, int]:
        return (self.length, self.socle)


def _same_rank(X: TubeModule, Y: TubeModule) -> int:
    if X.rank != Y.rank:
        raise ValueError("modules live on cycles of different rank")
    return X.rank


def hom_dim_tube(X: TubeModule, Y: TubeModule) -> int:
    """Dimension of Hom(X, Y).

    A basis is indexed by the lengths l' <= min(len X, len Y) for which the
    length-l' quotient of X equals the length-l' submodule of Y, i.e.
    l' = socle(Y) - socle(X) + len(X)  (mod n).
    """
    n = _same_rank(X, Y)
    m = min(X.length, Y.length)
    r = norm_vertex(Y.socle - X.socle + X.length, n)
    if r > m:
        return 0
    return (m - r) // n + 1


def tau_tube(X: TubeModule) -> TubeModule:
    """AR translate; total, since the tube has no projectives or injectives."""
    return TubeModule(norm_vertex(X.socle + 1, X.rank), X.length, X.rank)


def tau_inv_tube(X: TubeModule) -> TubeModule:
    return TubeModule(norm_vertex(X.socle - 1, X.rank), X.length, X.rank)


def ext_dim_tube(X: TubeModule, Y: TubeModule) -> int:
    """dim Ext^1(X, Y) via AR duality in a category without projectives."""
    _same_rank(X, Y)
    return hom_dim_tube(Y, tau_tube(X))


@dataclass(frozen=True)
class TubeSubcatDescriptor:
    """Decidable membership description of a subcategory of the tube.

    kind "coray+finite" holds every module with top in `delta` plus an
    explicit finite part; "ray+finite" every module with socle in `delta`;
    "finite" only the explicit part.
    """

    kind: str
    rank: int
    delta: frozenset[int] = frozenset()
    finite_part: frozenset[TubeModule] = frozenset()

    def __post_init__(self) -> None:
        if self.kind not in DESCRIPTOR_KINDS:
            raise ValueError(f"unknown descriptor kind {self.kind!r}")
        object.__setattr__(self, "delta", frozenset(self.delta))
        object.__setattr__(self, "finite_part", frozenset(self.finite_part))
        if not all(1 <= v <= self.rank for v in self.delta):
            raise ValueError("delta contains a vertex outside 1..rank")
        if any(m.rank != self.rank for m in self.finite_part):
            raise ValueError("finite part contains modules of another rank")
        if self.kind == FINITE and self.delta:
            raise ValueError("a finite descriptor carries no delta")

    def contains(self, X: TubeModule) -> bool:
        if X.rank != self.rank:
            raise ValueError("module rank does not match the descriptor")
        if self.kind == CORAY_FINITE and X.top in self.delta:
            return True
        if self.kind == RAY_FINITE and X.socle in self.delta:
            return True
        return X in self.finite_part

    __call__ = contains


def ray(delta: Iterable[int], rank: int) -> TubeSubcatDescriptor:
    """All modules with socle in delta."""
    return TubeSubcatDescriptor(kind=RAY_FINITE, rank=rank, delta=frozenset(delta))


def coray(delta: Iterable[int], rank: int) -> TubeSubcatDescriptor:
    """All modules with top in delta."""
    return TubeSubcatDescriptor(kind=CORAY_FINITE, rank=rank, delta=frozenset(delta))


def l_r_sets(desc: TubeSubcatDescriptor) -> tuple[frozenset[int], frozenset[int]]:
    """(tops, socles) of the infinite families the descriptor carries.

    A coray part supplies infinitely many modules with each top in delta;
    a ray part infinitely many with each socle in delta; finite parts
    supply nothing.
    """
    if desc.kind == CORAY_FINITE:
        return desc.delta, frozenset()
    if desc.kind == RAY_FINITE:
        return frozenset(), desc.delta
    return frozenset(), frozenset()


def all_tube_modules(rank: int, cap: int) -> tuple[TubeModule, ...]:
    """Every indecomposable of length at most cap, ordered by (length, socle)."""
    return tuple(
        TubeModule(s, l, rank) for l in range(1, cap + 1) for s in range(1, rank + 1)
    )


def truncate(
    desc: TubeSubcatDescriptor | Callable[[TubeModule], bool],
    cap: int,
    rank: int | None = None,
) -> tuple[TubeModule, ...]:
    """Members of the descriptor (or raw predicate) with length <= cap."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    if isinstance(desc, TubeSubcatDescriptor):
        rank = desc.rank
        member = desc.contains
    else:
        if rank is None:
            raise ValueError("a raw predicate needs an explicit rank")
        member = desc
    return tuple(X for X in all_tube_modules(rank, cap) if member(X))


class TubeModel:
    """Finite truncation of the tube: all modules of length <= cap.

    Exposes the same interface as the interval model so the torsion pair
    calculus can run on it; gluings that would leave the truncation are
    reported as absent.
    """

    def __init__(self, rank: int, cap: int):
        if rank < 1 or cap < 1:
            raise ValueError("rank and cap must be positive")
        self.rank = rank
        self.cap = cap
        self.objects: tuple[TubeModule, ...] = all_tube_modules(rank, cap)

    def length(self, X: TubeModule) -> int:
        return X.length

    def hom(self, X: TubeModule, Y: TubeModule) -> int:
        return hom_dim_tube(X, Y)

    def ext(self, X: TubeModule, Y: TubeModule) -> int:
        return ext_dim_tube(X, Y)

    def tau(self, X: TubeModule) -> TubeModule:
        return tau_tube(X)

    def tau_inv(self, X: TubeModule) -> TubeModule:
        return tau_inv_tube(X)

    def slice(self, X: TubeModule, lo: int, hi: int) -> TubeModule:
        """Subquotient between socle heights lo < hi (height 0 is the socle)."""
        if not 0 <= lo < hi <= X.length:
            raise ValueError("slice heights out of range")
        return TubeModule(norm_vertex(X.socle - lo, X.rank), hi - lo, X.rank)

    def submodules(self, X: TubeModule) -> tuple[TubeModule, ...]:
        return tuple(self.slice(X, 0, h) for h in range(1, X.length + 1))

    def quotients(self, X: TubeModule) -> tuple[TubeModule, ...]:
        return tuple(self.slice(X, X.length - h, X.length) for h in range(1, X.length + 1))

    def glue(self, bottom: TubeModule, top: TubeModule) -> TubeModule | None:
        """Middle term of a nonsplit extension of `top` by `bottom`, capped."""
        if bottom.length + top.length > self.cap:
            return None
        if top.socle == norm_vertex(bottom.socle - bottom.length, self.rank):
            return TubeModule(bottom.socle, bottom.length + top.length, self.rank)
        return None
