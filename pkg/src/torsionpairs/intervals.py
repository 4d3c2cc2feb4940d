"""Interval modules over linearly oriented A-type quivers.

With the orientation a -> a+1 -> ... -> b, the interval module [a, b] has
top S_a and socle S_b.  Its submodules shorten it from the top end
([c, b] for a <= c <= b), its quotients from the socle end ([a, c]), and
the AR translate shifts one step toward the sink: tau [a, b] = [a+1, b+1]
whenever [a, b] is not projective.  Everything here also works on disjoint
unions of linear components (support subquivers), interpreted componentwise.

Hom and Ext spaces between intervals are 0- or 1-dimensional.  Hom is
nonzero exactly when the map "quotient then include" exists (c <= a <= d
<= b for [a,b] -> [c,d]); Ext is computed by AR duality,
Ext^1(X, Y) = Hom(Y, tau X), which also covers the overlap extensions
whose middle terms decompose.  Both closed forms are cross-checked
against the Euler form on construction and against explicit matrix
representations in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .quiver import Quiver


class ModelDefectError(RuntimeError):
    """Internal consistency violation between independent computation rules."""


@dataclass(frozen=True, order=True)
class Interval:
    """Indecomposable module supported on the directed path from a to b.

    On the standard labeling that is the segment a, a+1, ..., b; support
    subquivers of a cycle may carry non-monotone labels.
    """

    a: int
    b: int

    def __repr__(self) -> str:
        return f"[{self.a},{self.b}]"


class LinearModel:
    """Finite category model of the interval modules over an A-type quiver.

    Precomputes the full hom/ext tables; all values are immutable, so one
    model may be shared freely.
    """

    def __init__(self, q: Quiver):
        if not q.is_linear_type:
            raise ValueError("interval modules require a linear-type quiver")
        self.quiver = q
        objs = []
        for comp in q.components:
            for i in range(len(comp)):
                for j in range(i, len(comp)):
                    objs.append(Interval(comp[i], comp[j]))
        self.objects: tuple[Interval, ...] = tuple(sorted(objs))
        self._hom: dict[tuple[Interval, Interval], int] = {}
        self._ext: dict[tuple[Interval, Interval], int] = {}
        for X in self.objects:
            for Y in self.objects:
                h = self._hom_rule(X, Y)
                e = self._ext_rule(X, Y)
                if h - e != self._euler(X, Y):
                    raise ModelDefectError(
                        f"hom/ext rules disagree with the Euler form at ({X}, {Y})"
                    )
                self._hom[X, Y] = h
                self._ext[X, Y] = e

    # -- bookkeeping -------------------------------------------------

    def _pos(self, v: int) -> tuple[int, int]:
        return self.quiver.position[v]

    def check_interval(self, X: Interval) -> None:
        pos = self.quiver.position
        if X.a not in pos or X.b not in pos:
            raise ValueError(f"{X} is not supported on the quiver")
        (ca, pa), (cb, pb) = pos[X.a], pos[X.b]
        if ca != cb or pa > pb:
            raise ValueError(f"{X} is not a directed segment of the quiver")

    def length(self, X: Interval) -> int:
        (_, pa), (_, pb) = self._pos(X.a), self._pos(X.b)
        return pb - pa + 1

    def support(self, X: Interval) -> tuple[int, ...]:
        ci, pa = self._pos(X.a)
        _, pb = self._pos(X.b)
        return self.quiver.components[ci][pa : pb + 1]

    def dim_vector(self, X: Interval) -> tuple[int, ...]:
        supp = set(self.support(X))
        return tuple(1 if v in supp else 0 for v in self.quiver.vertices)

    def top(self, X: Interval) -> int:
        return X.a

    def socle(self, X: Interval) -> int:
        return X.b

    # -- hom / ext ---------------------------------------------------

    def _hom_rule(self, X: Interval, Y: Interval) -> int:
        (cx, pa), (_, pb) = self._pos(X.a), self._pos(X.b)
        (cy, pc), (_, pd) = self._pos(Y.a), self._pos(Y.b)
        if cx != cy:
            return 0
        # quotient of X to [a, d], then inclusion into Y: c <= a <= d <= b
        return 1 if pc <= pa <= pd <= pb else 0

    def _ext_rule(self, X: Interval, Y: Interval) -> int:
        # AR duality: Ext^1(X, Y) = Hom(Y, tau X); projectives have no tau
        nb = self.quiver.succ.get(X.b)
        if nb is None:
            return 0
        return self._hom_rule(Y, Interval(self.quiver.succ[X.a], nb))

    def _euler(self, X: Interval, Y: Interval) -> int:
        dx, dy = self.dim_vector(X), self.dim_vector(Y)
        idx = {v: i for i, v in enumerate(self.quiver.vertices)}
        total = sum(a * b for a, b in zip(dx, dy))
        for s, t in self.quiver.arrows:
            total -= dx[idx[s]] * dy[idx[t]]
        return total

    def hom(self, X: Interval, Y: Interval) -> int:
        return self._hom[X, Y]

    def ext(self, X: Interval, Y: Interval) -> int:
        return self._ext[X, Y]

    # -- uniserial structure ------------------------------------------

    def slice(self, X: Interval, lo: int, hi: int) -> Interval:
        """Subquotient between socle heights lo < hi (height 0 is the socle)."""
        ci, pa = self._pos(X.a)
        _, pb = self._pos(X.b)
        if not 0 <= lo < hi <= pb - pa + 1:
            raise ValueError("slice heights out of range")
        comp = self.quiver.components[ci]
        return Interval(comp[pb - hi + 1], comp[pb - lo])

    def submodules(self, X: Interval) -> tuple[Interval, ...]:
        """Nonzero submodules [c, b], shortest first."""
        return tuple(self.slice(X, 0, h) for h in range(1, self.length(X) + 1))

    def quotients(self, X: Interval) -> tuple[Interval, ...]:
        """Nonzero quotients [a, c], shortest first."""
        n = self.length(X)
        return tuple(self.slice(X, n - h, n) for h in range(1, n + 1))

    def glue(self, bottom: Interval, top: Interval) -> Interval | None:
        """Indecomposable stack of `top` on `bottom`, if the ends abut.

        Overlap extensions have decomposable middle terms whose summands
        are reached by gluing quotients instead, so the gluing fixpoint
        still computes extension closures of quotient-closed classes and
        of part unions of valid tuples.
        """
        if self.quiver.succ.get(top.b) == bottom.a:
            return Interval(top.a, bottom.b)
        return None

    # -- projectives, injectives, AR translation ----------------------

    def projectives(self) -> tuple[Interval, ...]:
        return tuple(sorted(Interval(v, comp[-1]) for comp in self.quiver.components for v in comp))

    def injectives(self) -> tuple[Interval, ...]:
        return tuple(sorted(Interval(comp[0], v) for comp in self.quiver.components for v in comp))

    def tau(self, X: Interval) -> Interval | None:
        nb = self.quiver.succ.get(X.b)
        if nb is None:
            return None
        return Interval(self.quiver.succ[X.a], nb)

    def tau_inv(self, X: Interval) -> Interval | None:
        pa = self.quiver.pred.get(X.a)
        if pa is None:
            return None
        return Interval(pa, self.quiver.pred[X.b])


@lru_cache(maxsize=None)
def model_for(q: Quiver) -> LinearModel:
    return LinearModel(q)


def indecomposables(q: Quiver) -> tuple[Interval, ...]:
    """All interval modules, n(n+1)/2 per linear component of size n."""
    return model_for(q).objects


def hom_dim(q: Quiver, X: Interval, Y: Interval) -> int:
    m = model_for(q)
    m.check_interval(X)
    m.check_interval(Y)
    return m.hom(X, Y)


def ext_dim(q: Quiver, X: Interval, Y: Interval) -> int:
    m = model_for(q)
    m.check_interval(X)
    m.check_interval(Y)
    return m.ext(X, Y)


def quotients(q: Quiver, X: Interval) -> tuple[Interval, ...]:
    m = model_for(q)
    m.check_interval(X)
    return m.quotients(X)


def submodules(q: Quiver, X: Interval) -> tuple[Interval, ...]:
    m = model_for(q)
    m.check_interval(X)
    return m.submodules(X)


def projectives(q: Quiver) -> tuple[Interval, ...]:
    return model_for(q).projectives()


def injectives(q: Quiver) -> tuple[Interval, ...]:
    return model_for(q).injectives()


def tau(q: Quiver, X: Interval) -> Interval | None:
    """AR translate, absent on projectives."""
    m = model_for(q)
    m.check_interval(X)
    return m.tau(X)


def tau_inv(q: Quiver, X: Interval) -> Interval | None:
    """Inverse AR translate, absent on injectives."""
    m = model_for(q)
    m.check_interval(X)
    return m.tau_inv(X)


def dim_vector(q: Quiver, X: Interval) -> tuple[int, ...]:
    return model_for(q).dim_vector(X)


def gen_closure(q: Quiver, modules: Iterable[Interval]) -> frozenset[Interval]:
    """Closure under quotients: all top-preserving shortenings of members."""
    m = model_for(q)
    out: set[Interval] = set()
    for X in modules:
        out.update(m.quotients(X))
    return frozenset(out)


def cogen_closure(q: Quiver, modules: Iterable[Interval]) -> frozenset[Interval]:
    """Closure under submodules: all socle-preserving shortenings of members."""
    m = model_for(q)
    out: set[Interval] = set()
    for X in modules:
        out.update(m.submodules(X))
    return frozenset(out)


def extension_closure(q: Quiver, modules: Iterable[Interval]) -> frozenset[Interval]:
    """Least set containing the input and closed under end-to-end gluing."""
    m = model_for(q)
    out = set(modules)
    grew = True
    while grew:
        grew = False
        for top in list(out):
            for bottom in list(out):
                glued = m.glue(bottom, top)
                if glued is not None and glued not in out:
                    out.add(glued)
                    grew = True
    return frozenset(out)


def restrict_support(q: Quiver, modules: Iterable[Interval], keep: Iterable[int]) -> frozenset[Interval]:
    """Members supported entirely inside `keep` (the quotient algebra's modules)."""
    keep = frozenset(keep)
    m = model_for(q)
    return frozenset(X for X in modules if set(m.support(X)) <= keep)
