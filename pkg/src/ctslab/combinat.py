"""Combinatorial action sets over {0,1}^d.

Supports enumeration, exact linear maximization with a deterministic
tie-break, and a greedy covering initialization sequence.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import EnumerationTooLarge, InvalidSpec, InvalidWeights, UncoverableItem

DEFAULT_ENUMERATION_CAP = 10**6

TWO_BLOCK = "two-block"
TOP_M = "top-m"
EXPLICIT = "explicit"


@dataclass(frozen=True)
class Action:
    """A subset of items encoded as a 0/1 incidence vector."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) == 0:
            raise InvalidSpec("action must have positive length")
        if any(b not in (0, 1) for b in self.bits):
            raise InvalidSpec("action bits must be 0 or 1")
        if not any(self.bits):
            raise InvalidSpec("action must contain at least one item")

    @classmethod
    def from_items(cls, items, d: int) -> "Action":
        bits = [0] * d
        for i in items:
            bits[i] = 1
        return cls(tuple(bits))

    @property
    def d(self) -> int:
        return len(self.bits)

    @property
    def size(self) -> int:
        return sum(self.bits)

    @property
    def items(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.bits) if b)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.bits, dtype=float)


@dataclass(frozen=True)
class ActionSetSpec:
    """Description of an action set: two-block(d), top-m(d, m), or an explicit list.

    ``m`` is the maximal action size.  Actions of a two-block set are the two
    halves (1,...,1,0,...,0) and (0,...,0,1,...,1); a top-m set contains every
    size-m subset of the d items.
    """

    kind: str
    d: int
    m: int
    actions: tuple[Action, ...] | None = None
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP

    def __post_init__(self):
        if self.d < 1:
            raise InvalidSpec("d must be positive")
        if self.kind == TWO_BLOCK:
            if self.d % 2 != 0 or self.d < 2:
                raise InvalidSpec("two-block requires even d >= 2")
            if self.m != self.d // 2:
                raise InvalidSpec("two-block has m = d/2")
        elif self.kind == TOP_M:
            if not 1 <= self.m <= self.d:
                raise InvalidSpec("top-m requires 1 <= m <= d")
        elif self.kind == EXPLICIT:
            if not self.actions:
                raise InvalidSpec("explicit action list must be nonempty")
            if any(a.d != self.d for a in self.actions):
                raise InvalidSpec("all explicit actions must have length d")
            if len(set(self.actions)) != len(self.actions):
                raise InvalidSpec("explicit action list contains duplicates")
            if self.m != max(a.size for a in self.actions):
                raise InvalidSpec("explicit m must equal the largest action size")
        else:
            raise InvalidSpec(f"unknown action set kind {self.kind!r}")

    def size(self) -> int:
        """Number of actions |A|."""
        if self.kind == TWO_BLOCK:
            return 2
        if self.kind == TOP_M:
            return math.comb(self.d, self.m)
        return len(self.actions)


def two_block(d: int) -> ActionSetSpec:
    return ActionSetSpec(TWO_BLOCK, d, d // 2)


def top_m(d: int, m: int) -> ActionSetSpec:
    return ActionSetSpec(TOP_M, d, m)


def explicit(bit_rows) -> ActionSetSpec:
    actions = tuple(a if isinstance(a, Action) else Action(tuple(a)) for a in bit_rows)
    if not actions:
        raise InvalidSpec("explicit action list must be nonempty")
    d = actions[0].d
    m = max(a.size for a in actions)
    return ActionSetSpec(EXPLICIT, d, m, actions=actions)


def enumerate_actions(spec: ActionSetSpec) -> tuple[Action, ...]:
    """All actions of the set, ordered by their support sets (lexicographic).

    For two-block(d) this is [(1,..,1,0,..,0), (0,..,0,1,..,1)]; for top-m the
    order matches itertools.combinations over item indices.
    """
    if spec.kind == TWO_BLOCK:
        h = spec.d // 2
        return (
            Action.from_items(range(h), spec.d),
            Action.from_items(range(h, spec.d), spec.d),
        )
    if spec.kind == TOP_M:
        count = math.comb(spec.d, spec.m)
        if count > spec.enumeration_cap:
            raise EnumerationTooLarge(
                f"top-m({spec.d},{spec.m}) has {count} actions, cap is {spec.enumeration_cap}"
            )
        return tuple(
            Action.from_items(c, spec.d) for c in itertools.combinations(range(spec.d), spec.m)
        )
    return tuple(sorted(spec.actions, key=lambda a: a.items))


class LinearMaximizer:
    """Reusable argmax oracle over one action set.

    Agents construct this once per episode; the module-level
    :func:`argmax_linear` builds a throwaway instance.
    """

    def __init__(self, spec: ActionSetSpec):
        self.spec = spec
        if spec.kind == TOP_M:
            self.actions = None
            self.matrix = None
        else:
            self.actions = enumerate_actions(spec)
            self.matrix = np.array([a.bits for a in self.actions], dtype=float)

    def argmax(self, weights: np.ndarray) -> Action:
        w = np.asarray(weights, dtype=float)
        if w.shape != (self.spec.d,):
            raise InvalidWeights(f"weights must have length {self.spec.d}")
        if not np.all(np.isfinite(w)):
            raise InvalidWeights("weights must be finite")
        if self.spec.kind == TOP_M:
            return self._argmax_top_m(w)
        values = self.matrix @ w
        best = np.flatnonzero(values == values.max())
        if len(best) == 1:
            return self.actions[best[0]]
        return min((self.actions[j] for j in best), key=lambda a: a.bits)

    def _argmax_top_m(self, w: np.ndarray) -> Action:
        # Take the m largest weights; on equal weights prefer the larger item
        # index, which yields the lexicographically smallest bit vector.
        order = np.lexsort((-np.arange(self.spec.d), -w))
        return Action.from_items(sorted(order[: self.spec.m]), self.spec.d)


def argmax_linear(spec: ActionSetSpec, weights) -> Action:
    """Action maximizing A^T weights; ties go to the lexicographically smallest bit vector."""
    return LinearMaximizer(spec).argmax(np.asarray(weights, dtype=float))


def covering_init_sequence(spec: ActionSetSpec) -> tuple[Action, ...]:
    """A sequence of <= d actions whose element-wise sum covers every item.

    Greedy: repeatedly pick the action covering the most still-uncovered
    items, breaking ties by enumeration order.  For top-m sets the greedy
    choice is constructed directly so no enumeration is needed.
    """
    if spec.kind == TOP_M:
        out = []
        covered = 0
        while covered < spec.d:
            take = list(range(covered, min(covered + spec.m, spec.d)))
            if len(take) < spec.m:
                # pad with the smallest already-covered items
                take = list(range(spec.m - len(take))) + take
            out.append(Action.from_items(take, spec.d))
            covered = min(covered + spec.m, spec.d)
        return tuple(out)

    actions = enumerate_actions(spec)
    uncovered = set(range(spec.d))
    out = []
    while uncovered:
        best = max(actions, key=lambda a: len(uncovered.intersection(a.items)))
        gain = len(uncovered.intersection(best.items))
        if gain == 0:
            raise UncoverableItem(f"items {sorted(uncovered)} belong to no action")
        out.append(best)
        uncovered.difference_update(best.items)
    return tuple(out)
