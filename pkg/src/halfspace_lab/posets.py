"""Finite posets and an isomorphism test.

Isomorphism uses colour refinement on the order relation followed by
individualisation and backtracking, in the style of graph-isomorphism
tools.  Colours start from the sizes of the strict down- and up-sets and
are refined with the multisets of neighbouring colours on both sides.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Optional

from .errors import DeskScaleExceeded

MAX_POSET_SIZE = 512


@dataclass(frozen=True)
class Poset:
    """Elements plus the strict order stored as up-sets and down-sets of indices."""

    elements: tuple
    above: tuple  # above[i] = frozenset of j with elements[i] < elements[j]
    below: tuple = field(default=())

    def __post_init__(self):
        if not self.below:
            below = [set() for _ in self.elements]
            for i, ups in enumerate(self.above):
                for j in ups:
                    below[j].add(i)
            object.__setattr__(self, "below", tuple(frozenset(s) for s in below))

    @classmethod
    def from_order(cls, elements: Iterable[Hashable], less: Callable) -> "Poset":
        """Build from a strict-order predicate ``less(x, y)``."""
        elements = tuple(elements)
        above = []
        for i, x in enumerate(elements):
            above.append(frozenset(j for j, y in enumerate(elements) if i != j and less(x, y)))
        return cls(elements, tuple(above))

    def __len__(self):
        return len(self.elements)

    def index(self, x) -> int:
        return self.elements.index(x)

    def leq(self, x, y) -> bool:
        i, j = self.index(x), self.index(y)
        return i == j or j in self.above[i]

    def relation(self) -> set:
        """The full (reflexive) order as a set of label pairs."""
        out = {(x, x) for x in self.elements}
        for i, ups in enumerate(self.above):
            for j in ups:
                out.add((self.elements[i], self.elements[j]))
        return out

    def covers(self) -> set:
        out = set()
        for i, ups in enumerate(self.above):
            for j in ups:
                if not any(j in self.above[k] for k in ups):
                    out.add((i, j))
        return out

    def is_partial_order(self) -> bool:
        for i, ups in enumerate(self.above):
            if i in ups:
                return False
            for j in ups:
                if i in self.above[j] or not self.above[j] <= ups:
                    return False
        return True


def _refine(colors: list, above: list, below: list) -> list:
    """Stable colouring of the union graph; colour ids are canonical across both sides."""
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in above[v])), tuple(sorted(colors[w] for w in below[v])))
            for v in range(len(colors))
        ]
        table = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [table[s] for s in sigs]
        if len(table) == len(set(colors)):
            return new
        colors = new


def find_isomorphism(P: Poset, Q: Poset) -> Optional[dict]:
    """An order isomorphism ``P -> Q`` as an index map, or ``None``."""
    n = len(P)
    if n != len(Q):
        return None
    if n > MAX_POSET_SIZE:
        raise DeskScaleExceeded(f"posets with {n} elements exceed the limit of {MAX_POSET_SIZE}")
    if n == 0:
        return {}
    # union graph: P is 0..n-1, Q is n..2n-1
    above = [list(s) for s in P.above] + [[j + n for j in s] for s in Q.above]
    below = [list(s) for s in P.below] + [[j + n for j in s] for s in Q.below]
    start = [(len(below[v]), len(above[v])) for v in range(2 * n)]
    table = {s: k for k, s in enumerate(sorted(set(start)))}
    colors = _refine([table[s] for s in start], above, below)

    def balanced(cols):
        left, right = {}, {}
        for v in range(n):
            left[cols[v]] = left.get(cols[v], 0) + 1
            right[cols[v + n]] = right.get(cols[v + n], 0) + 1
        return left == right

    def check(cols) -> Optional[dict]:
        where = {cols[v + n]: v for v in range(n)}
        f = {v: where[cols[v]] for v in range(n)}
        for i in range(n):
            img = {f[j] for j in P.above[i]}
            if img != Q.above[f[i]]:
                return None
        return f

    def search(cols) -> Optional[dict]:
        if not balanced(cols):
            return None
        classes = {}
        for v in range(n):
            classes.setdefault(cols[v], []).append(v)
        target = None
        for c, members in sorted(classes.items()):
            if len(members) > 1 and (target is None or len(members) < len(classes[target])):
                target = c
        if target is None:
            return check(cols)
        x = classes[target][0]
        fresh = max(cols) + 1
        for y in range(n, 2 * n):
            if cols[y] != target:
                continue
            trial = list(cols)
            trial[x] = fresh
            trial[y] = fresh
            out = search(_refine(trial, above, below))
            if out is not None:
                return out
        return None

    return search(colors)


def isomorphic(P: Poset, Q: Poset) -> bool:
    return find_isomorphism(P, Q) is not None
