"""Deterministic total enumerations of countable groups.

Breadth-first over a fixed ordered, inverse-closed generating set with
canonical-form deduplication: index 0 is the identity, indices are stable
across runs, every element of the generated group appears exactly once, and
inverses appear within a bounded index gap of each other.
"""

from __future__ import annotations


class GroupEnumerator:
    def __init__(self, group, generators=None):
        self.group = group
        self.gens = list(generators) if generators is not None else group.generators()
        if not self.gens:
            raise ValueError(f"{getattr(group, 'name', group)} has no registered generating set")
        ident = group.identity()
        self._elements = [ident]
        self._seen = {ident}
        self._cursor = 0  # next element whose products have not been expanded

    def element(self, i: int):
        """The i-th element of the enumeration (0 = identity)."""
        if i < 0:
            raise IndexError("enumeration index must be nonnegative")
        while len(self._elements) <= i:
            self._expand_one()
        return self._elements[i]

    def prefix(self, count: int) -> list:
        """The first `count` elements, in order."""
        if count > 0:
            self.element(count - 1)
        return self._elements[:count]

    def known_index(self, x):
        """Index of x if already discovered, else None (does not extend)."""
        try:
            return self._elements.index(x)
        except ValueError:
            return None

    def _expand_one(self):
        mul = self.group.mul
        while True:
            if self._cursor >= len(self._elements):
                raise RuntimeError("enumeration exhausted: generated group is finite")
            base = self._elements[self._cursor]
            produced = False
            for g in self.gens:
                w = mul(base, g)
                if w not in self._seen:
                    self._seen.add(w)
                    self._elements.append(w)
                    produced = True
            self._cursor += 1
            if produced:
                return


def bfs_ball(group, generators, radius: int, cap: int | None = None):
    """All products of length <= radius over `generators`, BFS order.

    Returns (elements, capped) where capped flags that the size cap bound the
    closure before the radius was exhausted.
    """
    ident = group.identity()
    elements = [ident]
    seen = {ident}
    frontier = [ident]
    capped = False
    for _ in range(radius):
        if not frontier:
            break
        nxt = []
        for base in frontier:
            for g in generators:
                w = group.mul(base, g)
                if w in seen:
                    continue
                if cap is not None and len(elements) >= cap:
                    capped = True
                    return elements, capped
                seen.add(w)
                elements.append(w)
                nxt.append(w)
        frontier = nxt
    return elements, capped
