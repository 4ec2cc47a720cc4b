"""Base group catalog: Z, Z^d, Z/q, free groups and symmetric groups.

Elements are plain hashable Python values (ints, tuples); each family object
carries the operations.  All families expose the same informal interface:
``identity()``, ``mul``, ``inv``, ``generators()`` (ordered, inverse-closed),
``contains`` sanity check, ``format_element``/``parse_element`` and a ``name``.
"""

from __future__ import annotations

import itertools


class IntGroup:
    """The integers under addition."""

    name = "Z"

    def identity(self):
        return 0

    def mul(self, x: int, y: int) -> int:
        return x + y

    def inv(self, x: int) -> int:
        return -x

    def generators(self):
        return [1, -1]

    def contains(self, x) -> bool:
        return isinstance(x, int)

    def sort_key(self, x: int):
        return x

    def format_element(self, x: int) -> str:
        return str(x)

    def parse_element(self, s: str) -> int:
        return int(s)

    def __eq__(self, other):
        return isinstance(other, IntGroup)

    def __hash__(self):
        return hash("Z")

    def __repr__(self):
        return "IntGroup()"


class IntTupleGroup:
    """Z^d under coordinatewise addition."""

    def __init__(self, dim: int):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = dim
        self.name = f"Z^{dim}"
        self._id = (0,) * dim

    def identity(self):
        return self._id

    def mul(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def inv(self, x):
        return tuple(-a for a in x)

    def generators(self):
        gens = []
        for i in range(self.dim):
            e = [0] * self.dim
            e[i] = 1
            gens.append(tuple(e))
            e[i] = -1
            gens.append(tuple(e))
        return gens

    def contains(self, x) -> bool:
        return isinstance(x, tuple) and len(x) == self.dim and all(isinstance(a, int) for a in x)

    def sort_key(self, x):
        return x

    def format_element(self, x) -> str:
        return "(" + ",".join(str(a) for a in x) + ")"

    def parse_element(self, s: str):
        body = s.strip().lstrip("(").rstrip(")")
        return tuple(int(t) for t in body.split(",")) if body else ()

    def __eq__(self, other):
        return isinstance(other, IntTupleGroup) and other.dim == self.dim

    def __hash__(self):
        return hash(("Z^d", self.dim))

    def __repr__(self):
        return f"IntTupleGroup({self.dim})"


class CyclicGroup:
    """Z/q, residues in [0, q)."""

    def __init__(self, q: int):
        if q < 1:
            raise ValueError("modulus must be positive")
        self.q = q
        self.name = f"Z/{q}"

    def identity(self):
        return 0

    def mul(self, x, y):
        return (x + y) % self.q

    def inv(self, x):
        return (-x) % self.q

    def generators(self):
        if self.q == 1:
            return []
        if self.q == 2:
            return [1]
        return [1, self.q - 1]

    def contains(self, x) -> bool:
        return isinstance(x, int) and 0 <= x < self.q

    def sort_key(self, x):
        return x

    def format_element(self, x) -> str:
        return str(x)

    def parse_element(self, s: str):
        return int(s) % self.q

    def __eq__(self, other):
        return isinstance(other, CyclicGroup) and other.q == self.q

    def __hash__(self):
        return hash(("Z/q", self.q))

    def __repr__(self):
        return f"CyclicGroup({self.q})"


class FreeGroup:
    """Free group on k letters; elements are freely reduced tuples of nonzero
    ints, letter i appearing as ±(i+1)."""

    def __init__(self, rank: int):
        if rank < 1:
            raise ValueError("rank must be positive")
        self.rank = rank
        self.name = f"F_{rank}"

    def identity(self):
        return ()

    def reduce(self, word) -> tuple:
        out: list = []
        for letter in word:
            if out and out[-1] == -letter:
                out.pop()
            else:
                out.append(letter)
        return tuple(out)

    def mul(self, x, y):
        out = list(x)
        for letter in y:
            if out and out[-1] == -letter:
                out.pop()
            else:
                out.append(letter)
        return tuple(out)

    def inv(self, x):
        return tuple(-a for a in reversed(x))

    def generators(self):
        gens = []
        for i in range(1, self.rank + 1):
            gens.append((i,))
            gens.append((-i,))
        return gens

    def contains(self, x) -> bool:
        if not isinstance(x, tuple):
            return False
        if any(not isinstance(a, int) or a == 0 or abs(a) > self.rank for a in x):
            return False
        return all(x[i] != -x[i + 1] for i in range(len(x) - 1))

    def sort_key(self, x):
        return (len(x), x)

    def format_element(self, x) -> str:
        # letter i -> a..z, inverse uppercase
        if not x:
            return "e"
        return "".join(chr(ord("a") + abs(a) - 1).upper() if a < 0 else chr(ord("a") + a - 1) for a in x)

    def parse_element(self, s: str):
        if s == "e":
            return ()
        word = []
        for ch in s:
            idx = ord(ch.lower()) - ord("a") + 1
            word.append(-idx if ch.isupper() else idx)
        return self.reduce(word)

    def __eq__(self, other):
        return isinstance(other, FreeGroup) and other.rank == self.rank

    def __hash__(self):
        return hash(("F_k", self.rank))

    def __repr__(self):
        return f"FreeGroup({self.rank})"


class SymmetricGroup:
    """S_s on {0, .., s-1}; elements are image tuples p with p[i] the image of i."""

    def __init__(self, degree: int):
        if degree < 1:
            raise ValueError("degree must be positive")
        self.degree = degree
        self.name = f"S_{degree}"
        self._id = tuple(range(degree))

    def identity(self):
        return self._id

    def mul(self, x, y):
        # (x*y)(i) = x(y(i)): y applied first, matching left-to-right products
        return tuple(x[y[i]] for i in range(self.degree))

    def inv(self, x):
        out = [0] * self.degree
        for i, xi in enumerate(x):
            out[xi] = i
        return tuple(out)

    def generators(self):
        # adjacent transpositions, self-inverse
        gens = []
        for i in range(self.degree - 1):
            p = list(self._id)
            p[i], p[i + 1] = p[i + 1], p[i]
            gens.append(tuple(p))
        return gens

    def transposition(self, i: int, j: int):
        p = list(self._id)
        p[i], p[j] = p[j], p[i]
        return tuple(p)

    def elements(self):
        return [tuple(p) for p in itertools.permutations(range(self.degree))]

    def order_of(self, x) -> int:
        n, y = 1, x
        while y != self._id:
            y = self.mul(y, x)
            n += 1
        return n

    def cyclic_subgroup(self, a) -> frozenset:
        out = {self._id}
        y = a
        while y not in out:
            out.add(y)
            y = self.mul(y, a)
        return frozenset(out)

    def center(self) -> frozenset:
        els = self.elements()
        return frozenset(z for z in els if all(self.mul(z, g) == self.mul(g, z) for g in els))

    def contains(self, x) -> bool:
        return isinstance(x, tuple) and sorted(x) == list(range(self.degree))

    def sort_key(self, x):
        return x

    def format_element(self, x) -> str:
        return "(" + ",".join(str(a) for a in x) + ")"

    def parse_element(self, s: str):
        body = s.strip().lstrip("(").rstrip(")")
        return tuple(int(t) for t in body.split(","))

    def __eq__(self, other):
        return isinstance(other, SymmetricGroup) and other.degree == self.degree

    def __hash__(self):
        return hash(("S_s", self.degree))

    def __repr__(self):
        return f"SymmetricGroup({self.degree})"
