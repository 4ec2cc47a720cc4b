"""Finite-window subgroup computations in the Chabauty spirit.

Subgroups are decidable membership predicates (oracles), one per named
family; windows are finite element lists; a basic neighborhood of H is the
set of subgroups agreeing with H on a window.  Window traces record how the
intersection of a window with a walking conjugate subgroup evolves.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Optional

from .groups import WreathElement
from .groups.thompson import ThompsonElement, translation


class MembershipUndetermined(Exception):
    """A windowed oracle cannot decide the query without widening."""


@dataclass(frozen=True)
class Window:
    elements: tuple
    label: str = ""

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("window contains duplicates")

    def __len__(self):
        return len(self.elements)


def make_window(group, elements, label: str = "") -> Window:
    """Deduplicated, deterministically ordered window."""
    seen = []
    for x in elements:
        if x not in seen:
            seen.append(x)
    seen.sort(key=group.sort_key)
    return Window(tuple(seen), label)


# ---------------------------------------------------------------------------
# oracle catalog
# ---------------------------------------------------------------------------

class SubgroupOracle:
    """Base: a total decidable membership predicate with a description tag."""

    tag = "abstract"

    def __init__(self, group):
        self.group = group

    def contains(self, x) -> bool:
        raise NotImplementedError

    def describe(self) -> str:
        return self.tag


class TrivialSubgroup(SubgroupOracle):
    tag = "trivial"

    def contains(self, x) -> bool:
        return x == self.group.identity()


class BsCyclicSubgroup(SubgroupOracle):
    """<a> inside BS(m, n): membership is being a pure a-power."""

    tag = "bs-cyclic"

    def contains(self, x) -> bool:
        return x.is_a_power()


class ThompsonConjugatesSubgroup(SubgroupOracle):
    """The abelian subgroup generated by all integer translates of one bump.

    The designated bump f is supported on [1/4, 3/4] and moves every interior
    point strictly upward, so its integer translates have disjoint supports
    and x belongs to the subgroup iff its support decomposes into windows
    [k + 1/4, k + 3/4] on which x restricts to an exact power of the
    translated bump.
    """

    tag = "thompson-conjugates"

    def __init__(self, group, bump: ThompsonElement):
        super().__init__(group)
        if not bump.has_compact_support():
            raise ValueError("the designated bump must have compact support")
        self.bump = bump
        hull = bump.support_hull()
        self._window = hull  # (1/4, 3/4) for the default bump
        self._powers = {0: group.identity(), 1: bump, -1: bump.inverse()}

    def _power(self, j: int) -> ThompsonElement:
        if j not in self._powers:
            half = self._power(j // 2)
            out = half.compose(half)
            if j % 2:
                out = out.compose(self._power(j % 2 if j > 0 else -1))
            self._powers[j] = out
        return self._powers[j]

    def contains(self, x) -> bool:
        return thompson_H_membership(x, self.bump, self._power)


def thompson_H_membership(g: ThompsonElement, f: ThompsonElement, power_fn=None) -> bool:
    """Whether g is a product of powers of integer translates of the bump f.

    g must vanish outside the translates' windows and restrict to an exact
    bump power on each; the candidate exponent is read off the slope at the
    window's left edge.
    """
    if power_fn is None:
        cache = {0: None}

        def power_fn(j, _mem={}):
            if j not in _mem:
                out = f if j > 0 else f.inverse()
                base = out
                for _ in range(abs(j) - 1):
                    out = out.compose(base)
                _mem[j] = out
            return _mem[j]

    if not g.has_compact_support():
        return False
    if g.is_identity():
        return True
    lo, hi = f.support_hull()
    for left, right in g.support_components():
        # the unique candidate window translate k with [left, right] inside
        k = (left - lo).floor()
        if left < lo + k or right > hi + k:
            return False
        restricted = _restrict(g, lo + k, hi + k)
        j = restricted.slope_exponent_right_of(lo + k)
        if j == 0:
            return False
        if restricted != power_fn(j).shifted(k):
            return False
    return True


def _restrict(g: ThompsonElement, lo, hi) -> ThompsonElement:
    """The element equal to g on [lo, hi] and the identity elsewhere.

    Only valid when g fixes lo and hi (support component boundaries).
    """
    breaks = [lo]
    pieces = []
    for i, d in enumerate(g.breaks):
        if lo < d < hi:
            breaks.append(d)
    inner = [b for b in g.breaks if lo < b < hi]
    breaks = [lo] + inner + [hi]
    for i in range(len(breaks) - 1):
        mid = (breaks[i] + breaks[i + 1]).scaled(-1)
        pieces.append(g.affine_at(mid))
    return ThompsonElement(tuple(breaks), tuple(pieces), 0, 0)


class WreathDiagonalSubgroup(SubgroupOracle):
    """Lamp subgroup generated by a fixed element a conjugated sitewise.

    conf maps each site of a finite window to the conjugating lamp value; a
    query whose support leaves the window is undetermined.
    """

    tag = "wreath-diagonal"

    def __init__(self, group, a, conf: dict):
        if a == group.A.identity():
            raise ValueError("the placed element must be nontrivial")
        super().__init__(group)
        self.a = a
        self.conf = dict(conf)

    def contains(self, x) -> bool:
        return wreath_limit_membership(x, self.conf, self.a, self.group)

    def fingerprint_value(self, site):
        return self.conf[site]


def wreath_limit_membership(x: WreathElement, conf: dict, a, group) -> bool:
    """x lies in the subgroup placing conf(b) a conf(b)^-1 at each site b.

    Requires trivial position; raises MembershipUndetermined when the support
    of x escapes the window carrying conf.
    """
    A = group.A
    if x.pos != group.B.identity():
        return False
    for site, val in x.lamps:
        if site not in conf:
            raise MembershipUndetermined(f"site {site} outside the known window")
        c = conf[site]
        moved = A.mul(A.mul(A.inv(c), val), c)
        if not _in_cyclic(A, moved, a):
            return False
    return True


def _in_cyclic(A, x, a) -> bool:
    """x in <a> by exponent arithmetic on Z-like families, cycling otherwise."""
    if isinstance(x, int) and hasattr(A, "q") is False and not hasattr(A, "degree"):
        # the integers: multiples of a
        return a != 0 and x % a == 0 if a else x == 0
    ident = A.identity()
    if x == ident:
        return True
    y = a
    while y != ident:
        if y == x:
            return True
        y = A.mul(y, a)
    return False


class PermWreathSumSubgroup(SubgroupOracle):
    """Direct sum of <a> over an orbit of the index set."""

    tag = "permwreath-sum"

    def __init__(self, group, a, orbit_predicate=None):
        if a == group.A.identity():
            raise ValueError("the placed element must be nontrivial")
        super().__init__(group)
        self.a = a
        self.orbit = orbit_predicate or (lambda site: True)

    def contains(self, x) -> bool:
        A = self.group.A
        if x.pos != self.group.B.identity():
            return False
        for site, val in x.lamps:
            if not self.orbit(site):
                return False
            if not _in_cyclic(A, val, self.a):
                return False
        return True


class ConjugateSubgroup(SubgroupOracle):
    """g H g^-1 for an inner oracle H."""

    tag = "conjugate"

    def __init__(self, g, inner: SubgroupOracle):
        super().__init__(inner.group)
        self.g = g
        self.g_inv = inner.group.inv(g)
        self.inner = inner

    def contains(self, x) -> bool:
        G = self.group
        return self.inner.contains(G.mul(G.mul(self.g_inv, x), self.g))

    def describe(self) -> str:
        return f"conjugate({self.inner.describe()})"


class IntersectionSubgroup(SubgroupOracle):
    tag = "intersection"

    def __init__(self, parts):
        if not parts:
            raise ValueError("empty intersection")
        super().__init__(parts[0].group)
        self.parts = list(parts)

    def contains(self, x) -> bool:
        return all(h.contains(x) for h in self.parts)

    def describe(self) -> str:
        return "intersection(" + ", ".join(h.describe() for h in self.parts) + ")"


# ---------------------------------------------------------------------------
# window operations
# ---------------------------------------------------------------------------

def window_intersect(H: SubgroupOracle, Q: Window) -> tuple:
    """The exact subset {q in Q : q in H}."""
    return tuple(q for q in Q.elements if H.contains(q))


def neighborhood_equal(H: SubgroupOracle, K: SubgroupOracle, Q: Window) -> bool:
    """Whether H and K define the same basic Chabauty neighborhood datum on Q."""
    return window_intersect(H, Q) == window_intersect(K, Q)


def window_bitmask(H: SubgroupOracle, Q: Window, conjugator=None):
    """Bitmask of Q against H (or against conjugator H conjugator^-1).

    Returns (mask, undetermined_mask); bit i refers to Q.elements[i].
    """
    G = H.group
    mask = 0
    undet = 0
    if conjugator is not None:
        c_inv = G.inv(conjugator)
    for i, q in enumerate(Q.elements):
        probe = q if conjugator is None else G.mul(G.mul(c_inv, q), conjugator)
        try:
            if H.contains(probe):
                mask |= 1 << i
        except MembershipUndetermined:
            undet |= 1 << i
    return mask, undet


@dataclass
class WindowTrace:
    """Evolution of Q against a sequence of subgroups, stored as change events.

    events hold (step, bitmask, undetermined_mask) for step 0 and every step
    whose bitmask differs from its predecessor; the dense per-step sequence is
    reconstructible.  stabilization_index is the last step at which the
    bitmask changed (0 for constant traces).
    """

    label: str
    width: int
    horizon: int
    events: list = field(default_factory=list)

    def push(self, step: int, mask: int, undet: int = 0):
        if not self.events or (self.events[-1][1], self.events[-1][2]) != (mask, undet):
            self.events.append((step, mask, undet))

    @property
    def stabilization_index(self) -> int:
        return self.events[-1][0] if self.events else 0

    def final_mask(self) -> int:
        return self.events[-1][1] if self.events else 0

    def stabilized(self, guard_fraction: float = 0.2) -> bool:
        return self.stabilization_index <= self.horizon * (1 - guard_fraction)

    def mask_at(self, step: int) -> int:
        mask = 0
        for s, m, _ in self.events:
            if s > step:
                break
            mask = m
        return mask

    def iter_rows(self, dense: bool = False):
        """(step, label, bitmask hex, changed) rows for CSV export."""
        if dense:
            by_step = {s: (m, u) for s, m, u in self.events}
            mask = 0
            for step in range(self.horizon + 1):
                changed = step in by_step
                if changed:
                    mask = by_step[step][0]
                yield (step, self.label, format(mask, "x"), changed)
        else:
            for s, m, _ in self.events:
                yield (s, self.label, format(m, "x"), True)

    def fingerprint(self) -> str:
        payload = ";".join(f"{s}:{m:x}:{u:x}" for s, m, u in self.events)
        return hashlib.sha256(f"{self.label}|{self.width}|{payload}".encode()).hexdigest()[:16]


def trace_conjugates(H: SubgroupOracle, products, windows) -> list:
    """Per window, the bitmask trace n -> Q cut against w_n H w_n^-1.

    products iterates the walk products w_0, w_1, ...; generic implementation
    recomputing every membership per step (the walk experiments use the
    incremental tracker instead and agree with this on small cases).
    """
    products = list(products)
    horizon = len(products) - 1
    traces = [WindowTrace(Q.label, len(Q), horizon) for Q in windows]
    for step, w in enumerate(products):
        for Q, tr in zip(windows, traces):
            mask, undet = window_bitmask(H, Q, conjugator=w)
            tr.push(step, mask, undet)
    return traces


def normalish_witnesses(H: SubgroupOracle, Z, probe) -> list:
    """Elements x of the probe window with x in zHz^-1 for every z in Z."""
    G = H.group
    out = []
    for x in probe.elements:
        ok = True
        for z in Z.elements:
            if not H.contains(G.mul(G.mul(G.inv(z), x), z)):
                ok = False
                break
        if ok:
            out.append(x)
    return out
