"""Piecewise dyadically affine homeomorphisms of the real line.

Elements have finitely many dyadic breakpoints, slope 2^k with dyadic offset
on every bounded component, and act as integer translations on the two
unbounded components.  Composition, inversion and evaluation are exact; the
canonical form (no removable breakpoints) makes structural equality group
equality.
"""

from __future__ import annotations

from bisect import bisect_right

from .dyadic import Dyadic, ZERO

_ID_PIECE = (0, ZERO)


class ThompsonElement:
    """A canonical piecewise map.

    breaks   strictly increasing tuple of Dyadic
    pieces   per bounded component (slope exponent k, offset q): x -> 2^k x + q
    m_left   integer translation on (-inf, breaks[0]]
    m_right  integer translation on [breaks[-1], +inf)

    With no breakpoints the element is the translation by m_left == m_right.
    """

    __slots__ = ("breaks", "pieces", "m_left", "m_right", "_hash")

    def __init__(self, breaks, pieces, m_left, m_right, _validated=False):
        breaks = tuple(breaks)
        pieces = tuple(pieces)
        if not _validated:
            breaks, pieces, m_left, m_right = _canonicalize(breaks, pieces, m_left, m_right)
        self.breaks = breaks
        self.pieces = pieces
        self.m_left = m_left
        self.m_right = m_right
        self._hash = hash((breaks, pieces, m_left, m_right))

    # -- basic queries -------------------------------------------------

    def is_identity(self) -> bool:
        return not self.breaks and self.m_left == 0

    def is_translation(self) -> bool:
        return not self.breaks

    def affine_at(self, x: Dyadic):
        """The (slope exponent, offset) pair governing a point x.

        At a breakpoint the two candidate pieces agree on the value; the piece
        to the right is returned.
        """
        if not self.breaks:
            return (0, Dyadic(self.m_left))
        idx = bisect_right(self.breaks, x)
        if idx == 0:
            return (0, Dyadic(self.m_left))
        if idx == len(self.breaks):
            return (0, Dyadic(self.m_right))
        return self.pieces[idx - 1]

    def __call__(self, x: Dyadic) -> Dyadic:
        k, q = self.affine_at(x)
        return x.scaled(k) + q

    def slope_exponent_right_of(self, x: Dyadic) -> int:
        """Slope exponent on the component immediately right of x."""
        if not self.breaks:
            return 0
        idx = bisect_right(self.breaks, x)
        if idx == 0 or idx > len(self.pieces):
            return 0
        return self.pieces[idx - 1][0]

    # -- group structure -------------------------------------------------

    def inverse(self) -> "ThompsonElement":
        if not self.breaks:
            return ThompsonElement((), (), -self.m_left, -self.m_left, _validated=True)
        new_breaks = tuple(self(d) for d in self.breaks)
        new_pieces = tuple((-k, (-q).scaled(-k)) for k, q in self.pieces)
        return ThompsonElement(new_breaks, new_pieces, -self.m_left, -self.m_right)

    def compose(self, other: "ThompsonElement") -> "ThompsonElement":
        """self after other: x -> self(other(x))."""
        f, g = self, other
        if not f.breaks and not g.breaks:
            return translation(f.m_left + g.m_left)
        cands = list(g.breaks)
        if f.breaks:
            g_imgs = [g(d) for d in g.breaks]
            for d in f.breaks:
                cands.append(_pullback(g, g_imgs, d))
        cands.sort()
        breaks = []
        for d in cands:
            if not breaks or d != breaks[-1]:
                breaks.append(d)
        pieces = []
        for i in range(len(breaks) - 1):
            mid = (breaks[i] + breaks[i + 1]).scaled(-1)
            kg, qg = g.affine_at(mid)
            kf, qf = f.affine_at(g(mid))
            pieces.append((kf + kg, qg.scaled(kf) + qf))
        return ThompsonElement(tuple(breaks), tuple(pieces),
                               f.m_left + g.m_left, f.m_right + g.m_right)

    def shifted(self, j: int) -> "ThompsonElement":
        """Conjugate by the translation by j: x -> self(x - j) + j."""
        if j == 0 or not self.breaks:
            return self
        breaks = tuple(d + j for d in self.breaks)
        pieces = tuple((k, q + Dyadic(j) - Dyadic(j).scaled(k)) for k, q in self.pieces)
        return ThompsonElement(breaks, pieces, self.m_left, self.m_right, _validated=True)

    # -- support ---------------------------------------------------------

    def support_components(self):
        """Closed intervals [(lo, hi), ...] of the bounded support pieces.

        Only meaningful when both end translations vanish; the caller must
        check compact support via has_compact_support().
        """
        comps = []
        cur = None
        for i, piece in enumerate(self.pieces):
            if piece != _ID_PIECE:
                if cur is None:
                    cur = [self.breaks[i], self.breaks[i + 1]]
                else:
                    cur[1] = self.breaks[i + 1]
            else:
                if cur is not None:
                    comps.append((cur[0], cur[1]))
                    cur = None
        if cur is not None:
            comps.append((cur[0], cur[1]))
        return comps

    def has_compact_support(self) -> bool:
        return self.m_left == 0 and self.m_right == 0

    def support_hull(self):
        """(lo, hi) hull of the support, or None for the identity.

        Requires compact support.
        """
        comps = self.support_components()
        if not comps:
            return None
        return (comps[0][0], comps[-1][1])

    def break_bound(self) -> int:
        """Smallest integer B with all breakpoints in [-B, B] (0 if none)."""
        if not self.breaks:
            return 0
        return max(abs(self.breaks[0]).ceil(), abs(self.breaks[-1]).ceil())

    def displacement_bound(self) -> int:
        """Smallest integer D with |self(x) - x| <= D everywhere.

        The displacement of an affine piece is monotone, so the supremum is
        attained at breakpoints or at infinity (the end translations).
        """
        worst = Dyadic(max(abs(self.m_left), abs(self.m_right)))
        for d in self.breaks:
            disp = abs(self(d) - d)
            if disp > worst:
                worst = disp
        return worst.ceil()

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, ThompsonElement):
            return NotImplemented
        return (self.m_left == other.m_left and self.m_right == other.m_right
                and self.breaks == other.breaks and self.pieces == other.pieces)

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (len(self.breaks),
                tuple((d.num, d.exp) for d in self.breaks),
                tuple((k, q.num, q.exp) for k, q in self.pieces),
                self.m_left, self.m_right)

    def __repr__(self):
        return f"<PLmap {format_element(self)}>"


def _canonicalize(breaks, pieces, m_left, m_right):
    if len(pieces) != max(0, len(breaks) - 1):
        raise ValueError("pieces must cover the bounded components")
    if not breaks:
        if m_left != m_right:
            raise ValueError("translation with mismatched ends")
        return (), (), m_left, m_right
    for i in range(len(breaks) - 1):
        if not breaks[i] < breaks[i + 1]:
            raise ValueError("breakpoints must be strictly increasing")
    maps = [(0, Dyadic(m_left))] + list(pieces) + [(0, Dyadic(m_right))]
    for i, d in enumerate(breaks):
        kl, ql = maps[i]
        kr, qr = maps[i + 1]
        if d.scaled(kl) + ql != d.scaled(kr) + qr:
            raise ValueError(f"discontinuity at breakpoint {d}")
    # drop breakpoints separating equal affine maps
    out_breaks, out_maps = [], [maps[0]]
    for i, d in enumerate(breaks):
        nxt = maps[i + 1]
        if nxt == out_maps[-1]:
            continue
        out_breaks.append(d)
        out_maps.append(nxt)
    if not out_breaks:
        return (), (), m_left, m_right
    return tuple(out_breaks), tuple(out_maps[1:-1]), m_left, m_right


def _pullback(g: ThompsonElement, g_imgs, y: Dyadic) -> Dyadic:
    """g^{-1}(y) for an increasing g, via the sorted breakpoint images."""
    idx = bisect_right(g_imgs, y)
    if idx == 0:
        return y - g.m_left
    if idx == len(g_imgs):
        return y - g.m_right
    k, q = g.pieces[idx - 1]
    return (y - q).scaled(-k)


IDENTITY = ThompsonElement((), (), 0, 0, _validated=True)


def translation(m: int) -> ThompsonElement:
    """The map x -> x + m for integer m."""
    return ThompsonElement((), (), m, m, _validated=True)


def default_bump() -> ThompsonElement:
    """The designated one-bump element supported on [1/4, 3/4].

    2x - 1/4 on [1/4, 3/8], x + 1/8 on [3/8, 1/2], x/2 + 3/8 on [1/2, 3/4],
    identity elsewhere; it moves every interior point strictly up.
    """
    return ThompsonElement(
        (Dyadic(1, 2), Dyadic(3, 3), Dyadic(1, 1), Dyadic(3, 2)),
        ((1, Dyadic(-1, 2)), (0, Dyadic(1, 3)), (-1, Dyadic(3, 3))),
        0, 0)


def doubling_generator() -> ThompsonElement:
    """Identity left of 0, x -> 2x on [0, 1], x -> x + 1 right of 1."""
    return ThompsonElement((ZERO, Dyadic(1)), ((1, ZERO),), 0, 1)


class ThompsonGroup:
    """The group of the above maps, with the standard two-generator set."""

    name = "F"

    def __init__(self):
        self._id = IDENTITY
        self._gens = [translation(1), translation(-1),
                      doubling_generator(), doubling_generator().inverse()]

    def identity(self) -> ThompsonElement:
        return self._id

    def mul(self, x: ThompsonElement, y: ThompsonElement) -> ThompsonElement:
        return x.compose(y)

    def inv(self, x: ThompsonElement) -> ThompsonElement:
        return x.inverse()

    def conjugate(self, g: ThompsonElement, x: ThompsonElement) -> ThompsonElement:
        return g.compose(x).compose(g.inverse())

    def generators(self):
        return list(self._gens)

    def contains(self, x) -> bool:
        return isinstance(x, ThompsonElement)

    def sort_key(self, x: ThompsonElement):
        return x.sort_key()

    def format_element(self, x: ThompsonElement) -> str:
        return format_element(x)

    def parse_element(self, s: str) -> ThompsonElement:
        return parse_element(s)

    def __eq__(self, other):
        return isinstance(other, ThompsonGroup)

    def __hash__(self):
        return hash("thompson-F")

    def __repr__(self):
        return "ThompsonGroup()"


def format_element(x: ThompsonElement) -> str:
    """'m_left;breaks;pieces;m_right' with pieces as k:q tokens."""
    breaks = ",".join(str(d) for d in x.breaks)
    pieces = ",".join(f"{k}:{q}" for k, q in x.pieces)
    return f"{x.m_left};{breaks};{pieces};{x.m_right}"


def parse_element(s: str) -> ThompsonElement:
    ml_s, breaks_s, pieces_s, mr_s = s.split(";")
    breaks = tuple(Dyadic.parse(t) for t in breaks_s.split(",")) if breaks_s else ()
    pieces = []
    if pieces_s:
        for token in pieces_s.split(","):
            k_s, q_s = token.split(":")
            pieces.append((int(k_s), Dyadic.parse(q_s)))
    return ThompsonElement(breaks, tuple(pieces), int(ml_s), int(mr_s))
