"""(Permutational) wreath products A wr B and A wr_X B.

Elements are pairs (lamps, position): a finitely supported map from the index
set into A, stored as a sorted tuple of (site, value) pairs with identity
values dropped, and a base element of B.  The plain wreath product is the
permutational one for X = B acting on itself by left multiplication.

Multiplication follows (phi, b)(psi, c) = (phi . (b.psi), bc) where
(b.psi)(y) = psi(b^{-1}.y).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional


@dataclass(frozen=True)
class WreathElement:
    lamps: tuple  # sorted ((site, value), ...), no identity values
    pos: object

    def support(self):
        return tuple(site for site, _ in self.lamps)

    def lamp_at(self, site, default):
        for s, v in self.lamps:
            if s == site:
                return v
        return default


class WreathProduct:
    """A wr_X B for a base group B acting on an index set X.

    ``action(b, x)`` must implement the B-action on X; by default X = B with
    the left-multiplication action (the standard wreath product).
    """

    def __init__(self, lamp_group, base_group, action: Optional[Callable] = None, name: str = ""):
        self.A = lamp_group
        self.B = base_group
        self.action = action if action is not None else base_group.mul
        self.permutational = action is not None
        self.name = name or f"{lamp_group.name} wr {base_group.name}"
        self._id = WreathElement((), base_group.identity())

    def identity(self) -> WreathElement:
        return self._id

    def element(self, lamps: dict, pos=None) -> WreathElement:
        """Build a canonical element from a site->value mapping."""
        e_a = self.A.identity()
        items = tuple(sorted(((s, v) for s, v in lamps.items() if v != e_a),
                             key=lambda sv: self.B.sort_key(sv[0]) if not self.permutational else sv[0]))
        return WreathElement(items, pos if pos is not None else self.B.identity())

    def single_lamp(self, site, value) -> WreathElement:
        return self.element({site: value})

    def base_only(self, pos) -> WreathElement:
        return WreathElement((), pos)

    def mul(self, x: WreathElement, y: WreathElement) -> WreathElement:
        e_a = self.A.identity()
        act = self.action
        merged = dict(x.lamps)
        for site, v in y.lamps:
            moved = act(x.pos, site)
            prev = merged.get(moved)
            w = v if prev is None else self.A.mul(prev, v)
            if w == e_a:
                merged.pop(moved, None)
            else:
                merged[moved] = w
        return self.element(merged, self.B.mul(x.pos, y.pos))

    def inv(self, x: WreathElement) -> WreathElement:
        b_inv = self.B.inv(x.pos)
        act = self.action
        lamps = {act(b_inv, site): self.A.inv(v) for site, v in x.lamps}
        return self.element(lamps, b_inv)

    def conjugate(self, g: WreathElement, x: WreathElement) -> WreathElement:
        """g x g^{-1}."""
        return self.mul(self.mul(g, x), self.inv(g))

    def generators(self):
        gens = []
        for a in self.A.generators():
            gens.append(self.single_lamp(self._origin(), a))
        for b in self.B.generators():
            gens.append(self.base_only(b))
        return gens

    def _origin(self):
        # basepoint of the index set: identity of B for the standard wreath,
        # the zero tuple / 0 for the shipped permutational actions
        return self.B.identity()

    def contains(self, x) -> bool:
        if not isinstance(x, WreathElement):
            return False
        e_a = self.A.identity()
        return all(v != e_a and self.A.contains(v) for _, v in x.lamps) and self.B.contains(x.pos)

    def sort_key(self, x: WreathElement):
        return (len(x.lamps), x.lamps, self.B.sort_key(x.pos))

    def format_element(self, x: WreathElement) -> str:
        body = ",".join(f"{self._fmt_site(s)}:{self.A.format_element(v)}" for s, v in x.lamps)
        return "{" + body + "};" + self.B.format_element(x.pos)

    def _fmt_site(self, site) -> str:
        if isinstance(site, tuple):
            return "(" + ",".join(str(a) for a in site) + ")"
        return str(site)

    def parse_element(self, s: str) -> WreathElement:
        body, _, pos_s = s.rpartition(";")
        body = body.strip()[1:-1]
        lamps = {}
        if body:
            for pair in _split_pairs(body):
                site_s, _, val_s = pair.rpartition(":")
                lamps[self._parse_site(site_s)] = self.A.parse_element(val_s)
        return self.element(lamps, self.B.parse_element(pos_s))

    def _parse_site(self, s: str):
        s = s.strip()
        if s.startswith("("):
            return tuple(int(t) for t in s[1:-1].split(","))
        return int(s)

    def __eq__(self, other):
        return (isinstance(other, WreathProduct) and other.A == self.A
                and other.B == self.B and other.permutational == self.permutational)

    def __hash__(self):
        return hash(("wreath", self.A, self.B, self.permutational))

    def __repr__(self):
        return f"WreathProduct({self.A!r}, {self.B!r})"


def _split_pairs(body: str):
    """Split 'site:value' pairs on commas not nested in parentheses."""
    out, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur:
        out.append("".join(cur))
    return out


def translation_action(dim: int) -> Callable:
    """Z^d acting on itself by translation, used as a permutational action."""
    def act(b, x):
        return tuple(p + q for p, q in zip(b, x))
    return act
