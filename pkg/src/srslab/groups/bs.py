"""Baumslag-Solitar groups BS(m, n) = <a, t | t a^m t^-1 = a^n>.

Elements are Britton-reduced alternating words a^{k0} t^{e1} a^{k1} ... with
coset-normalized exponents: the exponent before a t letter lies in [0, |n|),
the exponent before a t^-1 letter lies in [0, |m|), and the trailing exponent
is unconstrained.  Two words are equal in the group iff their canonical forms
are structurally identical.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BSElement:
    head: int          # leading a-exponent k0
    tail: tuple        # ((eps, k), ...) with eps in {+1, -1}

    def t_exponent_sum(self) -> int:
        return sum(eps for eps, _ in self.tail)

    def is_a_power(self) -> bool:
        return not self.tail

    def syllable_length(self) -> int:
        return len(self.tail)


class BSGroup:
    """Exact word arithmetic for one choice of parameters (m, n)."""

    def __init__(self, m: int, n: int):
        if m == 0 or n == 0:
            raise ValueError("parameters must be nonzero")
        self.m = m
        self.n = n
        self.name = f"BS({m},{n})"
        self._id = BSElement(0, ())

    # -- normal form machinery ----------------------------------------

    def reduce_syllables(self, items) -> BSElement:
        """Canonical form of a raw word given as ('a', j) / ('t', eps) items.

        A stack pass removes pinches t a^{qm} t^-1 -> a^{qn} and
        t^-1 a^{qn} t -> a^{qm}; a left-to-right pass then normalizes the
        coset exponents by pushing quotients rightward through the relation.
        """
        m, n = self.m, self.n
        head = 0
        stack: list = []  # [eps, trailing exponent]
        for kind, val in items:
            if kind == "a":
                if stack:
                    stack[-1][1] += val
                else:
                    head += val
            else:
                eps = val
                if stack and stack[-1][0] == -eps:
                    k = stack[-1][1]
                    if eps == 1:
                        # t^-1 a^k [t]: pinch when n | k
                        if k % n == 0:
                            stack.pop()
                            j = (k // n) * m
                            if stack:
                                stack[-1][1] += j
                            else:
                                head += j
                            continue
                    else:
                        # t a^k [t^-1]: pinch when m | k
                        if k % m == 0:
                            stack.pop()
                            j = (k // m) * n
                            if stack:
                                stack[-1][1] += j
                            else:
                                head += j
                            continue
                stack.append([eps, 0])
        return self._normalize(head, stack)

    def _normalize(self, head: int, syllables: list) -> BSElement:
        m, n = self.m, self.n
        if not syllables:
            return BSElement(head, ())
        # exponent before t^{eps_{i+1}} reduced into its coset range, the
        # quotient carried rightward through the relation
        exps = [head] + [k for _, k in syllables]
        epss = [eps for eps, _ in syllables]
        for i, eps in enumerate(epss):
            k = exps[i]
            if eps == 1:
                s = k % abs(n)
                if s != k:
                    q = (k - s) // n
                    exps[i] = s
                    exps[i + 1] += q * m
            else:
                s = k % abs(m)
                if s != k:
                    q = (k - s) // m
                    exps[i] = s
                    exps[i + 1] += q * n
        return BSElement(exps[0], tuple(zip(epss, exps[1:])))

    def _syllable_items(self, x: BSElement):
        yield ("a", x.head)
        for eps, k in x.tail:
            yield ("t", eps)
            yield ("a", k)

    # -- group interface ---------------------------------------------

    def identity(self) -> BSElement:
        return self._id

    def a_power(self, k: int) -> BSElement:
        return BSElement(k, ())

    def t_power(self, e: int) -> BSElement:
        items = [("t", 1 if e > 0 else -1)] * abs(e)
        return self.reduce_syllables(items)

    def mul(self, x: BSElement, y: BSElement) -> BSElement:
        def items():
            yield from self._syllable_items(x)
            yield from self._syllable_items(y)
        return self.reduce_syllables(items())

    def inv(self, x: BSElement) -> BSElement:
        def items():
            for eps, k in reversed(x.tail):
                yield ("a", -k)
                yield ("t", -eps)
            yield ("a", -x.head)
        return self.reduce_syllables(items())

    def conjugate(self, g: BSElement, x: BSElement) -> BSElement:
        return self.mul(self.mul(g, x), self.inv(g))

    def pow(self, x: BSElement, e: int) -> BSElement:
        if e < 0:
            return self.pow(self.inv(x), -e)
        out = self._id
        for _ in range(e):
            out = self.mul(out, x)
        return out

    def generators(self):
        return [self.a_power(1), self.a_power(-1), self.t_power(1), self.t_power(-1)]

    def contains(self, x) -> bool:
        """Structural check that x is a canonical form for these parameters."""
        if not isinstance(x, BSElement):
            return False
        exps = [x.head] + [k for _, k in x.tail]
        epss = [eps for eps, _ in x.tail]
        for i, eps in enumerate(epss):
            bound = abs(self.n) if eps == 1 else abs(self.m)
            if not 0 <= exps[i] < bound:
                return False
        for i in range(len(epss) - 1):
            if epss[i] == 1 and epss[i + 1] == -1 and exps[i + 1] % self.m == 0:
                return False
            if epss[i] == -1 and epss[i + 1] == 1 and exps[i + 1] % self.n == 0:
                return False
        return True

    def sort_key(self, x: BSElement):
        return (len(x.tail), x.tail, x.head)

    # -- text form ------------------------------------------------------

    def format_element(self, x: BSElement) -> str:
        """Word over {a, A, t, T} with A = a^-1 and T = t^-1."""
        def run(ch, inv_ch, e):
            return (ch if e > 0 else inv_ch) * abs(e)
        out = [run("a", "A", x.head)]
        for eps, k in x.tail:
            out.append(run("t", "T", eps))
            out.append(run("a", "A", k))
        word = "".join(out)
        return word if word else "e"

    def parse_element(self, s: str) -> BSElement:
        if s == "e":
            return self._id
        items = []
        for ch in s:
            if ch == "a":
                items.append(("a", 1))
            elif ch == "A":
                items.append(("a", -1))
            elif ch == "t":
                items.append(("t", 1))
            elif ch == "T":
                items.append(("t", -1))
            else:
                raise ValueError(f"bad letter {ch!r}")
        return self.reduce_syllables(items)

    def __eq__(self, other):
        return isinstance(other, BSGroup) and (other.m, other.n) == (self.m, self.n)

    def __hash__(self):
        return hash(("BS", self.m, self.n))

    def __repr__(self):
        return f"BSGroup({self.m}, {self.n})"
