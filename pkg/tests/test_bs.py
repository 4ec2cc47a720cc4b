"""Britton normal forms for BS(m, n), validated by an independent rewriter."""

import random

from hypothesis import given, settings, strategies as st

from srslab.groups import BSGroup


def brute_rewrite(m, n, syllables):
    """Slow independent oracle: repeatedly apply the defining relation.

    Operates on [(eps_or_0, exponent)] syllable lists where eps 0 marks a
    plain a-power; uses only local rewrites until no pinch or free
    cancellation remains, then normalizes coset exponents left to right.
    """
    word = list(syllables)
    changed = True
    while changed:
        changed = False
        # merge adjacent a-powers
        i = 0
        while i < len(word) - 1:
            if word[i][0] == 0 and word[i + 1][0] == 0:
                word[i] = (0, word[i][1] + word[i + 1][1])
                del word[i + 1]
                changed = True
            else:
                i += 1
        # drop zero a-powers
        for i in range(len(word) - 1, -1, -1):
            if word[i][0] == 0 and word[i][1] == 0:
                del word[i]
                changed = True
        # free cancellation and pinches
        for i in range(len(word) - 1):
            if word[i][0] == 1 and word[i + 1][0] == -1:
                word[i:i + 2] = [(0, 0)]
                changed = True
                break
            if word[i][0] == -1 and word[i + 1][0] == 1:
                word[i:i + 2] = [(0, 0)]
                changed = True
                break
            if (i + 2 < len(word) and word[i][0] == 1 and word[i + 1][0] == 0
                    and word[i + 2][0] == -1 and word[i + 1][1] % m == 0):
                word[i:i + 3] = [(0, (word[i + 1][1] // m) * n)]
                changed = True
                break
            if (i + 2 < len(word) and word[i][0] == -1 and word[i + 1][0] == 0
                    and word[i + 2][0] == 1 and word[i + 1][1] % n == 0):
                word[i:i + 3] = [(0, (word[i + 1][1] // n) * m)]
                changed = True
                break
    # left-to-right coset normalization (push quotients right)
    out = []
    carry = 0
    for j, (kind, val) in enumerate(word):
        if kind == 0:
            carry += val
            continue
        if kind == 1:
            s = carry % abs(n)
            q = (carry - s) // n
            if s:
                out.append((0, s))
            out.append((1, 0))
            carry = q * m
        else:
            s = carry % abs(m)
            q = (carry - s) // m
            if s:
                out.append((0, s))
            out.append((-1, 0))
            carry = q * n
    if carry:
        out.append((0, carry))
    return out


def to_syllables(group, el):
    out = [(0, el.head)] if el.head else []
    for eps, k in el.tail:
        out.append((eps, 0))
        if k:
            out.append((0, k))
    return out


def test_relation_examples():
    B = BSGroup(2, 3)
    assert B.format_element(B.reduce_syllables([("t", 1), ("a", 2), ("t", -1)])) == "aaa"
    assert B.format_element(B.reduce_syllables([("t", 1), ("a", 1), ("t", -1)])) == "taT"
    assert B.format_element(B.reduce_syllables([("t", -1), ("a", 6), ("t", 1)])) == "aaaa"


def test_reverse_relation_via_oracle():
    # t^-1 a^6 t: relation applied in reverse twice
    B = BSGroup(2, 3)
    got = B.reduce_syllables([("t", -1), ("a", 6), ("t", 1)])
    oracle = brute_rewrite(2, 3, [(-1, 0), (0, 6), (1, 0)])
    assert to_syllables(B, got) == oracle == [(0, 4)]


def test_coset_normalization():
    B = BSGroup(2, 3)
    # a^5 t = a^2 t a^2: exponent before t lands in [0, |n|)
    el = B.reduce_syllables([("a", 5), ("t", 1)])
    assert el.head == 2 and el.tail == ((1, 2),)
    # a^5 t^-1 = a t^-1 a^6: exponent before t^-1 lands in [0, |m|)
    el2 = B.reduce_syllables([("a", 5), ("t", -1)])
    assert el2.head == 1 and el2.tail == ((-1, 6),)


def test_inverse_examples():
    B = BSGroup(2, 3)
    ta = B.parse_element("ta")
    inv = B.inv(ta)
    assert B.mul(ta, inv) == B.identity()
    assert B.mul(inv, ta) == B.identity()


def random_raw(rng, length=10):
    items = []
    for _ in range(rng.randrange(length + 1)):
        if rng.random() < 0.5:
            items.append(("a", rng.randrange(-6, 7)))
        else:
            items.append(("t", rng.choice((1, -1))))
    return items


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 2**32 - 1),
       st.sampled_from([(2, 3), (2, 4), (3, 2), (2, -3), (-2, 3)]))
def test_reduction_matches_brute_oracle(seed, params):
    m, n = params
    B = BSGroup(m, n)
    rng = random.Random(seed)
    items = random_raw(rng)
    fast = B.reduce_syllables(items)
    slow = brute_rewrite(m, n, [((0, v) if k == "a" else (v, 0)) for k, v in items])
    assert to_syllables(B, fast) == slow
    assert B.contains(fast)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_word_times_inverse_is_identity(seed):
    B = BSGroup(2, 3)
    rng = random.Random(seed)
    x = B.reduce_syllables(random_raw(rng, 12))
    assert B.mul(x, B.inv(x)) == B.identity()


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_reduce_idempotent_and_associative(seed):
    B = BSGroup(2, 3)
    rng = random.Random(seed)
    x = B.reduce_syllables(random_raw(rng))
    y = B.reduce_syllables(random_raw(rng))
    z = B.reduce_syllables(random_raw(rng))
    assert B.reduce_syllables(B._syllable_items(x)) == x
    assert B.mul(B.mul(x, y), z) == B.mul(x, B.mul(y, z))


def test_format_parse_roundtrip():
    B = BSGroup(2, 3)
    rng = random.Random(13)
    for _ in range(100):
        x = B.reduce_syllables(random_raw(rng))
        assert B.parse_element(B.format_element(x)) == x


def test_pow():
    B = BSGroup(2, 3)
    a = B.a_power(1)
    assert B.pow(a, 5) == B.a_power(5)
    t = B.t_power(1)
    assert B.pow(t, -2) == B.t_power(-2)
