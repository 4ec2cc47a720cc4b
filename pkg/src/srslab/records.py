"""Record statistics of i.i.d. sequences of nonnegative integers.

Covers tail distributions with exact rational masses, record times and
simplicity of records under the tie convention "equaling the running maximum
is a record", the squared-hazard summability criterion deciding eventual
simplicity, and the gauge function bounding the next record time that the
measure builder consumes.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .seeding import make_rng

CONVERGES = "converges"
DIVERGES = "diverges"
UNDETERMINED = "undetermined"


class TailDistribution:
    """A probability mass p on the nonnegative integers with exact tails.

    kind is one of 'polynomial', 'geometric', 'finite', 'custom'; the kind
    drives the analytic verdict of the simple-records criterion.  Sampling
    uses a cached float CDF (the masses themselves stay exact rationals).
    """

    def __init__(self, kind: str, mass_fn, tail_fn, support_infinite: bool,
                 params: dict, label: str):
        self.kind = kind
        self._mass = mass_fn
        self._tail = tail_fn
        self.support_infinite = support_infinite
        self.params = params
        self.label = label
        self._cdf_floats: list[float] = []
        self._cdf_exact = Fraction(0)

    # -- constructors ---------------------------------------------------

    @classmethod
    def polynomial(cls, exponent: int = 2) -> "TailDistribution":
        """tail(j) = 1/(j+1)^(exponent-1), so p_j decays like j^-exponent.

        exponent = 2 gives p_j = 1/((j+1)(j+2)) with tail(j) = 1/(j+1).
        """
        if exponent < 2:
            raise ValueError("polynomial decay needs exponent >= 2")
        s = exponent - 1

        def tail(j: int) -> Fraction:
            return Fraction(1, (j + 1) ** s)

        def mass(j: int) -> Fraction:
            return tail(j) - tail(j + 1)

        return cls("polynomial", mass, tail, True,
                   {"exponent": exponent}, f"polynomial({exponent})")

    @classmethod
    def geometric(cls, ratio: Fraction) -> "TailDistribution":
        """p_j = (1-r) r^j, tail(j) = r^j."""
        r = Fraction(ratio)
        if not 0 < r < 1:
            raise ValueError("ratio must lie in (0, 1)")

        def tail(j: int) -> Fraction:
            return r ** j

        def mass(j: int) -> Fraction:
            return (1 - r) * r ** j

        return cls("geometric", mass, tail, True,
                   {"ratio": str(r)}, f"geometric({r})")

    @classmethod
    def finite(cls, masses) -> "TailDistribution":
        ms = [Fraction(m) for m in masses]
        while ms and ms[-1] == 0:
            ms.pop()
        if not ms or any(m < 0 for m in ms) or sum(ms) != 1:
            raise ValueError("finite masses must be nonnegative and sum to 1")
        tails = [Fraction(0)] * (len(ms) + 1)
        for j in range(len(ms) - 1, -1, -1):
            tails[j] = tails[j + 1] + ms[j]

        def tail(j: int) -> Fraction:
            return tails[j] if j < len(tails) else Fraction(0)

        def mass(j: int) -> Fraction:
            return ms[j] if j < len(ms) else Fraction(0)

        return cls("finite", mass, tail, False,
                   {"masses": [str(m) for m in ms]}, f"finite({len(ms)})")

    @classmethod
    def custom(cls, mass_fn, tail_fn=None, label: str = "custom") -> "TailDistribution":
        """Rule-given masses with no analytic tail classification."""
        if tail_fn is None:
            cache = [Fraction(1)]

            def tail_fn(j: int) -> Fraction:
                while len(cache) <= j:
                    cache.append(cache[-1] - mass_fn(len(cache) - 1))
                return cache[j]

        return cls("custom", mass_fn, tail_fn, True, {}, label)

    @classmethod
    def from_spec(cls, spec: dict) -> "TailDistribution":
        kind = spec["kind"]
        if kind == "polynomial":
            return cls.polynomial(int(spec.get("exponent", 2)))
        if kind == "geometric":
            return cls.geometric(Fraction(spec["ratio"]))
        if kind == "finite":
            return cls.finite([Fraction(m) for m in spec["masses"]])
        raise ValueError(f"unknown tail distribution kind {kind!r}")

    def spec(self) -> dict:
        return {"kind": self.kind, **self.params}

    # -- exact queries ----------------------------------------------------

    def mass(self, j: int) -> Fraction:
        return self._mass(j)

    def tail(self, j: int) -> Fraction:
        return self._tail(j)

    # -- sampling ---------------------------------------------------------

    _EXT_CAP = 4096

    def sample(self, rng) -> int:
        r = rng.random()
        cdf = self._cdf_floats
        while not cdf or cdf[-1] <= r:
            if len(cdf) >= self._EXT_CAP:
                return self._sample_tail(r)  # rare far-tail draw
            j = len(cdf)
            new_exact = self._cdf_exact + self._mass(j)
            nxt = float(new_exact)
            if cdf and nxt == cdf[-1]:
                return self._sample_tail(r)  # float resolution exhausted
            self._cdf_exact = new_exact
            cdf.append(nxt)
        return bisect_right(cdf, r)

    def _sample_tail(self, r: float) -> int:
        """Smallest j with exact cdf(j) > r, via tail(j+1) < 1 - r."""
        residual = Fraction(1) - Fraction(r)
        lo = len(self._cdf_floats)
        hi, step = lo, 1
        while self._tail(hi + 1) >= residual:
            hi += step
            step *= 2
        while lo < hi:
            mid = (lo + hi) // 2
            if self._tail(mid + 1) < residual:
                hi = mid
            else:
                lo = mid + 1
        return lo


def gauge(p: TailDistribution, r: int) -> int:
    """Record-time gauge ceil((r+2)^2 / tail(r)).

    The waiting time for a record above value r is geometric with success
    probability tail(r), so gaps exceed the gauge with summable probability.
    Tails are nonincreasing, hence the raw value is already nondecreasing and
    needs no running-max normalization.
    """
    if r < 0:
        raise ValueError("gauge argument must be nonnegative")
    t = p.tail(r)
    if t <= 0:
        raise ValueError(f"index {r} is beyond the support")
    return math.ceil(Fraction((r + 2) ** 2) / t)


@dataclass(frozen=True)
class CriterionResult:
    verdict: str
    partial_sum: Optional[Fraction] = None


def criterion_partial_sum(p: TailDistribution, terms: int) -> Fraction:
    """Sum of (p_j / tail(j))^2 over j < terms, exact."""
    total = Fraction(0)
    for j in range(terms):
        t = p.tail(j)
        if t == 0:
            break
        total += (p.mass(j) / t) ** 2
    return total


def simple_records_criterion(p: TailDistribution, partial_terms: int = 256) -> CriterionResult:
    """Decide whether records of i.i.d. draws from p are eventually simple.

    Finite support always diverges; polynomial decay converges; geometric
    tails diverge (the hazard ratio is the constant 1 - r).  Without an
    analytic classification the exact partial sum is reported instead of an
    unproven verdict.
    """
    if not p.support_infinite:
        return CriterionResult(DIVERGES)
    if p.kind == "polynomial":
        return CriterionResult(CONVERGES)
    if p.kind == "geometric":
        return CriterionResult(DIVERGES)
    return CriterionResult(UNDETERMINED, criterion_partial_sum(p, partial_terms))


@dataclass(frozen=True)
class RecordTrace:
    """Record structure of one finite integer sequence (1-based times)."""
    values: tuple
    running_max: tuple
    record_times: tuple
    record_values: tuple
    simple_flags: tuple  # per index n: the record value M_n is attained once

    def __len__(self):
        return len(self.values)


def record_times(values) -> RecordTrace:
    """Record times T_1 = 1, T_{k+1} = min{n > T_k : X_n = M_n}.

    Ties with the running maximum count as records.
    """
    values = tuple(values)
    if not values:
        raise ValueError("empty sequence has no records")
    maxes = []
    times = []
    rec_values = []
    simple = []
    cur_max = None
    attained = 0
    for n, x in enumerate(values, start=1):
        if cur_max is None or x > cur_max:
            cur_max = x
            attained = 1
            times.append(n)
            rec_values.append(x)
        elif x == cur_max:
            attained += 1
            times.append(n)
            rec_values.append(x)
        maxes.append(cur_max)
        simple.append(attained == 1)
    return RecordTrace(values, tuple(maxes), tuple(times), tuple(rec_values), tuple(simple))


def is_simple_record(trace: RecordTrace, n: int) -> bool:
    """Whether exactly one index i <= n attains the running maximum M_n."""
    if not 1 <= n <= len(trace.values):
        raise IndexError(f"index {n} outside trace of length {len(trace.values)}")
    return trace.simple_flags[n - 1]


def empirical_gauge_validation(p: TailDistribution, horizon: int, trials: int,
                               seed: int) -> float:
    """Fraction of seeded trajectories on which every strict record with
    T_k > horizon/10 has its successor by the gauge deadline:
    T_{k+1} <= gauge(R_k).

    Strict ascents (record value actually increases) carry the gauge content;
    on finite supports they stop occurring and the check is vacuous.  A
    missing successor only counts against the gauge when the deadline lies
    inside the horizon.
    """
    if trials <= 0 or horizon <= 0:
        return 1.0
    late_threshold = horizon / 10
    good = 0
    for t in range(trials):
        rng = make_rng(seed, t)
        cur_max = -1
        last_time = 0  # pending strict record time, 0 = none
        last_value = -1
        ok = True
        for n in range(1, horizon + 1):
            x = p.sample(rng)
            if x > cur_max:
                cur_max = x
                if last_time > late_threshold and n > gauge(p, last_value):
                    ok = False
                    break
                last_time, last_value = n, x
        if ok and last_time > late_threshold and gauge(p, last_value) < horizon:
            ok = False  # deadline passed inside the horizon with no next record
        good += ok
    return good / trials


@dataclass(frozen=True)
class SimplicityStats:
    trials: int
    horizon: int
    fraction_simple_at_horizon: float
    mean_last_violation_index: float
    fraction_steps_nonsimple: float


def empirical_eventual_simplicity(p: TailDistribution, horizon: int, trials: int,
                                  seed: int) -> SimplicityStats:
    """Per trajectory: is the record at the horizon simple; aggregate stats.

    Also reports the step frequency of non-simple record states, the
    observable that separates converging from diverging criteria.
    """
    if trials <= 0 or horizon <= 0:
        return SimplicityStats(0, horizon, 0.0, 0.0, 0.0)
    simple_at_end = 0
    last_violations = 0
    nonsimple_steps = 0
    for t in range(trials):
        rng = make_rng(seed, t)
        cur_max = -1
        attained = 0
        last_violation = 0
        for n in range(1, horizon + 1):
            x = p.sample(rng)
            if x > cur_max:
                cur_max, attained = x, 1
            elif x == cur_max:
                attained += 1
            if attained > 1:
                nonsimple_steps += 1
                last_violation = n
        simple_at_end += attained == 1
        last_violations += last_violation
    return SimplicityStats(
        trials, horizon,
        simple_at_end / trials,
        last_violations / trials,
        nonsimple_steps / (trials * horizon),
    )
