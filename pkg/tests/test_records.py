"""Record statistics: definitions, criterion verdicts, gauge, Monte Carlo."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from srslab import records
from srslab.records import (TailDistribution, criterion_partial_sum,
                            empirical_eventual_simplicity,
                            empirical_gauge_validation, gauge,
                            is_simple_record, record_times,
                            simple_records_criterion)


def naive_record_times(values):
    """Quadratic oracle recomputing the running max from scratch."""
    times = []
    for n in range(1, len(values) + 1):
        if values[n - 1] == max(values[:n]):
            times.append(n)
    return times


def default_p():
    return TailDistribution.polynomial(2)


def test_default_p_masses_telescope():
    p = default_p()
    assert p.mass(0) == Fraction(1, 2)
    assert p.mass(3) == Fraction(1, 20)
    assert p.tail(1) == Fraction(1, 2)
    assert sum(p.mass(j) for j in range(100)) + p.tail(100) == 1


def test_geometric_masses():
    p = TailDistribution.geometric(Fraction(1, 2))
    assert p.mass(2) == Fraction(1, 8)
    assert p.tail(3) == Fraction(1, 8)


def test_record_times_examples():
    trace = record_times((0, 2, 2, 5, 1, 5))
    assert trace.record_times == (1, 2, 3, 4, 6)
    assert trace.record_values == (0, 2, 2, 5, 5)
    assert trace.running_max == (0, 2, 2, 5, 5, 5)
    assert record_times((7,)).record_times == (1,)
    assert record_times((1, 2, 3, 4)).record_times == (1, 2, 3, 4)


def test_record_times_empty_rejected():
    with pytest.raises(ValueError):
        record_times(())


def test_is_simple_record_examples():
    assert is_simple_record(record_times((3, 1, 3)), 3) is False
    assert is_simple_record(record_times((3, 1, 5)), 3) is True
    assert is_simple_record(record_times((0, 2, 2, 5, 1, 5)), 6) is False
    with pytest.raises(IndexError):
        is_simple_record(record_times((1,)), 2)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(0, 8), min_size=1, max_size=60))
def test_record_times_match_naive_oracle(values):
    trace = record_times(values)
    assert list(trace.record_times) == naive_record_times(values)
    for n in range(1, len(values) + 1):
        assert trace.running_max[n - 1] == max(values[:n])
        assert is_simple_record(trace, n) == (values[:n].count(max(values[:n])) == 1)


def test_record_values_nondecreasing_property():
    rng = random.Random(0)
    for _ in range(100):
        values = [rng.randrange(10) for _ in range(50)]
        rv = record_times(values).record_values
        assert all(rv[i] <= rv[i + 1] for i in range(len(rv) - 1))


def test_criterion_verdicts():
    assert simple_records_criterion(default_p()).verdict == records.CONVERGES
    geo = simple_records_criterion(TailDistribution.geometric(Fraction(1, 2)))
    assert geo.verdict == records.DIVERGES
    fin = simple_records_criterion(TailDistribution.finite([Fraction(1, 2), Fraction(1, 2)]))
    assert fin.verdict == records.DIVERGES


def test_criterion_partial_sum_geometric_closed_form():
    # hazard ratio p_j / tail(j) is the constant 1 - r, each term (1-r)^2
    p = TailDistribution.geometric(Fraction(1, 2))
    assert criterion_partial_sum(p, 40) == 40 * Fraction(1, 4)


def test_criterion_undetermined_reports_partial_sum():
    p = TailDistribution.custom(lambda j: Fraction(1, 2) ** (j + 1))
    res = simple_records_criterion(p, partial_terms=10)
    assert res.verdict == records.UNDETERMINED
    assert res.partial_sum == 10 * Fraction(1, 4)


def test_gauge_values():
    geo = TailDistribution.geometric(Fraction(1, 2))
    assert gauge(geo, 3) == 200  # ceil(25 * 8)
    assert gauge(geo, 0) == 4    # full tail at r = 0
    poly = default_p()
    assert gauge(poly, 1) == 18  # ceil(9 / (1/2)) via exact tail sums


def test_gauge_monotone():
    for p in (default_p(), TailDistribution.geometric(Fraction(2, 3))):
        vals = [gauge(p, r) for r in range(30)]
        assert all(vals[i] <= vals[i + 1] for i in range(len(vals) - 1))


def test_gauge_beyond_support_errors():
    fin = TailDistribution.finite([Fraction(1, 2), Fraction(1, 2)])
    with pytest.raises(ValueError):
        gauge(fin, 5)


def test_sampling_deterministic():
    p = default_p()
    rng1 = random.Random(99)
    rng2 = random.Random(99)
    a = [p.sample(rng1) for _ in range(500)]
    b = [p.sample(rng2) for _ in range(500)]
    assert a == b


def test_sampling_frequencies_roughly_match():
    p = default_p()
    rng = random.Random(4)
    draws = [p.sample(rng) for _ in range(20000)]
    freq0 = draws.count(0) / len(draws)
    assert abs(freq0 - 0.5) < 0.02


def test_finite_sampling_stays_in_support():
    p = TailDistribution.finite([Fraction(1, 4), Fraction(1, 4), Fraction(1, 2)])
    rng = random.Random(8)
    assert set(p.sample(rng) for _ in range(2000)) == {0, 1, 2}


def test_gauge_validation_vacuous_horizon():
    assert empirical_gauge_validation(default_p(), 0, 10, seed=1) == 1.0


def test_gauge_validation_small():
    frac = empirical_gauge_validation(default_p(), 2000, 50, seed=7)
    assert frac >= 0.95


def test_gauge_validation_finite_support_passes():
    fin = TailDistribution.finite([Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)])
    assert empirical_gauge_validation(fin, 2000, 30, seed=3) == 1.0


def test_eventual_simplicity_small():
    stats = empirical_eventual_simplicity(default_p(), 2000, 60, seed=11)
    assert stats.fraction_simple_at_horizon >= 0.9
    geo = empirical_eventual_simplicity(
        TailDistribution.geometric(Fraction(1, 2)), 2000, 60, seed=11)
    assert geo.fraction_steps_nonsimple > 0.05


def test_eventual_simplicity_empty():
    stats = empirical_eventual_simplicity(default_p(), 100, 0, seed=0)
    assert stats.trials == 0 and stats.fraction_simple_at_horizon == 0.0


def test_spec_roundtrip():
    for p in (default_p(), TailDistribution.geometric(Fraction(1, 3)),
              TailDistribution.finite([Fraction(1, 2), Fraction(1, 2)])):
        q = TailDistribution.from_spec(p.spec())
        assert q.kind == p.kind
        assert [q.mass(j) for j in range(6)] == [p.mass(j) for j in range(6)]
