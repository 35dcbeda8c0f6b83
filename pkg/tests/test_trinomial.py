import math
import random

import pytest

from linsplit.errors import ArgOutOfRange, InfeasibleSweep, OutsideTheoremRange
from linsplit.ff_core import make_field
from linsplit.linpoly import LinearizedPoly, nullity_bruteforce, nullity_fast
from linsplit.numtheory import exponents
from linsplit.trinomial import (
    CaseTag,
    TheoremReport,
    TrinomialParams,
    boundary_candidates,
    canonical_b,
    classify,
    count_splitting,
    enumerate_splitting,
    necessary_norm_filter,
    norm_condition_holds,
    predict,
    sample_splitting,
    secondary_condition_check,
    sweep,
    theorem_candidates,
    trinomial_nullity,
    verify_theorem,
)


def splitting_by_bruteforce(F, d):
    """Oracle: pairs whose trinomial has d-dimensional kernel over GF(q), via the GF(p) matrix."""
    out = []
    for a in F.elements():
        for b in F.elements():
            if nullity_bruteforce(LinearizedPoly.trinomial(F, d, a, b)) == d:
                out.append((a, b))
    return out


def multiplicative_order(F, a):
    x, k = a, 1
    while x != 1:
        x, k = F.mul(x, a), k + 1
    return k


# -- exponents and classification ---------------------------------------------------------


@pytest.mark.parametrize("q,d,e1,e2", [(2, 3, 73, 20), (2, 2, 5, 2), (3, 2, 10, 3)])
def test_exponents_examples(q, d, e1, e2):
    e = exponents(q, d)
    assert (e.e1, e.e2) == (e1, e2)


def test_classify():
    assert classify(5, 3) == (CaseTag.NO_SPLIT_POSSIBLE, None)
    assert classify(6, 3) == (CaseTag.DIVIDES, 2)
    assert classify(3, 3) == (CaseTag.DIVIDES, 1)
    assert classify(7, 3) == (CaseTag.BOUNDARY, None)
    assert classify(8, 3) == (CaseTag.OUTSIDE, None)
    assert classify(3, 2) == (CaseTag.BOUNDARY, None)
    with pytest.raises(ArgOutOfRange):
        classify(3, 1)


# -- predict --------------------------------------------------------------------------


def test_predict_examples():
    F = make_field(2, 1, 5)
    for a, b in [(0, 0), (1, 0), (3, 17)]:
        v = predict(TrinomialParams(F, 3, a, b))
        assert v.case_tag is CaseTag.NO_SPLIT_POSSIBLE and v.predicted_splits is False
    G = make_field(2, 1, 3)
    v = predict(TrinomialParams(G, 3, 1, 0))
    assert v.case_tag is CaseTag.DIVIDES and v.i == 1 and v.predicted_splits is True
    H = make_field(3, 1, 7)
    rng = random.Random(3)
    for _ in range(50):
        a, b = H.random_element(rng), H.random_element(rng)
        v = predict(TrinomialParams(H, 3, a, b))
        assert v.case_tag is CaseTag.BOUNDARY and v.predicted_splits is False
        assert v.conditions["char_power"] is False


def test_predict_outside_range_is_unknown():
    F = make_field(2, 1, 8)
    v = predict(TrinomialParams(F, 3, 5, 6))
    assert v.case_tag is CaseTag.OUTSIDE and v.predicted_splits is None


def test_trinomial_params_validation():
    F = make_field(2, 1, 3)
    with pytest.raises(ArgOutOfRange):
        TrinomialParams(F, 1, 1, 1)
    with pytest.raises(ValueError):
        TrinomialParams(F, 2, 8, 0)
    TrinomialParams(F, 2, 3, 0)  # b = 0 is legal


# -- boundary helpers -----------------------------------------------------------------


def test_canonical_b_examples():
    F = make_field(2, 1, 7)
    # q*e1 = 146 = 19 mod 127
    assert exponents(2, 3).e1 * 2 % 127 == 19
    assert all(canonical_b(F, 3, a) == F.pow(a, 19) for a in F.nonzero())
    G = make_field(2, 1, 3)
    assert all(canonical_b(G, 2, a) == G.pow(a, 3) for a in G.nonzero())
    H = make_field(3, 1, 3)
    assert canonical_b(H, 2, 1) == H.neg(1)
    with pytest.raises(ArgOutOfRange):
        canonical_b(F, 3, 0)


def test_norm_condition_examples():
    F = make_field(2, 1, 7)
    assert all(norm_condition_holds(F, 3, a) for a in F.nonzero())
    assert not norm_condition_holds(F, 3, 0)
    G = make_field(3, 1, 3)
    # oracle: a^13 = -1 by repeated multiplication
    minus_one = G.neg(1)
    brute = [a for a in G.nonzero() if _pow_slow(G, a, 13) == minus_one]
    hits = [a for a in G.nonzero() if norm_condition_holds(G, 2, a)]
    assert hits == brute and len(hits) == 13


def _pow_slow(F, a, e):
    r = 1
    for _ in range(e):
        r = F.mul(r, a)
    return r


def test_secondary_condition_examples():
    F = make_field(2, 1, 7)
    e = exponents(2, 3)
    assert 1 + 2 * e.e1 * e.e2 == 2921 == 23 * 127
    assert all(secondary_condition_check(F, 3, a) for a in F.nonzero())
    for p, d in [(3, 2), (3, 3), (5, 2), (2, 2)]:
        G = make_field(p, 1, d * (d - 1) + 1)
        assert secondary_condition_check(G, d, 1) == (d % 2 == 1 or p == 2)


@pytest.mark.parametrize("p,s,d", [(2, 1, 2), (2, 1, 3), (3, 1, 2), (3, 1, 3), (5, 1, 2), (2, 2, 2), (7, 1, 2)])
def test_norm_condition_implies_secondary(p, s, d):
    F = make_field(p, s, d * (d - 1) + 1)
    for a in F.nonzero():
        if norm_condition_holds(F, d, a):
            assert secondary_condition_check(F, d, a)


def test_necessary_norm_filter_examples():
    F = make_field(3, 1, 4)
    for a in F.elements():
        params = TrinomialParams(F, 2, a, 0)
        assert necessary_norm_filter(params) == (a != 0 and F.norm_rel(a) == 1)
    assert not necessary_norm_filter(TrinomialParams(F, 2, 0, 5))
    assert any(F.norm_rel(a) != 1 for a in F.nonzero())


# -- enumeration ----------------------------------------------------------------------


def test_enumerate_boundary_q2_d3_n7():
    F = make_field(2, 1, 7)
    pairs = enumerate_splitting(F, 3, "both")
    assert len(pairs) == 127 == (2**7 - 1) // (2 - 1)
    assert pairs == [(a, F.pow(a, 19)) for a in range(1, 128)]


def test_enumerate_divides_q2_d3_n6():
    F = make_field(2, 1, 6)
    pairs = enumerate_splitting(F, 3, "both")
    assert len(pairs) == 9 == math.gcd(9, 63)
    assert all(b == 0 and F.pow(a, 9) == 1 for a, b in pairs)
    assert pairs == splitting_by_bruteforce(F, 3)


def test_enumerate_empty_q2_d3_n5():
    assert enumerate_splitting(make_field(2, 1, 5), 3, "both") == []


@pytest.mark.parametrize("p,s,d,n", [(2, 1, 2, 2), (2, 1, 2, 3), (3, 1, 2, 2), (3, 1, 2, 3), (2, 2, 2, 2), (2, 2, 2, 3), (2, 1, 3, 3), (2, 1, 3, 4)])
def test_enumerate_matches_bruteforce_oracle(p, s, d, n):
    F = make_field(p, s, n)
    pairs = enumerate_splitting(F, d, "both")
    assert pairs == splitting_by_bruteforce(F, d)
    assert len(pairs) == count_splitting(F, d)


def test_count_splitting_examples():
    assert count_splitting(make_field(2, 1, 7), 3) == 127
    assert count_splitting(make_field(2, 1, 6), 3) == 9
    assert count_splitting(make_field(3, 1, 7), 3) == 0
    assert count_splitting(make_field(2, 1, 5), 3) == 0
    with pytest.raises(OutsideTheoremRange):
        count_splitting(make_field(2, 1, 8), 3)


@pytest.mark.parametrize("p,s,d,n", [(2, 1, 2, 1), (2, 1, 2, 2), (2, 1, 2, 3), (2, 1, 3, 2), (2, 1, 3, 3), (2, 1, 3, 4), (2, 1, 3, 5), (2, 1, 3, 6), (2, 1, 3, 7), (3, 1, 2, 2), (3, 1, 2, 3), (2, 2, 2, 2), (2, 2, 2, 3)])
def test_count_identity_and_soundness(p, s, d, n):
    F = make_field(p, s, n)
    res = sweep(F, d)
    assert res.counterexamples == []
    assert len(res.splitting) == count_splitting(F, d)
    assert sum(res.census.values()) == F.order**2


def test_divides_count_is_cyclic_group_count():
    # gcd(E, q^n - 1) against a direct count of a^E = 1
    for p, s, d, n in [(2, 1, 3, 6), (2, 1, 2, 2), (3, 1, 2, 2), (2, 1, 4, 8), (5, 1, 2, 2), (2, 2, 3, 6)]:
        F = make_field(p, s, n)
        E = sum(F.q ** (j * d) for j in range(n // d))
        direct = sum(1 for a in F.nonzero() if F.pow(a, E) == 1)
        assert count_splitting(F, d) == direct


def test_q_power_closure():
    for p, s, d, n in [(2, 1, 3, 7), (2, 1, 3, 6), (3, 1, 2, 3), (2, 2, 2, 3)]:
        F = make_field(p, s, n)
        pairs = set(enumerate_splitting(F, d, "exhaustive"))
        for a, b in pairs:
            assert (F.frobenius_q(a, 1), F.frobenius_q(b, 1)) in pairs


def test_part3_properties():
    for p, s, d in [(2, 1, 2), (2, 1, 3), (3, 1, 2), (2, 2, 2)]:
        F = make_field(p, s, d * (d - 1) + 1)
        for a, b in enumerate_splitting(F, d, "both"):
            assert necessary_norm_filter(TrinomialParams(F, d, a, b))
            assert b == canonical_b(F, d, a)


def test_necessary_filter_holds_on_all_splitters():
    for d, ns in [(2, range(1, 8)), (3, range(2, 8))]:
        for n in ns:
            F = make_field(2, 1, n)
            for a, b in sweep(F, d, check_predict=False).splitting:
                assert necessary_norm_filter(TrinomialParams(F, d, a, b))


def test_boundary_q3_d2_n3():
    F = make_field(3, 1, 3)
    pairs = enumerate_splitting(F, 2, "both")
    expected = [(a, canonical_b(F, 2, a)) for a in F.nonzero() if norm_condition_holds(F, 2, a)]
    assert pairs == expected and len(pairs) == 13


def test_odd_boundary_candidates_never_split():
    F = make_field(3, 1, 7)
    cands = boundary_candidates(F, 3)
    assert len(cands) == 1093 == (3**7 - 1) // 2
    assert theorem_candidates(F, 3) == []
    rng = random.Random(7)
    for a, b in rng.sample(cands, 100):
        assert trinomial_nullity(F, 3, a, b) < 3


def test_sampling_finds_known_splitters():
    F = make_field(2, 1, 7)
    hits = sample_splitting(F, 3, 3000, random.Random(1))
    assert all(b == F.pow(a, 19) for a, b in hits)


def test_sweep_guard():
    with pytest.raises(InfeasibleSweep):
        sweep(make_field(2, 1, 14), 3)
    with pytest.raises(InfeasibleSweep):
        enumerate_splitting(make_field(2, 1, 14), 3, "exhaustive")


def test_sweep_deterministic_across_workers():
    F = make_field(2, 1, 6)
    one = sweep(F, 3, workers=1)
    two = sweep(F, 3, workers=2)
    assert one.splitting == two.splitting and one.census == two.census


# -- theorem reports ------------------------------------------------------------------


def test_verify_examples():
    r1 = verify_theorem(1, 2, 3, [2, 4, 5])
    assert [r.splitting_count for r in r1] == [0, 0, 0] and all(r.ok for r in r1)
    r2 = verify_theorem(2, 2, 3, [3, 6])
    assert [r.splitting_count for r in r2] == [1, 9] and all(r.ok for r in r2)
    (r3,) = verify_theorem(3, 2, 2, [3])
    assert r3.splitting_count == 7 and r3.ok
    assert sum(r3.census.values()) == 64
    assert set(r3.census) <= {"nullity_0", "nullity_1", "nullity_2"}


def test_verify_rejects_wrong_part():
    with pytest.raises(ArgOutOfRange):
        verify_theorem(1, 2, 3, [3])
    with pytest.raises(ArgOutOfRange):
        verify_theorem(4, 2, 3, [3])


def test_report_json_roundtrip():
    (r,) = verify_theorem(2, 2, 3, [3])
    data = r.to_json()
    assert set(data) == {"q", "d", "n", "part", "splitting_count", "counterexamples", "census"}
    assert TheoremReport.from_json(data) == r


def test_trinomial_nullity_matches_linpoly(small_field, rng):
    F = small_field
    for _ in range(100):
        d = rng.randrange(2, 5)
        a, b = F.random_element(rng), F.random_element(rng)
        assert trinomial_nullity(F, d, a, b) == nullity_fast(LinearizedPoly.trinomial(F, d, a, b))
