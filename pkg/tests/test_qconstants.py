import itertools
import json
import random
from collections import defaultdict
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cominq.qconstants import (
    DegreeSequence, GWTables, alt_binomial_sum, assemble_direct, assemble_matrix,
    cancellation_sum, chain_euler, count_sequences, degenerate_tables, enumerate_sequences,
    random_tables,
)


def brute_sequences(d):
    """All (d_0, ..., d_r) with sum d, d_0 >= 0, d_i >= 1, by filtering a product."""
    out = set()
    for length in range(1, d + 2):
        for seq in itertools.product(range(d + 1), repeat=length):
            if sum(seq) == d and all(x >= 1 for x in seq[1:]):
                out.add(seq)
    return out


def one_dim(a, b):
    """n = 1 tables: A_d = a[d], T_d = b[d] (b[0] ignored)."""
    return GWTables.from_lists([[x] for x in a], [[x] for x in b[1:]])


def test_degree_sequence_validation():
    s = DegreeSequence((0, 1, 2))
    assert (s.total, s.r, s.sign) == (3, 2, 1)
    assert DegreeSequence((2, 1)).sign == -1
    for bad in [(), (-1,), (1, 0), (0, 2, 0)]:
        with pytest.raises(ValueError):
            DegreeSequence(bad)


def test_enumerate_examples():
    assert [s.entries for s in enumerate_sequences(0)] == [(0,)]
    # d_0 descending, then lexicographic: (0, 1, 1) precedes (0, 2)
    assert [s.entries for s in enumerate_sequences(2)] == [(2,), (1, 1), (0, 1, 1), (0, 2)]
    assert len(enumerate_sequences(3)) == 8
    with pytest.raises(ValueError):
        enumerate_sequences(-1)


@pytest.mark.parametrize("d", range(0, 8))
def test_enumerate_matches_brute_force(d):
    seqs = [s.entries for s in enumerate_sequences(d)]
    assert len(seqs) == len(set(seqs))
    assert set(seqs) == brute_sequences(d)
    assert len(seqs) == max(1, 2 ** (d - 1) * 2 if d else 1)


def test_count_sequences_examples():
    assert count_sequences(5, 1, 3) == 3
    assert count_sequences(7, 7, 1) == 1
    assert count_sequences(4, 2, 2) == 1
    assert count_sequences(4, 2, 1) == 0
    assert count_sequences(4, 5, 2) == 0


@pytest.mark.parametrize("d", range(1, 21))
def test_count_sequences_sums_to_power_of_two(d):
    assert sum(count_sequences(d, d0, length) for d0 in range(d + 1) for length in range(1, d + 2)) == 2 ** d


def test_alt_binomial_examples():
    assert alt_binomial_sum(3) == 0
    assert alt_binomial_sum(1) == -1
    assert alt_binomial_sum(2) == 0
    with pytest.raises(ValueError):
        alt_binomial_sum(0)


def test_cancellation_examples():
    c = {0: 5, 1: -7, 2: 11}.__getitem__
    assert cancellation_sum(3, 2, c) == 0
    assert cancellation_sum(2, 2, c) == c(2) - c(1)
    for k in (1, 2, 5):
        assert cancellation_sum(1, k, c if k <= 2 else (lambda x: 3 * x * x + 1)) == \
            (c(1) - c(0) if k <= 2 else 4 - 1)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 9), st.data())
def test_cancellation_below_degree(d, data):
    dmax = data.draw(st.integers(0, d - 1))
    values = data.draw(st.lists(st.integers(-10**6, 10**6), min_size=dmax + 1, max_size=dmax + 1))
    assert cancellation_sum(d, dmax, values.__getitem__) == 0


def test_assemble_examples():
    t = one_dim([1, 1, 1], [0, 2, 3])
    r = assemble_direct(t, 0, 0, 0, 2)
    assert r.value == 1 - 1 * 2 - 1 * 3 + 1 * 2 * 2 == 0
    assert [x["term"] for x in r.terms] == [1, -2, 4, -3]
    assert assemble_matrix(t, 0, 0, 0, 2) == 0
    a, b = 7, -4
    t = one_dim([a, a], [0, b])
    assert assemble_direct(t, 0, 0, 0, 1).value == a - a * b
    assert assemble_matrix(t, 0, 0, 0, 1) == a - a * b


def test_degree_zero_is_classical_constant():
    t = random_tables(3, 2, seed=5)
    for u, v, w in itertools.product(range(3), repeat=3):
        assert assemble_direct(t, u, v, w, 0).value == t.three_point[0][u, v, w]
        assert assemble_matrix(t, u, v, w, 0) == t.three_point[0][u, v, w]


def test_chain_euler_examples():
    t = one_dim([2, 3], [0, 5])
    assert chain_euler(t, DegreeSequence((1,)), 0, 0, 0) == 3
    assert chain_euler(t, DegreeSequence((1, 1)), 0, 0, 0) == 3 * 5
    t = random_tables(3, 3, seed=11)
    bd = DegreeSequence((0, 2, 1))
    expected = sum(t.three_point[0][1, 2, k] * t.two_point[2][k, l] * t.two_point[1][l, 0]
                   for k in range(3) for l in range(3))
    assert chain_euler(t, bd, 1, 2, 0) == expected


def test_degree_out_of_range():
    t = random_tables(2, 2, seed=0)
    with pytest.raises(ValueError):
        assemble_direct(t, 0, 0, 0, 3)
    with pytest.raises(ValueError):
        assemble_matrix(t, 0, 0, 0, 3)
    with pytest.raises(ValueError):
        chain_euler(t, DegreeSequence((0, 3)), 0, 0, 0)


def test_table_shape_validation():
    with pytest.raises(ValueError):
        GWTables(2, 1, (np.zeros((2, 2, 2), dtype=object),), (np.zeros((2, 2), dtype=object),))
    with pytest.raises(ValueError):
        GWTables(2, 0, (np.zeros((3, 3, 3), dtype=object),), (np.zeros((2, 2), dtype=object),))


def test_random_tables_reproducible():
    a, b = random_tables(3, 2, seed=2**63 - 1), random_tables(3, 2, seed=2**63 - 1)
    assert all((x == y).all() for x, y in zip(a.three_point, b.three_point))
    c = random_tables(3, 2, seed=1, low=10, high=12)
    assert all(10 <= int(x) <= 12 for x in c.three_point[1].flat)


def test_exact_arithmetic_has_no_overflow():
    big = 2 ** 62
    t = one_dim([big, big, big], [0, big, big])
    r = assemble_direct(t, 0, 0, 0, 2)
    assert r.value == big - big * big - big * big + big ** 3
    assert assemble_matrix(t, 0, 0, 0, 2) == r.value


@pytest.mark.parametrize("seed", range(5))
def test_three_routes_agree(seed):
    rng = random.Random(seed)
    n, D = rng.randint(1, 4), rng.randint(0, 4)
    t = random_tables(n, D, seed)
    for u, v, w in itertools.product(range(n), repeat=3):
        for d in range(D + 1):
            x = assemble_direct(t, u, v, w, d)
            chained = sum(s.sign * chain_euler(t, s, u, v, w) for s in enumerate_sequences(d))
            assert x.value == assemble_matrix(t, u, v, w, d) == chained
            assert x.value == sum(term["term"] for term in x.terms)


def grouped_terms(report):
    groups = defaultdict(list)
    for term in report.terms:
        seq = term["sequence"]
        groups[(seq[0], len(seq) - 1)].append(term["term"])
    return groups


@pytest.mark.parametrize("dmax,seed", [(1, 0), (2, 1), (2, 2), (3, 3)])
def test_degenerate_grouping(dmax, seed):
    n, D = 3, 5
    t = degenerate_tables(n, D, dmax, seed)
    for u, v, w in [(0, 0, 0), (1, 2, 0), (2, 1, 2)]:
        for d in range(D + 1):
            for (d0, r), terms in grouped_terms(assemble_direct(t, u, v, w, d)).items():
                assert len(terms) == count_sequences(d, d0, r + 1)
                common = (-1) ** r * terms[0]
                assert sum(terms) == (-1) ** r * len(terms) * common
                assert set(terms) == {(-1) ** r * common}
            # the common value itself only sees min(d_0, dmax)
            if d > dmax + 1:
                hi = grouped_terms(assemble_direct(t, u, v, w, d))
                assert hi[(d, 0)] == [t.three_point[dmax][u, v, w]]


def test_grouping_fails_when_two_point_slices_vary():
    # negative control: with T_1 != T_2 the tails (1, 2) and (2, 1) give different chain products
    t = random_tables(2, 3, seed=9)
    t = GWTables(2, 3, tuple(t.three_point[min(d, 2)] for d in range(4)),
                 (t.two_point[0], t.two_point[1], t.two_point[2], t.two_point[2]))
    groups = grouped_terms(assemble_direct(t, 0, 1, 1, 3))
    assert len(set(groups[(0, 2)])) == 2


@pytest.mark.parametrize("dmax", [0, 1, 2, 3])
def test_vanishing_above_dmax_with_identity_two_point(dmax):
    """With T_d = identity the sum collapses to cancellation_sum, hence vanishes for d > dmax."""
    n, D = 3, 6
    base = degenerate_tables(n, D, dmax, seed=dmax)
    eye = np.identity(n, dtype=object)
    t = GWTables(n, D, base.three_point, (base.two_point[0],) + (eye,) * D)
    for u, v, w in itertools.product(range(n), repeat=3):
        c = lambda k: int(t.three_point[k][u, v, w])
        for d in range(D + 1):
            value = assemble_matrix(t, u, v, w, d)
            assert value == cancellation_sum(d, dmax, c)
            if d > dmax:
                assert value == 0


def test_degenerate_tables_depend_on_truncated_degree():
    t = degenerate_tables(2, 5, 2, seed=3)
    assert all((t.three_point[d] == t.three_point[2]).all() for d in range(2, 6))
    assert all((t.two_point[d] == t.two_point[1]).all() for d in range(1, 6))
    assert degenerate_tables(2, 0, 0, seed=3).max_degree == 0


def test_report_json():
    t = random_tables(2, 2, seed=4)
    doc = assemble_direct(t, 0, 1, 1, 2).to_json()
    json.dumps(doc)
    assert doc["total"] == sum(x["term"] for x in doc["terms"])
    assert all(set(x) == {"sequence", "sign", "term"} for x in doc["terms"])
    assert [x["sequence"] for x in doc["terms"]] == [[2], [1, 1], [0, 1, 1], [0, 2]]
    assert [x["sign"] for x in doc["terms"]] == [1, -1, 1, -1]


def test_alt_binomial_vanishes():
    assert all(alt_binomial_sum(k) == 0 for k in range(2, 21))
    assert all(sum((-1) ** r * comb(k - 1, r - 1) for r in range(1, k + 1)) == alt_binomial_sum(k)
               for k in range(1, 21))
