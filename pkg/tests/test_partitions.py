import random
from collections import Counter

import pytest

from grundylab.errors import BudgetExceededError, WeightMismatchError
from grundylab.families import (
    restricted_growth_strings,
    rgs_to_blocks,
    set_partition_poset,
)
from grundylab.games import ruler_family, solve_elementwise
from grundylab.partitions import (
    decompositions,
    g_of_type,
    h_sequence,
    multiplicities,
    multiplicity_M,
    partition_union,
    partitions_of,
    refinement_poset,
    refines,
    s_of_mu,
    type_of,
)

H_TABLE = [1, 2, 1, 4, 1, 2, 1, 7, 15, 16, 8, 5, 19, 5, 37, 17, 14]


def bell(n):
    row = [1]
    for _ in range(n):
        new = [row[-1]]
        for v in row:
            new.append(new[-1] + v)
        row = new
    return row[0]


def test_partitions_of():
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    counts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n, c in enumerate(counts):
        assert len(partitions_of(n)) == c


def test_multiplicities_and_union():
    assert multiplicities((2, 1, 1)) == Counter({1: 2, 2: 1})
    assert partition_union((2, 1, 1), (3, 2, 2, 1, 1, 1)) == (3, 2, 2, 2, 1, 1, 1, 1, 1)


def test_refines_examples():
    assert refines((5, 5, 1), (6, 5))
    assert not refines((5, 5, 1), (7, 4))
    for lam in partitions_of(6):
        assert refines(lam, lam)
        assert refines((1,) * 6, lam)
        assert refines(lam, (6,))
    with pytest.raises(WeightMismatchError):
        refines((2, 1), (4,))


def test_decompositions_worked_example():
    got = decompositions((4, 2), (2, 2, 1, 1))
    assert sorted(got) == sorted([((2, 2), (1, 1)), ((2, 1, 1), (2,))])
    assert decompositions((3, 1), (2, 1, 1)) == [((2, 1), (1,))]
    for lam in partitions_of(5):
        assert decompositions(lam, lam) == [tuple((p,) for p in lam)]
    assert decompositions((7, 4), (5, 5, 1)) == []


def test_decompositions_components_recombine():
    for lam in partitions_of(7):
        for mu in partitions_of(7):
            for nu in decompositions(lam, mu):
                assert tuple(sorted((sum(c) for c in nu), reverse=True)) == lam
                merged = []
                for c in nu:
                    merged.extend(c)
                assert tuple(sorted(merged, reverse=True)) == mu
            seen = set(decompositions(lam, mu))
            assert len(seen) == len(decompositions(lam, mu))


def test_multiplicity_worked_values():
    mu = (2, 1, 1)
    assert multiplicity_M((2, 1, 1), mu) == 1
    assert multiplicity_M((3, 1), mu) == 2
    assert multiplicity_M((2, 2), mu) == 1
    with pytest.raises(WeightMismatchError):
        multiplicity_M((3,), (2, 1, 1))


def brute_count_above(n, lam, pi_rgs):
    pi_blocks = rgs_to_blocks(pi_rgs)
    count = 0
    for tau in restricted_growth_strings(n):
        if type_of(tau) != lam:
            continue
        tau_owner = {}
        for i, b in enumerate(tau):
            tau_owner[i + 1] = b
        if all(len({tau_owner[e] for e in block}) == 1 for block in pi_blocks):
            count += 1
    return count


def test_multiplicity_against_brute_force_counts():
    rng = random.Random(0)
    for n in range(1, 7):
        by_type = {}
        for rgs in restricted_growth_strings(n):
            by_type.setdefault(type_of(rgs), []).append(rgs)
        for mu, reps in by_type.items():
            chosen = reps if len(reps) <= 3 else rng.sample(reps, 3)
            for lam in partitions_of(n):
                expected = multiplicity_M(lam, mu)
                for pi in chosen:
                    assert brute_count_above(n, lam, pi) == expected


def test_sum_over_singletons_is_bell():
    for n in range(1, 9):
        total = sum(multiplicity_M(lam, (1,) * n) for lam in partitions_of(n))
        assert total == bell(n)


def test_type_of():
    assert type_of((0, 1, 2, 1)) == (2, 1, 1)
    assert type_of((0, 0, 0, 0)) == (4,)
    assert type_of((0, 1, 2, 3)) == (1, 1, 1, 1)


def test_g_of_type():
    h = [0, 1, 2, 1, 4]
    assert g_of_type((1, 1, 1), h) == 1
    assert g_of_type((2, 2), h) == 3
    assert g_of_type((2, 1, 1), h) == 2
    assert g_of_type((4,), h) == 4


def test_s_of_mu_worked_example():
    h = [0, 1, 2, 1]
    assert s_of_mu(4, (4,), h) == 0
    assert s_of_mu(4, (2, 1, 1), h) == 1
    assert s_of_mu(4, (1, 1, 1, 1), h) == 2
    got = [s_of_mu(4, mu, h) for mu in partitions_of(4)]
    assert got == [0, 1, 3, 1, 2]


def test_h_sequence_table():
    h = h_sequence(12)
    assert h[1:] == H_TABLE[:12]
    assert h[4] == 4


def test_h_sequence_budget_guard():
    with pytest.raises(BudgetExceededError):
        h_sequence(40, max_seconds=0.0)


def test_h_matches_ruler_solver_on_set_partitions():
    h = h_sequence(5)
    for n in range(1, 6):
        p = set_partition_poset(n)
        table = solve_elementwise(ruler_family(p))
        assert table.values[p.maximum()] == h[n]


def test_grundy_values_constant_on_type_classes():
    h = h_sequence(5)
    for n in range(2, 6):
        p = set_partition_poset(n)
        table = solve_elementwise(ruler_family(p))
        rgs_list = list(restricted_growth_strings(n))
        for i, rgs in enumerate(rgs_list):
            lam = type_of(rgs)
            if lam == (n,):
                assert table.values[i] == h[n]
            else:
                assert table.values[i] == g_of_type(lam, h)


def test_refinement_poset_is_valid_partial_order():
    for n in range(1, 13):
        p = refinement_poset(n)  # construction validates the axioms
        assert p.n == len(partitions_of(n))
    p4 = refinement_poset(4)
    labels = p4.labels
    idx = {lam: i for i, lam in enumerate(labels)}
    assert set(p4.covers()) == {
        (idx[(1, 1, 1, 1)], idx[(2, 1, 1)]),
        (idx[(2, 1, 1)], idx[(3, 1)]),
        (idx[(2, 1, 1)], idx[(2, 2)]),
        (idx[(3, 1)], idx[(4,)]),
        (idx[(2, 2)], idx[(4,)]),
    }
    assert p4.label(p4.maximum()) == (4,)
    assert p4.label(p4.minimum()) == (1, 1, 1, 1)


def test_type_map_is_order_preserving():
    for n in range(2, 7):
        p = set_partition_poset(n)
        rgs_list = list(restricted_growth_strings(n))
        for i in range(p.n):
            for j in range(p.n):
                if p.leq(i, j):
                    assert refines(type_of(rgs_list[i]), type_of(rgs_list[j]))
