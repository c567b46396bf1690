import pytest

from grundylab.errors import TooLargeError
from grundylab.families import (
    asm_elements,
    asm_poset,
    asm_xi,
    chain,
    divisor_poset,
    set_partition_poset,
    subspace_lattice,
)
from grundylab.games import (
    GenericGame,
    TurningFamily,
    brute_force_grundy,
    check_sharp,
    combined,
    game_lengths,
    grundy_position,
    grundy_respects_isomorphism,
    moves,
    order_ideal_family,
    potential,
    product_family,
    product_grundy_prediction,
    ruler_family,
    solve_elementwise,
    turning_turtles,
)
from grundylab.nimber import ruler_phi


def ft_suite():
    yield chain(4), ("tt", "ideal", "ruler")
    yield divisor_poset(12), ("ruler", "ideal")
    yield set_partition_poset(3), ("ruler",)
    yield asm_poset(4), ("ideal", "ruler")
    yield subspace_lattice(2, 2), ("ruler",)


BUILDERS = {"tt": turning_turtles, "ideal": order_ideal_family, "ruler": ruler_family}


def test_family_counts():
    c2 = chain(2)
    assert sorted(ruler_family(c2).masks) == [0b01, 0b10, 0b11]
    for p in (chain(5), divisor_poset(12)):
        assert len(order_ideal_family(p)) == p.n
    for n in range(1, 7):
        assert len(turning_turtles(chain(n))) == n * (n + 1) // 2


def test_check_sharp():
    d12 = divisor_poset(12)
    assert check_sharp(ruler_family(d12)) is None
    assert check_sharp(order_ideal_family(d12)) is None
    assert check_sharp(turning_turtles(d12)) is None
    # {4, 6} is an antichain in the divisors of 12
    four, six = d12.index_of_label(4), d12.index_of_label(6)
    bad = TurningFamily(d12, [(1 << four) | (1 << six)])
    assert check_sharp(bad) == 0
    with pytest.raises(ValueError):
        solve_elementwise(bad)


def test_product_family_satisfies_sharp():
    p1, p2 = chain(3), chain(2)
    _, fam = product_family(p1, ruler_family(p1), p2, ruler_family(p2))
    assert check_sharp(fam) is None


def test_moves():
    c2 = chain(2)
    fam = ruler_family(c2)
    # flipping from {top}: the two intervals with maximum 2 lead to {1} and {}
    assert sorted(moves(fam, 0b10)) == [0b00, 0b01]
    # position inside the non-maxima zone is ending
    ideal = TurningFamily(c2, [0b11])  # single turning set, maximum 2
    assert moves(ideal, 0b01) == []
    assert moves(ruler_family(chain(4)), 0) == []


def test_symmetric_difference_involution():
    fam = ruler_family(divisor_poset(12))
    for pos in range(0, 64, 7):
        for mask in fam.masks:
            assert (pos ^ mask) ^ mask == pos


def test_ending_positions_avoid_maxima():
    for p, fams in ft_suite():
        for name in fams:
            fam = BUILDERS[name](p)
            heads = fam.heads_mask
            for pos in range(1 << p.n):
                assert (moves(fam, pos) == []) == (pos & heads == 0)


def test_potential():
    c2 = chain(2)
    tau = c2.linear_extension()
    assert potential(c2, tau, 0) == 0
    assert potential(c2, tau, 0b11) == 3


def test_potential_strictly_decreases():
    for p, fams in ft_suite():
        tau = p.linear_extension()
        for name in fams:
            fam = BUILDERS[name](p)
            for pos in range(1 << p.n):
                fp = potential(p, tau, pos)
                for opt in moves(fam, pos):
                    assert potential(p, tau, opt) < fp


def test_solve_elementwise_chain_examples():
    assert solve_elementwise(ruler_family(chain(1))).values == [1]
    t = solve_elementwise(ruler_family(chain(20)))
    assert t.values == [ruler_phi(x) for x in range(1, 21)]
    ti = solve_elementwise(order_ideal_family(chain(6)))
    assert ti.values == [1, 0, 0, 0, 0, 0]


def test_grundy_position():
    t = solve_elementwise(ruler_family(chain(3)))
    assert grundy_position(t, 0) == 0
    for x in range(3):
        assert grundy_position(t, 1 << x) == t.values[x]
    assert grundy_position(t, 0b111) == 1 ^ 2 ^ 1 == 2
    assert t.position(0b111) == 2


def test_brute_force_matches_elementwise_everywhere():
    for p, fams in ft_suite():
        for name in fams:
            fam = BUILDERS[name](p)
            table = solve_elementwise(fam)
            game = GenericGame.from_turning_family(fam)
            for pos in range(1 << p.n):
                assert brute_force_grundy(game, pos) == grundy_position(table, pos)


def test_brute_force_basics():
    fam = ruler_family(chain(3))
    game = GenericGame.from_turning_family(fam)
    assert brute_force_grundy(game, 0) == 0
    assert 0 in game.ending_positions()
    with pytest.raises(TooLargeError):
        GenericGame.from_turning_family(fam, cap=2)


def test_brute_force_detects_cycles():
    cyclic = GenericGame(options=[(1,), (0,)])
    with pytest.raises(ValueError):
        brute_force_grundy(cyclic, 0)


def test_option_graphs_acyclic_and_lengths_add():
    g1 = GenericGame.from_turning_family(ruler_family(chain(3)))
    g2 = GenericGame.from_turning_family(ruler_family(chain(4)))
    l1, l2 = game_lengths(g1), game_lengths(g2)
    both = combined(g1, g2)
    lb = game_lengths(both)
    for p1 in range(g1.n_positions):
        for p2 in range(g2.n_positions):
            assert lb[p1 * g2.n_positions + p2] == l1[p1] + l2[p2]


def test_combined_game_values_are_nim_sums():
    g1 = GenericGame.from_turning_family(ruler_family(chain(3)))
    g2 = GenericGame.from_turning_family(ruler_family(chain(4)))
    both = combined(g1, g2)
    endings = set(both.ending_positions())
    expected_endings = {
        p1 * g2.n_positions + p2
        for p1 in g1.ending_positions()
        for p2 in g2.ending_positions()
    }
    assert endings == expected_endings
    for p1 in range(g1.n_positions):
        for p2 in range(g2.n_positions):
            lhs = brute_force_grundy(both, p1 * g2.n_positions + p2)
            assert lhs == brute_force_grundy(g1, p1) ^ brute_force_grundy(g2, p2)


def test_combined_with_moveless_game_is_original():
    g1 = GenericGame.from_turning_family(ruler_family(chain(3)))
    null_game = GenericGame(options=[()])
    both = combined(g1, null_game)
    assert both.n_positions == g1.n_positions
    for p in range(g1.n_positions):
        assert brute_force_grundy(both, p) == brute_force_grundy(g1, p)


def test_product_family_grundy_values():
    p1, p2 = chain(3), chain(2)
    f1, f2 = ruler_family(p1), ruler_family(p2)
    prod, fam = product_family(p1, f1, p2, f2)
    got = solve_elementwise(fam).values
    predicted = product_grundy_prediction(solve_elementwise(f1), solve_elementwise(f2))
    assert got == predicted


def test_product_family_with_point_ruler_is_identity():
    p1 = divisor_poset(12)
    f1 = ruler_family(p1)
    unit = chain(1)
    prod, fam = product_family(p1, f1, unit, ruler_family(unit))
    assert solve_elementwise(fam).values == solve_elementwise(f1).values


def test_product_rulers_match_divisor_ruler():
    # the ruler on a product of chains is the product of the chain rulers:
    # intervals in a product are products of intervals
    p1, p2 = chain(3), chain(2)
    prod, fam = product_family(p1, ruler_family(p1), p2, ruler_family(p2))
    assert sorted(fam.masks) == sorted(ruler_family(prod).masks)
    d12 = divisor_poset(12)
    mapping = [0] * 6
    for i, (la, lb) in enumerate(prod.labels):
        mapping[i] = d12.index_of_label(2 ** (la - 1) * 3 ** (lb - 1))
    assert (
        grundy_respects_isomorphism(prod, fam, d12, ruler_family(d12), mapping) is None
    )


def test_grundy_respects_isomorphism():
    d12 = divisor_poset(12)
    fam = ruler_family(d12)
    identity = list(range(6))
    assert grundy_respects_isomorphism(d12, fam, d12, fam, identity) is None
    p5 = asm_poset(5)
    elems = asm_elements(5)
    xi_map = [elems.index(asm_xi(5, e)) for e in elems]
    r5 = ruler_family(p5)
    assert grundy_respects_isomorphism(p5, r5, p5, r5, xi_map) is None
    with pytest.raises(ValueError):
        grundy_respects_isomorphism(d12, fam, d12, fam, [0] * 6)
    with pytest.raises(ValueError):
        # order-reversing map
        rev = [5, 4, 3, 2, 1, 0]
        grundy_respects_isomorphism(d12, fam, d12, fam, rev)


def test_grundy_respects_isomorphism_reports_counterexample():
    # same poset, two genuinely different families related by an order
    # automorphism requirement that fails
    c2 = chain(2)
    f1 = TurningFamily(c2, [0b01, 0b10])
    f2 = TurningFamily(c2, [0b01, 0b11])
    with pytest.raises(ValueError):
        grundy_respects_isomorphism(c2, f1, c2, f2, [0, 1])
