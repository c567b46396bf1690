import pytest

from grundylab.errors import UnsupportedFieldError
from grundylab.families import q_binomial
from grundylab.gf import FiniteField, field, prime_power, rref_matrices, subspace_leq

SUPPORTED_Q = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]


def test_prime_power():
    assert prime_power(2) == (2, 1)
    assert prime_power(32) == (2, 5)
    assert prime_power(27) == (3, 3)
    assert prime_power(1) is None
    assert prime_power(6) is None
    assert prime_power(12) is None


def test_unsupported_orders():
    for q in (1, 6, 10, 33, 64):
        with pytest.raises(UnsupportedFieldError):
            FiniteField(q)


@pytest.mark.parametrize("q", SUPPORTED_Q)
def test_field_axioms_exhaustive(q):
    f = field(q)
    els = list(f.elements())
    for a in els:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
        for b in els:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in els:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_field_has_no_zero_divisors():
    for q in (4, 8, 9, 16, 25, 27, 32):
        f = field(q)
        for a in range(1, q):
            for b in range(1, q):
                assert f.mul(a, b) != 0


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
def test_subspace_counts_match_q_binomials(n, q):
    f = field(q)
    for r in range(n + 1):
        count = sum(1 for _ in rref_matrices(f, n, r))
        assert count == q_binomial(n, r, q)


def test_rref_canonical_and_distinct():
    f = field(3)
    seen = set(rref_matrices(f, 3, 2))
    assert len(seen) == q_binomial(3, 2, 3)
    for rows in seen:
        pivots = [next(j for j, v in enumerate(row) if v) for row in rows]
        assert pivots == sorted(pivots)
        for i, row in enumerate(rows):
            assert row[pivots[i]] == 1
            for k, other in enumerate(pivots):
                if k != i:
                    assert row[other] == 0


def test_subspace_leq():
    f = field(2)
    zero = ()
    full = tuple(rref_matrices(f, 2, 2))[0]
    lines = list(rref_matrices(f, 2, 1))
    assert subspace_leq(f, zero, zero)
    for line in lines:
        assert subspace_leq(f, zero, line)
        assert subspace_leq(f, line, full)
        assert not subspace_leq(f, full, line)
    assert not subspace_leq(f, lines[0], lines[1])


def test_interval_in_subspace_lattice_looks_like_smaller_lattice():
    # layer sizes of [U, W] match the subspace counts of a (dim W - dim U)-
    # dimensional space, by quotient dimension counting
    import random

    from grundylab.families import subspace_dimensions, subspace_lattice

    rng = random.Random(1)
    for q in (2, 3):
        for n in (2, 3, 4):
            p = subspace_lattice(n, q)
            dims = subspace_dimensions(n, q)
            for _ in range(5):
                u = rng.randrange(p.n)
                above = [w for w in range(p.n) if p.leq(u, w)]
                w = rng.choice(above)
                members = p.interval(u, w).members
                du, dw = dims[u], dims[w]
                for r in range(dw - du + 1):
                    layer = sum(1 for t in members if dims[t] == du + r)
                    assert layer == q_binomial(dw - du, r, q)
