"""Closed-form Grundy functions and the recurrences that certify them.

Each function here evaluates a proven formula directly; the test suite
re-derives every one of them from `solve_elementwise` on small instances.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoMinimumError, NotADivisorError, NotGradedError
from .families import q_binomial_parity
from .nimber import mex, nim_product, nu2, ruler_phi
from .poset import FinitePoset


def chain_ruler_grundy(x: int) -> int:
    """Ruler on a chain: the ruler sequence itself."""
    return ruler_phi(x)


def divisor_ruler_grundy(n: int, y: int) -> int:
    """Ruler on the divisors of n: nim-product of ruler values over the
    prime exponents of the divisor y, each shifted by one."""
    if n < 1 or y < 1 or n % y != 0:
        raise NotADivisorError(f"{y} does not divide {n}")
    exps = []
    m = y
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            exps.append(e)
        d += 1
    if m > 1:
        exps.append(1)
    return nim_product(ruler_phi(e + 1) for e in exps)


def subspace_ruler_grundy(q: int, d: int) -> int:
    """Ruler on the lattice of subspaces: a d-dimensional subspace scores
    ruler_phi(d+1) when q is even and d mod 3 + 1 when q is odd."""
    if d < 0:
        raise ValueError("dimension must be non-negative")
    if q % 2 == 0:
        return ruler_phi(d + 1)
    return d % 3 + 1


@dataclass
class SubspaceRecurrenceState:
    """Tables g_q(d) and s_q(d, m) built from the subspace-ruler recurrence."""

    q: int
    d_max: int
    g: list[int]
    s: dict[tuple[int, int], int]


def subspace_recurrence(q: int, d_max: int) -> SubspaceRecurrenceState:
    """Grundy values of subspace rulers by dimension, via the recurrence

        s(d, m) = nim-sum over k in [m, d) of parity(qbinom(d-m, k-m)) * g(k)
        g(d)    = mex { s(d, m) : m = 0..d }

    The s table is filled by increasing d and, within one d, by decreasing m,
    matching the dependency order of the reduction identity
    s(d, m) = s(d, m+1) + s(d-1, m) + g(d-1) that holds for odd q.
    """
    g: list[int] = []
    s: dict[tuple[int, int], int] = {}
    for d in range(d_max + 1):
        for m in range(d, -1, -1):
            acc = 0
            for k in range(m, d):
                if q_binomial_parity(d - m, k - m, q):
                    acc ^= g[k]
            s[(d, m)] = acc
        g.append(mex(s[(d, m)] for m in range(d + 1)))
    return SubspaceRecurrenceState(q, d_max, g, s)


def graded_order_ideal_grundy(p: FinitePoset) -> list[int]:
    """Order-ideal game on a graded poset with a unique minimum: value 1 at
    the minimum, 0 everywhere else."""
    if p.rank_function() is None:
        raise NotGradedError("poset is not graded")
    bottom = p.minimum()
    if bottom is None:
        raise NoMinimumError("poset has no unique minimum")
    return [1 if x == bottom else 0 for x in range(p.n)]


def order_ideal_parity(p: FinitePoset, x: int, lower_values) -> int:
    """Order-ideal game parity rule: an element scores 1 exactly when an
    even number of elements strictly below it score 1."""
    ones = sum(
        1 for t in p.principal_ideal(x) if t != x and lower_values[t] == 1
    )
    return 0 if ones % 2 else 1


def asm_ideal_grundy(n: int, e) -> int:
    """Order-ideal game on the ASM poset: value 1 iff the rank is 0 or
    equals 2z +/- 1."""
    x, y, z = e
    if x < 0 or y < 0 or z < 0 or x + y + z > n - 2:
        raise ValueError(f"{e} is not in the poset for n={n}")
    rank = n - 2 - (x + y)
    return 1 if rank == 0 or rank == 2 * z + 1 or rank == 2 * z - 1 else 0


# -- ruler-sequence mex characterization -----------------------------------


def suffix_nim_sum(m: int, n: int) -> int:
    """Nim-sum of ruler values over [m, n); zero exactly when m = n."""
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    acc = 0
    for x in range(m, n):
        acc ^= ruler_phi(x)
    return acc


def suffix_nim_sum_set(n: int) -> set[int]:
    """All suffix nim-sums ending at n: { H(x, n) : x = 1..n }."""
    acc = 0
    out = {0}
    for x in range(n - 1, 0, -1):
        acc ^= ruler_phi(x)
        out.add(acc)
    return out


@dataclass
class RulerMexReport:
    n_max: int
    ok: bool
    failures: list[str]


def ruler_mex_characterization(n_max: int) -> RulerMexReport:
    """Check, for every n <= n_max: the suffix nim-sums H(m, n) are nonzero
    for m < n and pairwise distinct; S(2^k) = {0..2^k - 1}; for k = nu2(n),
    S(2^k) is contained in S(n) while 2^k is not; hence mex S(n) equals the
    ruler value of n."""
    failures: list[str] = []
    pow_sets = {}
    k = 0
    while (1 << k) <= n_max:
        pow_sets[k] = suffix_nim_sum_set(1 << k)
        if pow_sets[k] != set(range(1 << k)):
            failures.append(f"S(2^{k}) != {{0..2^{k}-1}}")
        k += 1
    for n in range(1, n_max + 1):
        acc = 0
        values = [0]
        for x in range(n - 1, 0, -1):
            acc ^= ruler_phi(x)
            values.append(acc)
        sn = set(values)
        if 0 in values[1:]:
            failures.append(f"H(m, {n}) = 0 for some m < {n}")
        if len(sn) != n:
            failures.append(f"suffix nim-sums not distinct at n={n}")
        kn = nu2(n)
        if kn in pow_sets and not pow_sets[kn] <= sn:
            failures.append(f"S(2^{kn}) not within S({n})")
        if (1 << kn) in sn:
            failures.append(f"2^{kn} belongs to S({n})")
        if mex(sn) != ruler_phi(n):
            failures.append(f"mex S({n}) != ruler value")
    return RulerMexReport(n_max, not failures, failures)
