"""Integer partitions under refinement, and the ruler on set partitions.

The Grundy value of a set partition in the interval game depends only on its
type (the partition of block sizes), and the value of a type is the
nim-product of the values of its parts.  That reduces the whole game to the
sequence h(n) = value of the one-block partition, computed by

    h(n) = mex { s_n(mu) : mu in Par_n }
    s_n(mu) = nim-sum over types lam in [mu, (n)) of M_n(lam, mu) * g_n(lam)

where M_n(lam, mu) counts the set partitions of type lam above a fixed one
of type mu, and m * a means a nim-added to itself m times (so only the
parity of M matters).  Partitions are plain tuples of parts in weakly
decreasing order.
"""

from __future__ import annotations

import time
from collections import Counter
from functools import lru_cache
from math import factorial

from .errors import BudgetExceededError, WeightMismatchError
from .nimber import mex, nim_product
from .poset import FinitePoset


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n as weakly decreasing tuples, in reverse
    lexicographic order starting from (n,)."""
    out: list[tuple[int, ...]] = []

    def rec(rem, cap, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rem, cap), 0, -1):
            acc.append(p)
            rec(rem - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(out)


def multiplicities(lam) -> Counter:
    """Part-size -> multiplicity view of a partition."""
    return Counter(lam)


def partition_union(lam, mu) -> tuple[int, ...]:
    """Multiset union: multiplicities add."""
    return tuple(sorted(lam + mu, reverse=True))


def _avail_tuple(counter: Counter) -> tuple:
    return tuple(sorted(((p, c) for p, c in counter.items() if c), reverse=True))


def _sub_partitions(avail: tuple, total: int) -> list[tuple[int, ...]]:
    """Sub-multisets of `avail` (as (part, count) pairs, descending) summing
    to `total`, each returned as a descending part tuple."""
    res: list[tuple[int, ...]] = []

    def rec(i, rem, acc):
        if rem == 0:
            res.append(tuple(acc))
            return
        if i == len(avail):
            return
        p, c = avail[i]
        for take in range(min(c, rem // p), -1, -1):
            acc.extend([p] * take)
            rec(i + 1, rem - take * p, acc)
            if take:
                del acc[-take:]

    rec(0, total, [])
    return res


def refines(mu, lam) -> bool:
    """True when mu refines lam: the parts of lam can be split into groups
    of parts of mu, using every part of mu exactly once."""
    if sum(mu) != sum(lam):
        raise WeightMismatchError(f"|{mu}| != |{lam}|")
    lam = tuple(sorted(lam, reverse=True))

    def rec(i, counter):
        if i == len(lam):
            return not any(counter.values())
        for comp in _sub_partitions(_avail_tuple(counter), lam[i]):
            for p in comp:
                counter[p] -= 1
            if rec(i + 1, counter):
                for p in comp:
                    counter[p] += 1
                return True
            for p in comp:
                counter[p] += 1
        return False

    return rec(0, Counter(mu))


def decompositions(lam, mu) -> list[tuple[tuple[int, ...], ...]]:
    """All ways to write mu as a multiset union of sub-partitions, one of
    weight lam_i per part of lam, as canonical multisets.

    Components are matched to parts of lam in decreasing order; inside a run
    of equal parts the chosen components are forced weakly decreasing, so
    each multiset appears exactly once and no dedup pass is needed.
    """
    if sum(mu) != sum(lam):
        return []
    lam = tuple(sorted(lam, reverse=True))
    runs: list[list[int]] = []
    for p in lam:
        if runs and runs[-1][0] == p:
            runs[-1][1] += 1
        else:
            runs.append([p, 1])
    results: list[tuple[tuple[int, ...], ...]] = []
    acc: list[tuple[int, ...]] = []
    counter = Counter(mu)

    def rec_runs(ri):
        if ri == len(runs):
            if not any(counter.values()):
                results.append(tuple(acc))
            return
        value, count = runs[ri]

        def rec_run(j, bound):
            if j == count:
                rec_runs(ri + 1)
                return
            for comp in _sub_partitions(_avail_tuple(counter), value):
                if bound is not None and comp > bound:
                    continue
                for p in comp:
                    counter[p] -= 1
                acc.append(comp)
                rec_run(j + 1, comp)
                acc.pop()
                for p in comp:
                    counter[p] += 1

        rec_run(0, None)

    rec_runs(0)
    return results


def _mult_factorial(part) -> int:
    out = 1
    for c in Counter(part).values():
        out *= factorial(c)
    return out


def multiplicity_M(lam, mu) -> int:
    """Number of set partitions of type lam lying above any fixed set
    partition of type mu; zero unless mu refines lam.

    Each decomposition nu contributes the multinomial of mu's part
    multiplicities over the component part multiplicities, divided by the
    multiplicities of repeated components.
    """
    if sum(lam) != sum(mu):
        raise WeightMismatchError(f"|{lam}| != |{mu}|")
    total = 0
    numerator = _mult_factorial(mu)
    for nu in decompositions(lam, mu):
        denom = _mult_factorial(nu)
        for comp in nu:
            denom *= _mult_factorial(comp)
        total += numerator // denom
    return total


def type_of(rgs) -> tuple[int, ...]:
    """Type of a set partition given as a restricted-growth string: its
    block sizes, weakly decreasing."""
    return tuple(sorted(Counter(rgs).values(), reverse=True))


def g_of_type(lam, h) -> int:
    """Grundy value of any set partition of type lam: the nim-product of
    h over the parts."""
    return nim_product(h[p] for p in lam)


def s_of_mu(n: int, mu, h) -> int:
    """Option nim-sum for the turning set below the one-block partition
    anchored at a partition of type mu: nim-sum of M_n(lam, mu) * g_n(lam)
    over types lam above mu, the top type (n) excluded."""
    acc = 0
    for lam in partitions_of(n):
        if lam == (n,):
            continue
        if multiplicity_M(lam, mu) & 1:
            acc ^= g_of_type(lam, h)
    return acc


def h_sequence(n_max: int, max_seconds: float | None = None) -> list[int]:
    """h(1..n_max), indexable by n (index 0 is unused).

    Raises BudgetExceededError when the wall-time budget runs out.
    """
    start = time.monotonic()
    h = [0, 1]
    for n in range(2, n_max + 1):
        if max_seconds is not None and time.monotonic() - start > max_seconds:
            raise BudgetExceededError(f"h({n}) not reached within {max_seconds}s")
        pars = partitions_of(n)
        svals = [s_of_mu(n, mu, h) for mu in pars]
        h.append(mex(svals))
    return h


def refinement_poset(n: int) -> FinitePoset:
    """Par_n under refinement, as a FinitePoset labeled by the partitions."""
    pars = partitions_of(n)
    down = []
    for lam in pars:
        m = 0
        for i, mu in enumerate(pars):
            if refines(mu, lam):
                m |= 1 << i
        down.append(m)
    return FinitePoset(down, labels=pars)
