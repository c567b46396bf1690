"""Constructors for the poset families the solvers run on.

Five families: chains, divisor posets, subspace lattices over finite fields,
set partitions under refinement, and the three-coordinate poset of lattice
points x + y + z <= n - 2 (the join-irreducibles of the alternating-sign-
matrix lattice, called the ASM poset here).  Plus the coordinate maps on the
ASM poset and exact q-binomials with their parities.

All constructors are pure and return immutable FinitePoset instances with
human-readable labels.
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

from . import gf
from .errors import TooLargeError
from .poset import FinitePoset

MAX_POSET_ELEMENTS = 500_000
MAX_SET_PARTITION_N = 9


def chain(n: int) -> FinitePoset:
    """Total order on n elements, labeled 1..n."""
    if n < 1:
        raise ValueError("chain needs n >= 1")
    down = [(2 << i) - 1 for i in range(n)]
    return FinitePoset(down, labels=list(range(1, n + 1)), validate_limit=-1)


def antichain(n: int) -> FinitePoset:
    down = [1 << i for i in range(n)]
    return FinitePoset(down, labels=list(range(1, n + 1)), validate_limit=-1)


def divisor_poset(n: int) -> FinitePoset:
    """Divisors of n ordered by divisibility, labeled by their values."""
    if n < 1:
        raise ValueError("divisor poset needs n >= 1")
    divs = set()
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            divs.update((d, n // d))
    divs = sorted(divs)
    down = []
    for j, dj in enumerate(divs):
        m = 0
        for i, di in enumerate(divs):
            if dj % di == 0:
                m |= 1 << i
        down.append(m)
    return FinitePoset(down, labels=divs, validate_limit=-1)


# -- subspace lattices ----------------------------------------------------


@lru_cache(maxsize=None)
def q_binomial(n: int, r: int, q: int) -> int:
    """Exact Gaussian binomial via the q-Pascal recurrence."""
    if q < 2:
        raise ValueError("q_binomial needs q >= 2")
    if r < 0 or r > n:
        return 0
    if n == 0:
        return 1 if r == 0 else 0
    return q_binomial(n - 1, r - 1, q) + q ** r * q_binomial(n - 1, r, q)


@lru_cache(maxsize=None)
def _pascal_parity(n: int, r: int) -> int:
    if r < 0 or r > n:
        return 0
    if n == 0:
        return 1 if r == 0 else 0
    return _pascal_parity(n - 1, r - 1) ^ _pascal_parity(n - 1, r)


def q_binomial_parity(n: int, r: int, q: int) -> int:
    """Gaussian binomial mod 2.

    For even q every in-range coefficient is odd; for odd q the parity obeys
    the ordinary Pascal recurrence mod 2, independent of q.
    """
    if r < 0 or r > n:
        return 0
    if q % 2 == 0:
        return 1
    return _pascal_parity(n, r)


def _subspace_label(rows, q: int) -> str:
    if not rows:
        return "0"
    digits = "0123456789abcdefghijklmnopqrstuv"
    return ";".join("".join(digits[v] for v in row) for row in rows)


def subspace_lattice(n: int, q: int, max_elements: int = MAX_POSET_ELEMENTS) -> FinitePoset:
    """All subspaces of F_q^n ordered by inclusion.

    Elements are canonical RREF matrices, listed by increasing dimension and
    lexicographically within a dimension.
    """
    if n < 0:
        raise ValueError("dimension must be non-negative")
    f = gf.field(q)
    total = sum(q_binomial(n, r, q) for r in range(n + 1))
    if total > max_elements:
        raise TooLargeError(f"B_{n}({q}) has {total} elements (cap {max_elements})")
    subspaces = []
    for r in range(n + 1):
        subspaces.extend(sorted(gf.rref_matrices(f, n, r)))
    down = []
    for j, big in enumerate(subspaces):
        m = 0
        for i, small in enumerate(subspaces):
            if len(small) <= len(big) and gf.subspace_leq(f, small, big):
                m |= 1 << i
        down.append(m)
    labels = [_subspace_label(s, q) for s in subspaces]
    p = FinitePoset(down, labels=labels, validate_limit=-1)
    return p


def subspace_dimensions(n: int, q: int) -> list[int]:
    """Dimension of each element of subspace_lattice(n, q), in element order."""
    f = gf.field(q)
    dims = []
    for r in range(n + 1):
        dims.extend([r] * sum(1 for _ in gf.rref_matrices(f, n, r)))
    return dims


# -- set partitions -------------------------------------------------------


def restricted_growth_strings(n: int):
    """All RGS of length n in lexicographic order."""
    rgs = [0] * n
    while True:
        yield tuple(rgs)
        # advance: find rightmost position that can still grow
        i = n - 1
        while i > 0:
            prefix_max = max(rgs[:i])
            if rgs[i] <= prefix_max:
                break
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        for j in range(i + 1, n):
            rgs[j] = 0


def rgs_to_blocks(rgs) -> tuple:
    """Blocks of {1..n}, each sorted, ordered by least element."""
    nblocks = max(rgs) + 1 if rgs else 0
    blocks = [[] for _ in range(nblocks)]
    for i, b in enumerate(rgs):
        blocks[b].append(i + 1)
    return tuple(tuple(b) for b in blocks)


def blocks_to_rgs(blocks, n: int) -> tuple:
    owner = {}
    order = sorted(blocks, key=min)
    for b_idx, block in enumerate(order):
        for e in block:
            owner[e] = b_idx
    if sorted(owner) != list(range(1, n + 1)):
        raise ValueError("blocks do not partition 1..n")
    return tuple(owner[i] for i in range(1, n + 1))


def _block_label(blocks) -> str:
    return "|".join(",".join(str(e) for e in b) for b in blocks)


def set_partition_poset(n: int, max_n: int = MAX_SET_PARTITION_N) -> FinitePoset:
    """Set partitions of {1..n} under refinement.

    pi <= sigma iff every block of pi is contained in a block of sigma, so
    the all-singletons partition is the minimum and the one-block partition
    the maximum.  Covers merge exactly two blocks.
    """
    if not 1 <= n <= max_n:
        raise TooLargeError(f"set partition poset supported for 1 <= n <= {max_n}")
    elems = list(restricted_growth_strings(n))
    index = {r: i for i, r in enumerate(elems)}
    covers = []
    for i, rgs in enumerate(elems):
        blocks = rgs_to_blocks(rgs)
        k = len(blocks)
        for a in range(k):
            for b in range(a + 1, k):
                merged = list(blocks[:a]) + list(blocks[a + 1:b]) + list(blocks[b + 1:])
                merged.append(tuple(sorted(blocks[a] + blocks[b])))
                j = index[blocks_to_rgs(merged, n)]
                covers.append((i, j))
    labels = [_block_label(rgs_to_blocks(r)) for r in elems]
    return FinitePoset.from_covers(len(elems), covers, labels=labels)


# -- the ASM poset --------------------------------------------------------


def asm_elements(n: int) -> list[tuple[int, int, int]]:
    """Lattice points (x, y, z) >= 0 with x + y + z <= n - 2, sorted."""
    if n < 2:
        return []
    return [
        (x, y, z)
        for x in range(n - 1)
        for y in range(n - 1 - x)
        for z in range(n - 1 - x - y)
    ]


def asm_contains(n: int, e) -> bool:
    x, y, z = e
    return x >= 0 and y >= 0 and z >= 0 and x + y + z <= n - 2


def _check_asm(n: int, e):
    if not asm_contains(n, e):
        raise ValueError(f"{e} is not in the poset for n={n}")


def asm_leq(a, b) -> bool:
    """(x1,y1,z1) <= (x2,y2,z2) iff x1>=x2, y1>=y2, z1<=z2 and the
    coordinate sums weakly decrease."""
    x1, y1, z1 = a
    x2, y2, z2 = b
    return (
        x1 >= x2
        and y1 >= y2
        and z1 <= z2
        and x1 + y1 + z1 >= x2 + y2 + z2
    )


def asm_poset(n: int) -> FinitePoset:
    if n < 2:
        raise ValueError("asm poset needs n >= 2")
    elems = asm_elements(n)
    down = []
    for b in elems:
        m = 0
        for i, a in enumerate(elems):
            if asm_leq(a, b):
                m |= 1 << i
        down.append(m)
    return FinitePoset(down, labels=elems, validate_limit=-1)


def asm_cover_candidates(n: int, e):
    """The four lattice points an element can cover, filtered to the poset."""
    x, y, z = e
    cands = [(x + 1, y, z), (x, y + 1, z), (x + 1, y, z - 1), (x, y + 1, z - 1)]
    return [c for c in cands if asm_contains(n, c)]


def asm_rank(n: int, e) -> int:
    _check_asm(n, e)
    x, y, _ = e
    return n - 2 - (x + y)


def asm_pi(n: int, e) -> tuple[int, int]:
    """Projection to (rank, z); the per-element Grundy data only depends
    on this pair."""
    _check_asm(n, e)
    return (asm_rank(n, e), e[2])


def asm_xi(n: int, e) -> tuple[int, int, int]:
    """Order automorphism swapping x and y; an involution."""
    _check_asm(n, e)
    x, y, z = e
    return (y, x, z)


def asm_eta(n: int, e) -> tuple[int, int, int]:
    """Order automorphism replacing z by n - 2 - (x + y + z); an involution."""
    _check_asm(n, e)
    x, y, z = e
    return (x, y, n - 2 - (x + y + z))
