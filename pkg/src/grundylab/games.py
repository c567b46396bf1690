"""Coin-turning games on finite posets.

A position is a subset of the board, held as an int bitmask; a move picks a
turning set whose maximum element is currently in the position and flips it
(symmetric difference, i.e. XOR of masks).  `solve_elementwise` computes the
per-element Grundy values by the mex-of-nim-sums recursion, after which the
value of any position is the nim-sum of its elements' values.
`brute_force_grundy` ignores all of that and evaluates positions by the raw
mex recursion over the option graph; the test suite plays the two against
each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import TooLargeError
from .nimber import mex, nim_mul
from .poset import FinitePoset, iter_bits

MAX_BRUTE_FORCE_POSITIONS = 1 << 20


class TurningFamily:
    """A collection of element subsets of one poset, bucketed by maximum.

    Every set is expected to have a unique maximum element (use `check_sharp`
    to locate violations before solving).
    """

    def __init__(self, poset: FinitePoset, masks):
        self.poset = poset
        self.masks = list(masks)
        self.maxima = [self._unique_max(m) for m in self.masks]
        by_max = [[] for _ in range(poset.n)]
        heads = 0
        for idx, mx in enumerate(self.maxima):
            if mx is not None:
                by_max[mx].append(idx)
                heads |= 1 << mx
        self.by_max = by_max
        # elements that are the maximum of some turning set; positions
        # avoiding all of them are the ending positions
        self.heads_mask = heads

    def _unique_max(self, mask: int):
        best = None
        for t in iter_bits(mask):
            if best is None or self.poset.leq(best, t):
                best = t
        if best is None:
            return None
        for t in iter_bits(mask):
            if not self.poset.leq(t, best):
                return None
        return best

    def __len__(self):
        return len(self.masks)


def turning_turtles(p: FinitePoset) -> TurningFamily:
    """Turning sets {x, y} for all comparable pairs x <= y (singletons when
    x = y)."""
    masks = []
    for y in range(p.n):
        for x in iter_bits(p.down_mask(y)):
            masks.append((1 << x) | (1 << y))
    return TurningFamily(p, masks)


def order_ideal_family(p: FinitePoset) -> TurningFamily:
    """One turning set per element: its principal order ideal."""
    return TurningFamily(p, [p.down_mask(x) for x in range(p.n)])


def ruler_family(p: FinitePoset) -> TurningFamily:
    """All closed intervals [x, y] with x <= y."""
    masks = []
    for y in range(p.n):
        dm = p.down_mask(y)
        for x in iter_bits(dm):
            masks.append(dm & p.up_mask(x))
    return TurningFamily(p, masks)


def check_sharp(fam: TurningFamily):
    """None if every set has a unique maximum, else the first bad set index."""
    for idx, mx in enumerate(fam.maxima):
        if mx is None:
            return idx
    return None


def moves(fam: TurningFamily, position: int) -> list[int]:
    """All positions reachable in one move: flip any set whose maximum is in
    the position.  Empty exactly when the position avoids every maximum."""
    out = []
    for x in iter_bits(position & fam.heads_mask):
        for idx in fam.by_max[x]:
            out.append(position ^ fam.masks[idx])
    return out


def potential(p: FinitePoset, tau, position: int) -> int:
    """Sum of 2^tau[x] over the position; strictly decreases along moves."""
    total = 0
    for x in iter_bits(position):
        total += 1 << tau[x]
    return total


@dataclass
class GrundyTable:
    """Per-element Grundy values for one (poset, family) pair."""

    poset: FinitePoset
    family: TurningFamily
    values: list[int]

    def position(self, position_mask: int) -> int:
        return grundy_position(self, position_mask)


def solve_elementwise(fam: TurningFamily) -> GrundyTable:
    """Per-element Grundy values g(x) = mex over turning sets with maximum x
    of the nim-sum of values strictly inside the set.

    Elements outside every maximum get the empty mex, 0.  Evaluation follows
    a linear extension, so the values a set references are always final.
    """
    bad = check_sharp(fam)
    if bad is not None:
        raise ValueError(f"turning set {bad} has no unique maximum")
    p = fam.poset
    g = [0] * p.n
    for x in p.linear_extension_order():
        opts = []
        for idx in fam.by_max[x]:
            s = 0
            for t in iter_bits(fam.masks[idx] & ~(1 << x)):
                s ^= g[t]
            opts.append(s)
        g[x] = mex(opts)
    return GrundyTable(p, fam, g)


def grundy_position(table: GrundyTable, position: int) -> int:
    """Nim-sum of per-element values over the position."""
    s = 0
    for x in iter_bits(position):
        s ^= table.values[x]
    return s


# -- generic games and the brute-force oracle -----------------------------


@dataclass
class GenericGame:
    """Explicit impartial game: positions 0..n-1 and their option lists."""

    options: list[tuple[int, ...]]
    start: int | None = None
    _memo: dict = field(default_factory=dict, repr=False)

    @property
    def n_positions(self) -> int:
        return len(self.options)

    def ending_positions(self) -> list[int]:
        return [i for i, opts in enumerate(self.options) if not opts]

    @classmethod
    def from_turning_family(
        cls, fam: TurningFamily, cap: int = MAX_BRUTE_FORCE_POSITIONS
    ) -> "GenericGame":
        """Materialize all 2^|X| positions of a coin-turning game."""
        n = fam.poset.n
        total = 1 << n
        if total > cap:
            raise TooLargeError(f"2^{n} positions exceed cap {cap}")
        options = [tuple(moves(fam, pos)) for pos in range(total)]
        return cls(options)


def _postorder_eval(options, memo, root, combine):
    # Iterative post-order over the option DAG; raises on a directed cycle.
    if root in memo:
        return memo[root]
    visiting = set()
    stack = [root]
    while stack:
        p = stack[-1]
        if p in memo:
            stack.pop()
            continue
        if p in visiting:
            memo[p] = combine([memo[o] for o in options[p]])
            visiting.discard(p)
            stack.pop()
        else:
            visiting.add(p)
            for o in options[p]:
                if o in visiting:
                    raise ValueError("option graph has a cycle")
                if o not in memo:
                    stack.append(o)
    return memo[root]


def brute_force_grundy(game: GenericGame, position: int) -> int:
    """Grundy value by the raw mex recursion over options: 0 at ending
    positions, mex of the option values elsewhere."""
    return _postorder_eval(game.options, game._memo, position, mex)


def game_lengths(game: GenericGame) -> list[int]:
    """Maximum play length from each position."""
    memo: dict[int, int] = {}
    combine = lambda vals: 1 + max(vals) if vals else 0
    for p in range(game.n_positions):
        _postorder_eval(game.options, memo, p, combine)
    return [memo[p] for p in range(game.n_positions)]


def combined(g1: GenericGame, g2: GenericGame, cap: int = MAX_BRUTE_FORCE_POSITIONS) -> GenericGame:
    """Disjoint sum: move in one component, leave the other untouched.

    Position (p1, p2) gets id p1 * g2.n_positions + p2.
    """
    n1, n2 = g1.n_positions, g2.n_positions
    if n1 * n2 > cap:
        raise TooLargeError(f"{n1}*{n2} positions exceed cap {cap}")
    options = []
    for p1 in range(n1):
        o1 = g1.options[p1]
        for p2 in range(n2):
            opts = [q1 * n2 + p2 for q1 in o1]
            opts.extend(p1 * n2 + q2 for q2 in g2.options[p2])
            options.append(tuple(opts))
    return GenericGame(options)


def product_family(
    p1: FinitePoset, f1: TurningFamily, p2: FinitePoset, f2: TurningFamily
):
    """Family {T1 x T2} on the product poset.

    The per-element Grundy value of (x1, x2) is the nim-product of the
    component values; `solve_elementwise` on the result verifies that.
    """
    prod = p1.product(p2)
    n2 = p2.n
    masks = []
    for m1 in f1.masks:
        for m2 in f2.masks:
            m = 0
            for a in iter_bits(m1):
                m |= m2 << (a * n2)
            masks.append(m)
    return prod, TurningFamily(prod, masks)


def product_grundy_prediction(t1: GrundyTable, t2: GrundyTable) -> list[int]:
    """Nim-products g1(x1) (x) g2(x2) in product-poset element order."""
    out = []
    for a in t1.values:
        for b in t2.values:
            out.append(nim_mul(a, b))
    return out


def grundy_respects_isomorphism(p1, f1, p2, f2, mapping):
    """Check g1(x) == g2(mapping[x]) for an order isomorphism carrying f1
    onto f2.  Returns None, or the first element where the values differ.

    Raises ValueError if `mapping` is not an order-preserving bijection or
    does not map the first family onto the second.
    """
    n = p1.n
    if p2.n != n or sorted(mapping) != list(range(n)):
        raise ValueError("mapping is not a bijection between the element sets")
    for i in range(n):
        for j in iter_bits(p1.down_mask(i)):
            if not p2.leq(mapping[j], mapping[i]):
                raise ValueError(f"mapping does not preserve {j} <= {i}")
    mapped = sorted(
        sum(1 << mapping[t] for t in iter_bits(m)) for m in f1.masks
    )
    if mapped != sorted(f2.masks):
        raise ValueError("mapping does not carry the first family onto the second")
    g1 = solve_elementwise(f1).values
    g2 = solve_elementwise(f2).values
    for x in range(n):
        if g1[x] != g2[mapping[x]]:
            return x
    return None
