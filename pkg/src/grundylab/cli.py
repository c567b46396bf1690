"""Command-line interface.

Subcommands:
  grundy <poset-spec> <family>   per-element Grundy table for one game
  tables <name>                  reference tables (phi, gq, hn, asm-ideal, asm-ruler)
  verify <suite>                 run verification suites, nonzero exit on failure

Poset specs: chain:N | divisors:N | subspaces:N:Q | setpartitions:N | asm:N
| file:PATH (JSON {"n":..., "covers":[[i,j],...], "labels":[...]}).

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.
Set GRUNDYLAB_CACHE_DIR to persist the hn / asm-ruler tables between runs.
"""

from __future__ import annotations

import argparse
import json
import os
import pickle
import sys
import time
from dataclasses import dataclass, field

from . import __version__, closedforms, families, games, nimber, partitions
from .errors import (
    BudgetExceededError,
    CapExceededError,
    GrundylabError,
    TooLargeError,
)
from .poset import FinitePoset

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


@dataclass
class TableReport:
    """Deterministically ordered rows plus run metadata."""

    columns: tuple[str, ...]
    rows: list[tuple]
    metadata: dict = field(default_factory=dict)

    def to_text(self) -> str:
        lines = [f"# {k}: {self.metadata[k]}" for k in sorted(self.metadata)]
        widths = [
            max(len(str(c)), *(len(str(r[i])) for r in self.rows)) if self.rows else len(str(c))
            for i, c in enumerate(self.columns)
        ]
        lines.append("  ".join(str(c).ljust(w) for c, w in zip(self.columns, widths)))
        for r in self.rows:
            lines.append("  ".join(str(v).ljust(w) for v, w in zip(r, widths)))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        lines = [",".join(self.columns)]
        lines.extend(",".join(str(v) for v in r) for r in self.rows)
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        obj = {
            "columns": list(self.columns),
            "rows": [list(r) for r in self.rows],
            "metadata": self.metadata,
        }
        return json.dumps(obj, sort_keys=True) + "\n"

    def render(self, fmt: str) -> str:
        return {"text": self.to_text, "csv": self.to_csv, "json": self.to_json}[fmt]()


class SpecError(GrundylabError):
    """Unparseable poset spec or family name."""


def parse_poset_spec(spec: str, max_elements: int) -> FinitePoset:
    head, _, rest = spec.partition(":")

    def guard(size: int) -> None:
        if size > max_elements:
            raise TooLargeError(f"{spec} has {size} elements (cap {max_elements})")

    try:
        if head == "chain":
            guard(int(rest))
            return families.chain(int(rest))
        if head == "divisors":
            return families.divisor_poset(int(rest))
        if head == "subspaces":
            ns, qs = rest.split(":")
            return families.subspace_lattice(int(ns), int(qs), max_elements=max_elements)
        if head == "setpartitions":
            return families.set_partition_poset(int(rest))
        if head == "asm":
            n = int(rest)
            guard(n * (n + 1) * (n - 1) // 6)
            return families.asm_poset(n)
        if head == "file":
            with open(rest, "r", encoding="utf-8") as fh:
                return FinitePoset.from_json(fh.read())
    except (ValueError, OSError) as exc:
        raise SpecError(f"bad poset spec {spec!r}: {exc}") from exc
    raise SpecError(f"unknown poset spec {spec!r}")


_FAMILY_BUILDERS = {
    "tt": games.turning_turtles,
    "ideal": games.order_ideal_family,
    "ruler": games.ruler_family,
}


def _meta(**kw) -> dict:
    kw["tool_version"] = __version__
    return kw


# -- caching ----------------------------------------------------------------


def _cache_path(key: str):
    root = os.environ.get("GRUNDYLAB_CACHE_DIR")
    if not root:
        return None
    os.makedirs(root, exist_ok=True)
    return os.path.join(root, f"{key}.pkl")


def _cache_load(key: str):
    path = _cache_path(key)
    if path is None or not os.path.exists(path):
        return None
    try:
        with open(path, "rb") as fh:
            payload = pickle.load(fh)
    except Exception:
        return None
    if payload.get("version") != __version__:
        return None
    return payload.get("data")


def _cache_store(key: str, data) -> None:
    path = _cache_path(key)
    if path is None:
        return
    with open(path, "wb") as fh:
        pickle.dump({"version": __version__, "data": data}, fh)


# -- subcommands --------------------------------------------------------------


def cmd_grundy(args) -> int:
    poset = parse_poset_spec(args.poset, args.max_elements)
    if poset.n > args.max_elements:
        raise TooLargeError(f"poset has {poset.n} elements (cap {args.max_elements})")
    fam = _FAMILY_BUILDERS[args.family](poset)
    table = games.solve_elementwise(fam)
    rows = [(str(poset.label(x)), table.values[x]) for x in range(poset.n)]
    report = TableReport(
        ("element_label", "grundy"),
        rows,
        _meta(poset=args.poset, family=args.family, elements=poset.n),
    )
    sys.stdout.write(report.render(args.format))
    return EXIT_OK


def _table_phi(args) -> TableReport:
    rows = [(x, nimber.nu2(x), nimber.ruler_phi(x)) for x in range(1, args.max + 1)]
    return TableReport(("x", "nu", "phi"), rows, _meta(table="phi", max=args.max))


def _table_gq(args) -> TableReport:
    rows = [
        (d, closedforms.subspace_ruler_grundy(2, d), closedforms.subspace_ruler_grundy(3, d))
        for d in range(args.max + 1)
    ]
    return TableReport(("d", "q_even", "q_odd"), rows, _meta(table="gq", max=args.max))


def _table_hn(args) -> TableReport:
    cache_key = "hn"
    cached = _cache_load(cache_key)
    if cached is not None and len(cached) - 1 >= args.max:
        h = cached
    else:
        h = partitions.h_sequence(args.max, max_seconds=args.max_seconds)
        if cached is None or len(cached) < len(h):
            _cache_store(cache_key, h)
    rows = [(n, h[n]) for n in range(1, args.max + 1)]
    return TableReport(("n", "h"), rows, _meta(table="hn", max=args.max))


def _table_asm_ideal(args) -> TableReport:
    n = args.n
    rows = []
    for r in range(n - 1):
        for s in range(r + 1):
            e = (0, n - 2 - r, s)  # witness with the requested rank and z
            rows.append((r, s, closedforms.asm_ideal_grundy(n, e)))
    return TableReport(("r", "s", "grundy"), rows, _meta(table="asm-ideal", n=n))


def _table_asm_ruler(args) -> TableReport:
    n = args.n
    cache_key = f"asm-ruler-{n}"
    rows = _cache_load(cache_key)
    if rows is None:
        poset = families.asm_poset(n)
        if poset.n > args.max_elements:
            raise TooLargeError(f"poset has {poset.n} elements (cap {args.max_elements})")
        started = time.monotonic()
        table = games.solve_elementwise(games.ruler_family(poset))
        if args.max_seconds is not None and time.monotonic() - started > args.max_seconds:
            raise BudgetExceededError(f"asm-ruler n={n} exceeded {args.max_seconds}s")
        fiber = {}
        for x in range(poset.n):
            fiber.setdefault(families.asm_pi(n, poset.labels[x]), x)
        rows = [
            (r, s, table.values[fiber[(r, s)]])
            for r in range(n - 1)
            for s in range(r + 1)
        ]
        _cache_store(cache_key, rows)
    meta = _meta(
        table="asm-ruler",
        n=n,
        provenance="computed by the generic per-element solver; not checked against external values",
    )
    return TableReport(("s", "t", "grundy"), [tuple(r) for r in rows], meta)


_TABLES = {
    "phi": (_table_phi, "ruler sequence"),
    "gq": (_table_gq, "subspace-ruler values by dimension"),
    "hn": (_table_hn, "one-block set-partition ruler values"),
    "asm-ideal": (_table_asm_ideal, "ideal-game indicator on rank/z fibers"),
    "asm-ruler": (_table_asm_ruler, "ruler values on rank/z fibers"),
}


def cmd_tables(args) -> int:
    builder, _ = _TABLES[args.name]
    sys.stdout.write(builder(args).render(args.format))
    return EXIT_OK


# -- verification suites -------------------------------------------------------


def _verify_nimber() -> list[tuple[str, bool, str]]:
    import numpy as np

    checks = []
    a = np.arange(512, dtype=np.uint32)
    grid_ok = bool(
        (nimber.nim_add(a[:, None], a[None, :]) == (a[:, None] ^ a[None, :])).all()
    )
    checks.append(("nim-add equals carry-free binary addition (a,b < 512)", grid_ok, ""))
    bad = next(
        (
            (x, y)
            for x in range(64)
            for y in range(64)
            if nimber.nim_add_inductive(x, y) != x ^ y
        ),
        None,
    )
    checks.append(("inductive nim-add matches fast path (a,b < 64)", bad is None, str(bad)))
    bad = next(
        (
            (x, y)
            for x in range(48)
            for y in range(48)
            if nimber.nim_mul(x, y) != nimber.nim_mul_inductive(x, y)
        ),
        None,
    )
    checks.append(("inductive nim-mul matches fast path (a,b < 48)", bad is None, str(bad)))
    laws_ok = all(
        nimber.nim_mul(x, y) == nimber.nim_mul(y, x)
        and nimber.nim_mul(nimber.nim_mul(x, y), z) == nimber.nim_mul(x, nimber.nim_mul(y, z))
        and nimber.nim_mul(x ^ y, z) == nimber.nim_mul(x, z) ^ nimber.nim_mul(y, z)
        for x in range(16)
        for y in range(16)
        for z in range(16)
    )
    checks.append(("nim-mul laws: commutative, associative, distributive (a,b,c < 16)", laws_ok, ""))
    row = [nimber.ruler_phi(x) for x in range(1, 16)]
    checks.append(
        ("ruler sequence values for x = 1..15", row == [1, 2, 1, 4, 1, 2, 1, 8, 1, 2, 1, 4, 1, 2, 1], str(row))
    )
    return checks


def _ft_suite_games():
    yield "chain4", families.chain(4), ("tt", "ideal", "ruler")
    yield "divisors12", families.divisor_poset(12), ("ruler", "ideal")
    yield "setpartitions3", families.set_partition_poset(3), ("ruler",)
    yield "asm4", families.asm_poset(4), ("ideal", "ruler")
    yield "subspaces2q2", families.subspace_lattice(2, 2), ("ruler",)


def _verify_ft() -> list[tuple[str, bool, str]]:
    checks = []
    for name, poset, fams in _ft_suite_games():
        tau = poset.linear_extension()
        for fam_name in fams:
            fam = _FAMILY_BUILDERS[fam_name](poset)
            table = games.solve_elementwise(fam)
            game = games.GenericGame.from_turning_family(fam)
            bad = None
            for pos in range(1 << poset.n):
                if games.brute_force_grundy(game, pos) != games.grundy_position(table, pos):
                    bad = pos
                    break
            checks.append(
                (
                    f"elementwise solution equals brute force on {name} {fam_name} (all positions)",
                    bad is None,
                    f"position {bad}" if bad is not None else "",
                )
            )
            dec = all(
                games.potential(poset, tau, opt) < games.potential(poset, tau, pos)
                for pos in range(1 << poset.n)
                for opt in games.moves(fam, pos)
            )
            checks.append((f"potential strictly decreases on {name} {fam_name}", dec, ""))
    g1 = games.GenericGame.from_turning_family(games.ruler_family(families.chain(3)))
    g2 = games.GenericGame.from_turning_family(games.ruler_family(families.chain(4)))
    both = games.combined(g1, g2)
    sum_ok = all(
        games.brute_force_grundy(both, p1 * g2.n_positions + p2)
        == games.brute_force_grundy(g1, p1) ^ games.brute_force_grundy(g2, p2)
        for p1 in range(g1.n_positions)
        for p2 in range(g2.n_positions)
    )
    checks.append(("combined-game values are the nim-sums of the parts", sum_ok, ""))
    return checks


def _verify_closed_forms() -> list[tuple[str, bool, str]]:
    checks = []
    t = games.solve_elementwise(games.ruler_family(families.chain(32)))
    checks.append(
        (
            "chain ruler equals the ruler sequence (n = 32)",
            t.values == [nimber.ruler_phi(x) for x in range(1, 33)],
            "",
        )
    )
    for n in (12, 30, 60):
        poset = families.divisor_poset(n)
        t = games.solve_elementwise(games.ruler_family(poset))
        expect = [closedforms.divisor_ruler_grundy(n, d) for d in poset.labels]
        checks.append((f"divisor ruler closed form on divisors of {n}", t.values == expect, ""))
    for q in (2, 3):
        st = closedforms.subspace_recurrence(q, 40)
        cf = [closedforms.subspace_ruler_grundy(q, d) for d in range(41)]
        checks.append((f"subspace recurrence equals closed form (q={q}, d <= 40)", st.g == cf, ""))
    poset = families.subspace_lattice(3, 2)
    dims = families.subspace_dimensions(3, 2)
    t = games.solve_elementwise(games.ruler_family(poset))
    by_dim_ok = all(t.values[i] == closedforms.subspace_ruler_grundy(2, dims[i]) for i in range(poset.n))
    checks.append(("full solver on the subspace lattice (n=3, q=2) matches by dimension", by_dim_ok, ""))
    for n in (3, 4, 5):
        poset = families.asm_poset(n)
        t = games.solve_elementwise(games.order_ideal_family(poset))
        ok = all(
            t.values[x] == closedforms.asm_ideal_grundy(n, poset.labels[x]) for x in range(poset.n)
        )
        checks.append((f"ideal-game closed form on the ASM poset (n={n})", ok, ""))
    rep = closedforms.ruler_mex_characterization(256)
    checks.append(
        ("suffix nim-sum characterization of the ruler sequence (n <= 256)", rep.ok, "; ".join(rep.failures[:3]))
    )
    return checks


def _verify_partitions() -> list[tuple[str, bool, str]]:
    checks = []
    s4 = [partitions.s_of_mu(4, mu, [0, 1, 2, 1]) for mu in partitions.partitions_of(4)]
    checks.append(("worked option sums over the partitions of 4", s4 == [0, 1, 3, 1, 2], str(s4)))
    h = partitions.h_sequence(8)
    checks.append(
        ("one-block values h(1..8)", h[1:] == [1, 2, 1, 4, 1, 2, 1, 7], str(h[1:]))
    )
    for n in (4, 5):
        poset = families.set_partition_poset(n)
        t = games.solve_elementwise(games.ruler_family(poset))
        top = poset.maximum()
        checks.append(
            (
                f"h({n}) equals the solver value at the one-block partition",
                t.values[top] == h[n],
                "",
            )
        )
    return checks


_SUITES = {
    "nimber": (_verify_nimber,),
    "ft": (_verify_ft,),
    "closed-forms": (_verify_closed_forms,),
    "partitions": (_verify_partitions,),
    "all": (_verify_nimber, _verify_ft, _verify_closed_forms, _verify_partitions),
}


def cmd_verify(args) -> int:
    failures = 0
    for runner in _SUITES[args.suite]:
        for name, ok, detail in runner():
            tag = "PASS" if ok else "FAIL"
            line = f"{tag}  {name}"
            if detail and not ok:
                line += f"  [{detail}]"
            print(line)
            failures += 0 if ok else 1
    print(f"{'OK' if not failures else 'FAILED'}: {failures} failure(s)")
    return EXIT_OK if failures == 0 else EXIT_VERIFY_FAILED


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grundylab",
        description="Grundy values of coin-turning games on finite posets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_caps(p):
        p.add_argument("--max-elements", type=int, default=families.MAX_POSET_ELEMENTS)
        p.add_argument("--max-seconds", type=float, default=None)

    g = sub.add_parser("grundy", help="per-element Grundy table for a poset game")
    g.add_argument("poset", help="chain:N | divisors:N | subspaces:N:Q | setpartitions:N | asm:N | file:PATH")
    g.add_argument("family", choices=sorted(_FAMILY_BUILDERS))
    g.add_argument("--format", choices=("text", "csv", "json"), default="text")
    add_caps(g)
    g.set_defaults(func=cmd_grundy)

    t = sub.add_parser("tables", help="reference tables")
    t.add_argument("name", choices=sorted(_TABLES))
    t.add_argument("--max", type=int, default=None, help="row bound for phi/gq/hn")
    t.add_argument("--n", type=int, default=None, help="board size for asm tables")
    t.add_argument("--format", choices=("text", "csv", "json"), default="text")
    add_caps(t)
    t.set_defaults(func=cmd_tables)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("suite", choices=sorted(_SUITES))
    v.set_defaults(func=cmd_verify)
    return parser


_TABLE_DEFAULTS = {"phi": 15, "gq": 14, "hn": 17}
_ASM_DEFAULTS = {"asm-ideal": 10, "asm-ruler": 8}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "tables":
        if args.name in _TABLE_DEFAULTS and args.max is None:
            args.max = _TABLE_DEFAULTS[args.name]
        if args.name in _ASM_DEFAULTS and args.n is None:
            args.n = _ASM_DEFAULTS[args.name]
        if args.name in _TABLE_DEFAULTS and args.max < 1:
            parser.error("--max must be positive")
        if args.name in _ASM_DEFAULTS and args.n < 2:
            parser.error("--n must be at least 2")
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TooLargeError, CapExceededError, BudgetExceededError) as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
