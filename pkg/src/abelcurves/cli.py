"""Command-line front end: single counts, tables, raw series, verification.

    abelcurves coeff  --kind fls --genus 5 --nodes 7
    abelcurves table  --kind n --gmin 2 --gmax 5 --nmin 0 --nmax 7 --format csv
    abelcurves series --kind n34 --genus 2 --prec 5
    abelcurves verify

Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error.
All output is deterministic: identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import golden as golden_tables
from . import modular, oracle
from .modular import InvariantKind
from .qseries import QSeries, to_integer

__all__ = [
    "CheckResult",
    "CountTable",
    "SOURCE_CLOSED",
    "SOURCE_ORACLE",
    "build_count_table",
    "main",
    "run_verification",
]

SOURCE_CLOSED = "closed_form"
SOURCE_ORACLE = "oracle"


def _cell_value(kind: InvariantKind, g: int, n: int, source: str) -> int:
    if source == SOURCE_CLOSED:
        return modular.invariant(kind, g, n)
    if source == SOURCE_ORACLE:
        return oracle.count_invariant(kind, g, n)
    raise ValueError(f"unknown source: {source!r}")


@dataclass(frozen=True)
class CountTable:
    """A rectangle of invariant values: rows over genus, columns over nodes."""

    kind: InvariantKind
    g_range: tuple[int, int]
    n_range: tuple[int, int]
    source: str
    values: tuple[tuple[int, ...], ...]

    def cell(self, g: int, n: int) -> int:
        return self.values[g - self.g_range[0]][n - self.n_range[0]]

    def to_markdown(self) -> str:
        n_lo, n_hi = self.n_range
        header = [self.kind.value] + [f"n={n}" for n in range(n_lo, n_hi + 1)]
        lines = ["| " + " | ".join(header) + " |"]
        lines.append("| " + " | ".join(["---"] * len(header)) + " |")
        for g, row in zip(range(self.g_range[0], self.g_range[1] + 1), self.values):
            cells = [f"g={g}"] + [str(v) for v in row]
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines)

    def to_csv(self) -> str:
        n_lo, n_hi = self.n_range
        lines = ["g\\n," + ",".join(str(n) for n in range(n_lo, n_hi + 1))]
        for g, row in zip(range(self.g_range[0], self.g_range[1] + 1), self.values):
            lines.append(str(g) + "," + ",".join(str(v) for v in row))
        return "\n".join(lines)

    def to_json(self) -> str:
        # Values go out as decimal strings so consumers with fixed-width
        # integers cannot silently overflow.
        return json.dumps(
            {
                "kind": self.kind.value,
                "g_range": list(self.g_range),
                "n_range": list(self.n_range),
                "source": self.source,
                "values": [[str(v) for v in row] for row in self.values],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "CountTable":
        data = json.loads(text)
        return cls(
            kind=InvariantKind(data["kind"]),
            g_range=tuple(data["g_range"]),
            n_range=tuple(data["n_range"]),
            source=data["source"],
            values=tuple(tuple(int(v) for v in row) for row in data["values"]),
        )


def build_count_table(
    kind: InvariantKind,
    g_range: tuple[int, int],
    n_range: tuple[int, int],
    source: str = SOURCE_CLOSED,
) -> CountTable:
    kind = InvariantKind(kind)
    g_lo, g_hi = g_range
    n_lo, n_hi = n_range
    if g_lo > g_hi or n_lo > n_hi:
        raise ValueError("table ranges must be nonempty")
    if g_lo < kind.min_genus:
        raise ValueError(
            f"kind {kind.value!r} needs genus >= {kind.min_genus}, got {g_lo}"
        )
    if n_lo < 0:
        raise ValueError("node count must be >= 0")
    values = tuple(
        tuple(_cell_value(kind, g, n, source) for n in range(n_lo, n_hi + 1))
        for g in range(g_lo, g_hi + 1)
    )
    return CountTable(kind, (g_lo, g_hi), (n_lo, n_hi), source, values)


# --- verification -----------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _passed(name: str, detail: str) -> CheckResult:
    return CheckResult(name, True, detail)


def _failed(name: str, detail: str) -> CheckResult:
    return CheckResult(name, False, detail)


def _check_golden(kind, rows, g_max, n_max):
    name = f"golden-{kind.value}"
    g_lo, g_hi = golden_tables.GENUS_RANGE
    n_lo, n_hi = golden_tables.NODE_RANGE
    g_hi = min(g_hi, g_max)
    n_hi = min(n_hi, n_max)
    if g_max < g_lo:
        return _passed(name, "0 cells (range empty)")
    cells = 0
    for g in range(g_lo, g_hi + 1):
        for n in range(n_lo, n_hi + 1):
            expected = rows[g - g_lo][n - n_lo]
            actual = modular.invariant(kind, g, n)
            if actual != expected:
                return _failed(
                    name,
                    f"({kind.value}, g={g}, n={n}): "
                    f"reference={expected} closed_form={actual}",
                )
            cells += 1
    return _passed(name, f"{cells} cells")


def _check_oracle_agreement(kind, g_max, n_max):
    name = f"oracle-{kind.value}"
    g_lo = kind.min_genus
    if g_max < g_lo:
        return _passed(name, "0 cells (range empty)")
    closed = build_count_table(kind, (g_lo, g_max), (0, n_max), SOURCE_CLOSED)
    brute = build_count_table(kind, (g_lo, g_max), (0, n_max), SOURCE_ORACLE)
    for g in range(g_lo, g_max + 1):
        for n in range(0, n_max + 1):
            a, b = closed.cell(g, n), brute.cell(g, n)
            if a != b:
                return _failed(
                    name,
                    f"({kind.value}, g={g}, n={n}): closed_form={a} oracle={b}",
                )
    cells = (g_max - g_lo + 1) * (n_max + 1)
    return _passed(name, f"{cells} cells")


def _check_scaling(g_max, n_max):
    for g in range(1, g_max + 1):
        for n in range(0, n_max + 1):
            lhs = modular.invariant(InvariantKind.N, g, n)
            rhs = g * modular.invariant(InvariantKind.N34, g, n)
            if lhs != rhs:
                return _failed(
                    "identity-scaling",
                    f"(n, g={g}, n={n}): n={lhs} g*n34={rhs}",
                )
    return _passed("identity-scaling", f"g<={g_max} n<={n_max}")


def _check_node_shift(g_max, n_max):
    for g in range(1, g_max + 1):
        for n in range(0, n_max + 1):
            lhs = modular.invariant(InvariantKind.N12, g, n)
            rhs = (n + g - 1) * modular.invariant(InvariantKind.N34, g, n)
            if lhs != rhs:
                return _failed(
                    "identity-node-shift",
                    f"(n12, g={g}, n={n}): n12={lhs} (n+g-1)*n34={rhs}",
                )
    return _passed("identity-node-shift", f"g<={g_max} n<={n_max}")


def _check_fls_ratio(g_max, n_max):
    if g_max < 2:
        return _passed("identity-fls-ratio", "range empty")
    for g in range(2, g_max + 1):
        for n in range(0, n_max + 1):
            lhs = (g - 1) * modular.invariant(InvariantKind.FLS, g, n)
            rhs = modular.invariant(InvariantKind.N12, g, n)
            if lhs != rhs:
                return _failed(
                    "identity-fls-ratio",
                    f"(fls, g={g}, n={n}): (g-1)*fls={lhs} n12={rhs}",
                )
    return _passed("identity-fls-ratio", f"2<=g<={g_max} n<={n_max}")


def _check_fls_series(g_max, n_max):
    if g_max < 2:
        return _passed("identity-fls-series", "range empty")
    for g in range(2, g_max + 1):
        prec = n_max + g
        direct = modular.generating_series(InvariantKind.FLS, g, prec)
        derived = modular.fls_identity_series(g, prec)
        if direct != derived:
            for k in range(prec):
                if direct.coefficient(k) != derived.coefficient(k):
                    return _failed(
                        "identity-fls-series",
                        f"(fls, g={g}, q^{k}): direct={direct.coefficient(k)} "
                        f"derived={derived.coefficient(k)}",
                    )
    return _passed("identity-fls-series", f"2<=g<={g_max}")


def _check_vanishing(g_max, n_max):
    for kind in InvariantKind:
        if not kind.vanishes:
            continue
        for g in range(1, g_max + 1):
            for n in range(0, n_max + 1):
                value = modular.invariant(kind, g, n)
                if value != 0:
                    return _failed(
                        "vanishing",
                        f"({kind.value}, g={g}, n={n}): expected=0 closed_form={value}",
                    )
    return _passed("vanishing", f"4 kinds, g<={g_max} n<={n_max}")


def _check_sigma(sigma_max):
    for k in range(1, sigma_max + 1):
        lattice = oracle.sublattice_count(k)
        sigma = oracle.divisor_sum(k)
        if lattice != sigma:
            return _failed(
                "sigma-sublattice",
                f"k={k}: sublattice_count={lattice} divisor_sum={sigma}",
            )
    return _passed("sigma-sublattice", f"k<={sigma_max}")


def run_verification(g_max=5, n_max=7, sigma_max=200, golden=None) -> list[CheckResult]:
    """Run every self-check and return one result per check.

    ``golden`` overrides the embedded reference tables (used by the tests
    to prove a corrupted cell is actually caught).
    """
    if g_max < 1 or n_max < 0 or sigma_max < 1:
        raise ValueError("verification bounds out of range")
    if golden is None:
        golden = golden_tables.TABLES
    results = [
        _check_golden(InvariantKind.FLS, golden[InvariantKind.FLS], g_max, n_max),
        _check_golden(InvariantKind.N, golden[InvariantKind.N], g_max, n_max),
    ]
    for kind in (InvariantKind.N, InvariantKind.FLS, InvariantKind.N12, InvariantKind.N34):
        results.append(_check_oracle_agreement(kind, g_max, n_max))
    results.append(_check_scaling(g_max, n_max))
    results.append(_check_node_shift(g_max, n_max))
    results.append(_check_fls_ratio(g_max, n_max))
    results.append(_check_fls_series(g_max, n_max))
    results.append(_check_vanishing(g_max, n_max))
    results.append(_check_sigma(sigma_max))
    return results


# --- commands ---------------------------------------------------------------


def _series_for(args) -> tuple[InvariantKind, QSeries]:
    kind = InvariantKind(args.kind)
    return kind, modular.generating_series(kind, args.genus, args.prec)


def cmd_coeff(args) -> int:
    kind = InvariantKind(args.kind)
    source = SOURCE_CLOSED if args.source == "closed" else SOURCE_ORACLE
    print(_cell_value(kind, args.genus, args.nodes, source))
    return 0


def cmd_table(args) -> int:
    kind = InvariantKind(args.kind)
    source = SOURCE_CLOSED if args.source == "closed" else SOURCE_ORACLE
    table = build_count_table(
        kind, (args.gmin, args.gmax), (args.nmin, args.nmax), source
    )
    if args.format == "md":
        print(table.to_markdown())
    elif args.format == "csv":
        print(table.to_csv())
    else:
        print(table.to_json())
    return 0


def cmd_series(args) -> int:
    kind, series = _series_for(args)
    if args.format == "md":
        print(" ".join(f"{k}:{series.coefficient(k)}" for k in range(series.prec)))
    elif args.format == "csv":
        lines = ["exponent,coefficient"]
        lines.extend(f"{k},{series.coefficient(k)}" for k in range(series.prec))
        print("\n".join(lines))
    else:
        payload = {
            "kind": kind.value,
            "genus": args.genus,
            "prec": series.prec,
            "coefficients": [str(to_integer(c)) for c in series],
        }
        print(json.dumps(payload))
    return 0


def cmd_verify(args) -> int:
    results = run_verification(args.gmax, args.nmax, args.sigma_max)
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{status} {result.name}: {result.detail}")
    return 0 if all(r.passed for r in results) else 1


def _parser() -> argparse.ArgumentParser:
    kinds = [k.value for k in InvariantKind]
    parser = argparse.ArgumentParser(
        prog="abelcurves",
        description="Exact curve counts in primitive classes on Abelian surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    coeff = sub.add_parser("coeff", help="print a single invariant value")
    coeff.add_argument("--kind", required=True, choices=kinds)
    coeff.add_argument("--genus", required=True, type=int)
    coeff.add_argument("--nodes", required=True, type=int)
    coeff.add_argument("--source", choices=["closed", "oracle"], default="closed")
    coeff.set_defaults(func=cmd_coeff)

    table = sub.add_parser("table", help="print a rectangle of invariant values")
    table.add_argument("--kind", required=True, choices=kinds)
    table.add_argument("--gmin", required=True, type=int)
    table.add_argument("--gmax", required=True, type=int)
    table.add_argument("--nmin", required=True, type=int)
    table.add_argument("--nmax", required=True, type=int)
    table.add_argument("--format", choices=["md", "csv", "json"], default="md")
    table.add_argument("--source", choices=["closed", "oracle"], default="closed")
    table.set_defaults(func=cmd_table)

    series = sub.add_parser("series", help="print generating-series coefficients")
    series.add_argument("--kind", required=True, choices=kinds)
    series.add_argument("--genus", required=True, type=int)
    series.add_argument("--prec", required=True, type=int)
    series.add_argument("--format", choices=["md", "csv", "json"], default="md")
    series.set_defaults(func=cmd_series)

    verify = sub.add_parser("verify", help="run the self-contained check suite")
    verify.add_argument("--gmax", type=int, default=5)
    verify.add_argument("--nmax", type=int, default=7)
    verify.add_argument("--sigma-max", dest="sigma_max", type=int, default=200)
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
