"""Command-line interface: ``bsgrowth {sequence,compare,diagnostics,montecarlo}``.

Exit codes: 0 success, 2 bad parameters, 3 a mathematical consistency
failure (Hall divisibility, or an exact cross-check that disagrees).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import asymptotic as asy
from .growth import (
    BSParams,
    HallConsistencyError,
    census_tail_fraction,
    count_order_dividing,
    fix_census,
    census_threshold,
    free_product_subgroup_counts,
    gelman_count,
    hall_counts,
    max_count_coprime,
    normalize,
    semidirect_count,
    subgroup_count_z_inv_k,
)
from .logvalue import LogValue
from .numth import factorial
from .permgrp.montecarlo import monte_carlo_generation
from .permgrp.oracle import MAX_ORACLE_DEGREE, oracle_counts, oracle_free_product

OUTPUT_DIR_ENV = "BSGROWTH_OUTPUT_DIR"

GROUPS = ("bs", "freeproduct", "z", "zinvk")
METHODS = ("gelman", "semidirect", "hall", "oracle", "asymptotic", "census", "closedform")
KINDS = ("subgroups", "maximal", "transitive", "primitive", "hom")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    group: str = "bs"
    a: int | None = None
    b: int | None = None
    m: int | None = None
    k: int | None = None
    n_values: tuple[int, ...] = ()
    method: str | None = None
    against: str | None = None
    kind: str = "subgroups"
    fmt: str = "csv"
    seed: int = 0
    threads: int = 1
    trials: int = 0
    output: str | None = None

    def bs_params(self) -> BSParams:
        if self.a is None or self.b is None:
            raise UsageError("--group bs needs --a and --b")
        try:
            return normalize(self.a, self.b)
        except ValueError as exc:
            raise UsageError(str(exc)) from None

    def modulus(self) -> int:
        if self.m is None or self.m < 1:
            raise UsageError("this group needs --m >= 1")
        return self.m


def parse_n(text: str) -> tuple[int, ...]:
    """'1..10', '7' or '100,1000,10000' -> indices."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            values = tuple(range(int(lo), int(hi) + 1))
        else:
            values = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"cannot parse index range {text!r}") from None
    if not values:
        raise UsageError(f"empty index range {text!r}")
    if min(values) < 1:
        raise UsageError("indices must be >= 1")
    if list(values) != sorted(set(values)):
        raise UsageError("indices must be strictly increasing")
    return values


# ---------------------------------------------------------------------------
# value computation


def _default_method(cfg: RunConfig) -> str:
    if cfg.group == "bs":
        return "gelman" if cfg.bs_params().m == 1 else "oracle"
    if cfg.group == "freeproduct":
        return "hall"
    return "closedform"


def _oracle(cfg: RunConfig, n: int):
    if n > MAX_ORACLE_DEGREE:
        raise UsageError(f"the oracle is capped at degree {MAX_ORACLE_DEGREE}")
    if cfg.group == "bs":
        return oracle_counts(cfg.bs_params(), n, threads=cfg.threads)
    if cfg.group == "freeproduct":
        return oracle_free_product(cfg.modulus(), n, threads=cfg.threads)
    raise UsageError("the oracle handles --group bs and --group freeproduct")


def compute(cfg: RunConfig, method: str) -> dict[int, object]:
    """Values at every requested n: int (exact) or LogValue (asymptotic)."""
    ns, kind, group = cfg.n_values, cfg.kind, cfg.group
    if method not in METHODS:
        raise UsageError(f"unknown method {method!r}")

    if method == "oracle":
        field = {"subgroups": "subgroups", "maximal": "maximal", "transitive": "transitive",
                 "primitive": "primitive", "hom": "total"}[kind]
        return {n: getattr(_oracle(cfg, n), field) for n in ns}

    if method in ("gelman", "semidirect"):
        if group != "bs":
            raise UsageError(f"--method {method} applies to --group bs")
        p = cfg.bs_params()
        if p.m != 1:
            raise UsageError(f"--method {method} needs gcd(a, b) = 1")
        if method == "gelman" and kind == "subgroups":
            return {n: gelman_count(p, n) for n in ns}
        if method == "gelman" and kind == "maximal":
            return {n: max_count_coprime(p, n) for n in ns}
        if method == "semidirect" and kind == "subgroups":
            return {n: semidirect_count(p, n) for n in ns}
        raise UsageError(f"--method {method} does not produce --kind {kind}")

    if method == "hall":
        if group == "z":
            hom = factorial
        elif group == "freeproduct":
            m = cfg.modulus()
            if kind == "hom":
                return {n: factorial(n) * count_order_dividing(m, n) for n in ns}
            if kind == "subgroups":
                a = free_product_subgroup_counts(m, max(ns))
                return {n: a[n] for n in ns}
            hom = lambda n: factorial(n) * count_order_dividing(m, n)  # noqa: E731
        else:
            raise UsageError("--method hall applies to --group z and --group freeproduct")
        trans, subs = hall_counts(hom, max(ns))
        if kind == "subgroups":
            return {n: subs[n] for n in ns}
        if kind == "transitive":
            return {n: trans[n] for n in ns}
        if kind == "hom":
            return {n: hom(n) for n in ns}
        raise UsageError(f"--method hall does not produce --kind {kind}")

    if method == "closedform":
        if group == "z":
            table = {"subgroups": lambda n: 1, "maximal": lambda n: 0,
                     "transitive": lambda n: factorial(n - 1), "hom": factorial}
        elif group == "zinvk":
            if cfg.k is None or cfg.k == 0:
                raise UsageError("--group zinvk needs a nonzero --k")
            table = {"subgroups": lambda n: subgroup_count_z_inv_k(cfg.k, n)}
        else:
            raise UsageError("--method closedform applies to --group z and --group zinvk")
        if kind not in table:
            raise UsageError(f"--method closedform does not produce --kind {kind}")
        return {n: table[kind](n) for n in ns}

    if method == "asymptotic":
        if group == "bs":
            m = cfg.bs_params().m
            if m == 1:
                raise UsageError("the asymptotic main term is for gcd(a, b) > 1")
        elif group == "freeproduct":
            m = cfg.modulus()
        else:
            raise UsageError("--method asymptotic applies to --group bs and --group freeproduct")
        if m < 2:
            raise UsageError("the asymptotic main term needs m >= 2")
        if kind in ("subgroups", "maximal"):
            return {n: asy.log_g(m, n) for n in ns}
        if kind == "hom":
            return {n: LogValue(math.lgamma(n + 1)) * asy.log_f(m, n) for n in ns}
        raise UsageError(f"--method asymptotic does not produce --kind {kind}")

    raise UsageError("--method census is only available through the sequence command")


# ---------------------------------------------------------------------------
# rendering


def _cell(v, fmt: str):
    if v is None:
        return "" if fmt == "csv" else None
    if isinstance(v, bool):
        return ("true" if v else "false") if fmt == "csv" else v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, LogValue):
        if fmt == "csv":
            return "ln:0" if v.is_zero else f"ln:{v.ln!r}"
        return v.to_json()
    if isinstance(v, float):
        return repr(v) if fmt == "csv" else v
    return v if fmt == "json" else str(v)


def render(rows: list[dict], columns: list[str], fmt: str) -> str:
    if fmt == "json":
        data = [{c: r[c] if c == "n" else _cell(r.get(c), "json") for c in columns} for r in rows]
        return json.dumps(data, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_cell(r.get(c), "csv") for c in columns])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# commands


def cmd_sequence(cfg: RunConfig) -> tuple[list[dict], list[str], int]:
    method = cfg.method or _default_method(cfg)
    if method == "census":
        m = cfg.modulus() if cfg.group == "freeproduct" else None
        if m is None or m < 2:
            raise UsageError("--method census needs --group freeproduct --m >= 2")
        if min(cfg.n_values) < 3:
            raise UsageError("--method census needs n >= 3")
        rows = []
        for n in cfg.n_values:
            c = fix_census(m, n)
            tail = sum(c.counts[census_threshold(n):])
            rows.append({"n": n, "value": tail, "value2": c.total,
                         "ratio": float(census_tail_fraction(m, n)), "method": method})
        return rows, ["n", "value", "value2", "ratio", "method"], 0
    values = compute(cfg, method)
    rows = [{"n": n, "value": values[n], "method": method} for n in cfg.n_values]
    return rows, ["n", "value", "method"], 0


def cmd_compare(cfg: RunConfig) -> tuple[list[dict], list[str], int]:
    if not cfg.method or not cfg.against:
        raise UsageError("compare needs --method and --against")
    first, second = compute(cfg, cfg.method), compute(cfg, cfg.against)
    rows, status = [], 0
    for n in cfg.n_values:
        x, y = first[n], second[n]
        row = {"n": n, "value": x, "value2": y}
        if isinstance(x, int) and isinstance(y, int):
            row["flag"] = x == y
            if x != y:
                status = 3
        else:
            lx = LogValue.from_int(x) if isinstance(x, int) else x
            ly = LogValue.from_int(y) if isinstance(y, int) else y
            row["ratio"] = None if lx.is_zero or ly.is_zero else float(lx / ly)
        rows.append(row)
    return rows, ["n", "value", "value2", "ratio", "flag"], status


DIAGNOSTICS = ("divisorsum", "sandwich", "binomialtail", "fewfixed", "complement")


def cmd_diagnostics(cfg: RunConfig) -> tuple[list[dict], list[str], int]:
    m = cfg.m
    if m is None or m < 2:
        raise UsageError("diagnostics need --m >= 2")
    rows = []
    prev: dict[str, LogValue] = {}
    for n in cfg.n_values:
        if n >= m:
            s = asy.divisor_sum_term(m, n)
            rows.append({"n": n, "quantity": "divisorsum", "value": s, "bound": float(n), "flag": s < n})
            lo, mid, hi = asy.g_sandwich_check(m, n)
            rows.append({"n": n, "quantity": "sandwich_lower", "value": lo, "bound": mid, "flag": lo < mid})
            rows.append({"n": n, "quantity": "sandwich_upper", "value": mid, "bound": hi, "flag": mid < hi})
        if n >= 16:
            lhs, rhs = asy.binomial_tail_check(n)
            rows.append({"n": n, "quantity": "binomialtail", "value": lhs, "bound": rhs, "flag": lhs < rhs})
            q = asy.few_fixed_decay(m, n)
            rows.append({"n": n, "quantity": "fewfixed", "value": q, "bound": prev.get("fewfixed"),
                         "flag": q < prev["fewfixed"] if "fewfixed" in prev else True})
            prev["fewfixed"] = q
        if n >= 4:
            q = asy.complement_decay(m, n)
            rows.append({"n": n, "quantity": "complement", "value": q, "bound": prev.get("complement"),
                         "flag": q < prev["complement"] if "complement" in prev else True})
            prev["complement"] = q
    return rows, ["n", "quantity", "value", "bound", "flag"], 0


def cmd_montecarlo(cfg: RunConfig) -> dict:
    if cfg.trials < 1:
        raise UsageError("--trials must be >= 1")
    if cfg.m is None or cfg.m < 2:
        raise UsageError("montecarlo needs --m >= 2")
    if len(cfg.n_values) != 1:
        raise UsageError("montecarlo takes a single --n")
    n = cfg.n_values[0]
    if not 3 <= n <= 20:
        raise UsageError("montecarlo needs 3 <= n <= 20")
    return monte_carlo_generation(cfg.m, n, cfg.trials, cfg.seed).to_dict()


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bsgrowth", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, group=True):
        if group:
            p.add_argument("--group", choices=GROUPS, default="bs")
            p.add_argument("--a", type=int)
            p.add_argument("--b", type=int)
            p.add_argument("--k", type=int, help="k for Z[1/k]")
            p.add_argument("--kind", choices=KINDS, default="subgroups")
        p.add_argument("--m", type=int)
        p.add_argument("--n", required=True, help="'1..10', '7' or '100,1000'")
        p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--output", help=f"write here instead of stdout (relative to ${OUTPUT_DIR_ENV} if set)")

    p = sub.add_parser("sequence", help="one method over a range of n")
    common(p)
    p.add_argument("--method", choices=METHODS)

    p = sub.add_parser("compare", help="two methods side by side")
    common(p)
    p.add_argument("--method", choices=METHODS, required=True)
    p.add_argument("--against", choices=METHODS, required=True)

    p = sub.add_parser("diagnostics", help="decay and bound quantities over an n grid")
    common(p, group=False)

    p = sub.add_parser("montecarlo", help="seeded Alt/Sym generation probe")
    common(p, group=False)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    if ns.threads < 1:
        raise UsageError("--threads must be >= 1")
    return RunConfig(
        command=ns.command,
        group=getattr(ns, "group", "freeproduct"),
        a=getattr(ns, "a", None),
        b=getattr(ns, "b", None),
        m=ns.m,
        k=getattr(ns, "k", None),
        n_values=parse_n(ns.n),
        method=getattr(ns, "method", None),
        against=getattr(ns, "against", None),
        kind=getattr(ns, "kind", "subgroups"),
        fmt=ns.fmt,
        seed=getattr(ns, "seed", 0),
        threads=ns.threads,
        trials=getattr(ns, "trials", 0),
        output=ns.output,
    )


def run(cfg: RunConfig) -> tuple[str, int]:
    if cfg.command == "montecarlo":
        record = cmd_montecarlo(cfg)
        if cfg.fmt == "json":
            return json.dumps(record, indent=2) + "\n", 0
        return render([record], list(record), "csv"), 0
    handler = {"sequence": cmd_sequence, "compare": cmd_compare, "diagnostics": cmd_diagnostics}[cfg.command]
    rows, columns, status = handler(cfg)
    return render(rows, columns, cfg.fmt), status


def _write(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    path = Path(output)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = _config(ns)
        text, status = run(cfg)
    except UsageError as exc:
        print(f"bsgrowth: error: {exc}", file=sys.stderr)
        return 2
    except HallConsistencyError as exc:
        print(f"bsgrowth: consistency failure: {exc}", file=sys.stderr)
        return 3
    _write(text, cfg.output)
    return status


if __name__ == "__main__":
    sys.exit(main())
