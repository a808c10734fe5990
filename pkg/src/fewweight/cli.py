"""fewweight command line: wdist, verify, gauss, export."""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from .charsums import gauss_sum_bruteforce, gauss_sum_exact
from .code import (TableError, build_code, dumps_record, export_record, theorem_rows, wdist_bruteforce,
                   wdist_theorem, write_export, min_distance)
from .field import FieldError, build_field
from .reference import published_notes
from .verify import run_verification, values_agree

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_BUDGET = 10**9
BUDGET_ENV = "FEWWEIGHT_BUDGET"


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class RunConfig:
    command: str
    p: int
    m: int
    method: str = "both"
    fmt: str = "table"
    out: str | None = None
    lemmas: list | None = None
    seed: int = 0
    budget: int = DEFAULT_BUDGET


def _parse_budget(text) -> int:
    try:
        v = int(text)
    except ValueError:
        try:
            v = int(float(text))  # accepts 1e9
        except ValueError:
            raise ValueError(f"budget must be a positive integer, got {text!r}") from None
    if v <= 0:
        raise ValueError(f"budget must be a positive integer, got {text!r}")
    return v


def default_budget() -> int:
    env = os.environ.get(BUDGET_ENV)
    return DEFAULT_BUDGET if env in (None, "") else _parse_budget(env)


def check_budget(cfg: RunConfig):
    pairs = (cfg.p ** cfg.m) ** 2
    if pairs > cfg.budget:
        raise BudgetExceeded(f"q^2 = {pairs} pair enumerations exceed the budget of {cfg.budget} "
                             f"(raise it with --budget or {BUDGET_ENV})")


def _emit(text: str, out: str | None):
    if out:
        tmp = f"{out}.tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, out)
    else:
        sys.stdout.write(text)


def _table(wd, title: str) -> str:
    width = max(len(str(c)) for c in wd.aggregated.values())
    lines = [title, f"{'Weight w':>10}  {'Multiplicity A_w':>{max(width, 16)}}"]
    for w, c in wd.aggregated.items():
        lines.append(f"{w:>10}  {c:>{max(width, 16)}}")
    return "\n".join(lines)


def _raw_table(p, m) -> str:
    rows = theorem_rows(p, m)
    lw = max(len(label) for label, _, _ in rows) + 2
    lines = ["closed-form rows (unaggregated)", f"{'row':<{lw}}{'Weight w':>10}  {'Multiplicity A_w':>16}"]
    for label, w, c in rows:
        lines.append(f"{label:<{lw}}{str(w):>10}  {str(c):>16}")
    return "\n".join(lines)


# -- subcommands ------------------------------------------------------------------

def cmd_wdist(cfg: RunConfig) -> int:
    ctx = build_field(cfg.p, cfg.m)
    spec = build_code(cfg.p, cfg.m, ctx)
    th = bf = None
    if cfg.method in ("theorem", "both"):
        th = wdist_theorem(cfg.p, cfg.m)
    if cfg.method in ("brute", "both"):
        check_budget(cfg)
        bf = wdist_bruteforce(spec)
    wd = bf if bf is not None else th
    status = EXIT_OK
    diff = th.diff(bf) if th is not None and bf is not None else {}
    if diff:
        status = EXIT_MISMATCH

    if cfg.fmt == "json":
        _emit(dumps_record(export_record(spec, wd)), cfg.out)
    else:
        parts = [f"p={cfg.p} m={cfg.m} n={spec.n} codewords={wd.total} "
                 f"min_distance={min_distance(wd)} method={cfg.method}"]
        if th is not None:
            parts.append(_raw_table(cfg.p, cfg.m))
        parts.append(_table(wd, "aggregated" + (" (enumeration)" if bf is not None else "")))
        parts.append("enumerator: " + wd.enumerator())
        if cfg.method == "both":
            parts.append("theorem vs enumeration: " + ("match" if not diff else "MISMATCH"))
        for note in published_notes(cfg.p, cfg.m, spec.n, wd):
            parts.append(f"[{note.kind}] {note.text}")
        _emit("\n".join(parts) + "\n", cfg.out)
    if diff:
        lines = ["per-weight diff (weight: theorem vs enumeration)"]
        lines += [f"  {w}: {a} vs {b}" for w, (a, b) in diff.items()]
        print("\n".join(lines), file=sys.stderr)
    if any(n.kind == "mismatch" for n in published_notes(cfg.p, cfg.m, spec.n, wd)):
        status = EXIT_MISMATCH
    return status


def cmd_verify(cfg: RunConfig) -> int:
    check_budget(cfg)
    reports = run_verification(cfg.p, cfg.m, lemmas=cfg.lemmas, seed=cfg.seed)
    lines = [r.line() for r in reports]
    bad = sum(r.status == "mismatch" for r in reports)
    lines.append(f"{len(reports)} cases: {sum(r.status == 'match' for r in reports)} match, "
                 f"{sum(r.status == 'vacuous' for r in reports)} vacuous, {bad} mismatch")
    _emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_MISMATCH if bad else EXIT_OK


def _cfmt(z: complex) -> str:
    return f"({z.real + 0.0:.6f}, {z.imag + 0.0:.6f})"


def cmd_gauss(cfg: RunConfig) -> int:
    ctx = build_field(cfg.p, cfg.m)
    exact = gauss_sum_exact(cfg.p, cfg.m)
    numeric = gauss_sum_bruteforce(ctx)
    ok = values_agree(exact, numeric)
    norm = exact * exact.conjugate()
    lines = [f"{exact} ≈ {_cfmt(numeric)}", f"|G|² = {norm}"]
    if not ok:
        lines.append("MISMATCH between exact and brute-force values")
    _emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_export(cfg: RunConfig) -> int:
    if not cfg.out:
        raise ValueError("export needs --out")
    ctx = build_field(cfg.p, cfg.m)
    spec = build_code(cfg.p, cfg.m, ctx)
    if cfg.method == "theorem":
        wd = wdist_theorem(cfg.p, cfg.m)
    else:
        check_budget(cfg)
        wd = wdist_bruteforce(spec)
        if cfg.method == "both" and wd != wdist_theorem(cfg.p, cfg.m):
            print("theorem and enumeration disagree; nothing written", file=sys.stderr)
            return EXIT_MISMATCH
    rec = write_export(cfg.out, spec, wd)
    print(f"wrote {cfg.out}: n={rec['n']} codewords={rec['codewords']} "
          f"min_distance={rec['min_distance']}")
    return EXIT_OK


COMMANDS = {"wdist": cmd_wdist, "verify": cmd_verify, "gauss": cmd_gauss, "export": cmd_export}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fewweight",
                                 description="Few-weight trace codes over F_p + uF_p.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, hlp in (("wdist", "weight distribution"), ("verify", "closed forms vs oracles"),
                      ("gauss", "quadratic Gauss sum"), ("export", "write the JSON record")):
        sp = sub.add_parser(name, help=hlp)
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--method", choices=("theorem", "brute", "both"),
                        default="brute" if name == "export" else "both")
        sp.add_argument("--format", dest="fmt", choices=("table", "json"), default="table")
        sp.add_argument("--out")
        sp.add_argument("--lemma", action="append",
                        help="restrict verify to these checks (repeat or comma-separate)")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--budget", default=None,
                        help=f"max q^2 pair enumerations (default {DEFAULT_BUDGET:.0e} or ${BUDGET_ENV})")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        budget = default_budget() if args.budget is None else _parse_budget(args.budget)
        lemmas = None
        if args.lemma:
            lemmas = [x.strip() for chunk in args.lemma for x in chunk.split(",") if x.strip()]
        cfg = RunConfig(args.command, args.p, args.m, args.method, args.fmt, args.out,
                        lemmas, args.seed, budget)
        if cfg.m < 1:
            raise ValueError("m must be at least 1")
        return COMMANDS[cfg.command](cfg)
    except TableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (FieldError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
