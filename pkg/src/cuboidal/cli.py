"""Command-line front end: ``cuboidal-sums <command> [flags]``."""
from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import replace

from .config import TOL_ENV, SumConfig
from .continuation import madelung
from .errors import CuboidalError, PoleError, RegionError
from .geometry import NAMED_A
from .hcp import HCP, hcp_sum
from .scans import conjecture_scan, figure_rows, ordered_map
from .sums import lattice_sum_L
from .verify import run_checks

CSV_MAGIC = "# cuboidal-sums v1"
EXIT_OK, EXIT_CHECK, EXIT_POLE, EXIT_REGION, EXIT_USAGE = 0, 1, 2, 3, 4
TARGETS = ("cuboidal", "fcc", "mcc", "bcc", "acc", "hcp")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_USAGE)


def _cell(x):
    if isinstance(x, float):
        return "%.17g" % x
    return str(x)


def write_csv(cols, rows, out=None) -> str:
    buf = io.StringIO()
    buf.write(CSV_MAGIC + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([_cell(x) for x in r])
    text = buf.getvalue()
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return text


def _config(args) -> SumConfig:
    cfg = SumConfig.from_env()
    if getattr(args, "tol", None) is not None and args.command != "verify":
        cfg = replace(cfg, tol=args.tol)
    if getattr(args, "max_terms", None) is not None:
        cfg = replace(cfg, max_bessel_index=args.max_terms)
    if getattr(args, "shells", None) is not None:
        cfg = replace(cfg, oracle_shell_radius=args.shells)
    return cfg


def _resolve_A(target: str, A):
    if target == "hcp":
        return HCP
    if target == "cuboidal":
        if A is None:
            raise UsageError("--A is required for --target cuboidal")
        return A
    if A is not None:
        raise UsageError(f"--A cannot be combined with --target {target}")
    return NAMED_A[target]


def _evaluate(A, s, cfg):
    return hcp_sum(s, cfg) if A == HCP else lattice_sum_L(A, s, cfg)


def _range(text: str):
    """'x' or 'lo:hi'."""
    if ":" in text:
        lo, hi = text.split(":", 1)
        return float(lo), float(hi)
    v = float(text)
    return v, v


def _grid(lo, hi, step):
    if lo == hi:
        return [lo]
    if step is None or step <= 0:
        raise UsageError("a range needs a positive --step")
    n = int(round((hi - lo) / step))
    return [round(lo + k * step, 12) for k in range(n + 1)]


def _eval_point(args):
    target, A, s, cfg = args
    p = _evaluate(A, s, cfg)
    return (target, "HCP" if A == HCP else float(A), s, p.value, str(p.formula_used), p.abs_error_estimate)


COLS_EVAL = ["target", "A", "s", "value", "formula_used", "abs_error_estimate"]


def cmd_eval(args, cfg):
    A = _resolve_A(args.target, args.A)
    write_csv(COLS_EVAL, [_eval_point((args.target, A, args.s, cfg))], args.out)
    return EXIT_OK


def cmd_scan(args, cfg):
    s_lo, s_hi = _range(args.s)
    if args.target == "cuboidal":
        if args.A is None:
            raise UsageError("--A is required for --target cuboidal")
        a_lo, a_hi = _range(args.A)
        if a_lo != a_hi and s_lo != s_hi:
            raise UsageError("scan one of --A and --s at a time")
        pts = [(args.target, A, s, cfg) for A in _grid(a_lo, a_hi, args.step) for s in _grid(s_lo, s_hi, args.step)]
    else:
        A = _resolve_A(args.target, None if args.A is None else float(args.A))
        pts = [(args.target, A, s, cfg) for s in _grid(s_lo, s_hi, args.step)]
    write_csv(COLS_EVAL, ordered_map(_eval_point, pts, args.jobs), args.out)
    return EXIT_OK


def cmd_figures(args, cfg):
    cols, rows = figure_rows(args.which, cfg, args.step, args.jobs)
    write_csv(cols, rows, args.out)
    return EXIT_OK


def cmd_verify(args, cfg):
    results = run_checks(args.level, cfg, args.tol)
    rows = [(r.name, r.target, r.achieved, r.error, r.tol, "PASS" if r.passed else "FAIL") for r in results]
    write_csv(["check", "target", "achieved", "error", "tol", "status"], rows, args.out)
    failed = sum(not r.passed for r in results)
    sys.stderr.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return EXIT_OK if failed == 0 else EXIT_CHECK


def cmd_conjecture(args, cfg):
    step = 0.02 if args.step is None else args.step
    if not 0 < step <= 0.05:
        raise UsageError("--step must be in (0, 0.05]")
    cols, rows = conjecture_scan(step, cfg, args.jobs)
    write_csv(cols, rows, args.out)
    bad = sum(r[-1] != "PASS" for r in rows)
    sys.stderr.write(f"{bad} violations in {len(rows)} samples\n")
    return EXIT_OK if bad == 0 else EXIT_CHECK


def cmd_madelung(args, cfg):
    A = 1.0 if args.A is None else float(args.A)
    write_csv(["A", "madelung"], [(A, madelung(A, cfg))], args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cuboidal-sums", description="Cuboidal and HCP lattice sums.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--tol", type=float, default=None,
                        help=f"absolute tolerance (default from ${TOL_ENV} or 1e-13)")
        sp.add_argument("--max-terms", type=int, default=None, help="cap on Bessel series indices")
        sp.add_argument("--shells", type=int, default=None, help="cube radius for direct sums")
        sp.add_argument("--out", default=None, help="write CSV here instead of stdout")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes for grids")

    e = sub.add_parser("eval", help="evaluate one point")
    e.add_argument("--target", choices=TARGETS, required=True)
    e.add_argument("--s", type=float, required=True)
    e.add_argument("--A", type=float, default=None)
    common(e)

    sc = sub.add_parser("scan", help="evaluate along a grid in s or A")
    sc.add_argument("--target", choices=TARGETS, required=True)
    sc.add_argument("--s", required=True, help="value or lo:hi")
    sc.add_argument("--A", default=None, help="value or lo:hi (cuboidal only)")
    sc.add_argument("--step", type=float, default=None)
    common(sc)

    f = sub.add_parser("figures", help="emit figure data")
    f.add_argument("--which", type=int, choices=(1, 2, 3, 4), required=True)
    f.add_argument("--step", type=float, default=None, help="override the grid step")
    common(f)

    v = sub.add_parser("verify", help="run the regression checks")
    v.add_argument("--level", choices=("quick", "full"), default="quick")
    common(v)

    c = sub.add_parser("conjecture", help="scan the sign pattern of L_FCC and L_HCP")
    c.add_argument("--step", type=float, default=None)
    common(c)

    m = sub.add_parser("madelung", help="closed-form alternating sum at s = 1/2")
    m.add_argument("--A", type=float, default=None)
    common(m)
    return p


COMMANDS = {
    "eval": cmd_eval,
    "scan": cmd_scan,
    "figures": cmd_figures,
    "verify": cmd_verify,
    "conjecture": cmd_conjecture,
    "madelung": cmd_madelung,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        return COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except PoleError as exc:
        sys.stderr.write(f"pole: {exc}\n")
        return EXIT_POLE
    except RegionError as exc:
        sys.stderr.write(f"region: {exc}\n")
        return EXIT_REGION
    except (CuboidalError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"io error: {exc}\n")
        return EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
