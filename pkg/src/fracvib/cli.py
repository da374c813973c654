"""Command-line entry point: ``fracvib <command> ...``.

Exit status is 0 on success, 1 for configuration or usage errors and 2 when
``verify`` finds a failing check.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import sweeps, verify
from .config import load_config
from .errors import ConfigError, FracVibError
from .figures import CATALOG

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(header, rows, out, svg, title):
    if out is None:
        if svg:
            raise ConfigError("--svg needs --out")
        sweeps.write_csv(header, rows, sys.stdout)
        return
    out = Path(out)
    with out.open("w", newline="") as fh:
        sweeps.write_csv(header, rows, fh)
    if svg:
        from .plotting import write_svg

        write_svg(header, rows, out.with_suffix(".svg"), title)


def _sweep_command(table_fn):
    def run(args):
        cfg = load_config(args.config)
        kwargs = {"kind": args.kind} if getattr(args, "kind", None) else {}
        header, rows = table_fn(cfg, **kwargs)
        _emit(header, rows, args.out or cfg.out, args.svg, args.command)
        return EXIT_OK
    return run


def _figure(args):
    if args.list:
        for pid, panel in CATALOG.items():
            print(f"{pid}\t{panel.quantity}\t{len(panel.curves)} curve(s)\t{panel.note}")
        return EXIT_OK
    if not args.figure_id:
        raise ConfigError("figure id required (or --list)")
    header, rows = sweeps.figure_table(args.figure_id)
    _emit(header, rows, args.out, args.svg, f"panel {args.figure_id}")
    return EXIT_OK


def verify_document(seed, config_path=None) -> dict:
    reports = verify.run_all(seed)
    if config_path is not None:
        cfg = load_config(config_path)
        grid = cfg.omega_grid()
        reports.append(verify.check_spectral_identity(cfg.spec, grid))
        transfer = verify.check_transfer_equivalence(cfg.spec, grid)
        if transfer.records:
            reports.append(transfer)
    summaries = [r.summary() for r in reports]
    return {"seed": seed, "passed": all(s["passed"] for s in summaries), "checks": summaries}


def _verify(args):
    doc = verify_document(args.seed, args.config)
    text = json.dumps(doc, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    for s in doc["checks"]:
        mark = "PASS" if s["passed"] else "FAIL"
        print(f"{mark} {s['check']}: worst {s['worst_error']:.3e} "
              f"(threshold {s['worst_threshold']:.0e}, {s['points']} points)",
              file=sys.stderr)
    return EXIT_OK if doc["passed"] else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fracvib", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def sweep(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--config", required=True, help="JSON sweep config")
        p.add_argument("--out", help="CSV output path (default: stdout)")
        p.add_argument("--svg", action="store_true", help="also write <out>.svg")
        p.set_defaults(func=_sweep_command(fn))
        return p

    sweep("effective", sweeps.effective_table, "effective mass, damping, stiffness")
    sweep("restricted", sweeps.restricted_table, "restricted damping ratio and frequencies")
    p = sweep("response", sweeps.response_table, "free or impulse response at a fixed omega")
    p.add_argument("--kind", choices=("free", "impulse"))
    sweep("transfer", sweeps.transfer_table, "frequency transfer function")
    sweep("rayleigh", sweeps.rayleigh_table, "generalised Rayleigh damping (c = 0)")

    p = sub.add_parser("figure", help="regenerate the data behind a figure panel")
    p.add_argument("figure_id", nargs="?", help="panel id such as 3.1e")
    p.add_argument("--list", action="store_true", help="list catalog panels")
    p.add_argument("--out")
    p.add_argument("--svg", action="store_true")
    p.set_defaults(func=_figure)

    p = sub.add_parser("verify", help="run the numerical verification suite")
    p.add_argument("--config", help="optional config whose spec is checked too")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--out", help="JSON report path (default: stdout)")
    p.set_defaults(func=_verify)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help or a usage error
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except FracVibError as exc:
        print(f"fracvib: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
