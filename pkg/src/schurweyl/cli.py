"""``schurweyl`` command line: rsk, graph, verify, experiment."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from . import experiment as X
from . import graph as G
from . import suites
from .errors import EnumerationLimitError, SchurWeylError
from .rsk import rsk_variant
from .symbols import parse_word
from .tableau import to_text

VARIANTS = {"row": "row", "star": "dual", "mixed": "mixed", "mixed-star": "mixed_dual"}


class CliError(Exception):
    pass


def _common(defaults: bool) -> argparse.ArgumentParser:
    # the global flags are accepted before or after the subcommand
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json", "csv"), default=d("text"), help="stdout format")
    p.add_argument("--out", default=d(None), help="output file (graph) or directory (experiment)")
    p.add_argument("--quiet", action="store_true", default=d(False), help="suppress stdout summaries")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schurweyl", parents=[_common(True)],
                                     description="RSK transforms, Schur-Weyl graphs and ergodic experiments")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(False)

    p = sub.add_parser("rsk", parents=[common], help="print the P and Q tableaux of a word")
    p.add_argument("--word", required=True, help='comma-separated symbols, e.g. "2,1,2*"; "" is the empty word')
    p.add_argument("--variant", choices=sorted(VARIANTS), default="row")

    p = sub.add_parser("graph", parents=[common], help="build and export the Schur-Weyl graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--depth", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=["all", *suites.SUITES])

    p = sub.add_parser("experiment", parents=[common], help="run an ergodic experiment from a JSON config")
    p.add_argument("config", nargs="?", help="path to a JSON config")
    p.add_argument("--preset", help="name of a bundled config (see --list-presets)")
    p.add_argument("--list-presets", action="store_true")
    p.add_argument("--resume", action="store_true", help="replay the stored word log instead of sampling")
    p.add_argument("--seed-override", help="comma-separated seeds replacing the configured ones")
    p.add_argument("--jobs", type=int, default=1, help="seeds run in parallel threads")
    return parser


def _emit(text: str, args) -> None:
    if not args.quiet:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_rsk(args) -> int:
    try:
        w = parse_word(args.word)
    except SchurWeylError as exc:
        raise CliError(f"cannot parse word {args.word!r}: {exc}") from exc
    pair = rsk_variant(w, VARIANTS[args.variant])
    p, q = to_text(pair.p), to_text(pair.q)
    if args.format == "json":
        _emit(json.dumps({"word": args.word, "variant": args.variant, "p": p, "q": q}, ensure_ascii=False), args)
    elif args.format == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows([("p", "q"), (p, q)])
        _emit(buf.getvalue(), args)
    else:
        _emit(f"{p} {q}", args)
    return 0


def cmd_graph(args) -> int:
    if args.depth < 0:
        raise CliError("--depth must be >= 0")
    g = G.build(args.k, args.l, args.depth)
    text = g.to_json() if args.format == "json" else g.to_text()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        _emit(f"wrote {args.out}: {sum(len(v) for v in g.levels)} vertices, "
              f"{sum(len(e) for e in g.edges)} edges", args)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    results = suites.run_suite(args.suite)
    if args.format == "json":
        _emit(json.dumps([r.to_dict() for r in results], indent=1), args)
    else:
        lines = []
        for r in results:
            lines.append(r.summary())
            for f in r.failures[:1]:
                lines.append(f"  counterexample: {f['input']}  expected {f['expected']}  got {f['actual']}")
        _emit("\n".join(lines), args)
    return 0 if all(r.passed for r in results) else 1


def _config(args) -> X.ExperimentConfig:
    if args.preset and args.config:
        raise CliError("give either a config path or --preset, not both")
    if args.preset:
        cfg = X.load_preset(args.preset)
    elif args.config:
        cfg = X.load_config(args.config)
    else:
        raise CliError("experiment needs a config path or --preset")
    if args.seed_override:
        try:
            seeds = [int(s) for s in args.seed_override.split(",") if s.strip()]
        except ValueError as exc:
            raise CliError(f"--seed-override: {exc}") from exc
        if not seeds or min(seeds) < 0:
            raise CliError("--seed-override needs nonnegative integers")
        cfg.seeds = seeds
    return cfg


def cmd_experiment(args) -> int:
    if args.list_presets:
        _emit("\n".join(X.presets()), args)
        return 0
    cfg = _config(args)
    out = Path(args.out) if args.out else X.default_out_dir()
    words = None
    if args.resume:
        log = out / f"{cfg.name}.words.npz"
        if not log.is_file():
            raise CliError(f"--resume: no word log at {log}")
        words = X.load_words(log)
    result = X.run(cfg, words=words, jobs=args.jobs)
    paths = X.save(result, out)
    if args.format == "json":
        _emit(result.to_json(), args)
    elif args.format == "csv":
        _emit(result.to_csv(), args)
    else:
        lines = [f"{cfg.name}: k={cfg.k} l={cfg.l} n={cfg.n} m={cfg.m} seeds={','.join(map(str, cfg.seeds))}"]
        for c in result.shape_checks:
            lines.append(f"  m={c['m']} lambda=({c['shape']}) mean={c['mean']:.6f} "
                         f"target={c['target']:.6f} deviation={c['deviation']:+.6f}")
        lines.append(f"  max density deviation {result.max_density_deviation:.6f} "
                     f"(tolerance {cfg.density_tolerance})")
        lines.append(f"  max shape deviation {result.max_shape_deviation:.6f} (tolerance {cfg.tolerance})")
        lines.append(f"{'PASS' if result.passed else 'FAIL'} wrote {paths['csv']} {paths['json']} {paths['words']}")
        _emit("\n".join(lines), args)
    return 0 if result.passed else 1


COMMANDS = {"rsk": cmd_rsk, "graph": cmd_graph, "verify": cmd_verify, "experiment": cmd_experiment}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (CliError, ValueError, EnumerationLimitError, OSError) as exc:
        print(f"schurweyl {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
