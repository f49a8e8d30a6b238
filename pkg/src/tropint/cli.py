"""``tropint`` command line.

Exit codes: 0 success (including a vacuous verdict), 1 a verified violation of
the seed theorem, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import formats
from .errors import GenericityError, MalformedInputError
from .lab import (FAIL, check_seed_theorem, experiment_subset_seeding, run_corpus)
from .mixed import mixed_volume, yu_conditions
from .surfaces import hypersurface
from .svg import plot_instance

DEFAULT_SEEDS = (0,)


class UsageError(Exception):
    pass


def _seeds(text: str) -> tuple[int, ...]:
    try:
        seeds = tuple(int(s) for s in text.split(",") if s.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"seeds must be integers: {text!r}") from None
    if not seeds:
        raise argparse.ArgumentTypeError("at least one seed is required")
    return seeds


def _params(text: str) -> tuple[int, int, int]:
    try:
        n, k, d = (int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--params expects n,k,d: {text!r}") from None
    return n, k, d


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc.strerror}") from exc
    return formats.parse_instance(text)


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_hypersurface(args) -> int:
    inst = _load(args.input)
    if inst.k != 1:
        raise UsageError(f"expected exactly 1 polynomial, got {inst.k}")
    _emit(formats.dumps(formats.hypersurface_to_dict(hypersurface(inst.polynomials[0]))),
          args.output)
    return 0


def cmd_verify(args) -> int:
    if args.corpus is not None:
        if args.params is None:
            raise UsageError("--corpus needs --params n,k,d")
        n, k, d = args.params
        summary = run_corpus(args.corpus, n, k, d, args.start_seed, args.seeds, args.sparse)
        doc = {"version": formats.VERSION, "params": [n, k, d], "count": args.corpus,
               "passed": summary.passed, "failed": summary.failed,
               "vacuous": summary.vacuous,
               "instances": [{"seed": s, "verdict": r.verdict,
                              "components": len(r.components),
                              "stable_cells": len(r.stable_points)}
                             for s, r in summary.reports]}
        _emit(formats.dumps(doc), args.report)
        print(f"corpus: {summary.passed} pass, {summary.failed} fail, "
              f"{summary.vacuous} vacuous", file=sys.stderr)
        return 1 if summary.failed else 0
    if args.input is None:
        raise UsageError("an instance file is required unless --corpus is given")
    inst = _load(args.input)
    if args.subset_experiment and inst.k > inst.n:
        rep = experiment_subset_seeding(inst, args.seeds)
        _emit(formats.dumps(formats.subset_report_to_dict(rep)), args.report)
        print(f"subset experiment: {rep.verdict}", file=sys.stderr)
        return 0
    report = check_seed_theorem(inst, args.seeds)
    _emit(formats.dumps(formats.report_to_dict(report)), args.report)
    print(f"verdict: {report.verdict} ({len(report.components)} components, "
          f"{report.witnesses} witnessed, {len(report.stable_points)} stable cells)",
          file=sys.stderr)
    return 1 if report.verdict == FAIL else 0


def cmd_plot(args) -> int:
    inst = _load(args.input)
    if inst.n != 2:
        raise UsageError(f"plots need n = 2, got n = {inst.n}")
    Path(args.output).write_text(plot_instance(inst, args.seeds))
    return 0


def cmd_mv(args) -> int:
    inst = _load(args.input)
    if inst.k != inst.n:
        raise UsageError(f"mixed volume needs exactly n = {inst.n} polynomials, got {inst.k}")
    print(mixed_volume([f.support for f in inst.polynomials]))
    return 0


def cmd_yu(args) -> int:
    inst = _load(args.input)
    if inst.k > inst.n:
        raise UsageError(f"at most n = {inst.n} supports allowed, got {inst.k}")
    ok, witness = yu_conditions([f.support for f in inst.polynomials], inst.n)
    if ok:
        print("satisfied")
    else:
        print("violated J={" + ",".join(map(str, witness)) + "}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tropint",
                                description="Exact tropical hypersurfaces and stable intersections.")
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hypersurface", help="cells, weights and dual edges of one polynomial")
    h.add_argument("input")
    h.add_argument("-o", "--output", help="write JSON here instead of stdout")
    h.set_defaults(func=cmd_hypersurface)

    v = sub.add_parser("verify", help="check that every component meets the stable intersection")
    v.add_argument("input", nargs="?")
    v.add_argument("--seeds", type=_seeds, default=DEFAULT_SEEDS,
                   help="perturbation seeds, comma separated (default 0)")
    v.add_argument("--report", help="write the JSON report here instead of stdout")
    v.add_argument("--subset-experiment", action="store_true",
                   help="when k > n, classify the stable points of every n-subset")
    v.add_argument("--corpus", type=int, help="verify this many random instances")
    v.add_argument("--params", type=_params, help="n,k,d for --corpus")
    v.add_argument("--start-seed", type=int, default=0)
    v.add_argument("--sparse", action="store_true", help="sparse supports for --corpus")
    v.set_defaults(func=cmd_verify)

    pl = sub.add_parser("plot", help="SVG of a plane instance")
    pl.add_argument("input")
    pl.add_argument("output")
    pl.add_argument("--seeds", type=_seeds, default=DEFAULT_SEEDS)
    pl.set_defaults(func=cmd_plot)

    m = sub.add_parser("mv", help="normalized mixed volume of the n supports")
    m.add_argument("input")
    m.set_defaults(func=cmd_mv)

    y = sub.add_parser("yu", help="support conditions for a generic prime ideal")
    y.add_argument("input")
    y.set_defaults(func=cmd_yu)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (MalformedInputError, UsageError, GenericityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
