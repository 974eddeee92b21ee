"""Command-line entry point: check, normalize, gen, oracle.

Exit codes (frozen): 0 = everything accepted / all suites pass,
1 = logical rejection (a declaration or suite failed),
2 = environmental or usage error (missing file, parse error, bad flag).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import oracle as oracle_mod
from .corpus import manifest as manifest_mod
from .diagnostics import CheckFailure
from .evaluate import quote
from .globals import Config, Globals
from .pipeline import check_source, run_deep
from .printer import print_term

MAX_LEVEL_ENV = "MINIHOTT_MAX_LEVEL"

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minihott",
        description="A small dependent type checker with a generated proof corpus and a finite-model oracle.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="type-check .hott files in order")
    check.add_argument("files", nargs="+")
    _kernel_flags(check)

    norm = sub.add_parser("normalize", help="print the normal form of a named definition")
    norm.add_argument("files", nargs="+")
    norm.add_argument("--name", required=True)
    _kernel_flags(norm)

    gen = sub.add_parser("gen", help="write the generated corpus to disk")
    gen.add_argument("--level", type=int, required=True)
    gen.add_argument("--out", default=os.path.join("corpus", "generated"))

    orc = sub.add_parser("oracle", help="run finite-model verification suites")
    orc.add_argument("--suite", action="append", default=None)
    orc.add_argument("--bound", type=int, default=oracle_mod.DEFAULT_BOUND)

    return parser


def _kernel_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--no-eta-sigma", dest="eta_sigma", action="store_false", default=True)
    parser.add_argument("--max-level", type=int, default=None)


def _config(args: argparse.Namespace) -> Config:
    max_level = getattr(args, "max_level", None)
    if max_level is None:
        max_level = int(os.environ.get(MAX_LEVEL_ENV, Config.max_level))
    return Config(max_level=max_level, eta_sigma=getattr(args, "eta_sigma", True))


def _check_files(paths: list[str], config: Config):
    glob = Globals(config)
    results = []
    for path in paths:
        with open(path, encoding="utf-8") as handle:
            source = handle.read()
        results.append(check_source(source, glob, file=path))
    return results, glob


def cmd_check(args: argparse.Namespace) -> int:
    config = _config(args)
    results, _ = run_deep(lambda: _check_files(args.files, config))
    reports = [r.report for r in results]
    if args.format == "json":
        print(json.dumps({"reports": [r.to_json() for r in reports]}, ensure_ascii=False, indent=2))
    else:
        for report in reports:
            for decl in report.declarations:
                line = f"{report.file}: {decl.status:8s} {decl.kind} {decl.name} ({decl.ms:.1f} ms)"
                print(line)
                if decl.diagnostic is not None:
                    print(f"  {decl.diagnostic.format(report.file)}")
        accepted = sum(r.accepted for r in reports)
        rejected = sum(r.rejected for r in reports)
        print(f"checked {len(reports)} file(s): {accepted} accepted, {rejected} rejected")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_REJECTED


def cmd_normalize(args: argparse.Namespace) -> int:
    config = _config(args)

    def run():
        results, glob = _check_files(args.files, config)
        if not all(r.ok for r in results):
            return None, None, results
        entry = glob.lookup(args.name)
        if entry is None or entry.kind != "def":
            return None, glob, results
        return print_term(quote(0, entry.value)), glob, results

    normal, glob, results = run_deep(run)
    if glob is None:
        for result in results:
            for decl in result.report.declarations:
                if decl.diagnostic is not None:
                    print(decl.diagnostic.format(result.report.file), file=sys.stderr)
        return EXIT_REJECTED
    if normal is None:
        print(f"error: no definition named {args.name!r} in the checked files", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps({"name": args.name, "normal_form": normal}, ensure_ascii=False))
    else:
        print(normal)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    written = manifest_mod.write_corpus(args.out, args.level)
    if args.format == "json":
        print(json.dumps({"out": args.out, "written": written}, ensure_ascii=False, indent=2))
    else:
        for rel in written:
            print(os.path.join(args.out, rel))
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    reports = oracle_mod.run_suites(args.suite, args.bound)
    if args.format == "json":
        print(json.dumps(oracle_mod.reports_to_json(reports), ensure_ascii=False, indent=2))
    else:
        for report in reports:
            status = "pass" if report.ok else "FAIL"
            print(f"{status} {report.suite}: {report.cases} cases ({report.ms:.1f} ms)")
            for witness in report.counterexamples:
                print(f"  counterexample: {witness}")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_REJECTED


COMMANDS = {
    "check": cmd_check,
    "normalize": cmd_normalize,
    "gen": cmd_gen,
    "oracle": cmd_oracle,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except CheckFailure as exc:
        print(f"error: {exc.diagnostic.format()}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
