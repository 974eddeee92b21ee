"""End-to-end driving: source text -> parse -> resolve -> check.

Resolution and checking are interleaved per declaration so that a
rejected declaration leaves no binding behind: later declarations that
mention it fail with an unbound-identifier diagnostic instead of
silently building on a rejected proof.
"""

from __future__ import annotations

import sys
import threading
from dataclasses import dataclass, field

from .checker import Checker, CheckReport, DeclReport
from .decls import Declaration
from .diagnostics import CheckFailure, Diagnostic
from .globals import Config, Globals
from .parser import parse_module
from .printer import RESERVED_NAME
from .resolver import Resolver


@dataclass
class FileResult:
    """Outcome of running one source file through the pipeline."""

    report: CheckReport
    pragmas: list[str] = field(default_factory=list)
    declarations: list[Declaration] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.report.ok


def check_source(source: str, glob: Globals, file: str = "<input>") -> FileResult:
    """Parse, resolve and check one file against (and extending) `glob`."""
    import time

    module = parse_module(source)
    result = FileResult(CheckReport(file=file), pragmas=list(module.pragmas))
    checker = Checker(glob)
    known = glob.names()
    resolver = Resolver(known)
    seen = set(known)
    for sdecl in module.decls:
        start = time.perf_counter()
        try:
            if sdecl.name in seen:
                raise CheckFailure(
                    Diagnostic(
                        "error", "duplicate-name", f"duplicate declaration {sdecl.name!r}", sdecl.span
                    )
                )
            if RESERVED_NAME.match(sdecl.name):
                raise CheckFailure(
                    Diagnostic(
                        "error",
                        "reserved-name",
                        f"{sdecl.name!r} is reserved for printer-invented binders",
                        sdecl.span,
                    )
                )
            ty = resolver.resolve((), sdecl.ty)
            body = resolver.resolve((), sdecl.body) if sdecl.body is not None else None
            decl = Declaration(sdecl.kind, sdecl.name, ty, body, sdecl.span, sdecl.source_ref)
            checker.check_declaration(decl)
        except CheckFailure as exc:
            ms = (time.perf_counter() - start) * 1000
            result.report.declarations.append(
                DeclReport(sdecl.name, sdecl.kind, "rejected", ms, sdecl.source_ref, exc.diagnostic)
            )
        else:
            ms = (time.perf_counter() - start) * 1000
            result.declarations.append(decl)
            result.report.declarations.append(
                DeclReport(sdecl.name, sdecl.kind, "accepted", ms, sdecl.source_ref)
            )
            seen.add(sdecl.name)
            if sdecl.kind != "goal":
                known.add(sdecl.name)
    return result


def check_files(
    paths: list[str], config: Config | None = None, glob: Globals | None = None
) -> tuple[list[FileResult], Globals]:
    """Check files in order against one shared global environment."""
    if glob is None:
        glob = Globals(config or Config())
    results = []
    for path in paths:
        with open(path, encoding="utf-8") as handle:
            source = handle.read()
        results.append(check_source(source, glob, file=path))
    return results, glob


def run_deep(fn, stack_mb: int = 512):
    """Run `fn` on a thread with a large stack and a raised recursion limit.

    Normalization of large proof terms recurses structurally; CPython's
    default limits are far too small for the deepest corpus terms.
    """
    out: dict = {}

    def wrapped():
        old = sys.getrecursionlimit()
        sys.setrecursionlimit(200_000)
        try:
            out["value"] = fn()
        except BaseException as exc:  # re-raised on the caller's thread
            out["error"] = exc
        finally:
            sys.setrecursionlimit(old)

    threading.stack_size(stack_mb * 1024 * 1024)
    thread = threading.Thread(target=wrapped)
    thread.start()
    thread.join()
    if "error" in out:
        raise out["error"]
    return out["value"]
