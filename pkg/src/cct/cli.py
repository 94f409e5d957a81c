"""Command-line driver.

Exit code 0 means success.  Exit code 1 means the scripts or laws ran but
something failed where it should not have (or passed where it should have
failed).  Exit code 2 means the run never got that far: bad flags,
unreadable input, a syntax error or an unknown law id.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import CATALOG
from .dsl import DslError, evaluate, parse
from .engine import EnumConfig, resolve_ids, run_suite
from .errors import UnknownLaw

FORMAT_VERSION = "1"
DEFAULT_SEED = 0

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_run(paths, as_json=False, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    results = []
    code = EXIT_OK
    for path in paths:
        record = {"path": path, "entries": [], "error": None}
        results.append(record)
        try:
            script = parse(_read(path))
        except OSError as e:
            record["status"] = "io_error"
            record["error"] = {"kind": "IOError", "message": str(e)}
            print(f"{path}: error: {e}", file=err)
            code = EXIT_USAGE
            continue
        except DslError as e:
            record["status"] = "parse_error"
            record["error"] = e.to_dict()
            print(f"{path}:{e.line}:{e.col}: {e.kind}: {e.message}", file=err)
            code = EXIT_USAGE
            continue
        trace = evaluate(script)
        record["entries"] = [entry.to_dict() for entry in trace.entries]
        if not as_json:
            for entry in trace.entries:
                print(entry.text, file=out)
        if trace.error is not None:
            e = trace.error
            record["error"] = e.to_dict()
            print(f"{path}:{e.line}:{e.col}: {e.kind}: {e.message}", file=err)
        record["status"] = "ok" if trace.ok else "failed"
        if not trace.ok and code == EXIT_OK:
            code = EXIT_FAIL
    if as_json:
        doc = {
            "format_version": FORMAT_VERSION,
            "command": "run",
            "scripts": results,
            "exit_code": code,
        }
        print(_dump(doc), file=out)
    return code


def cmd_check(ids, cfg: EnumConfig, jobs=1, as_json=False, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    try:
        ids = resolve_ids(ids)
    except UnknownLaw as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    reports = run_suite(ids, cfg, jobs=jobs)
    code = EXIT_OK if all(r.as_expected for r in reports) else EXIT_FAIL
    if as_json:
        doc = {
            "format_version": FORMAT_VERSION,
            "command": "check",
            "config": cfg.to_dict(),
            "reports": [r.to_dict() for r in reports],
            "exit_code": code,
        }
        print(_dump(doc), file=out)
        return code
    header = f"mode: {cfg.mode}, max carrier: {cfg.max_carrier}"
    if cfg.mode == "sampled":
        header += f", samples: {cfg.samples}, seed: {cfg.seed}"
    print(header, file=out)
    width = max(len(i) for i in ids)
    for r in reports:
        print(f"{r.law_id:<{width}}  {r.instances:>8}  {r.status_text()}", file=out)
        if r.counterexample is not None and not r.as_expected:
            cx = r.to_dict()["counterexample"]
            print("    counterexample: " + ", ".join(f"{k} = {v}" for k, v in cx.items()), file=out)
        elif r.estimate is not None:
            print(f"    estimated {r.estimate} instances exceeds cap {cfg.cap}", file=out)
    bad = sum(not r.as_expected for r in reports)
    print(f"{len(reports) - bad}/{len(reports)} laws behaved as expected", file=out)
    return code


def cmd_laws(as_json=False, out=None) -> int:
    out = out or sys.stdout
    laws = list(CATALOG.values())
    if as_json:
        print(
            _dump([{"id": l.id, "anchor": l.anchor, "expected": l.expected} for l in laws]),
            file=out,
        )
        return EXIT_OK
    width = max(len(l.id) for l in laws)
    for l in laws:
        suffix = "  [expected to fail]" if l.expected == "fail" else ""
        print(f"{l.id:<{width}}  ({l.anchor}){suffix}", file=out)
    return EXIT_OK


def _non_negative(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return n


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _u64(text):
    n = int(text)
    if not 0 <= n < 2**64:
        raise argparse.ArgumentTypeError("must be an unsigned 64-bit integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cct", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="parse and evaluate scripts")
    run.add_argument("paths", nargs="+", help="script files, or - for standard input")
    run.add_argument("--json", action="store_true")

    check = sub.add_parser("check", help="run laws from the catalog")
    check.add_argument("ids", nargs="*", default=["all"], help="law ids, or 'all'")
    check.add_argument("--json", action="store_true")
    check.add_argument("--max-carrier", type=_non_negative, default=2)
    check.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    check.add_argument("--samples", type=_positive, default=100)
    check.add_argument("--seed", type=_u64, default=None)
    check.add_argument("--jobs", type=_positive, default=1)
    check.add_argument("--cap", type=_positive, default=10**6)

    laws = sub.add_parser("laws", help="list the law catalog")
    laws.add_argument("--json", action="store_true")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "run":
        return cmd_run(args.paths, as_json=args.json)
    if args.command == "laws":
        return cmd_laws(as_json=args.json)
    seed = DEFAULT_SEED if args.seed is None else args.seed
    try:
        cfg = EnumConfig(
            max_carrier=args.max_carrier,
            mode=args.mode,
            samples=args.samples,
            seed=seed,
            cap=args.cap,
        )
    except ValueError as e:
        print(f"cct check: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return cmd_check(args.ids, cfg, jobs=args.jobs, as_json=args.json)


if __name__ == "__main__":
    sys.exit(main())
