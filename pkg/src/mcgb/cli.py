"""Command-line driver.

Runs the pipeline in process by default; with --server URL it becomes a
thin client posting the problem file to a running service and
formatting the response locally.  Exit codes: 0 success, 1 verification
failure, 2 parse or usage error.
"""

import argparse
import json
import sys
from pathlib import Path

import httpx

from .parser import ParseError, parse_problem
from .render import render_payload
from .runner import decomposition_payload, verdict_report


def build_parser():
    ap = argparse.ArgumentParser(
        prog="mcgb",
        description="Branch decompositions and minimal universal bases "
                    "for parametric polynomial systems.")
    sub = ap.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, metavar="FILE",
                        help="problem file (see docs/grammar.ebnf)")
    common.add_argument("--format", choices=("table", "json"),
                        default="table", help="output format")
    common.add_argument("--mdb", choices=("least-faithful", "min-nonzero"),
                        default="least-faithful",
                        help="branch basis selection strategy")
    common.add_argument("--simplify", action="store_true",
                        help="also rewrite survivors by their normal forms")
    common.add_argument("--samples", type=int, default=10, metavar="N",
                        help="specialization samples per branch (verify)")
    common.add_argument("--seed", type=int, default=0, metavar="N",
                        help="sampling seed (verify)")
    common.add_argument("--server", metavar="URL",
                        help="post to a running service instead of "
                             "computing in process")
    sub.add_parser("cgs", parents=[common],
                   help="branch decomposition with per-branch bases")
    sub.add_parser("cgb", parents=[common],
                   help="universal basis extracted from the decomposition")
    sub.add_parser("mcgb", parents=[common],
                   help="minimal universal basis")
    sub.add_parser("verify", parents=[common],
                   help="independent sampling checks of the result")
    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return ap


def _cgb_text(d):
    # table format for the cgb subcommand: just the listing
    lines = ["CGB (%d):" % len(d["cgb"])]
    lines += ["  " + g for g in d["cgb"]]
    return "\n".join(lines) + "\n"


def _verify_text(report):
    lines = []
    for i, b in enumerate(report["branches"], 1):
        lines.append("branch %d: sampled %d, failures %d"
                     % (i, b["sampled"], b["failures"]))
    for w in report.get("witnesses", ()):
        state = "essential" if w["essential"] else "not essential"
        conf = "confirmed" if w["confirmed"] else "unconfirmed"
        lines.append("witness %s: %s, %s" % (w["member"], state, conf))
    lines.append("checks=%d failures=%d"
                 % (report["checks"], report["failures"]))
    lines.append("VERIFIED" if report["ok"] else "FAILED")
    return "\n".join(lines) + "\n"


def _emit_result(d, args):
    if args.command == "cgb" and args.format == "table":
        sys.stdout.write(_cgb_text(d))
    else:
        sys.stdout.write(render_payload(d, args.format))
    return 0


def _emit_verdict(report, args):
    if args.format == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(_verify_text(report))
    return 0 if report["ok"] else 1


def _remote(args, text):
    url = args.server.rstrip("/") + "/v1/" + args.command
    body = {"text": text, "mdb": args.mdb}
    if args.command in ("mcgb", "verify"):
        body["simplify"] = args.simplify
    if args.command == "verify":
        body["samples"] = args.samples
        body["seed"] = args.seed
    try:
        resp = httpx.post(url, json=body, timeout=600.0)
    except httpx.HTTPError as exc:
        print(f"mcgb: server unreachable: {exc}", file=sys.stderr)
        return 2
    if resp.status_code == 422:
        detail = resp.json().get("detail", "invalid input")
        print(f"mcgb: {detail}", file=sys.stderr)
        return 2
    if resp.status_code != 200:
        print(f"mcgb: server returned {resp.status_code}", file=sys.stderr)
        return 2
    d = resp.json()
    if args.command == "verify":
        return _emit_verdict(d, args)
    return _emit_result(d, args)


def _serve(args):
    import uvicorn

    from .service import app
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    if args.command == "serve":
        return _serve(args)
    try:
        text = Path(args.input).read_text()
    except OSError as exc:
        print(f"mcgb: cannot read {args.input}: {exc}", file=sys.stderr)
        return 2
    if args.server:
        return _remote(args, text)
    try:
        prob = parse_problem(text)
    except ParseError as exc:
        print(f"mcgb: {args.input}: {exc}", file=sys.stderr)
        return 2
    if args.command == "verify":
        report = verdict_report(prob, simplify=args.simplify,
                                variant=args.mdb, samples=args.samples,
                                seed=args.seed)
        return _emit_verdict(report, args)
    d = decomposition_payload(prob, minimal=args.command == "mcgb",
                              simplify=args.simplify, variant=args.mdb)
    return _emit_result(d, args)


if __name__ == "__main__":
    sys.exit(main())
