"""Command-line client.

The CLI is a thin client over the HTTP service: by default it mounts the
service in-process (no sockets, single process), and with --server it talks
to a remote instance. Reports are line-oriented key=value text, or one JSON
object with --json. Output is deterministic for a fixed flag set and seed:
wall times appear only with --timing and the thread count is never echoed.

Exit codes: 0 success/converged/confirmed, 1 unreadable input, 2 bad flags or
parameters, 3 solver did not converge, 4 refuted, 5 indeterminate,
6 search too large without --force.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import math
import os
import sys

from .errors import AlphaspecError
from .hypergraph import parse_hypergraph_text

_EXIT_OK = 0
_EXIT_PARSE = 1
_EXIT_FLAGS = 2
_EXIT_NOT_CONVERGED = 3
_EXIT_REFUTED = 4
_EXIT_INDETERMINATE = 5
_EXIT_TOO_LARGE = 6

_VERDICT_EXIT = {
    "confirmed": _EXIT_OK,
    "refuted": _EXIT_REFUTED,
    "indeterminate": _EXIT_INDETERMINATE,
}


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if x is None:
        return "none"
    if isinstance(x, str):
        return x
    if x != x or math.isinf(x):
        return str(x)
    if x == 0:
        return "0.0000000000"
    ax = abs(x)
    if 1e-4 <= ax < 1e8:
        return f"{x:.10f}"
    return f"{x:.10e}"


def _fmt_edges(model: dict) -> str:
    return ";".join(",".join(str(v) for v in e) for e in model["edges"])


def _call(server: str | None, path: str, payload: dict) -> tuple[int, dict]:
    import httpx

    if server:
        r = httpx.post(server.rstrip("/") + path, json=payload, timeout=None)
        return r.status_code, r.json()

    from .service.app import create_app

    async def go():
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://alphaspec.internal"
        ) as client:
            r = await client.post(path, json=payload)
            return r.status_code, r.json()

    return asyncio.run(go())


def _error_exit(body: dict) -> int:
    name = body.get("error", "")
    detail = body.get("detail", "")
    if not name and "detail" in body:  # pydantic validation shape
        name = "ValidationError"
        detail = json.dumps(body["detail"], sort_keys=True)
    print(f"error={name}", file=sys.stderr)
    print(f"detail={detail}", file=sys.stderr)
    if name == "SearchTooLargeError":
        return _EXIT_TOO_LARGE
    return _EXIT_FLAGS


def _read_hypergraph(path: str) -> dict:
    """Parse a hypergraph file (or '-' for stdin) into wire shape; exits 1 on
    unreadable or malformed input."""
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        print(f"error=UnreadableInput", file=sys.stderr)
        print(f"detail={exc}", file=sys.stderr)
        raise SystemExit(_EXIT_PARSE)
    try:
        h = parse_hypergraph_text(text)
    except AlphaspecError as exc:
        print(f"error={type(exc).__name__}", file=sys.stderr)
        print(f"detail={exc}", file=sys.stderr)
        raise SystemExit(_EXIT_PARSE)
    return {"k": h.k, "n": h.n, "edges": [list(e) for e in h.edges]}


def _parse_real(text: str) -> float:
    """Accept plain floats and simple fractions like 4/5."""
    if "/" in text:
        num, den = text.split("/", 1)
        return float(num) / float(den)
    return float(text)


def _forbid_field(values: list[str] | None) -> dict:
    token = None
    members = []
    for v in values or []:
        if v.startswith("@"):
            members.append(_read_hypergraph(v[1:]))
        elif v.lower() in ("none", ""):
            continue
        elif token is None:
            token = v
        else:
            print("error=BadFlags", file=sys.stderr)
            print("detail=at most one named --forbid token", file=sys.stderr)
            raise SystemExit(_EXIT_FLAGS)
    field: dict = {}
    if token:
        field["token"] = token
    if members:
        field["members"] = members
    return field


def _gset_field(text: str) -> dict:
    parts = text.split(":")
    head = parts[0].lower()
    try:
        if head == "bipartite":
            return {"kind": "complete_multipartite", "r": 2}
        if head == "multipartite":
            return {"kind": "complete_multipartite", "r": int(parts[1])}
        if head == "twocolor3":
            return {"kind": "two_colorable_3graphs"}
        if head == "stars":
            return {"kind": "stars", "k": int(parts[1]), "t": int(parts[2])}
    except (IndexError, ValueError):
        pass
    print("error=BadFlags", file=sys.stderr)
    print(f"detail=unknown --gset {text!r}", file=sys.stderr)
    raise SystemExit(_EXIT_FLAGS)


def _solver_options(args, alpha: float) -> dict:
    return {
        "alpha": alpha,
        "tol_kkt": args.tol_kkt,
        "tol_step": args.tol_step,
        "max_iter": args.max_iter,
        "num_random_starts": args.random_starts,
        "seed": args.seed,
        "method": args.method,
        "threads": args.threads,
    }


def _solver_echo(args) -> list[tuple[str, object]]:
    return [
        ("method", args.method),
        ("seed", args.seed),
        ("tol_kkt", repr(args.tol_kkt)),
        ("tol_step", repr(args.tol_step)),
        ("max_iter", args.max_iter),
        ("random_starts", args.random_starts),
    ]


def _emit(lines: list[tuple[str, object]]):
    for key, value in lines:
        print(f"{key}={_fmt(value)}")


def _json_out(obj: dict, args):
    if not args.timing:
        obj.pop("wall_time_s", None)
    print(json.dumps(obj, sort_keys=True))


def _report_lines(body: dict, integral_optimum: bool) -> list[tuple[str, object]]:
    lines: list[tuple[str, object]] = [("question", body["question"])]
    if body.get("alpha") is not None:
        lines.append(("alpha", body["alpha"]))
    opt = body["optimum_value"]
    if integral_optimum and float(opt) == int(opt):
        lines.append(("optimum", int(opt)))
    else:
        lines.append(("optimum", opt))
    lines.append(("verdict", body["verdict"]))
    if body.get("witness"):
        lines.append(("witness_n", body["witness"]["n"]))
        lines.append(("witness_edges", _fmt_edges(body["witness"])))
    lines.append(("witness_iso_class_count", body["witness_iso_class_count"]))
    if body.get("counterexample"):
        lines.append(("counterexample_n", body["counterexample"]["n"]))
        lines.append(("counterexample_edges", _fmt_edges(body["counterexample"])))
    for key in sorted(body.get("details", {})):
        lines.append((f"detail.{key}", body["details"][key]))
    return lines


def _finish_report(args, label: str, flags, body: dict, integral: bool) -> int:
    if args.json:
        obj = dict(body)
        obj["command"] = label
        _json_out(obj, args)
    else:
        lines = [("command", label)] + list(flags) + _report_lines(body, integral)
        if args.timing:
            lines.append(("wall_time_s", body.get("wall_time_s")))
        _emit(lines)
    return _VERDICT_EXIT.get(body.get("verdict", ""), _EXIT_FLAGS)


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_lambda(args) -> int:
    hg = _read_hypergraph(args.input)
    payload = {"hypergraph": hg, "options": _solver_options(args, args.alpha)}
    status, body = _call(args.server, "/v1/lambda", payload)
    if status != 200:
        return _error_exit(body)
    if args.json:
        obj = dict(body)
        obj["command"] = "lambda"
        obj["input"] = args.input
        _json_out(obj, args)
    else:
        lines = [
            ("command", "lambda"),
            ("input", args.input),
            ("alpha", args.alpha),
        ]
        lines += _solver_echo(args)
        lines += [
            ("lambda", body["lambda"]),
            ("converged", body["converged"]),
            ("iterations", body["iterations"]),
            ("kkt_residual", body["kkt_residual"]),
            ("start", body["start_label"]),
        ]
        if body.get("reduced_lam") is not None:
            lines.append(("reduced_lambda", body["reduced_lam"]))
        lines.append(
            ("witness", " ".join(_fmt(x) for x in body["witness"]))
        )
        _emit(lines)
    return _EXIT_OK if body["converged"] else _EXIT_NOT_CONVERGED


def _cmd_family(args) -> int:
    payload = {
        "name": args.name, "k": args.k, "t": args.t,
        "n": args.n, "r": args.r, "m": args.m,
    }
    status, body = _call(args.server, "/v1/family", payload)
    if status != 200:
        return _error_exit(body)
    if args.json:
        _json_out(dict(body, command="family"), args)
    else:
        sys.stdout.write(body["text"])
    return _EXIT_OK


def _cmd_closed_form(args) -> int:
    payload = {
        "name": args.name, "alpha": args.alpha, "k": args.k, "t": args.t,
        "n": args.n, "r": args.r, "e": args.e,
    }
    if args.input:
        payload["hypergraph"] = _read_hypergraph(args.input)
    status, body = _call(args.server, "/v1/closed-form", payload)
    if status != 200:
        return _error_exit(body)
    if args.json:
        _json_out(dict(body, command=f"closed-form {args.name}"), args)
    else:
        lines = [("command", f"closed-form {args.name}")]
        for key in ("k", "t", "n", "r", "e"):
            value = getattr(args, key)
            if value is not None:
                lines.append((key, value))
        if args.input:
            lines.append(("input", args.input))
        lines.append(("alpha", args.alpha))
        lines.append(("lambda", body["lambda"]))
        lines.append(("method", body["method"]))
        if body.get("inner_argmax") is not None:
            lines.append(("inner_argmax", body["inner_argmax"]))
        _emit(lines)
    return _EXIT_OK


def _cmd_search_ex(args) -> int:
    payload = {
        "k": args.k, "n": args.n, "forbid": _forbid_field(args.forbid),
        "s": args.s, "force": args.force, "threads": args.threads,
    }
    if args.guard is not None:
        payload["guard"] = args.guard
    status, body = _call(args.server, "/v1/search/ex", payload)
    if status != 200:
        return _error_exit(body)
    flags = [
        ("k", args.k), ("n", args.n),
        ("forbid", ",".join(args.forbid or []) or "none"),
        ("s", args.s), ("force", args.force),
    ]
    return _finish_report(args, "search ex", flags, body, integral=True)


def _cmd_search_spectral_max(args) -> int:
    payload = {
        "k": args.k, "n": args.n, "forbid": _forbid_field(args.forbid),
        "alpha": args.alpha, "prune": not args.no_prune,
        "force": args.force, "threads": args.threads,
        "options": _solver_options(args, args.alpha),
    }
    if args.guard is not None:
        payload["guard"] = args.guard
    status, body = _call(args.server, "/v1/search/spectral-max", payload)
    if status != 200:
        return _error_exit(body)
    flags = [
        ("k", args.k), ("n", args.n),
        ("forbid", ",".join(args.forbid or []) or "none"),
        ("alpha", args.alpha), ("force", args.force),
    ] + _solver_echo(args)
    return _finish_report(args, "search spectral-max", flags, body, integral=False)


def _cmd_search_colex(args) -> int:
    payload = {
        "k": args.k, "m": args.m, "n": args.n, "alpha": args.alpha,
        "force": args.force, "threads": args.threads,
        "options": _solver_options(args, args.alpha),
    }
    if args.guard is not None:
        payload["guard"] = args.guard
    status, body = _call(args.server, "/v1/search/colex", payload)
    if status != 200:
        return _error_exit(body)
    flags = [
        ("k", args.k), ("m", args.m), ("n", args.n),
        ("alpha", args.alpha), ("force", args.force),
    ] + _solver_echo(args)
    return _finish_report(args, "search colex", flags, body, integral=False)


def _cmd_search_ekr(args) -> int:
    payload = {
        "k": args.k, "t": args.t, "n": args.n, "alpha": args.alpha,
        "force": args.force, "threads": args.threads,
        "options": _solver_options(args, args.alpha),
    }
    if args.guard is not None:
        payload["guard"] = args.guard
    status, body = _call(args.server, "/v1/search/ekr", payload)
    if status != 200:
        return _error_exit(body)
    flags = [
        ("k", args.k), ("t", args.t), ("n", args.n),
        ("alpha", args.alpha), ("force", args.force),
    ] + _solver_echo(args)
    return _finish_report(args, "search ekr", flags, body, integral=False)


def _cmd_verify_universal(args) -> int:
    payload = {
        "forbid": _forbid_field(args.forbid), "gset": _gset_field(args.gset),
        "n": args.n, "s": args.s, "c": args.c,
        "force": args.force, "threads": args.threads,
    }
    if args.guard is not None:
        payload["guard"] = args.guard
    status, body = _call(args.server, "/v1/verify/universal", payload)
    if status != 200:
        return _error_exit(body)
    flags = [
        ("forbid", ",".join(args.forbid or []) or "none"), ("gset", args.gset),
        ("n", args.n), ("s", args.s), ("c", args.c), ("force", args.force),
    ]
    return _finish_report(args, "verify universal", flags, body, integral=True)


def _cmd_verify_strongstab(args) -> int:
    payload = {
        "forbid": _forbid_field(args.forbid), "gset": _gset_field(args.gset),
        "n": args.n, "alpha": args.alpha, "c": args.c,
        "force": args.force, "threads": args.threads,
        "options": _solver_options(args, args.alpha),
    }
    if args.guard is not None:
        payload["guard"] = args.guard
    status, body = _call(args.server, "/v1/verify/strongstab", payload)
    if status != 200:
        return _error_exit(body)
    flags = [
        ("forbid", ",".join(args.forbid or []) or "none"), ("gset", args.gset),
        ("n", args.n), ("alpha", args.alpha), ("c", args.c),
        ("force", args.force),
    ] + _solver_echo(args)
    return _finish_report(args, "verify strongstab", flags, body, integral=False)


def _cmd_verify_kk(args) -> int:
    hg = _read_hypergraph(args.input)
    payload = {
        "hypergraph": hg, "alpha": args.alpha,
        "options": _solver_options(args, args.alpha),
    }
    if args.lam is not None:
        payload["lambda"] = args.lam
    status, body = _call(args.server, "/v1/verify/kk", payload)
    if status != 200:
        return _error_exit(body)
    if args.json:
        _json_out(dict(body, command="verify kk", input=args.input), args)
    else:
        lines = [
            ("command", "verify kk"),
            ("input", args.input),
            ("alpha", args.alpha),
        ]
        if args.lam is None:
            lines += _solver_echo(args)
        lines += [
            ("lambda", body["lambda"]),
            ("solved", body["solved"]),
            ("x", body["x"]),
            ("shadow_bound", body["shadow_bound"]),
            ("shadow_size", body["shadow_size"]),
            ("holds", body["holds"]),
        ]
        _emit(lines)
    return _EXIT_OK if body["holds"] else _EXIT_REFUTED


def _cmd_report_density(args) -> int:
    payload = {
        "forbid": _forbid_field(args.forbid), "gset": _gset_field(args.gset),
        "n_lo": args.n_lo, "n_hi": args.n_hi, "alpha": args.alpha,
        "pi": args.pi, "force": args.force, "threads": args.threads,
        "options": _solver_options(args, args.alpha),
    }
    if args.guard is not None:
        payload["guard"] = args.guard
    status, body = _call(args.server, "/v1/report/density", payload)
    if status != 200:
        return _error_exit(body)
    if args.json:
        _json_out(dict(body, command="report density"), args)
        return _EXIT_OK
    lines = [
        ("command", "report density"),
        ("forbid", ",".join(args.forbid or []) or "none"),
        ("gset", args.gset),
        ("n_lo", args.n_lo), ("n_hi", args.n_hi),
        ("alpha", args.alpha), ("pi", args.pi), ("force", args.force),
        ("question", body["question"]),
    ]
    cols = (
        "ex", "first_diff", "pi_term", "resid1",
        "lambda_hosts", "uniform_term", "resid2", "mu_ratio",
    )
    for row in body["rows"]:
        n = row["n"]
        if row.get("skipped"):
            lines.append((f"row.{n}.skipped", row.get("reason") or "true"))
            continue
        for col in cols:
            if row.get(col) is not None:
                lines.append((f"row.{n}.{col}", row[col]))
    if args.timing:
        lines.append(("wall_time_s", body.get("wall_time_s")))
    _emit(lines)
    return _EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return _EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--json", action="store_true", help="emit one JSON object")
    p.add_argument("--timing", action="store_true", help="include wall time")
    p.add_argument("--server", default=None, help="remote service URL")
    p.add_argument(
        "--threads", type=int,
        default=int(os.environ.get("THREADS", "1") or 1),
        help="worker threads (never changes results)",
    )


def _add_solver(p: argparse.ArgumentParser):
    p.add_argument("--method", choices=("auto", "power", "gradient"), default="auto")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol-kkt", dest="tol_kkt", type=float, default=1e-10)
    p.add_argument("--tol-step", dest="tol_step", type=float, default=1e-13)
    p.add_argument("--max-iter", dest="max_iter", type=int, default=100_000)
    p.add_argument("--random-starts", dest="random_starts", type=int, default=16)


def _add_guard(p: argparse.ArgumentParser):
    p.add_argument("--guard", type=int, default=None)
    p.add_argument("--force", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="alphaspec",
        description="spectral extremal hypergraph toolkit",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("lambda", help="maximize the edge form on the alpha ball")
    p.add_argument("--input", required=True, help="hypergraph file or -")
    p.add_argument("--alpha", type=_parse_real, required=True)
    _add_solver(p)
    _add_common(p)
    p.set_defaults(fn=_cmd_lambda)

    p = sub.add_parser("family", help="emit a named hypergraph")
    p.add_argument("name")
    for flag in ("k", "t", "n", "r", "m"):
        p.add_argument(f"--{flag}", type=int, default=None)
    _add_common(p)
    p.set_defaults(fn=_cmd_family)

    p = sub.add_parser("closed-form", help="closed-form spectral values")
    p.add_argument("name")
    for flag in ("k", "t", "n", "r", "e"):
        p.add_argument(f"--{flag}", type=int, default=None)
    p.add_argument("--input", default=None, help="hypergraph file (uniform)")
    p.add_argument("--alpha", type=_parse_real, required=True)
    _add_common(p)
    p.set_defaults(fn=_cmd_closed_form)

    ps = sub.add_parser("search", help="exhaustive desk-scale searches")
    ssub = ps.add_subparsers(dest="subverb", required=True)

    p = ssub.add_parser("ex", help="max edges / min s-degree")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--forbid", action="append", default=None)
    p.add_argument("--s", type=int, default=0)
    _add_guard(p)
    _add_common(p)
    p.set_defaults(fn=_cmd_search_ex)

    p = ssub.add_parser("spectral-max", help="max spectral value over free class")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--forbid", action="append", default=None)
    p.add_argument("--alpha", type=_parse_real, required=True)
    p.add_argument("--no-prune", action="store_true")
    _add_solver(p)
    _add_guard(p)
    _add_common(p)
    p.set_defaults(fn=_cmd_search_spectral_max)

    p = ssub.add_parser("colex", help="colex segment maximality check")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=_parse_real, required=True)
    _add_solver(p)
    _add_guard(p)
    _add_common(p)
    p.set_defaults(fn=_cmd_search_colex)

    p = ssub.add_parser("ekr", help="star maximality among intersecting graphs")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=_parse_real, required=True)
    _add_solver(p)
    _add_guard(p)
    _add_common(p)
    p.set_defaults(fn=_cmd_search_ekr)

    pv = sub.add_parser("verify", help="verification harnesses")
    vsub = pv.add_subparsers(dest="subverb", required=True)

    p = vsub.add_parser("universal", help="host-family universality")
    p.add_argument("--forbid", action="append", required=True)
    p.add_argument("--gset", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--c", type=_parse_real, required=True)
    _add_guard(p)
    _add_common(p)
    p.set_defaults(fn=_cmd_verify_universal)

    p = vsub.add_parser("strongstab", help="stability hypothesis and conclusions")
    p.add_argument("--forbid", action="append", required=True)
    p.add_argument("--gset", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=_parse_real, required=True)
    p.add_argument("--c", type=_parse_real, required=True)
    _add_solver(p)
    _add_guard(p)
    _add_common(p)
    p.set_defaults(fn=_cmd_verify_strongstab)

    p = vsub.add_parser("kk", help="shadow-size bound check")
    p.add_argument("--input", required=True)
    p.add_argument("--alpha", type=_parse_real, required=True)
    p.add_argument("--lambda", dest="lam", type=_parse_real, default=None)
    _add_solver(p)
    _add_common(p)
    p.set_defaults(fn=_cmd_verify_kk)

    pr = sub.add_parser("report", help="ingredient tables")
    rsub = pr.add_subparsers(dest="subverb", required=True)

    p = rsub.add_parser("density", help="per-n extremal/spectral residuals")
    p.add_argument("--forbid", action="append", required=True)
    p.add_argument("--gset", required=True)
    p.add_argument("--n-lo", dest="n_lo", type=int, required=True)
    p.add_argument("--n-hi", dest="n_hi", type=int, required=True)
    p.add_argument("--alpha", type=_parse_real, required=True)
    p.add_argument("--pi", type=_parse_real, required=True)
    _add_solver(p)
    _add_guard(p)
    _add_common(p)
    p.set_defaults(fn=_cmd_report_density)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=_cmd_serve)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit:
        raise
    except AlphaspecError as exc:
        print(f"error={type(exc).__name__}", file=sys.stderr)
        print(f"detail={exc}", file=sys.stderr)
        return _EXIT_FLAGS


if __name__ == "__main__":
    sys.exit(main())
