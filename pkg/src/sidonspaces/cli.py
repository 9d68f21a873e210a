"""Command-line interface: JSON certificates for constructions, codes and sets."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import __version__
from .codes import bound_ratio, cyclic_code
from .constructions import construct
from .errors import BudgetExceeded, DecodeError, ParameterError, SearchExhausted
from .field_tower import FieldCtx, build_ctx, split_prime_power
from .quadforms import max_span_fraction_bound
from .sidon_sets import bose_record, density_report, extract_br_set, extract_sidon_set
from .subspaces import Subspace, subfield_space
from .verify import is_r_sidon_bruteforce, is_sidon_bruteforce, r_sidon_dim_bound

EXIT_OK, EXIT_PARAMS, EXIT_BUDGET = 0, 2, 3


def digest(cert):
    """sha256 over the certificate without timings (or the digest itself)."""
    body = {k: v for k, v in cert.items() if k not in ("timings", "digest")}
    return hashlib.sha256(json.dumps(body, sort_keys=True).encode()).hexdigest()


def certificate(field=None, construction=None, verdict=None, code=None, sets=None,
                seed=0, timings=None, extra=None):
    cert = {"tool_version": __version__, "field": field, "construction": construction,
            "verdict": verdict, "code": code, "set": sets, "seed": seed,
            "timings": timings or {}}
    if extra:
        cert.update(extra)
    cert["digest"] = digest(cert)
    return cert


def _verdict(con, force, r=None):
    out = is_sidon_bruteforce(con.space, force).to_json()
    if r is not None:
        ok, witness = is_r_sidon_bruteforce(con.space, r, force)
        out["r"] = r
        out["is_r_sidon"] = ok
        out["r_witness"] = [list(w) for w in witness] if witness else None
        out["dimension_bound"] = r_sidon_dim_bound(con.ctx.q, con.ctx.n, con.k, r)
    return out


def _parse_set(text):
    if text is None:
        return None
    return [int(x) for x in text.replace(",", " ").split()]


def _construction(args):
    return construct(args.id, args.q, k=args.k, n=args.n, r=args.r, s=args.s,
                     sidon_set=_parse_set(args.sidon_set), seed=args.seed,
                     max_trials=args.max_trials, allow_beyond=args.allow_beyond)


def cmd_construct(args):
    t0 = time.perf_counter()
    con = _construction(args)
    t1 = time.perf_counter()
    verdict = None
    if not args.no_verify:
        r = con.params.get("r") if con.id in ("C7", "C8") else None
        verdict = _verdict(con, args.force, r)
        if con.spaces:
            verdict["spaces"] = [is_sidon_bruteforce(V, args.force).to_json() for V in con.spaces]
    t2 = time.perf_counter()
    return certificate(con.ctx.to_json(), con.to_json(), verdict, seed=args.seed,
                       timings={"construct": t1 - t0, "verify": t2 - t1})


def _load_json(path):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def cmd_verify(args):
    """Re-verify a certificate, or a field description plus subspace rows."""
    if args.certificate:
        cert = _load_json(args.certificate)
        field_desc = cert["field"]
        con = cert["construction"]
        spaces = con.get("spaces") or [con["space"]]
        r = con.get("params", {}).get("r") if con.get("id") in ("C7", "C8") else None
    else:
        if not (args.field and args.rows):
            raise ParameterError("verify needs a certificate or --field and --rows")
        field_desc = json.loads(args.field)
        spaces = [{"rows": json.loads(args.rows)}]
        r = args.r
    ctx = FieldCtx.from_json(field_desc)
    results = []
    t0 = time.perf_counter()
    for data in spaces:
        V = Subspace.from_json(ctx, data)
        v = is_sidon_bruteforce(V, args.force).to_json()
        if r:
            ok, _ = is_r_sidon_bruteforce(V, r, args.force)
            v["r"], v["is_r_sidon"] = r, ok
        results.append(v)
    verdict = results[0] if len(results) == 1 else {"spaces": results}
    extra = None
    if args.certificate:
        extra = {"matches_certificate": _matches(cert.get("verdict"), verdict)}
    return certificate(ctx.to_json(), None, verdict,
                       timings={"verify": time.perf_counter() - t0}, extra=extra)


def _matches(old, new):
    if old is None:
        return None
    keys = ("is_sidon", "dim_square", "classification", "is_r_sidon")
    return all(old.get(k) == new.get(k) for k in keys if k in old)


def cmd_code(args):
    t0 = time.perf_counter()
    if args.trivial_subfield:
        if args.k is None or args.n is None:
            raise ParameterError("--trivial-subfield needs --k and --n")
        if args.n % args.k:
            raise ParameterError(f"k={args.k} must divide n={args.n}")
        ctx = build_ctx(*split_prime_power(args.q), args.k, args.n)
        gens = [subfield_space(ctx, args.k)]
        construction = {"id": "SUBFIELD", "params": {"q": args.q, "k": args.k, "n": args.n}}
    else:
        con = _construction(args)
        ctx = con.ctx
        gens = list(con.spaces) if con.spaces else [con.space]
        construction = con.to_json()
    code = cyclic_code(gens, force=args.force)
    summary = code.to_json()
    if ctx.q % 2:
        _, target = bound_ratio(code)
        summary["target_ratio"] = f"{target.numerator}/{target.denominator}"
    return certificate(ctx.to_json(), construction, None, code=summary, seed=args.seed,
                       timings={"code": time.perf_counter() - t0})


def cmd_sets(args):
    t0 = time.perf_counter()
    if args.bose is not None:
        rec = bose_record(args.bose)
        value, _ = density_report(rec)
        data = rec.to_json()
        data["density"] = str(value)
        return certificate(None, {"id": "BOSE", "params": {"q": args.bose}}, None,
                           sets=data, timings={"sets": time.perf_counter() - t0})
    if args.source is None:
        raise ParameterError("sets needs --from or --bose")
    args.id = args.source
    con = _construction(args)
    r = con.params.get("r", 2) if con.id in ("C7", "C8") else 2
    rec = extract_sidon_set(con.space) if r == 2 else extract_br_set(con.space, r)
    value, target = density_report(rec, con.ctx.q)
    data = rec.to_json()
    data["density"] = str(value)
    data["density_reference"] = str(target)
    return certificate(con.ctx.to_json(), con.to_json(), None, sets=data, seed=args.seed,
                       timings={"sets": time.perf_counter() - t0})


def cmd_search(args):
    if args.greedy == args.maxspan:
        raise ParameterError("choose exactly one of --greedy and --maxspan")
    args.id = "GREEDY" if args.greedy else "RANDOM_MAXSPAN"
    t0 = time.perf_counter()
    con = _construction(args)
    t1 = time.perf_counter()
    verdict = _verdict(con, args.force)
    extra = None
    if args.maxspan:
        b = max_span_fraction_bound(args.q, args.k, args.n)
        extra = {"bound": f"{b.numerator}/{b.denominator}",
                 "trials": con.params["trials"]}
    return certificate(con.ctx.to_json(), con.to_json(), verdict, seed=args.seed,
                       timings={"search": t1 - t0, "verify": time.perf_counter() - t1},
                       extra=extra)


def cmd_selftest(args):
    from .acceptance import CRITERIA, SLOW, format_line, run_criterion
    results = []
    for num, title, _ in CRITERIA:
        if args.quick and num in SLOW:
            continue
        ok, title, checks = run_criterion(num)
        print(format_line(num, title, ok, checks), file=sys.stderr)
        results.append({"criterion": num, "title": title, "pass": ok,
                        "failed": [label for label, good, _ in checks if not good]})
    return certificate(None, None, None, extra={"selftest": results})


def _add_common(p, construction=True):
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    if construction:
        p.add_argument("--s", type=int, default=1)
        p.add_argument("--sidon-set", dest="sidon_set")
        p.add_argument("--max-trials", dest="max_trials", type=int, default=1000)
        p.add_argument("--allow-beyond", dest="allow_beyond", action="store_true")
    p.add_argument("--seed", type=int, default=0)


def _global_options(p, defaults):
    kw = {} if defaults else {"default": argparse.SUPPRESS}
    p.add_argument("--pretty", action="store_true", help="human-readable output", **kw)
    p.add_argument("--force", action="store_true", help="ignore the evaluation budget", **kw)
    p.add_argument("--threads", type=int, help="accepted for compatibility; results never depend on it",
                   **(kw or {"default": os.cpu_count() or 1}))


def build_parser():
    parser = argparse.ArgumentParser(prog="sidonspaces", description=__doc__)
    _global_options(parser, True)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, False)
    sub = parser.add_subparsers(dest="command", required=True)
    add = lambda name, **kw: sub.add_parser(name, parents=[common], **kw)

    p = add("construct", help="build a construction and verify it")
    p.add_argument("--id", required=True)
    p.add_argument("--no-verify", dest="no_verify", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_construct)

    p = add("verify", help="re-verify a certificate or explicit rows")
    p.add_argument("certificate", nargs="?", help="certificate JSON file, or - for stdin")
    p.add_argument("--field", help='field JSON, e.g. {"p":2,"e":1,"k":2,"n":6,"modulus":[1,1,0,0,0,0,1]}')
    p.add_argument("--rows", help="subspace rows as a JSON list of F_q-digit lists")
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_verify)

    p = add("code", help="cyclic code statistics")
    p.add_argument("--id", default="C2")
    p.add_argument("--trivial-subfield", dest="trivial_subfield", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_code)

    p = add("sets", help="Sidon and B_r sets")
    p.add_argument("--from", dest="source")
    p.add_argument("--bose", type=int)
    _add_common(p)
    p.set_defaults(func=cmd_sets)

    p = add("search", help="greedy expansion or random max-span search")
    p.add_argument("--greedy", action="store_true")
    p.add_argument("--maxspan", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_search)

    p = add("selftest", help="run the acceptance suite")
    p.add_argument("--quick", action="store_true", help="skip the slow criteria")
    p.set_defaults(func=cmd_selftest)
    return parser


def _pretty(obj, prefix=""):
    lines = []
    if isinstance(obj, dict):
        for key in sorted(obj):
            lines.extend(_pretty(obj[key], f"{prefix}{key}."))
    elif isinstance(obj, list) and obj and isinstance(obj[0], (dict, list)):
        for i, item in enumerate(obj):
            lines.extend(_pretty(item, f"{prefix}{i}."))
    else:
        lines.append(f"{prefix[:-1]:<40} {json.dumps(obj)}")
    return lines


def emit(obj, pretty):
    if pretty:
        print("\n".join(_pretty(obj)))
    else:
        print(json.dumps(obj, sort_keys=True))


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except ParameterError as exc:
        emit({"error": "parameter", "message": str(exc)}, args.pretty)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except (DecodeError, SearchExhausted) as exc:
        emit({"error": type(exc).__name__, "message": str(exc)}, args.pretty)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except BudgetExceeded as exc:
        emit({"error": "budget", "message": str(exc)}, args.pretty)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    emit(result, args.pretty)
    if args.command == "selftest" and not all(r["pass"] for r in result["selftest"]):
        return 1
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
