"""Command line entry point ``chgkit``.

Exit codes: 0 success, 1 a verdict-level finding (a Violation, a
non-integral trace, a non-member), 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import arith, chgeom, propcheck, selftest
from .errors import ChgkitError
from .linalg import Matrix, h_form
from .numfield import QI, NumberField, parse_element, parse_polynomial

EXIT_OK, EXIT_FINDING, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _field(poly_text, involution):
    try:
        poly = parse_polynomial(poly_text)
    except ChgkitError as exc:
        raise InputError(f"--field: {exc}") from exc
    if involution is None and poly == [1, 0, 1]:
        return QI
    return NumberField(poly, involution=involution)


def _json_arg(text, what):
    """Inline JSON, or a path to a JSON file."""
    s = text.strip()
    if not s.startswith(("[", "{")):
        try:
            with open(text, encoding="utf-8") as fh:
                s = fh.read()
        except OSError as exc:
            raise InputError(f"{what}: cannot read {text!r}: {exc.strerror}") from exc
    try:
        return json.loads(s)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: invalid JSON ({exc.msg})") from exc


def _matrix(args, K):
    data = _json_arg(args.matrix, "--matrix")
    M = Matrix.from_json(K, data)
    if M.shape != (args.n + 1, args.n + 1):
        raise InputError(f"--matrix: expected {args.n + 1}x{args.n + 1}, got {M.shape[0]}x{M.shape[1]}")
    return M


def _emit(obj, out=None):
    text = json.dumps(obj, indent=2)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_prop_classify(args):
    curves = propcheck.ingest(args.infile) if args.infile != "-" else propcheck.ingest(sys.stdin)
    rep = propcheck.report(curves)
    _emit(rep.to_json(), args.out)
    if args.out:
        counts = ", ".join(f"{v.value}={rep.counts[v]}" for v in propcheck.Verdict)
        print(counts)
        print(rep.note)
    return EXIT_FINDING if rep.has_violation else EXIT_OK


def cmd_chain(args):
    K = _field(args.field, args.involution)
    F = h_form(args.n, K)
    p = chgeom.BoundaryPoint(F, _point(args.p, "--p", K, args.n))
    q = chgeom.BoundaryPoint(F, _point(args.q, "--q", K, args.n))
    c = chgeom.chain_through(p, q)
    out = {"n": args.n, "chain": c.to_json()}
    if args.r is not None:
        r = chgeom.BoundaryPoint(F, _point(args.r, "--r", K, args.n))
        out["r_on_chain"] = chgeom.on_chain(r, c)
    _emit(out)
    return EXIT_OK


def _point(text, what, K, n):
    data = _json_arg(text, what)
    if isinstance(data, dict):
        data = data.get("point")
    if not isinstance(data, list) or len(data) != n + 1:
        raise InputError(f"{what}: expected a list of {n + 1} entries")
    return [parse_element(K, str(x)) for x in data]


def cmd_check(args):
    K = _field(args.field, args.involution)
    M = _matrix(args, K)
    F = h_form(args.n, K)
    out = {"n": args.n, "member": True}
    try:
        chgeom.su_membership(M, F)
    except ChgkitError as exc:
        out["member"] = False
        out["reason"] = f"{type(exc).__name__}: {exc}"
    out["integral"] = M.is_integral()
    if K == QI:
        out["lattice_member"] = out["member"] and out["integral"]
    _emit(out)
    return EXIT_OK if out["member"] else EXIT_FINDING


def cmd_adjoint_trace(args):
    K = _field(args.field, args.involution)
    M = _matrix(args, K)
    t = arith.adjoint_trace(M)
    out = {"n": args.n, "adjoint_trace": str(t)}
    if args.bruteforce:
        out["bruteforce"] = str(arith.adjoint_trace_bruteforce(M))
    _emit(out)
    return EXIT_OK


def cmd_obstruction(args):
    K = _field(args.field, args.involution)
    t = parse_element(K, args.trace)
    res = arith.obstruction_check(t, args.n)
    _emit(res.to_json())
    return EXIT_OK if res.verdict is arith.Integrality.INTEGRAL else EXIT_FINDING


def cmd_word_ball(args):
    spec = arith.simplest_lattice(args.n)
    ball = arith.word_ball(arith.default_generators(spec), args.radius)
    lines = [json.dumps(g.matrix.to_json()) for g in ball]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("".join(x + "\n" for x in lines))
        print(json.dumps({"n": args.n, "radius": args.radius, "sizes": ball.sizes}))
    else:
        print("\n".join(lines))
    return EXIT_OK


def cmd_selftest(args):
    return EXIT_OK if selftest.run(seed=args.seed) else EXIT_FINDING


def _add_field(p, default="x^2+1"):
    p.add_argument("--field", default=default, help="defining polynomial in x (default: %(default)s)")
    p.add_argument(
        "--involution", default=None, help="image of the generator a under conjugation (default: -a for x^2+1)"
    )


def build_parser():
    ap = argparse.ArgumentParser(prog="chgkit", description="Exact complex hyperbolic geometry toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    prop = sub.add_parser("prop", help="proportionality classifier")
    psub = prop.add_subparsers(dest="prop_command", required=True)
    pc = psub.add_parser("classify", help="classify JSON-lines curve records")
    pc.add_argument("--in", dest="infile", required=True, help="input .jsonl ('-' for stdin)")
    pc.add_argument("--out", default=None, help="report path (default: stdout)")
    pc.set_defaults(func=cmd_prop_classify)

    ch = sub.add_parser("chain", help="chain through two boundary points")
    ch.add_argument("--n", type=int, required=True)
    ch.add_argument("--p", required=True, help="JSON list of element strings")
    ch.add_argument("--q", required=True)
    ch.add_argument("--r", default=None, help="optional third point to test for incidence")
    _add_field(ch)
    ch.set_defaults(func=cmd_chain)

    ck = sub.add_parser("check", help="SU(n,1) membership of a matrix")
    ck.add_argument("--n", type=int, required=True)
    ck.add_argument("--matrix", required=True, help="JSON file or inline JSON")
    _add_field(ck)
    ck.set_defaults(func=cmd_check)

    at = sub.add_parser("adjoint-trace", help="trace of the adjoint action")
    at.add_argument("--n", type=int, required=True)
    at.add_argument("--matrix", required=True)
    at.add_argument("--bruteforce", action="store_true", help="also compute it from the adjoint matrix")
    _add_field(at)
    at.set_defaults(func=cmd_adjoint_trace)

    ob = sub.add_parser("obstruction", help="integrality of adjoint traces from an SL2 trace")
    ob.add_argument("--n", type=int, required=True)
    ob.add_argument("--trace", required=True, help="element in the generator a")
    _add_field(ob, default="x")
    ob.set_defaults(func=cmd_obstruction)

    wb = sub.add_parser("word-ball", help="enumerate a word ball in SU(h, Z[i])")
    wb.add_argument("--n", type=int, required=True)
    wb.add_argument("--radius", type=int, required=True)
    wb.add_argument("--out", default=None, help="JSON-lines output (default: stdout)")
    wb.set_defaults(func=cmd_word_ball)

    st = sub.add_parser("selftest", help="run the built-in invariant suite")
    st.add_argument("--seed", type=int, default=0)
    st.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, ChgkitError, OSError) as exc:
        print(f"chgkit: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
