"""Command-line front end.

Exit codes: 0 when the run succeeds and every verification holds, 2 when a
mathematical verification fails (or a golden file differs), 1 on usage,
parse or unsupported-domain errors.  Output is sorted-key JSON.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import random
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import constructions, oracle, serialize
from .centralizer import centralizer_basis
from .dmat import (
    DMat,
    corner,
    elementary,
    identity,
    jordan_nilpotent,
    mat_pow,
    scale_left,
)
from .errors import MaxcommError, ParseError, UnsupportedDomain
from .scalars import Domain
from .subalgebra import algebra_closure, decompose, is_commutative, verify_theorem

GOLDEN_ENV = "MAXCOMM_GOLDEN_DIR"
PACKAGED_GOLDEN = Path(__file__).with_name("golden")

_TOKEN = re.compile(
    r"(?:(?P<coef>[-+]?\d+(?:/\d+)?|[-+]?[ijk])\*)?"
    r"(?P<atom>I|N|M|E\(\s*\d+\s*,\s*\d+\s*\)|E\d\d|random)"
    r"(?:\^(?P<pow>\d+))?"
)


def _split_tokens(text: str) -> list[str]:
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    out, depth, cur = [], 0, ""
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur.strip())
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur.strip())
    return out


def random_matrix(domain: Domain, n: int, rng: random.Random) -> DMat:
    def entry():
        if domain.kind == "Fp":
            return domain.scalar(rng.randrange(domain.p))
        return domain.elem(Fraction(rng.randint(-3, 3)) for _ in range(domain.z_basis_size))

    return DMat(domain, [[entry() for _ in range(n)] for _ in range(n)])


def parse_token(tok: str, domain: Domain, n: int, rng: random.Random) -> DMat:
    m = _TOKEN.fullmatch(tok.replace(" ", ""))
    if not m:
        raise ParseError(f"cannot parse generator {tok!r}")
    atom = m.group("atom")
    if atom == "I":
        A = identity(domain, n)
    elif atom == "N":
        A = jordan_nilpotent(domain, n)
    elif atom == "M":
        A = corner(domain, n)
    elif atom == "random":
        A = random_matrix(domain, n, rng)
    else:
        # E(i,j) allows multi-digit indices, E12 is one digit each
        digits = re.findall(r"\d+" if atom.startswith("E(") else r"\d", atom)
        i, j = (int(x) for x in digits)
        A = elementary(domain, n, i, j)
    if m.group("pow"):
        A = mat_pow(A, int(m.group("pow")))
    coef = m.group("coef")
    if coef:
        sign = -1 if coef.startswith("-") else 1
        name = coef.lstrip("+-")
        if name in ("i", "j", "k"):
            d = domain.gen(name)
            if sign < 0:
                d = -d
        else:
            d = domain.scalar(Fraction(coef))
        A = scale_left(d, A)
    return A


def parse_gens(text: str | None, domain: Domain, n: int, rng: random.Random) -> list[DMat]:
    if text is None:
        return []
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return [parse_token(t, domain, n, rng) for t in _split_tokens(text)]
    if isinstance(data, dict):
        data = data.get("gens", [])
    if not isinstance(data, list):
        raise ParseError("generators must be a list")
    out = []
    for item in data:
        if isinstance(item, str):
            out.append(parse_token(item, domain, n, rng))
        else:
            out.append(serialize.matrix_from_json(item, domain))
    return out


def _load_gens(args, domain: Domain, rng: random.Random) -> list[DMat]:
    gens = parse_gens(args.gens, domain, args.n, rng)
    if args.input:
        try:
            text = Path(args.input).read_text()
        except OSError as exc:
            raise ParseError(str(exc)) from exc
        gens += parse_gens(text, domain, args.n, rng)
    for g in gens:
        if g.n != args.n or g.domain != domain:
            raise ParseError("generator does not live in M_n(D) for the given --n/--domain")
    return gens


def _basis_json(V) -> list:
    return [serialize.matrix_to_json(A) for A in V.matrices]


# -- verbs ------------------------------------------------------------------

def cmd_centralizer(args, domain, rng):
    V = centralizer_basis(domain, args.n, _load_gens(args, domain, rng))
    return {"dimZ": V.dimZ, "basis": _basis_json(V)}, True


def cmd_closure(args, domain, rng):
    S = algebra_closure(domain, args.n, _load_gens(args, domain, rng))
    return {"dimZ": S.dimZ, "basis": _basis_json(S.space), "commutative": is_commutative(S)}, True


def cmd_decompose(args, domain, rng):
    S = algebra_closure(domain, args.n, _load_gens(args, domain, rng))
    rep = decompose(S)
    body = serialize.report_to_json(rep)
    ok = rep.jEqualsN and rep.nilIndexAtMostN and rep.reducedImpliesFields
    ok = ok and (rep.factorCountAtMostN or not rep.maximal)
    return body, ok


def cmd_verify(args, domain, rng):
    S = algebra_closure(domain, args.n, _load_gens(args, domain, rng))
    checks = verify_theorem(S)
    return {"dimZ": S.dimZ, "basis": _basis_json(S.space), "checks": checks}, checks["passed"]


def cmd_lemma1(args, domain, rng):
    r = constructions.lemma1_report(domain, args.n, args.variant)
    body = {
        "variant": args.variant,
        "claimDimZ": r["claim"].dimZ,
        "computedDimZ": r["computed"].dimZ,
        "equal": r["equal"],
        "claim": _basis_json(r["claim"]),
        "computed": _basis_json(r["computed"]),
    }
    return body, r["equal"]


def cmd_lemma2(args, domain, rng):
    r = constructions.lemma2_report(domain, args.n)
    body = {
        "claimDimZ": r["claim"].dimZ,
        "computedDimZ": r["computed"].dimZ,
        "equal": r["equal"],
        "claim": _basis_json(r["claim"]),
        "computed": _basis_json(r["computed"]),
    }
    return body, r["equal"]


def cmd_example1(args, domain, rng):
    res = constructions.example1_verify(domain, args.n)
    R = constructions.example1_ring(domain, args.n)
    res["factorCount"] = decompose(R).factorCount
    res["basis"] = _basis_json(R.space)
    ok = all(v for k, v in res.items() if isinstance(v, bool)) and res["factorCount"] == 1
    return res, ok


def cmd_example2(args, domain, rng):
    res = constructions.example2_verify(domain, args.n)
    R = constructions.example2_ring(domain, args.n)
    res["factorCount"] = decompose(R).factorCount
    res["basis"] = _basis_json(R.space)
    ok = all(v for k, v in res.items() if isinstance(v, bool)) and res["factorCount"] == 1
    ok = ok and res["dimOverL"] == args.n
    return res, ok


def resolve_golden(name: str) -> Path:
    path = Path(name)
    if path.exists():
        return path
    base = os.environ.get(GOLDEN_ENV)
    if base and (Path(base) / name).exists():
        return Path(base) / name
    if (PACKAGED_GOLDEN / name).exists():
        return PACKAGED_GOLDEN / name
    raise ParseError(f"golden file {name!r} not found")


def cmd_enumerate(args, domain, rng):
    if args.mode == "exhaustive":
        rep = oracle.enumerate_exhaustive(args.p, args.n)
    else:
        rep = oracle.sweep_generated(args.p, args.n, args.max_gens, workers=args.workers)
    body = rep.to_dict()
    ok = rep.allTheoremChecksPassed
    if args.check:
        golden = json.loads(resolve_golden(args.check).read_text())
        matches = golden == json.loads(json.dumps(body))
        body = dict(body, goldenMatch=matches)
        ok = ok and matches
    return body, ok


VERBS = {
    "centralizer": cmd_centralizer,
    "closure": cmd_closure,
    "verify": cmd_verify,
    "decompose": cmd_decompose,
    "lemma1": cmd_lemma1,
    "lemma2": cmd_lemma2,
    "example1": cmd_example1,
    "example2": cmd_example2,
    "enumerate": cmd_enumerate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maxcomm", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, need_gens=False):
        p.add_argument("--domain", default="Q", help="Q, F<p>, H or H(a,b)")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--out", help="also write the JSON document here")
        p.add_argument("--seed", type=int, default=0, help="seed for 'random' generators")
        if need_gens:
            p.add_argument("--gens", help="e.g. '[N, i*N, E(1,2)]' or a JSON list of matrices")
            p.add_argument("--input", help='JSON file {"gens": [matrix, ...]}')

    for verb in ("centralizer", "closure", "verify", "decompose"):
        common(sub.add_parser(verb), need_gens=True)
    p = sub.add_parser("lemma1")
    common(p)
    p.add_argument("--variant", choices=["plainN", "LN"], default="plainN")
    for verb in ("lemma2", "example1", "example2"):
        common(sub.add_parser(verb))
    p = sub.add_parser("enumerate")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--mode", choices=["exhaustive", "sweep"], default="exhaustive")
    p.add_argument("--max-gens", type=int, default=2)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--check", help="golden JSON to compare against (searched in $%s)" % GOLDEN_ENV)
    p.add_argument("--seed", type=int, default=0)
    return parser


def run(argv=None) -> tuple[int, dict]:
    """Execute one command; returns ``(exit_code, json_document)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (0 if exc.code == 0 else 1), {"error": "UsageError"}
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    rng = random.Random(args.seed)
    try:
        if args.verb == "enumerate":
            domain = None
        else:
            domain = serialize.parse_domain_name(args.domain)
            if args.n < 1:
                raise ParseError("--n must be positive")
        body, ok = VERBS[args.verb](args, domain, rng)
    except (ParseError, UnsupportedDomain) as exc:
        return 1, {"error": type(exc).__name__, "message": str(exc)}
    except MaxcommError as exc:
        return 1, {"error": type(exc).__name__, "message": str(exc)}
    except ValueError as exc:
        return 1, {"error": "ValueError", "message": str(exc)}
    if args.out:
        Path(args.out).write_text(serialize.dumps(body))
    return (0 if ok else 2), body


def main(argv=None) -> int:
    code, body = run(argv)
    stream = sys.stdout if code != 1 else sys.stderr
    if body.get("error") != "UsageError":
        stream.write(serialize.dumps(body))
    return code


if __name__ == "__main__":
    sys.exit(main())
