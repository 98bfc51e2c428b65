"""Command line front end.

Exit codes: 0 on success, 1 on bad input or an operation outside its domain,
2 when a search bound or budget runs out (including an Egyptian or
G-membership search that found nothing).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import classify as cl
from . import factroid as fr
from . import oracle as orc
from . import regular_egyptian as re_
from . import subspace as sp
from .errors import BudgetError, FactroidError, ParseError
from .mulsets import parse_mulset
from .rings import Integers, PolyRing, RingSpec, parse_ring

SCHEMA = "factroid/1"

EXIT_OK, EXIT_DOMAIN, EXIT_EXHAUSTED = 0, 1, 2


class Exhausted(Exception):
    """A semi-decision ran out of search room; carries the payload to print."""

    def __init__(self, payload: dict):
        super().__init__("search bound exhausted")
        self.payload = payload


# ---------------------------------------------------------------------------
# input helpers


def split_elements(text: str) -> list[str]:
    """Split on top-level commas, semicolons and newlines."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in ",;\n" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def _elements(ring: RingSpec, text: str | None) -> list:
    if text is None or text == "-":
        text = sys.stdin.read()
    return [ring.parse_element(t) for t in split_elements(text)]


def _subgroup(ring: RingSpec, gens: list, bound: int | None) -> sp.SubgroupRep:
    if isinstance(ring, PolyRing):
        d = max((g.degree for g in gens if not g.is_zero), default=0)
        return sp.span(sp.ambient(ring, d if bound is None else bound), gens)
    return sp.span(ring, gens)


def _fmt_subgroup(F: sp.SubgroupRep) -> str:
    ring = F.ring
    if isinstance(F, sp.FpSubspace):
        return "span{" + ", ".join(ring.format_element(b) for b in F.basis()) + "}"
    if isinstance(F, sp.CyclicInt):
        return f"{F.g}Z"
    if isinstance(F, sp.CyclicMod):
        return f"{F.g}Z/{F.n}Z"
    return "{" + ", ".join(ring.format_element(a) for a in sorted(F.element_set())) + "}"


# ---------------------------------------------------------------------------
# commands; each returns (payload, text)


def cmd_closure(a):
    ring = parse_ring(a.ring)
    W = parse_mulset(ring, a.mulset)
    res = fr.closure(_elements(ring, a.gens), W, bound=a.bound, trace=a.trace)
    out = res.to_json()
    return out, f"{_fmt_subgroup(res.result)}  (iterations {res.iterations})"


def cmd_saturate(a):
    ring = parse_ring(a.ring)
    W = parse_mulset(ring, a.mulset)
    got = fr.saturate(_elements(ring, a.gens), W, a.bound)
    items = sorted(ring.format_element(x) for x in got)
    return {"elements": items, "count": len(items)}, "\n".join(items)


def cmd_wof(a):
    ring = parse_ring(a.ring)
    F = _subgroup(ring, _elements(ring, a.gens), a.bound)
    rep = fr.w_of(F, a.max_degree)
    return rep.to_json(), f"W(F) = {rep.rule}"


def cmd_aof(a):
    ring = parse_ring(a.ring)
    F = _subgroup(ring, _elements(ring, a.gens), a.bound)
    rep = fr.a_of(F)
    return rep.to_json(), f"A(F) = {rep.description}"


def cmd_colon(a):
    ring = parse_ring(a.ring)
    F = _subgroup(ring, _elements(ring, a.gens), a.bound)
    T = [ring.parse_element(t) for t in split_elements(a.by)]
    G = fr.colon_by_set(F, T)
    return {"result": G.to_json()}, _fmt_subgroup(G)


def cmd_check(a):
    ring = parse_ring(a.ring)
    W = parse_mulset(ring, a.mulset)
    F = _subgroup(ring, _elements(ring, a.gens), a.bound)
    ok = fr.is_factroid(F, W)
    return {"is_factroid": ok, "subgroup": F.to_json()}, f"is factroid: {str(ok).lower()}"


def _membership_payload(g: re_.GMembership):
    payload = g.to_json()
    text = f"{payload['status']}" + (f" with h = {payload['witness_h']}" if g.is_member else "")
    if not g.is_member:
        raise Exhausted(payload)
    return payload, text


def cmd_egyptian(a):
    ring = parse_ring(a.ring)
    W = parse_mulset(ring, a.mulset)
    g = re_.egyptian_decide(ring.parse_element(a.num), ring.parse_element(a.den), W, a.max_witness_degree)
    return _membership_payload(g)


def cmd_gmember(a):
    ring = parse_ring(a.ring)
    W = parse_mulset(ring, a.mulset)
    g = re_.g_membership(ring.parse_element(a.element), _elements(ring, a.gens), W, a.max_witness_degree)
    return _membership_payload(g)


def cmd_greedy(a):
    try:
        q = Fraction(a.rational)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {a.rational!r}") from exc
    w = re_.greedy_unit_fractions(q, distinct=a.distinct)
    ok = re_.witness_verify(w)
    out = {"denominators": w.denominators, "target": [q.numerator, q.denominator], "verified": ok}
    return out, " + ".join(f"1/{d}" for d in w.denominators)


def cmd_tregular(a):
    ring = parse_ring(a.ring)
    W = parse_mulset(ring, a.mulset)
    F = _subgroup(ring, _elements(ring, a.gens), a.bound)
    T = [ring.parse_element(t) for t in split_elements(a.by)]
    r = re_.t_regular_check(F, T, W)
    fmt = ring.format_element
    out = {
        "regular": r.regular,
        "counterexample": None if r.regular else {"h": fmt(r.h), "x": fmt(r.x)},
    }
    text = "regular" if r.regular else f"not regular: h = {fmt(r.h)}, x = {fmt(r.x)}"
    return out, text


def cmd_classify(a):
    ring = parse_ring(a.ring)
    rep = cl.classify(ring)
    out = rep.to_json()
    if isinstance(ring, (Integers, PolyRing)) and a.depth is not None:
        out["ua_chain"] = cl.ua_chain(ring, a.depth, a.bound).to_json()
    preds = ", ".join(f"{k}={str(v).lower()}" for k, v in sorted(rep.predicates.items()))
    return out, preds


def cmd_euclid(a):
    ring = parse_ring(a.ring)
    Fs = cl.euclidean_factroids(ring, a.degree)
    return {"factroids": [F.to_json() for F in Fs], "count": len(Fs)}, "\n".join(map(_fmt_subgroup, Fs))


def _oracle_ambient(ring, degree):
    if isinstance(ring, PolyRing):
        if degree is None:
            raise ParseError("--degree is required for polynomial rings")
        return orc.OracleAmbient(ring, degree)
    return orc.OracleAmbient(ring)


def _fmt_set(ring, S) -> list[str]:
    return sorted(ring.format_element(x) for x in S)


def cmd_oracle(a):
    ring = parse_ring(a.ring)
    W = parse_mulset(ring, a.mulset)
    if a.action == "enumerate":
        amb = _oracle_ambient(ring, a.degree)
        fs = orc.enumerate_factroids(amb, W)
        out = {"factroids": [_fmt_set(ring, F) for F in fs], "count": len(fs)}
        if a.compare and isinstance(ring, PolyRing) and ring.nvars == 1 and W.is_whole_reg():
            engine = {F.element_set() for F in cl.euclidean_factroids(ring, a.degree)}
            out["agree"] = engine == set(fs)
        return out, f"{len(fs)} factroids"
    gens = _elements(ring, a.gens)
    amb = _oracle_ambient(ring, a.degree) if a.degree is not None else None
    got = orc.naive_closure(gens, W, amb=amb, ring=ring)
    out = {"elements": _fmt_set(ring, got), "size": len(got)}
    text = f"{len(got)} elements"
    if a.compare:
        res = fr.closure(gens, W, bound=a.degree).result
        agree = frozenset(res.elements()) == got
        out["agree"] = agree
        out["engine"] = res.to_json()
        text += f"; engine {'agrees' if agree else 'DISAGREES'}"
    return out, text


COMMANDS = {
    "closure": cmd_closure,
    "saturate": cmd_saturate,
    "wof": cmd_wof,
    "aof": cmd_aof,
    "colon": cmd_colon,
    "check": cmd_check,
    "egyptian": cmd_egyptian,
    "greedy": cmd_greedy,
    "gmember": cmd_gmember,
    "tregular": cmd_tregular,
    "classify": cmd_classify,
    "euclid": cmd_euclid,
    "oracle": cmd_oracle,
}


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="factroid", description="Factroids of commutative rings.")
    parser.add_argument("--output", choices=["json", "text"], default="json")
    parser.add_argument("--seed", type=int, default=None, help="recorded in the invocation echo")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, ring=True, mulset=False, gens=False, bound=False):
        p = sub.add_parser(name, help=help_)
        if ring:
            p.add_argument("--ring", required=True, help='e.g. "Z", "Z/12", "GF(2)[x,y]", "(GF(3))x(GF(2))"')
        if mulset:
            p.add_argument("--mulset", default="reg", help="reg, units, evendeg, gen:{..}, explicit:{..}, compl:{..}")
        if gens:
            p.add_argument("--gens", default=None, help="comma separated elements; '-' or omitted reads stdin")
        if bound:
            p.add_argument("--bound", type=int, default=None, help="degree bound of the ambient space")
        p.add_argument("--output", choices=["json", "text"], default=argparse.SUPPRESS)
        return p

    p = add("closure", "smallest W-factroid containing the generators", mulset=True, gens=True, bound=True)
    p.add_argument("--trace", action="store_true")
    add("saturate", "W-saturation of an element list", mulset=True, gens=True, bound=True)
    p = add("wof", "W(F) for the span of the generators", gens=True, bound=True)
    p.add_argument("--max-degree", type=int, default=None)
    add("aof", "A(F) for the span of the generators", gens=True, bound=True)
    p = add("colon", "(F : T) for the span F of the generators", gens=True, bound=True)
    p.add_argument("--by", required=True)
    add("check", "is the span of the generators a W-factroid", mulset=True, gens=True, bound=True)
    p = add("egyptian", "is num/den a sum of reciprocals of members of W", mulset=True)
    p.add_argument("--num", required=True)
    p.add_argument("--den", required=True)
    p.add_argument("--max-witness-degree", type=int, default=2)
    p = add("greedy", "greedy unit fraction expansion", ring=False)
    p.add_argument("--rational", required=True)
    p.add_argument("--distinct", action="store_true")
    p = add("gmember", "membership in G^W(S)", mulset=True, gens=True)
    p.add_argument("--element", required=True)
    p.add_argument("--max-witness-degree", type=int, default=2)
    p = add("tregular", "T-regularity of the span of the generators", mulset=True, gens=True, bound=True)
    p.add_argument("--by", required=True)
    p = add("classify", "unit-additive, sublocalizable and local predicates")
    p.add_argument("--depth", type=int, default=None, help="also compute the unit-additive chain")
    p.add_argument("--bound", type=int, default=3)
    p = add("euclid", "factroids of Z or GF(p)[x]")
    p.add_argument("--degree", type=int, default=0)
    p = add("oracle", "brute-force reference computations", mulset=True, gens=True)
    p.add_argument("action", choices=["enumerate", "closure"])
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--compare", action="store_true")
    return parser


def _invocation(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if v is not None}


def render(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    envelope = {"schema": SCHEMA, "invocation": _invocation(args)}
    code = EXIT_OK
    try:
        payload, text = COMMANDS[args.command](args)
        envelope["result"] = payload
    except Exhausted as exc:
        code = EXIT_EXHAUSTED
        envelope["result"] = exc.payload
        envelope["error"] = {"category": "not-found", "message": "no witness within the search bound"}
        text = "not found within the search bound"
    except BudgetError as exc:
        code = EXIT_EXHAUSTED
        envelope["error"] = {"category": exc.category, "message": str(exc)}
        text = None
    except FactroidError as exc:
        code = EXIT_DOMAIN
        envelope["error"] = {"category": exc.category, "message": str(exc)}
        text = None
    if args.output == "json":
        stdout.write(render(envelope) + "\n")
    elif text is not None:
        stdout.write(text + "\n")
    if "error" in envelope and (args.output == "text" or code == EXIT_DOMAIN):
        err = envelope["error"]
        stderr.write(f"factroid: {err['category']}: {err['message']}\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
