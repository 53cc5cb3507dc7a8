"""crossgrade command line.

Exit codes: 0 success (or a decide query answered either way), 1 negative
verification or failed claim, 2 unreadable input or context mismatch,
3 size guard exceeded or ladder did not stabilize.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import problem as pf
from .cohom import (LadderNotStable, conjugation_character, cyclic_module, divisible_cohomology,
                    second_cohomology, trivial_module)
from .crossed import alpha_outer_violations, outer_action_violations, twisting_violations
from .groups import GuardExceeded, index_two_subgroups
from .kaction import apply, normalizing_element

EXIT_OK, EXIT_NEGATIVE, EXIT_PARSE, EXIT_GUARD = 0, 1, 2, 3


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _group_from_args(spec: str):
    desc = pf.group_desc_from_spec(spec)
    return pf.build_group(desc, "--group"), desc


# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    prob = pf.load(args.file)
    G, C = prob.group, prob.coeff
    report, ok = [], True
    for i, p in enumerate(prob.pairs):
        name = p.name or f"pair {i}"
        bad_outer = outer_action_violations(G, C, p.eta)
        bad_tw = twisting_violations(G, C, p.alpha, p.eta, limit=args.limit)
        bad_ao = alpha_outer_violations(G, C, p.alpha, p.eta)
        entry = {"pair": name, "valid": not (bad_outer or bad_tw or bad_ao)}
        if bad_outer:
            entry["outer_action"] = [list(x) for x in bad_outer[: args.limit]]
        if bad_tw:
            entry["twisting"] = [list(x) for x in bad_tw]
        if bad_ao:
            entry["alpha_eta_compatibility"] = [list(x) for x in bad_ao[: args.limit]]
        ok &= entry["valid"]
        report.append(entry)
    if args.json:
        _out(json.dumps({"valid": ok, "pairs": report}))
    else:
        for e in report:
            if e["valid"]:
                _out(f"OK   {e['pair']}")
                continue
            _out(f"FAIL {e['pair']}")
            for (g1, g2, g3) in e.get("twisting", []):
                _out(f"     twisting condition fails at (g1, g2, g3) = ({g1}, {g2}, {g3})")
            for (g, h) in e.get("outer_action", []):
                _out(f"     eta(g) eta(h) eta(gh)^-1 not inner at (g, h) = ({g}, {h})")
            for (g, h) in e.get("alpha_eta_compatibility", []):
                _out(f"     eta(g) eta(h) != inner(alpha(g,h)) eta(gh) at (g, h) = ({g}, {h})")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_act(args) -> int:
    prob = pf.load(args.file)
    if not prob.pairs:
        raise pf.ProblemParseError("no pair to act on", "$.pairs")
    p = prob.pairs[args.pair]
    if args.normalize:
        k = normalizing_element(p)
    elif prob.k is not None:
        k = prob.k
    else:
        raise pf.ProblemParseError("no K-element given (field 'k' or --normalize)", "$.k")
    if not p.validated:
        _out(f"pair {p.name or args.pair} is not in Gamma")
        return EXIT_NEGATIVE
    out = apply(k, p, verify=True)
    res = pf.Problem(prob.group, prob.coeff, prob.group_desc, prob.coeff_desc, [out])
    _out(pf.emit(res).rstrip("\n"))
    return EXIT_OK


def _parse_indices(s: str | None):
    if s is None:
        return None
    s = s.strip()
    return [int(x) for x in s.split(",") if x.strip()] if s else [0]


def cmd_decide(args) -> int:
    from .decide import ContextMismatch, decide, emit_isomorphism
    a = pf.load(args.fileA)
    if args.fileB:
        b = pf.load(args.fileB)
        if not a.pairs or not b.pairs:
            raise pf.ProblemParseError("each file needs a pair", "$.pairs")
        p1, p2 = a.pairs[0], b.pairs[0]
    else:
        if len(a.pairs) < 2:
            raise pf.ProblemParseError("need two pairs in one file or two files", "$.pairs")
        p1, p2 = a.pairs[0], a.pairs[1]
    restrict = _parse_indices(args.restrict_autos)
    if restrict is None and a.query.get("restrict_autos") is not None:
        restrict = a.query["restrict_autos"]
    relation = args.relation or a.query.get("relation", "graded_equiv")
    try:
        v = decide(relation, p1, p2, restrict_autos=restrict, strategy=args.strategy)
    except ContextMismatch as e:
        sys.stderr.write(f"context mismatch: {e}\n")
        return EXIT_PARSE
    out = v.to_json()
    if v.equivalent and args.emit_map:
        out["map"] = emit_isomorphism(v.witness, p1, p2).to_json()
    _out(json.dumps(out))
    return EXIT_OK


def _coeff_factors(spec: str) -> int:
    if spec == "sign":
        return 2
    if spec.startswith("roots:"):
        return int(spec[6:])
    raise pf.ProblemParseError(f"cannot read coefficient spec {spec!r}", "--coeff")


def _kernel_from_action(G, action: str):
    if action == "trivial":
        return None
    if action.startswith("conj:"):
        subs = index_two_subgroups(G)
        i = int(action[5:])
        if not 0 <= i < len(subs):
            raise pf.ProblemParseError(f"only {len(subs)} index-2 subgroups", "--action")
        return subs[i]
    if action.startswith("kernel:"):
        return [int(x) for x in action[7:].split(",")]
    raise pf.ProblemParseError(f"cannot read action spec {action!r}", "--action")


def cmd_cohomology(args) -> int:
    G, desc = _group_from_args(args.group)
    try:
        kernel = _kernel_from_action(G, args.action)
        chi = conjugation_character(G, kernel) if kernel is not None else None
    except ValueError as e:
        raise pf.ProblemParseError(str(e), "--action") from None
    if args.divisible:
        h = divisible_cohomology(G, n_start=args.n_start, kernel=kernel)
        module = f"C* as mu_{h.module.factors[0]}"
    else:
        n = _coeff_factors(args.coeff)
        mod = trivial_module(G, (n,)) if chi is None else cyclic_module(G, n, chi)
        h = second_cohomology(G, mod)
        module = f"Z/{n}"
    out = {"group": desc, "module": module, "action": args.action,
           "invariant_factors": list(h.invariant_factors), "order": h.order}
    if args.representatives:
        out["representatives"] = [r.tolist() for r in h.representatives]
    if args.json:
        _out(json.dumps(out))
    else:
        _out(f"H^2 = {list(h.invariant_factors)}  (order {h.order}, coefficients {module}, action {args.action})")
        if args.representatives:
            for i, r in enumerate(h.representatives):
                _out(f"  class {i}: {pf.dumps(r.tolist()).strip()}")
    return EXIT_OK


def _subgroup_generators(G, elements) -> list[int]:
    """Greedy generators of a subgroup, largest element order first."""
    els = sorted(elements, key=lambda x: (-G.element_order(x), x))
    gens, span = [], {0}
    for x in els:
        if x not in span:
            gens.append(int(x))
            span = set(G.generated(gens))
    return gens


def cmd_classify(args) -> int:
    from .classify import classify_strata
    if args.field != "real":
        raise pf.ProblemParseError("only --field real is supported", "--field")
    G, desc = _group_from_args(args.group)
    strata = classify_strata(G)
    rows = []
    for s in strata:
        eta = "trivial" if len(s.kernel) == G.order else "conj"
        kernel_gens = _subgroup_generators(G, s.kernel)
        rows.append({"base": s.base, "eta": eta, "kernel": list(s.kernel), "kernel_generators": list(kernel_gens),
                     "cohomology": s.cohomology, "count": s.count,
                     "merged_sizes": [e.class_set_size for e in s.entries],
                     "representatives": [e.class_label.tolist() for e in s.entries] if args.representatives else None})
    if args.json:
        _out(json.dumps({"group": desc, "strata": [{k: v for k, v in r.items() if v is not None} for r in rows]}))
    else:
        _out(f"{'base':<5}{'eta':<9}{'kernel generators':<20}{'H^2':<12}{'classes':>7}")
        for r in rows:
            _out(f"{r['base']:<5}{r['eta']:<9}{str(r['kernel_generators']):<20}{str(r['cohomology']):<12}{r['count']:>7}")
    return EXIT_OK


def cmd_examples(args) -> int:
    from .claims import run, select
    claims = select(args.filter)
    if args.filter == "" or args.list:
        for c in (select(None) if args.filter == "" else claims):
            _out(f"{c.name}: {c.text}")
        return EXIT_OK
    results = run(claims, set(args.flip or []))
    for r in results:
        _out(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_NEGATIVE


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="crossgrade", description="crossed products, group actions and graded classification")
    ap.add_argument("--threads", type=int, default=1, help="accepted for compatibility; computation is single-threaded")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("verify", help="check every pair of a problem file")
    p.add_argument("file")
    p.add_argument("--limit", type=int, default=5, help="violations reported per condition")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("act", help="apply the file's K-element to its pair")
    p.add_argument("file")
    p.add_argument("--pair", type=int, default=0)
    p.add_argument("--normalize", action="store_true", help="use the normalizing lambda instead of the file's k")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("decide", help="orbit relation between two pairs")
    p.add_argument("fileA")
    p.add_argument("fileB", nargs="?")
    p.add_argument("--relation", choices=["clifford", "iso", "isometry", "equivalence",
                                          "graded_iso", "graded_equiv"])
    p.add_argument("--restrict-autos", dest="restrict_autos", help="comma-separated automorphism indices")
    p.add_argument("--strategy", default="auto", choices=["auto", "cohomological", "brute"])
    p.add_argument("--emit-map", dest="emit_map", action="store_true")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("cohomology", help="second cohomology with finite or divisible coefficients")
    p.add_argument("--group", required=True)
    p.add_argument("--coeff", default="sign", help="sign | roots:N")
    p.add_argument("--action", default="trivial", help="trivial | conj:I | kernel:i,j,...")
    p.add_argument("--divisible", action="store_true", help="C* via the root-of-unity ladder")
    p.add_argument("--n-start", dest="n_start", type=int)
    p.add_argument("--representatives", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("classify", help="real graded division algebra catalog")
    p.add_argument("--field", default="real")
    p.add_argument("--group", required=True)
    p.add_argument("--representatives", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("examples", help="run the built-in claim suite")
    p.add_argument("--filter", help="substring of claim names; an empty string lists all claims")
    p.add_argument("--flip", action="append", help="invert the expectation of a claim (harness self-test)")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_examples)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except pf.ProblemParseError as e:
        sys.stderr.write(f"parse error: {e}\n")
        return EXIT_PARSE
    except OSError as e:
        sys.stderr.write(f"cannot read input: {e}\n")
        return EXIT_PARSE
    except (GuardExceeded, LadderNotStable) as e:
        sys.stderr.write(f"guard: {e}\n")
        return EXIT_GUARD

