"""Command-line front end producing deterministic JSON or text reports.

Exit codes: 0 for any computed verdict (inconclusive included), 2 for input
errors, 3 when a Groebner computation runs out of budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import semigroups as sg
from .errors import BudgetExceeded, InputError, NonMonomialMinor
from .fields import field_for
from .jacobian import (
    AffinePresentation,
    higher_minors_vanish,
    is_regular,
    nonsingular_minor_check,
    rank_and_minors,
    tuple_label,
)
from .parsing import parse_op, parse_poly
from .poly import (
    DEFAULT_MAX_BASIS,
    DEFAULT_MAX_PAIRS,
    MonomialOrder,
    groebner_basis,
    normal_form,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3

CUSP_NOTE = (
    "cusp: the Jacobian ideal computed from the minors (-3x^2, 2y) is {3,4}+S and does "
    "not contain x^2, whereas it is often quoted as sum_{i>=2} K x^i; the computed value is used"
)

# flags whose values may begin with '-'
_VALUE_FLAGS = ("--degrees", "--op", "--t-range")


@dataclass
class Outcome:
    report: dict | None
    exit_code: int
    error: str | None = None
    format: str = "json"


def _num(v):
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _range(text):
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise InputError(f"expected a range a..b, got {text!r}") from None
    if lo > hi:
        raise InputError(f"empty range {text!r}")
    return lo, hi


def _int_list(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _report(command, inputs, result, certificates=(), warnings=(), bounds=None):
    return {
        "command": command,
        "inputs": inputs,
        "result": result,
        "certificates": list(certificates),
        "warnings": list(warnings),
        "bounds": bounds or {},
    }


# ------------------------------------------------------------ polynomial commands


def _ring_inputs(args):
    variables = [v.strip() for v in args.vars.split(",") if v.strip()]
    if not variables:
        raise InputError("--vars needs at least one variable")
    F = field_for(args.char)
    gens = [parse_poly(s, variables, F) for s in args.ideal.split(";") if s.strip()]
    return variables, F, gens


def _budget(args):
    return {"max_pairs": args.max_pairs, "max_basis": args.max_basis}


def cmd_gb(args):
    variables, F, gens = _ring_inputs(args)
    n = len(variables)
    order = MonomialOrder.lex(n) if args.order == "lex" else MonomialOrder.grevlex(n)
    gb = groebner_basis(gens, order, variables=variables, field=F, **_budget(args))
    inputs = {"vars": variables, "ideal": [g.format(order) for g in gens], "char": F.characteristic, "order": args.order}
    result = {"basis": gb.format(), "unit_ideal": gb.is_unit()}
    return _report("gb", inputs, result, bounds=_budget(args))


def cmd_nf(args):
    variables, F, gens = _ring_inputs(args)
    f = parse_poly(args.poly, variables, F)
    gb = groebner_basis(gens, variables=variables, field=F, **_budget(args))
    r = normal_form(f, gb)
    inputs = {"vars": variables, "ideal": [g.format() for g in gens], "char": F.characteristic, "poly": f.format()}
    result = {"normal_form": r.format(), "in_ideal": r.is_zero(), "basis": gb.format()}
    return _report("nf", inputs, result, bounds=_budget(args))


def cmd_jacobian(args):
    variables, F, gens = _ring_inputs(args)
    pres = AffinePresentation.build(
        variables, gens, F, assumed_prime=not args.not_prime, **_budget(args)
    )
    data = rank_and_minors(pres)
    regular = is_regular(pres, data, **_budget(args))
    minors = {
        f"{tuple_label(r)},{tuple_label(c)}": d.format() for (r, c), d in sorted(data.minors.items())
    }
    result = {
        "matrix": [[e.format() for e in row] for row in data.matrix],
        "rank": data.rank,
        "minors": minors,
        "nonsingular_rows": [tuple_label(t) for t in data.nonsingular_rows],
        "nonsingular_cols": [tuple_label(t) for t in data.nonsingular_cols],
        "jacobian_ideal": [d.format() for d in data.jacobian_ideal_gens],
        "jacobian_ideal_monic": [d.monic(pres.gb.order).format() for d in data.jacobian_ideal_gens],
        "regular": regular,
        "nonsingular_minor_check": nonsingular_minor_check(data),
        "higher_minors_vanish": higher_minors_vanish(pres, data),
        "degenerate": data.degenerate,
    }
    warnings = ["ideal I is assumed prime; primality is not verified"]
    if args.not_prime:
        warnings = ["ideal I is not asserted prime; the rank uses the domain zero-test regardless"]
    if data.degenerate:
        warnings.append("every partial derivative vanishes modulo I, so I is not prime; a_r is taken to be 0")
    inputs = {"vars": variables, "ideal": [g.format() for g in gens], "char": F.characteristic}
    certs = [{"kind": "groebner_basis_of_I", "basis": pres.gb.format()}]
    return _report("jacobian", inputs, result, certs, warnings, _budget(args))


# ------------------------------------------------------------ semigroup commands


def _ideal_json(E):
    return {"generators": E.to_list(), "text": str(E)}


def _verdict_json(v):
    out = {"stable": v.stable, "witness": None}
    if v.witness is not None:
        wi = v.witness
        out["witness"] = {
            "degree": wi.degree,
            "exponent": wi.exponent,
            "value": _num(wi.value),
            "image_exponent": wi.image_exponent,
        }
    return out


def _component_json(c):
    return {
        "degree": c.degree,
        "gcd": c.gcd.format(),
        "status": c.status,
        "shift_window": list(c.shift_window),
        "generators_examined": c.generators_examined,
    }


def _cusp_warning(S):
    return [CUSP_NOTE] if S.generators == (2, 3) else []


def sg_pieces(S, args):
    lo, hi = _range(args.degrees)
    table = {str(i): sg.w(S, i).format() for i in range(lo, hi + 1)}
    roots = {str(i): sg.dop_piece_roots(S, i) for i in range(lo, hi + 1)}
    return {"pieces": table, "roots": roots}, [], [], {"degrees": [lo, hi]}


def sg_der(S, args):
    lo, hi = _range(args.degrees) if args.degrees else (-S.conductor - 1, S.conductor + 1)
    pieces = sg.der_pieces(S, lo, hi)
    delta = sg.delta_vs_dop(S)
    result = {
        "der_degrees": [i for i, _ in pieces],
        "der_basis": {str(i): op.format() for i, op in pieces},
        "delta_differs_from_D": delta is not None,
        "delta_witness": None if delta is None else delta.operator.format(),
    }
    certs = []
    if delta is not None:
        certs.append({"kind": "delta_vs_dop", "operator": delta.operator.format(), "reason": delta.reason})
        ideal = sg.delta_positive_ideal(S)
        certs.append(
            {
                "kind": "delta_not_simple",
                "min_generator_degree": ideal.min_degree,
                "positive_element": ideal.positive_element.format(),
                "reason": "positive-degree part is a proper nonzero two-sided ideal",
            }
        )
    return result, certs, [], {"degrees": [lo, hi]}


def sg_present(S, args):
    pres = sg.present_algebra(S, **_budget(args))
    result = {
        "variables": list(pres.variables),
        "degree_map": pres.degree_map,
        "relations": pres.gb.format(),
    }
    return result, [], [], _budget(args)


def sg_jacobian_ideal(S, args):
    pres = sg.present_algebra(S, **_budget(args))
    data = rank_and_minors(pres)
    E = sg.jacobian_ideal_monomial(S, pres)
    result = {
        "rank": data.rank,
        "minors": [d.format() for d in data.jacobian_ideal_gens],
        "ideal": _ideal_json(E),
    }
    return result, [], _cusp_warning(S), _budget(args)


def sg_stable(S, args):
    kinds = ["der", "dop"] if args.kind == "both" else [args.kind]
    check = {"der": sg.is_der_stable, "dop": sg.is_dop_stable}
    if args.ideal_gens:
        ideals = {"given": sg.SIdeal.generated_by(S, _int_list(args.ideal_gens))}
        warnings = []
    else:
        ideals = {"jacobian": sg.jacobian_ideal_monomial(S), "maximal": sg.SIdeal.maximal(S)}
        warnings = _cusp_warning(S)
    result = {}
    for label, E in ideals.items():
        entry = {"ideal": _ideal_json(E)}
        for kind in kinds:
            entry[kind] = _verdict_json(check[kind](S, E))
        result[label] = entry
    return result, [], warnings, {}


def sg_closure(S, args):
    if args.ideal_gens:
        E = sg.SIdeal.generated_by(S, _int_list(args.ideal_gens))
    else:
        E = sg.jacobian_ideal_monomial(S)
    if E.is_unit():
        raise InputError("closure needs a proper ideal")
    res = sg.closure_in_A(S, E, args.t_max, args.shift_bound)
    result = {"ideal": _ideal_json(E), "outcome": res.outcome, "witness": res.witness}
    certs = [] if res.component is None else [dict(kind="component", **_component_json(res.component))]
    return result, certs, [], res.bounds


def sg_meets_a(S, args):
    u = parse_op(args.op)
    lo, hi = _range(args.t_range)
    if u.is_zero():
        raise InputError("operator must be nonzero")
    d = u.degrees()[0]
    B = args.shift_bound if args.shift_bound is not None else sg.default_shift_bound(S, d)
    res = sg.meets_A(S, u, range(lo, hi + 1), B)
    result = {
        "operator": u.format(),
        "in_D_A": True,
        "found": res is not None,
        "degree": None if res is None else res.degree,
    }
    certs = [] if res is None else [dict(kind="component", **_component_json(res.component))]
    return result, certs, [], {"t_range": [lo, hi], "shift_bound": B}


def sg_simple(S, args):
    B = args.shift_bound if args.shift_bound is not None else sg.default_shift_bound(S)
    v = sg.simplicity_verdict(S, args.k_max, B)
    certs = []
    for c in v.certificates:
        certs.append(
            {
                "kind": "coprime_pair",
                "power": c.power,
                "exponent": c.exponent,
                "left": c.left.format(),
                "right": c.right.format(),
                "gcd": c.gcd.format(),
                "roots_disjoint": c.roots_disjoint,
                "reduction": c.reduction,
                "component": _component_json(c.component),
            }
        )
    result = {
        "outcome": v.outcome,
        "jacobian_ideal": _ideal_json(v.jacobian_ideal),
        "note": "finitely many powers checked; root disjointness holds for every checked power",
    }
    return result, certs, _cusp_warning(S), v.bounds


_SG_ACTIONS = {
    "pieces": sg_pieces,
    "der": sg_der,
    "present": sg_present,
    "jacobian-ideal": sg_jacobian_ideal,
    "stable": sg_stable,
    "closure": sg_closure,
    "meets-a": sg_meets_a,
    "simple": sg_simple,
}


def cmd_semigroup(args):
    if args.char:
        raise InputError("semigroup commands work in characteristic 0 only")
    S = sg.semigroup(_int_list(args.gens))
    result, certs, warnings, bounds = _SG_ACTIONS[args.action](S, args)
    inputs = {
        "gens": list(S.generators),
        "gaps": list(S.gaps),
        "frobenius": S.frobenius,
        "conductor": S.conductor,
        "action": args.action,
    }
    for key in ("degrees", "ideal_gens", "kind", "op", "t_range", "k_max", "t_max"):
        if getattr(args, key, None) is not None:
            inputs[key] = getattr(args, key)
    return _report("semigroup", inputs, result, certs, warnings, bounds)


# ------------------------------------------------------------ parser


def build_parser():
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["json", "text"], default=argparse.SUPPRESS)

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS)
    budget.add_argument("--max-basis", type=int, default=DEFAULT_MAX_BASIS)

    ring = argparse.ArgumentParser(add_help=False)
    ring.add_argument("--vars", required=True, help="comma-separated variable names")
    ring.add_argument("--ideal", required=True, help="generators separated by ';'")
    ring.add_argument("--char", type=int, default=0, help="prime characteristic (default: rationals)")

    parser = argparse.ArgumentParser(prog="diffsimple", parents=[fmt])
    parser.set_defaults(format="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", parents=[fmt, budget, ring], help="reduced Groebner basis")
    p.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("nf", parents=[fmt, budget, ring], help="normal form modulo an ideal")
    p.add_argument("--poly", required=True)
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("jacobian", parents=[fmt, budget, ring], help="Jacobian data and regularity")
    p.add_argument("--not-prime", action="store_true", help="do not assert that the ideal is prime")
    p.set_defaults(func=cmd_jacobian)

    p = sub.add_parser("semigroup", parents=[fmt], help="numerical semigroup algebras")
    p.add_argument("--gens", required=True, help="comma-separated generators")
    p.add_argument("--char", type=int, default=0)
    p.set_defaults(func=cmd_semigroup)
    acts = p.add_subparsers(dest="action", required=True)

    a = acts.add_parser("pieces", parents=[fmt])
    a.add_argument("--degrees", default="-3..3")
    a = acts.add_parser("der", parents=[fmt])
    a.add_argument("--degrees", default=None)
    acts.add_parser("present", parents=[fmt, budget])
    acts.add_parser("jacobian-ideal", parents=[fmt, budget])
    a = acts.add_parser("stable", parents=[fmt])
    a.add_argument("--gens", dest="ideal_gens", default=None)
    a.add_argument("--kind", choices=["der", "dop", "both"], default="both")
    a = acts.add_parser("closure", parents=[fmt])
    a.add_argument("--gens", dest="ideal_gens", default=None)
    a.add_argument("--t-max", type=int, default=None)
    a.add_argument("--shift-bound", type=int, default=None)
    a = acts.add_parser("meets-a", parents=[fmt])
    a.add_argument("--op", required=True, help="operator literal, e.g. '(h^2+h-2)*x^-2'")
    a.add_argument("--t-range", default="0..12")
    a.add_argument("--shift-bound", type=int, default=None)
    a = acts.add_parser("simple", parents=[fmt])
    a.add_argument("--k-max", type=int, default=5)
    a.add_argument("--shift-bound", type=int, default=None)
    return parser


def _glue_values(argv):
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def render_text(report) -> str:
    lines = [f"command: {report['command']}"]

    def walk(prefix, value):
        if isinstance(value, dict):
            for k in sorted(value):
                walk(f"{prefix}{k}.", value[k])
        elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            for i, v in enumerate(value):
                walk(f"{prefix}{i}.", v)
        else:
            shown = value if isinstance(value, str) else json.dumps(value)
            lines.append(f"  {prefix[:-1]}: {shown}")

    for section in ("inputs", "result", "certificates", "bounds"):
        if report[section]:
            lines.append(f"{section}:")
            walk("", report[section])
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def dumps(report, fmt="json") -> str:
    if fmt == "text":
        return render_text(report)
    return json.dumps(report, sort_keys=True, indent=2)


def run(argv) -> Outcome:
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_values(list(argv)))
    except SystemExit as exc:
        return Outcome(None, EXIT_INPUT if exc.code else EXIT_OK, "invalid arguments")
    try:
        report = args.func(args)
    except BudgetExceeded as exc:
        return Outcome(None, EXIT_BUDGET, f"budget exceeded: {exc}")
    except (InputError, NonMonomialMinor) as exc:
        return Outcome(None, EXIT_INPUT, f"input error: {exc}")
    return Outcome(report, EXIT_OK, None, args.format)


def main(argv=None):
    out = run(sys.argv[1:] if argv is None else argv)
    if out.report is None:
        if out.error:
            print(out.error, file=sys.stderr)
        return out.exit_code
    print(dumps(out.report, out.format))
    return out.exit_code


if __name__ == "__main__":
    sys.exit(main())
