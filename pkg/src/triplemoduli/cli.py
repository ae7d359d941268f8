"""Command line interface.

Eight subcommands expose the library: triple, walls, chambers, higgs,
rigidity, morse, census, classify. Every run builds one report
envelope {command, inputs, outputs, citations, warnings}; --json
prints it as stable JSON (sorted keys, exact rationals as "num/den"
strings, infinite endpoints as "inf", absent values as null), the
default mode prints the same structure as indented text.

Exit codes: 0 success, 1 domain error (the message names the violated
precondition), 2 usage error (unknown flags, malformed values).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from .census import canonicalize, coprime_partition, enumerate_region, tau_quotient_facts
from .classify import SubspaceVerdict, Verdict, classify
from .errors import DomainError
from .higgs import (
    HiggsType,
    RigidityReport,
    coprime_smooth,
    expected_dim,
    minima_triple_type,
    mw_relations,
    rigidity,
    toledo,
    vanishing_pattern,
)
from .morse import MORSE_NEGATIVE_ADVISORY, HodgeChain, dim_h1_weight, morse_index, uk_profile
from .rationals import jsonable, parse_rat
from .triples import (
    TripleType,
    alpha_range,
    alpha_slope,
    dim_stable_moduli,
    fibration_dims,
    thresholds,
    triple_slope,
)
from .walls import chambers, enumerate_walls, is_critical


def _rational(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            "expected an exact rational written as N or N/D, got %r" % text
        )


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected a comma-separated integer list, got %r" % text
        )


def _ext(x):
    """Wire form of an extended rational: None marks +infinity."""
    return "inf" if x is None else x


def _triple_wire(T: TripleType) -> dict:
    return {"n1": T.n1, "n2": T.n2, "d1": T.d1, "d2": T.d2}


def _higgs_wire(H: HiggsType) -> dict:
    return {"p": H.p, "q": H.q, "a": H.a, "b": H.b, "g": H.g}


def _rigidity_wire(rep: RigidityReport) -> dict:
    return {
        "applies": rep.applies,
        "reason": rep.reason,
        "factor1": _higgs_wire(rep.factor1) if rep.factor1 else None,
        "factor2_rank": rep.factor2_rank,
        "factor2_degree": rep.factor2_degree,
        "dim_sum": rep.dim_sum,
        "dim_sum_closed_form": rep.dim_sum_closed_form,
        "expected_dim": rep.expected_dim,
        "below_expected": rep.below_expected,
    }


def _subspace_wire(v: SubspaceVerdict) -> dict:
    return {
        "nonempty": v.nonempty,
        "connected": v.connected,
        "stable_nonempty": v.stable_nonempty,
        "closure_of_stable_connected": v.closure_of_stable_connected,
        "smooth_of_expected_dim": v.smooth_of_expected_dim,
    }


def _cmd_triple(args) -> tuple[dict, dict, list]:
    T = TripleType(args.n1, args.n2, args.d1, args.d2)
    warnings: list[str] = []
    rng = alpha_range(T)
    outputs: dict = {
        "type": _triple_wire(T),
        "mu1": Fraction(T.d1, T.n1),
        "mu2": Fraction(T.d2, T.n2),
        "slope": triple_slope(T),
        "alpha_range": {
            "lo": rng.lo,
            "hi": _ext(rng.hi),
            "empty": rng.empty,
            "single_point": rng.single_point,
        },
    }
    try:
        th = thresholds(T)
        outputs["thresholds"] = {
            "alpha_m": th.alpha_m,
            "alpha_M": _ext(th.alpha_M),
            "alpha_0": th.alpha_0,
            "alpha_js": list(th.alpha_js),
            "alpha_t": th.alpha_t,
            "alpha_e": th.alpha_e,
            "alpha_L": th.alpha_L,
            "alpha_L_is_fallback": th.alpha_L_is_fallback,
            "dualized": th.dualized,
        }
    except DomainError as exc:
        outputs["thresholds"] = None
        warnings.append("thresholds omitted: %s" % exc)
    if args.alpha is not None:
        outputs["alpha_slope"] = alpha_slope(T, args.alpha)
    if args.g is not None:
        outputs["dim_stable_moduli"] = dim_stable_moduli(T, args.g)
        fib = fibration_dims(T, args.g)
        outputs["fibration"] = {
            "fiber_dim": fib.fiber_dim,
            "empty_fiber": fib.empty_fiber,
            "via_duality": fib.via_duality,
            "base_factors": [
                {"kind": f.kind, "rank": f.rank, "degree": f.degree}
                for f in fib.base_factors
            ],
        }
        if fib.empty_fiber:
            warnings.append(
                "fibration fiber dimension is negative: the extension "
                "fibers are empty for this type"
            )
    return outputs, {}, warnings


def _cmd_walls(args) -> tuple[dict, dict, list]:
    T = TripleType(args.n1, args.n2, args.d1, args.d2)
    interval = tuple(args.interval) if args.interval is not None else None
    walls = enumerate_walls(
        T,
        interval=interval,
        include_endpoints=args.include_endpoints,
        g=args.g,
    )
    outputs: dict = {
        "count": len(walls),
        "walls": [
            {
                "alpha": w.alpha,
                "witnesses": [[x.n1p, x.n2p, x.dsum] for x in w.witnesses],
                "stabilized": w.stabilized,
            }
            for w in walls
        ],
    }
    if args.alpha is not None:
        test = is_critical(T, args.alpha)
        outputs["alpha_test"] = {
            "alpha": test.alpha,
            "critical": test.critical,
            "witnesses": [[x.n1p, x.n2p, x.dsum] for x in test.witnesses],
        }
    return outputs, {}, []


def _cmd_chambers(args) -> tuple[dict, dict, list]:
    T = TripleType(args.n1, args.n2, args.d1, args.d2)
    rep = chambers(T, args.g, cutoff=args.cutoff)
    outputs = {
        "alpha_m": rep.alpha_m,
        "top": rep.top,
        "top_is_alpha_M": rep.top_is_alpha_M,
        "alpha_L": rep.alpha_L,
        "marker": rep.marker,
        "marker_status": rep.marker_status,
        "marker_chamber": rep.marker_chamber,
        "flips_to_large": rep.flips_to_large,
        "count": len(rep.chambers),
        "chambers": [
            {
                "lo": c.lo,
                "hi": c.hi,
                "contains_2g_minus_2": c.contains_2g_minus_2,
                "is_large_chamber": c.is_large_chamber,
            }
            for c in rep.chambers
        ],
        "walls": [w.alpha for w in rep.walls],
    }
    warnings = []
    if rep.marker_status == "at_alpha_M":
        warnings.append(
            "2g-2 sits exactly at alpha_M: the Higgs comparison window "
            "degenerates for this type"
        )
    return outputs, {}, warnings


def _cmd_higgs(args) -> tuple[dict, dict, list]:
    H = HiggsType(args.p, args.q, args.a, args.b, args.g)
    t = toledo(H)
    minima = minima_triple_type(H)
    mw = mw_relations(H)
    outputs = {
        "toledo": {
            "tau": t.tau,
            "tau_max": t.tau_M,
            "within_bound": t.within_bound,
            "saturated": t.saturated,
        },
        "expected_dim": expected_dim(H),
        "coprime_smooth": coprime_smooth(H),
        "vanishing_pattern": vanishing_pattern(H),
        "minima": {
            "case": minima.case_tag,
            "triple": _triple_wire(minima.triple),
            "alpha": minima.alpha,
            "product_factors": (
                [list(f) for f in minima.product_factors]
                if minima.product_factors is not None
                else None
            ),
        },
        "range_placement": {
            "alpha_m": mw.alpha_m,
            "alpha_M": _ext(mw.alpha_M),
            "two_g_minus_2": mw.two_g_minus_2,
            "alpha_m_vs_2g2": mw.alpha_m_vs_2g2,
            "alpha_M_vs_2g2": mw.alpha_M_vs_2g2,
            "facts": {name: value for name, value in mw.facts},
        },
    }
    return outputs, {}, []


def _cmd_rigidity(args) -> tuple[dict, dict, list]:
    H = HiggsType(args.p, args.q, args.a, args.b, args.g)
    rep = rigidity(H)
    return _rigidity_wire(rep), {}, list(rep.warnings)


def _cmd_morse(args) -> tuple[dict, dict, list]:
    chain = HodgeChain(args.ranks, args.degrees)
    m = chain.length
    uk = []
    for k in range(-(m - 1), m):
        rank, degree = uk_profile(chain, k)
        uk.append({"k": k, "rank": rank, "degree": degree})
    h1 = [
        {"k": k, "dim": dim_h1_weight(chain, k, args.g)}
        for k in range(0, m)
    ]
    index = morse_index(chain, args.g)
    outputs = {
        "length": m,
        "ranks": list(chain.ranks),
        "degrees": list(chain.degrees),
        "uk": uk,
        "h1_weights": h1,
        "index": index,
    }
    warnings = [MORSE_NEGATIVE_ADVISORY] if index < 0 else []
    return outputs, {}, warnings


def _cmd_census(args) -> tuple[dict, dict, list]:
    if (args.a is None) != (args.b is None):
        raise DomainError("--a and --b must be given together")
    rep = enumerate_region(args.p, args.q, args.g)
    quo = tau_quotient_facts(args.p, args.q)
    part = coprime_partition(args.p, args.q, args.g)
    outputs: dict = {
        "count": rep.count,
        "points": [[cp.a, cp.b] for cp in rep.points],
        "coprime_count": len(rep.coprime_points),
        "coprime_points": [[cp.a, cp.b] for cp in rep.coprime_points],
        "lines": {
            str(t): [[cp.a, cp.b] for cp in line]
            for t, line in rep.lines.items()
        },
        "points_per_line": quo.k,
        "quotient": {
            "k": quo.k,
            "image_lattice_step": quo.image_lattice_step,
            "kernel_size": quo.kernel_size,
            "kernel_generator": list(quo.kernel_generator),
        },
        "coprime_and_non_coprime_nonempty": part.both_nonempty,
    }
    if args.a is not None:
        cp = canonicalize(args.p, args.q, args.g, args.a, args.b)
        outputs["canonical"] = [cp.a, cp.b]
    return outputs, {}, []


def _cmd_classify(args) -> tuple[dict, dict, list]:
    H = HiggsType(args.p, args.q, args.a, args.b, args.g)
    v: Verdict = classify(H)
    outputs = {
        "tau": v.tau,
        "tau_max": v.tau_max,
        "in_range": v.in_range,
        "saturated": v.saturated,
        "coprime": v.coprime,
        "case": v.case,
        "stable_nonempty": v.stable_nonempty,
        "stable_smooth_dim": v.stable_smooth_dim,
        "closure_of_stable_connected": v.closure_of_stable_connected,
        "full_space_nonempty": v.full_space_nonempty,
        "full_space_connected": v.full_space_connected,
        "rigid": v.rigid,
        "rigidity_data": (
            _rigidity_wire(v.rigidity_data) if v.rigidity_data else None
        ),
        "r_gamma": _subspace_wire(v.r_gamma),
        "r_pu": _subspace_wire(v.r_pu),
    }
    return outputs, dict(v.citations), list(v.warnings)


def _add_triple_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--n1", type=int, required=True, help="rank of E1")
    sub.add_argument("--n2", type=int, required=True, help="rank of E2")
    sub.add_argument("--d1", type=int, required=True, help="degree of E1")
    sub.add_argument("--d2", type=int, required=True, help="degree of E2")


def _add_higgs_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--p", type=int, required=True, help="rank of V")
    sub.add_argument("--q", type=int, required=True, help="rank of W")
    sub.add_argument("--a", type=int, required=True, help="degree of V")
    sub.add_argument("--b", type=int, required=True, help="degree of W")
    sub.add_argument("--g", type=int, required=True, help="genus, >= 2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triplemoduli",
        description=(
            "Exact invariants of holomorphic-triple moduli and of "
            "U(p,q) surface group representation spaces."
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser(
        "triple",
        help="slopes, admissible range, thresholds, dimension",
    )
    _add_triple_flags(sub)
    sub.add_argument("--g", type=int, help="genus for dimension outputs")
    sub.add_argument(
        "--alpha", type=_rational, help="evaluate the alpha-slope here"
    )
    sub.set_defaults(
        handler=_cmd_triple,
        input_fields=("n1", "n2", "d1", "d2", "g", "alpha"),
    )

    sub = subs.add_parser(
        "walls", help="critical parameter values and their witnesses"
    )
    _add_triple_flags(sub)
    sub.add_argument(
        "--interval",
        nargs=2,
        type=_rational,
        metavar=("LO", "HI"),
        help="closed scan window (default: the admissible range)",
    )
    sub.add_argument(
        "--include-endpoints",
        action="store_true",
        help="keep walls sitting exactly at alpha_m or alpha_M",
    )
    sub.add_argument(
        "--g", type=int, help="genus, sets the horizon when n1 = n2"
    )
    sub.add_argument(
        "--alpha", type=_rational, help="also test this value for criticality"
    )
    sub.set_defaults(
        handler=_cmd_walls,
        input_fields=(
            "n1", "n2", "d1", "d2", "interval", "include_endpoints",
            "g", "alpha",
        ),
    )

    sub = subs.add_parser(
        "chambers", help="chamber decomposition of the parameter range"
    )
    _add_triple_flags(sub)
    sub.add_argument("--g", type=int, required=True, help="genus, >= 2")
    sub.add_argument(
        "--cutoff",
        type=_rational,
        help="upper horizon when n1 = n2 (default max(alpha_L, 2g-2, alpha_m) + 1)",
    )
    sub.set_defaults(
        handler=_cmd_chambers,
        input_fields=("n1", "n2", "d1", "d2", "g", "cutoff"),
    )

    sub = subs.add_parser(
        "higgs", help="Toledo invariant, minima triple, range placement"
    )
    _add_higgs_flags(sub)
    sub.set_defaults(
        handler=_cmd_higgs, input_fields=("p", "q", "a", "b", "g")
    )

    sub = subs.add_parser(
        "rigidity", help="forced decomposition at maximal Toledo invariant"
    )
    _add_higgs_flags(sub)
    sub.set_defaults(
        handler=_cmd_rigidity, input_fields=("p", "q", "a", "b", "g")
    )

    sub = subs.add_parser(
        "morse", help="weight-space profile and Morse index of a fixed point"
    )
    sub.add_argument(
        "--ranks",
        type=_int_list,
        required=True,
        help="chain ranks, comma separated, e.g. 1,1,1",
    )
    sub.add_argument(
        "--degrees",
        type=_int_list,
        required=True,
        help="chain degrees, comma separated, e.g. 2,1,0",
    )
    sub.add_argument("--g", type=int, required=True, help="genus, >= 2")
    sub.set_defaults(
        handler=_cmd_morse, input_fields=("ranks", "degrees", "g")
    )

    sub = subs.add_parser(
        "census", help="component classes of the flat-bundle variety"
    )
    sub.add_argument("--p", type=int, required=True, help="rank of V")
    sub.add_argument("--q", type=int, required=True, help="rank of W")
    sub.add_argument("--g", type=int, required=True, help="genus, >= 2")
    sub.add_argument(
        "--a", type=int, help="with --b: canonicalize this degree pair"
    )
    sub.add_argument(
        "--b", type=int, help="with --a: canonicalize this degree pair"
    )
    sub.set_defaults(
        handler=_cmd_census, input_fields=("p", "q", "g", "a", "b")
    )

    sub = subs.add_parser(
        "classify",
        help="connectedness / smoothness / rigidity verdicts with citations",
    )
    _add_higgs_flags(sub)
    sub.set_defaults(
        handler=_cmd_classify, input_fields=("p", "q", "a", "b", "g")
    )

    for name, sp in subs.choices.items():
        sp.add_argument(
            "--json", action="store_true", help="machine-readable report"
        )
    return parser


def _render(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(value, dict):
        if not value:
            lines.append(pad + "(none)")
        for key, item in value.items():
            if isinstance(item, dict) and item:
                lines.append("%s%s:" % (pad, key))
                lines.extend(_render(item, indent + 1))
            elif isinstance(item, list) and any(
                isinstance(x, (dict, list)) for x in item
            ):
                lines.append("%s%s:" % (pad, key))
                lines.extend(_render(item, indent + 1))
            else:
                lines.append("%s%s: %s" % (pad, key, _scalar(item)))
    elif isinstance(value, list):
        if not value:
            lines.append(pad + "(none)")
        for item in value:
            if isinstance(item, dict):
                body = _render(item, indent + 1)
                first = body[0].lstrip() if body else ""
                lines.append("%s- %s" % (pad, first))
                lines.extend(body[1:])
            else:
                lines.append("%s- %s" % (pad, _scalar(item)))
    else:
        lines.append(pad + _scalar(value))
    return lines


def _scalar(item) -> str:
    if item is None:
        return "null"
    if item is True:
        return "true"
    if item is False:
        return "false"
    if isinstance(item, list):
        return "[%s]" % ", ".join(_scalar(x) for x in item)
    return str(item)


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        outputs, citations, warnings = args.handler(args)
    except DomainError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    inputs = {}
    for name in args.input_fields:
        raw = getattr(args, name)
        if raw is not None and raw is not False:
            inputs[name] = list(raw) if isinstance(raw, tuple) else raw
    report = {
        "command": args.command,
        "inputs": jsonable(inputs),
        "outputs": jsonable(outputs),
        "citations": jsonable(citations),
        "warnings": list(warnings),
    }
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print("\n".join(_render(report)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
