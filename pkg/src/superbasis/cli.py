"""Command-line front end: ``superbasis <command> --algebra m,n --weight "a|b" ...``.

Exit codes: 0 success, 1 validation or classification error, 2 internal
invariant violation (including a failed verification run).
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from typing import Optional

from .characteristic import DegenerateConfigurationError
from .duality import DualityError, dual_data_type1, dual_weight_via_basis, level_histogram
from .elements import (
    InvariantViolation,
    TransitionKey,
    composite_path,
    elementary_lowering,
    elementary_lowering_squared,
    lowering_factors,
    nonelementary_element,
    nonelementary_factors,
)
from .operators import (
    build_module,
    closed_form_report,
    dual_module,
    RepresentationModule,
    verify_algebra,
)
from .patterns import (
    DimensionCapExceeded,
    MalformedPatternError,
    PatternDelta,
    apply_delta,
    default_dim_cap,
    enumerate_basis,
    grading_of,
    level_of_pattern,
    weight_of,
)
from .radicals import format_fraction, parse_fraction
from .weights import (
    ClassificationError,
    DecompositionError,
    Signature,
    UnitaryKind,
    Weight,
    classify,
    decompose_type2,
    is_dominant,
    parse_signature,
    parse_weight,
    type1_pairing,
    type2_pairing,
)
from .young import (
    Bipartition,
    Partition,
    is_horizontal_strip,
    is_vertical_strip,
    strip_branching_check,
)

__all__ = ["main", "build_parser", "resolve_theta", "UsageError"]


class UsageError(ValueError):
    """Bad or missing command-line input."""


USER_ERRORS = (
    UsageError,
    ClassificationError,
    DecompositionError,
    DimensionCapExceeded,
    MalformedPatternError,
    DualityError,
    ValueError,
)
INTERNAL_ERRORS = (InvariantViolation, DegenerateConfigurationError, ArithmeticError, AssertionError)


class VerificationFailed(RuntimeError):
    def __init__(self, payload: dict):
        super().__init__("verification failed")
        self.payload = payload


def _sig_json(sig: Signature) -> dict:
    return {"m": sig.m, "n": sig.n}


def resolve_theta(w: Weight, theta: Optional[int]) -> int:
    """Pick the unitary type: explicit flag, or the only admissible one."""
    cls = classify(w)
    if theta is not None:
        if not cls.admits(theta):
            raise ClassificationError(f"{w} is not type {theta} unitary ({cls})")
        return theta
    if cls.kind is UnitaryKind.BOTH:
        raise UsageError(f"{w} is {cls}; pass --theta 1 or --theta 2")
    if cls.is_type1:
        return 1
    if cls.is_type2:
        return 2
    raise ClassificationError(f"{w} is not unitary of either type")


def _weight_from(args) -> Weight:
    if not args.algebra or args.weight is None:
        raise UsageError("--algebra and --weight are required")
    return parse_weight(args.weight, parse_signature(args.algebra))


def _dim_cap(args) -> int:
    return args.dim_cap if args.dim_cap is not None else default_dim_cap()


def _basis_entry(pat) -> dict:
    return {
        "rows": pat.to_json(),
        "weight": weight_of(pat).to_json(),
        "level": level_of_pattern(pat),
        "grading": grading_of(pat),
    }


# -- commands ------------------------------------------------------------------


def cmd_classify(args) -> dict:
    w = _weight_from(args)
    sig = w.signature
    out = {"algebra": _sig_json(sig), "highest_weight": w.to_json(), "dominant": is_dominant(w)}
    if not out["dominant"]:
        raise ClassificationError(f"weight {w} is not dominant")
    cls = classify(w)
    out["classification"] = cls.to_json()
    out["pairings"] = {
        "type1": [format_fraction(type1_pairing(w, mu)) for mu in range(1, sig.n + 1)],
        "type2": [format_fraction(type2_pairing(w, k)) for k in range(1, sig.m + 1)],
    }
    return out


def cmd_decompose(args) -> dict:
    w = _weight_from(args)
    base, gamma, omega = decompose_type2(w)
    return {
        "algebra": _sig_json(w.signature),
        "highest_weight": w.to_json(),
        "lambda0": base.to_json(),
        "gamma": format_fraction(gamma),
        "omega": format_fraction(omega),
    }


def cmd_dual(args) -> dict:
    w = _weight_from(args)
    theta = resolve_theta(w, args.theta)
    cap = _dim_cap(args)
    out = {"algebra": _sig_json(w.signature), "highest_weight": w.to_json(), "theta": theta}
    if theta == 1:
        data = dual_data_type1(w)
        out.update(data.to_json())
        out["dual_weight"] = data.lambda_star.to_json()
    else:
        out["dual_weight"] = dual_weight_via_basis(w, theta, cap).to_json()
    return out


def cmd_basis(args) -> dict:
    w = _weight_from(args)
    theta = resolve_theta(w, args.theta)
    mod_basis = enumerate_basis(w, theta, _dim_cap(args))
    return {
        "algebra": _sig_json(w.signature),
        "highest_weight": w.to_json(),
        "theta": theta,
        "dimension": len(mod_basis),
        "levels": {str(k): v for k, v in level_histogram(mod_basis).items()},
        "basis": [_basis_entry(b) for b in mod_basis],
    }


def _explain(mod: RepresentationModule) -> list:
    """Factor-by-factor account of every nonzero elementary and composite entry."""
    m, N = mod.signature.m, mod.signature.size
    index = {b: i for i, b in enumerate(mod.basis)}
    rows = []
    for j, pat in enumerate(mod.basis):
        for p in range(1, N):
            for r in range(1, p + 1):
                tgt = apply_delta(pat, PatternDelta(r, p, -1), mod.theta)
                if tgt is None:
                    continue
                v = elementary_lowering(pat, p, r, mod.theta)
                rows.append({
                    "generator": f"E_{p + 1}_{p}",
                    "row": index[tgt],
                    "col": j,
                    "shifts": [[p, r]],
                    "formula": str(lowering_factors(m, r, p, mod.theta)),
                    "squared": format_fraction(elementary_lowering_squared(pat, p, r, mod.theta)),
                    "value": v.to_json(),
                })
        for d in range(2, N):
            for l in range(1, N - d + 1):
                levels = list(range(l + d - 1, l - 1, -1))
                for slots in itertools.product(*[range(1, s + 1) for s in levels]):
                    key = TransitionKey(pat, tuple(zip(levels, slots)), -1)
                    try:
                        tgt = composite_path(key, mod.theta)[-1]
                        v = nonelementary_element(key, mod.theta)
                    except DegenerateConfigurationError:
                        continue
                    if not v or tgt not in index:
                        continue
                    rows.append({
                        "generator": f"E_{l + d}_{l}",
                        "row": index[tgt],
                        "col": j,
                        "shifts": [list(x) for x in key.shifts],
                        "formula": str(nonelementary_factors(key)),
                        "value": v.to_json(),
                    })
    rows.sort(key=lambda e: (e["generator"], e["col"], e["row"], e["shifts"]))
    return rows


def _generator_names(specs, size: int) -> Optional[set]:
    """Accept ``E_p_q`` or ``p,q`` for each requested generator."""
    if not specs:
        return None
    names = set()
    for spec in specs:
        parts = spec[2:].split("_") if spec.startswith("E_") else spec.split(",")
        try:
            p, q = (int(x) for x in parts)
        except ValueError:
            raise UsageError(f"bad generator {spec!r}; use E_p_q or p,q") from None
        if not (1 <= p <= size and 1 <= q <= size):
            raise UsageError(f"generator {spec!r} out of range 1..{size}")
        names.add(f"E_{p}_{q}")
    return names


def cmd_matrix(args) -> dict:
    w = _weight_from(args)
    theta = resolve_theta(w, args.theta)
    wanted = _generator_names(args.generator, w.signature.size)
    mod = build_module(w, theta, _dim_cap(args))
    ops = {}
    for (p, q) in sorted(mod.generators):
        if wanted is not None and f"E_{p}_{q}" not in wanted:
            continue
        ops[f"E_{p}_{q}"] = mod.E(p, q).to_json()
    out = {
        "algebra": _sig_json(w.signature),
        "highest_weight": w.to_json(),
        "theta": theta,
        "dimension": mod.dim,
        "basis": [b.to_json() for b in mod.basis],
        "operators": ops,
    }
    if args.explain:
        out["explain"] = _explain(mod)
    return out


def cmd_verify(args) -> dict:
    w = _weight_from(args)
    theta = resolve_theta(w, args.theta)
    mod = build_module(w, theta, _dim_cap(args))
    threads = args.threads if args.threads else (os.cpu_count() or 1)
    rep = verify_algebra(mod, threads=threads)
    dual = dual_module(mod)
    dual_rep = verify_algebra(dual, threads=threads)
    cf = closed_form_report(mod)
    families = rep.to_json()["families"]
    for name, fam in dual_rep.to_json()["families"].items():
        families["dual_" + name] = fam
    families["closed_form"] = {
        "checked": cf["agree"] + cf["disagree"],
        "failed": cf["disagree"],
        "degenerate": cf["degenerate"],
        "first_failure": cf["first"],
    }
    passed = all(f["failed"] == 0 for f in families.values())
    out = {
        "algebra": _sig_json(w.signature),
        "highest_weight": w.to_json(),
        "theta": theta,
        "dimension": mod.dim,
        "passed": passed,
        "families": families,
    }
    if not passed:
        raise VerificationFailed(out)
    return out


def _parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition()
    vals = [parse_fraction(t) for t in text.split(",")]
    return Partition(vals)


def _parse_bipartition(text: str) -> Bipartition:
    if text.count("|") != 1:
        raise UsageError(f"malformed bipartition {text!r}; expected 'a,b,..|c,d,..'")
    ev, od = text.split("|")
    return Bipartition(_parse_partition(ev), _parse_partition(od))


def cmd_strips(args) -> dict:
    if args.upper is None or args.lower is None:
        raise UsageError("--upper and --lower are required")
    up, lo = _parse_bipartition(args.upper), _parse_bipartition(args.lower)
    return {
        "upper": {"even": list(up.even.parts), "odd": list(up.odd.parts)},
        "lower": {"even": list(lo.even.parts), "odd": list(lo.odd.parts)},
        "even": {
            "horizontal_strip": is_horizontal_strip(up.even, lo.even),
            "vertical_strip": is_vertical_strip(up.even, lo.even),
        },
        "odd": {
            "horizontal_strip": is_horizontal_strip(up.odd, lo.odd),
            "vertical_strip": is_vertical_strip(up.odd, lo.odd),
        },
        "branching": strip_branching_check(up, lo),
    }


COMMANDS = {
    "classify": cmd_classify,
    "dual": cmd_dual,
    "decompose": cmd_decompose,
    "basis": cmd_basis,
    "matrix": cmd_matrix,
    "verify": cmd_verify,
    "strips": cmd_strips,
}


# -- rendering ---------------------------------------------------------------


def dump_json(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def _render_text(data, indent: int = 0) -> list:
    pad = "  " * indent
    lines = []
    if isinstance(data, dict):
        for k in sorted(data):
            v = data[k]
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(data, list):
        for v in data:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(data))
    return lines


def _flat(v) -> bool:
    if isinstance(v, dict):
        return all(not isinstance(x, (dict, list)) for x in v.values())
    return all(not isinstance(x, (dict, list)) or _flat(x) for x in v) and len(str(v)) < 100


def _scalar(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def emit(data, fmt: str, stream=None):
    stream = stream or sys.stdout
    if fmt == "json":
        stream.write(dump_json(data))
    else:
        stream.write("\n".join(_render_text(data)) + "\n")


# -- entry point -------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # usage errors are validation errors: exit 1, keeping 2 for internal faults
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--algebra", help="m,n")
    common.add_argument("--weight", help='highest weight "a1,..,am|b1,..,bn"')
    common.add_argument("--theta", type=int, choices=(1, 2), help="unitary type")
    common.add_argument("--dim-cap", type=int, default=None,
                        help="basis size limit (default 4096, or $SUPERBASIS_DIM_CAP)")
    common.add_argument("--output", "-o", choices=("json", "text"), default="json")
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads for verify (default: CPU count)")

    parser = _Parser(
        prog="superbasis",
        description="Gelfand-Tsetlin bases and generator matrices for unitary gl(m|n) modules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("classify", parents=[common], help="unitary type and atypicality")
    sub.add_parser("dual", parents=[common], help="highest weight of the dual module")
    sub.add_parser("decompose", parents=[common], help="type 2 split Lambda0 + gamma + omega")
    sub.add_parser("basis", parents=[common], help="enumerate the GT basis")
    mp = sub.add_parser("matrix", parents=[common], help="generator matrices")
    mp.add_argument("--explain", action="store_true", help="factor breakdown of each entry")
    mp.add_argument("--generator", action="append", metavar="E_p_q|p,q",
                    help="only emit these generators (repeatable)")
    sub.add_parser("verify", parents=[common], help="exact identity checks")
    sp = sub.add_parser("strips", parents=[common], help="strip predicates on two bipartitions")
    sp.add_argument("--upper", help='"even parts|odd parts"')
    sp.add_argument("--lower", help='"even parts|odd parts"')
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.dim_cap is not None and args.dim_cap < 1:
        parser.error("--dim-cap must be positive")
    try:
        data = COMMANDS[args.command](args)
    except VerificationFailed as exc:
        emit(exc.payload, args.output)
        return 2
    except INTERNAL_ERRORS as exc:
        print(f"superbasis: internal error: {exc}", file=sys.stderr)
        return 2
    except USER_ERRORS as exc:
        print(f"superbasis: {exc}", file=sys.stderr)
        return 1
    emit(data, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
