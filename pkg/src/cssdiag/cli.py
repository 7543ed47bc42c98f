"""Command-line interface with JSON input/output.

Subcommands: build-family, check, target, verify, weights, ft, dfs,
catalog. Exit codes: 0 success or true verdict, 1 false verdict, 2 input
or validation error. Reports are deterministic for identical inputs apart
from the ``timing_s`` field.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from .codes import (
    code_from_json,
    code_to_json,
    css_from_standard_form,
    distance_bounds,
    ft_local_check,
    standard_form,
)
from .errors import CodingError
from .gencoeff import (
    LogicalDiagonal,
    gate_from_constraints,
    gc_matrix,
    induced_logical,
    logical_pauli_expansion,
    oblivious_coherent,
    physical_constraints_for_target,
    preserves,
    preserves_norm_test,
)
from .gf2 import BitMatrix, BitVector
from .gates import (
    CosetRuleGate,
    DiagonalGate,
    Factor,
    FactorProductGate,
    SymbolicPhaseGate,
    TableGate,
    WeightRuleGate,
    named_factor,
)
from .library import stab_5_1_3, steane_7_1_3
from .oracle import brute_force_preserves, completeness_check, verify_logical_action
from .qforms import all_family_pairs, build_family, family_gate, parity_logical, verify_family_code


def _digest(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()[:16]


def _load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _emit(report: dict, out: str | None) -> None:
    text = json.dumps(report, indent=2, sort_keys=True)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    print(text)


def _report(command: str, inputs: dict, body: dict, started: float) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "report": body,
        "timing_s": round(time.perf_counter() - started, 6),
    }


def load_gate(obj: dict, n: int) -> DiagonalGate | SymbolicPhaseGate:
    """Instantiate a gate from its JSON form for an n-qubit code."""
    kind = obj.get("kind")
    if kind == "weight_rule":
        return WeightRuleGate(n, int(obj["L"]), int(obj["c"]))
    if kind == "factors":
        factors = []
        for f in obj["factors"]:
            if "name" in f:
                factors.append(named_factor(f["name"], f["support"]))
            else:
                table = {
                    BitVector.from_string(k): int(v) for k, v in f["table"].items()
                }
                factors.append(Factor(tuple(f["support"]), int(f["L"]), table))
        return FactorProductGate(n, tuple(factors))
    if kind == "table":
        entries = {BitVector.from_string(k): int(v) for k, v in obj["entries"].items()}
        if len(entries) != 1 << n:
            raise ValueError("table gate must define all 2**n entries")
        return TableGate(n, int(obj["L"]), entries)
    if kind == "coset_rule":
        entries = {BitVector.from_string(k): int(v) for k, v in obj["entries"].items()}
        return CosetRuleGate(n, int(obj["L"]), entries)
    if kind == "symbolic":
        from .gates import parse_linear_form

        angles = tuple(parse_linear_form(a) for a in obj["angles"])
        constraints = tuple(parse_linear_form(c) for c in obj.get("constraints", []))
        return SymbolicPhaseGate(n, angles, constraints)
    raise ValueError(f"unknown gate kind {kind!r}")


def _load_code(path: str, stabilizer: bool = False):
    obj = _load_json(path)
    if stabilizer or obj.get("kind") == "stabilizer":
        x = BitMatrix.from_strings([r["x"] for r in obj["rows"]])
        z = BitMatrix.from_strings([r["z"] for r in obj["rows"]])
        return css_from_standard_form(standard_form(x, z))
    return code_from_json(obj)


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        i, j = chunk.split(",")
        pairs.append((int(i), int(j)))
    return pairs


# --- subcommands ---------------------------------------------------------------


def cmd_build_family(args) -> int:
    started = time.perf_counter()
    if args.descriptor:
        desc = _load_json(args.descriptor)
        m = int(desc["m"])
        pairs = [tuple(p) for p in desc["pairs"]]
    else:
        if args.m is None:
            raise ValueError("either --descriptor or --m is required")
        m = args.m
        pairs = all_family_pairs(m) if args.all_pairs else _parse_pairs(args.pairs or "")
    code = build_family(m, pairs)
    body = code_to_json(code)
    body["m"] = m
    body["pairs"] = [list(p) for p in pairs]
    body["distance"] = distance_bounds(code, args.w_max)
    body["family_verified"] = verify_family_code(code)
    if args.out:
        # the output file is a code JSON consumable by the other subcommands
        with open(args.out, "w") as fh:
            fh.write(json.dumps(body, indent=2, sort_keys=True) + "\n")
    report = _report("build-family", {"m": m, "pairs": body["pairs"]}, body, started)
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0


def cmd_check(args) -> int:
    started = time.perf_counter()
    code = _load_code(args.code, args.stabilizer)
    gate = load_gate(_load_json(args.gate), code.n)
    if isinstance(gate, SymbolicPhaseGate):
        raise ValueError("check requires a dyadic gate; use dfs for symbolic gates")
    ok = preserves(code, gate)
    body: dict = {"preserves": ok, "n": code.n, "k": code.k}
    if args.norm_test:
        body["norm_test"] = preserves_norm_test(code, gate)
    if args.matrix:
        body["gc_matrix"] = gc_matrix(code, gate).to_json()
    if ok:
        log = induced_logical(code, gate)
        body["logical"] = log.to_json()
        body["logical_pauli"] = {
            str(a): c.to_json() for a, c in logical_pauli_expansion(code, gate).items()
        }
    inputs = {"code": _digest(args.code), "gate": _digest(args.gate)}
    _emit(_report("check", inputs, body, started), args.out)
    return 0 if ok else 1


def cmd_target(args) -> int:
    started = time.perf_counter()
    code = _load_code(args.code, args.stabilizer)
    target = LogicalDiagonal.from_json(_load_json(args.target))
    constraints = physical_constraints_for_target(code, target)
    roundtrip = gate_from_constraints(code, constraints)
    body = {
        "n": code.n,
        "k": code.k,
        "constraints": [c.to_json() for c in constraints],
        "unconstrained": "all entries outside the listed cosets",
        "roundtrip_preserves": preserves(code, roundtrip),
        "roundtrip_induces_target": induced_logical(code, roundtrip).equivalent_to(target),
    }
    inputs = {"code": _digest(args.code), "target": _digest(args.target)}
    _emit(_report("target", inputs, body, started), args.out)
    return 0


def cmd_verify(args) -> int:
    started = time.perf_counter()
    code = _load_code(args.code, args.stabilizer)
    gate = load_gate(_load_json(args.gate), code.n)
    if isinstance(gate, SymbolicPhaseGate):
        raise ValueError("verify requires a dyadic gate")
    framework = preserves(code, gate)
    oracle = brute_force_preserves(code, gate)
    body: dict = {
        "framework_preserves": framework,
        "oracle_preserves": oracle,
        "agree": framework == oracle,
        "completeness_residual": completeness_check(code, gate),
    }
    if framework and oracle:
        claimed = induced_logical(code, gate)
        body["logical"] = claimed.to_json()
        body["logical_action_verified"] = verify_logical_action(code, gate, claimed)
    inputs = {"code": _digest(args.code), "gate": _digest(args.gate)}
    _emit(_report("verify", inputs, body, started), args.out)
    if not body["agree"] or body.get("logical_action_verified") is False:
        return 1
    return 0 if framework else 1


def cmd_weights(args) -> int:
    started = time.perf_counter()
    code = _load_code(args.code, args.stabilizer)
    which = args.which
    base = code.c1 if which == "c1" else code.c2
    shift = code.y
    if args.coset:
        shift = shift ^ BitVector.from_string(args.coset)
    dist = base.weight_distribution(shift=shift)
    body = {
        "which": which,
        "shift": str(shift),
        "distribution": {str(w): m for w, m in sorted(dist.items())},
    }
    _emit(_report("weights", {"code": _digest(args.code)}, body, started), args.out)
    return 0


def cmd_ft(args) -> int:
    started = time.perf_counter()
    code = _load_code(args.code, args.stabilizer)
    support = [int(c) for c in args.support.split(",") if c.strip()]
    ok = ft_local_check(code, support)
    body = {"support": support, "ft_local": ok}
    _emit(_report("ft", {"code": _digest(args.code)}, body, started), args.out)
    return 0 if ok else 1


def cmd_dfs(args) -> int:
    started = time.perf_counter()
    code = _load_code(args.code, args.stabilizer)
    body: dict = {"oblivious_coherent": oblivious_coherent(code)}
    if args.gate:
        gate = load_gate(_load_json(args.gate), code.n)
        from .gencoeff import is_logical_identity

        body["logical_identity"] = is_logical_identity(code, gate)
        verdict = body["logical_identity"]
    else:
        verdict = body["oblivious_coherent"]
    _emit(_report("dfs", {"code": _digest(args.code)}, body, started), args.out)
    return 0 if verdict else 1


def cmd_catalog(args) -> int:
    """Layered pairings: an outer family code whose induced logical gate is
    accepted by the paired inner code as its target-T physical gate."""
    started = time.perf_counter()
    entries = []

    # outer [[31,5,3]] paired with the five-qubit [[5,1,3]] inner code
    outer31 = build_family(5, all_family_pairs(5))
    inner5 = css_from_standard_form(stab_5_1_3())
    entries.append(_catalog_entry(outer31, inner5, "[[31,5,3]] / [[5,1,3]]"))

    # outer [[63,7,3]] (7 logical rows) paired with the Steane inner code
    outer63 = build_family(6, all_family_pairs(6)[:6])
    inner7 = steane_7_1_3()
    entries.append(_catalog_entry(outer63, inner7, "[[63,7,3]] / [[7,1,3]]"))

    all_ok = all(e["verified"] for e in entries)
    body = {"pairings": entries}
    _emit(_report("catalog", {}, body, started), args.out)
    return 0 if all_ok else 1


def _catalog_entry(outer, inner, label: str) -> dict:
    gate = family_gate(outer.n)
    outer_ok = preserves(outer, gate) and induced_logical(outer, gate) == parity_logical(outer.k)
    # the induced parity table, read as a physical gate on the inner block,
    # must preserve the inner code and induce a logical T there
    induced = induced_logical(outer, gate)
    inner_gate = TableGate(
        inner.n,
        induced.level,
        {BitVector(inner.n, u): induced.exponents[u] for u in range(1 << inner.n)},
    )
    inner_ok = preserves(inner, inner_gate)
    logical_t = LogicalDiagonal(inner.k, 3, tuple(a.bit_count() % 2 for a in range(1 << inner.k)))
    inner_t = inner_ok and induced_logical(inner, inner_gate).equivalent_to(logical_t)
    return {
        "pairing": label,
        "outer": {"n": outer.n, "k": outer.k},
        "inner": {"n": inner.n, "k": inner.k},
        "outer_family_verified": outer_ok,
        "inner_accepts_induced_gate": inner_ok,
        "inner_logical_is_t": inner_t,
        "verified": outer_ok and inner_ok and inner_t,
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cssdiag",
        description="CSS/stabilizer codes under diagonal gates: exact checks, "
        "induced logical gates, divisible-coset families, brute-force verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-family", help="build a simplex/quadratic-coset family code")
    p.add_argument("--m", type=int)
    p.add_argument("--pairs", help='semicolon-separated monomial pairs, e.g. "1,2;1,3"')
    p.add_argument("--all-pairs", action="store_true", help="use every admissible pair")
    p.add_argument("--descriptor", help='family descriptor JSON {"m": int, "pairs": [[i, j], ...]}')
    p.add_argument("--w-max", type=int, default=4, help="bounded distance search cutoff")
    p.add_argument("--out")
    p.set_defaults(func=cmd_build_family)

    p = sub.add_parser("check", help="does a diagonal gate preserve the code, and what does it induce")
    p.add_argument("code")
    p.add_argument("gate")
    p.add_argument("--stabilizer", action="store_true", help="code file is a stabilizer standard-form input")
    p.add_argument("--norm-test", action="store_true", help="also run the exact norm-sum criterion")
    p.add_argument("--matrix", action="store_true", help="include the full coefficient matrix in the report")
    p.add_argument("--out")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("target", help="constraints on physical gates inducing a target logical gate")
    p.add_argument("code")
    p.add_argument("target")
    p.add_argument("--stabilizer", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_target)

    p = sub.add_parser("verify", help="independent sparse brute-force cross-check")
    p.add_argument("code")
    p.add_argument("gate")
    p.add_argument("--stabilizer", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("weights", help="weight distribution of C1 (or C2) shifted by y and an optional coset")
    p.add_argument("code")
    p.add_argument("--coset", help="bitstring added to the shift")
    p.add_argument("--which", choices=["c1", "c2"], default="c1")
    p.add_argument("--stabilizer", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("ft", help="is a gate support compatible with fault tolerance (full-rank puncture)")
    p.add_argument("code")
    p.add_argument("--support", required=True, help="comma-separated 1-based coordinates")
    p.add_argument("--stabilizer", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_ft)

    p = sub.add_parser("dfs", help="is the code oblivious to coherent rotation noise")
    p.add_argument("code")
    p.add_argument("--gate", help="optional symbolic/dyadic gate checked for logical identity")
    p.add_argument("--stabilizer", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dfs)

    p = sub.add_parser("catalog", help="verify the shipped layered code pairings")
    p.add_argument("--out")
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CodingError, ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
