"""Command-line front end.

Exit status: 0 = completed (whatever the verdict), 1 = usage error,
2 = a search budget was exhausted.

Sweeps emit line-delimited JSON records (one ring x property cell per
line) so interrupted runs keep their partial output.  The worker count
for sweeps comes from the RINGLAB_WORKERS environment variable (default:
available parallelism); output order is deterministic regardless.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
import time
from dataclasses import asdict, dataclass

from . import proofs
from .dsl import (
    format_element,
    format_matrix,
    parse_element,
    parse_matrix_literal,
    parse_ring_spec,
)
from .errors import BudgetExceeded, ParseError, RinglabError, SemanticError
from .matrices import MatrixOverRing
from .properties import (
    DEFAULT_BUDGET,
    PROPERTY_IDS,
    PropertyVerdict,
    check_property,
    probe_unit_central_commutative,
    replay_witness,
)
from .reduction import diagonal_reduce
from .rings import RingDescriptor
from .zoo import BUILTIN_SPECS

GRAMMAR_HELP = (
    "ring grammar: spec := term { 'x' term };  term := Z | Zn(n) | "
    "Mat(k, spec) | Tri(k, spec) | Zi7 | Qi7 | SkewS(maxdeg, height)\n"
    "properties: " + ", ".join(PROPERTY_IDS)
)


@dataclass
class ReportRecord:
    ring: str
    ident: str
    verdict: str
    witness: list  # [[name, literal], ...]
    budget: int
    seconds: float

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))


def _format_witness(ring: RingDescriptor, witness) -> list:
    out = []
    for name, payload in witness:
        if name == "matrix":
            literal = format_matrix(MatrixOverRing(ring, payload))
        else:
            literal = format_element(ring, payload)
        out.append([name, literal])
    return out


def _parse_witness(ring: RingDescriptor, pairs) -> dict:
    out = {}
    for name, literal in pairs:
        if name == "matrix":
            out[name] = parse_matrix_literal(ring, literal).rows
        else:
            out[name] = parse_element(ring, literal)
    return out


def record_from_verdict(spec: str, ring: RingDescriptor, v: PropertyVerdict,
                        seconds: float) -> ReportRecord:
    return ReportRecord(
        ring=spec,
        ident=v.prop,
        verdict=v.verdict,
        witness=_format_witness(ring, v.witness),
        budget=v.budget_used,
        seconds=round(seconds, 6),
    )


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"usage error: {message}", file=sys.stderr)
        print(GRAMMAR_HELP, file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="ringlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="check one property on one ring")
    p_check.add_argument("--ring", required=True)
    p_check.add_argument("--property", required=True, dest="prop",
                         choices=PROPERTY_IDS)
    p_check.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_check.add_argument("--json", action="store_true")
    p_check.add_argument("--replay-witness", default=None,
                         help="JSON [[name, literal], ...]: replay instead")

    p_sweep = sub.add_parser("sweep", help="ring x property sweep")
    p_sweep.add_argument("--rings", required=True,
                         help="file of ring specs, one per line, or 'builtin'")
    p_sweep.add_argument("--properties", required=True,
                         help="comma-separated property ids, or 'all'")
    p_sweep.add_argument("--out", required=True)
    p_sweep.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p_reduce = sub.add_parser("reduce", help="diagonal reduction of a matrix")
    p_reduce.add_argument("--ring", required=True)
    p_reduce.add_argument("--matrix", required=True)
    p_reduce.add_argument("--json", action="store_true")

    p_con = sub.add_parser("construct", help="run a witness construction")
    p_con.add_argument("procedure",
                       choices=("theorem1", "prop1", "prop2", "prop4", "prop5"))
    p_con.add_argument("--ring", required=True)
    p_con.add_argument("--args", required=True,
                       help="semicolon-separated element literals")
    p_con.add_argument("--json", action="store_true")

    p_probe = sub.add_parser("probe", help="open-problem consistency probe")
    p_probe.add_argument("target", choices=("unit-central",))
    p_probe.add_argument("--max-order", type=int, default=16)

    return parser


def _cmd_check(args) -> int:
    ring = parse_ring_spec(args.ring)
    if args.replay_witness is not None:
        pairs = json.loads(args.replay_witness)
        witness = _parse_witness(ring, pairs)
        reproduced = replay_witness(ring, args.prop, witness)
        print(
            f"{args.ring} {args.prop} replay: "
            + ("violation reproduced" if reproduced else "witness does NOT replay")
        )
        return 0
    start = time.perf_counter()
    verdict = check_property(ring, args.prop, args.budget)
    rec = record_from_verdict(args.ring, ring, verdict,
                              time.perf_counter() - start)
    if args.json:
        print(rec.to_json())
    else:
        line = f"{args.ring} {args.prop}: {verdict.verdict}"
        if verdict.witness:
            line += " witness " + " ".join(
                f"{n}={lit}" for n, lit in rec.witness
            )
        if verdict.note:
            line += f"  ({verdict.note})"
        print(line)
    return 2 if verdict.exhausted_budget else 0


def _sweep_cell(item):
    spec, prop, budget = item
    ring = parse_ring_spec(spec)
    start = time.perf_counter()
    verdict = check_property(ring, prop, budget)
    return record_from_verdict(spec, ring, verdict,
                               time.perf_counter() - start), verdict.exhausted_budget


def _cmd_sweep(args) -> int:
    if args.rings == "builtin":
        specs = list(BUILTIN_SPECS)
    else:
        with open(args.rings) as fh:
            specs = [ln.strip() for ln in fh if ln.strip()
                     and not ln.startswith("#")]
    props = (
        list(PROPERTY_IDS)
        if args.properties == "all"
        else [p.strip() for p in args.properties.split(",")]
    )
    for p in props:
        if p not in PROPERTY_IDS:
            print(f"usage error: unknown property {p!r}", file=sys.stderr)
            print(GRAMMAR_HELP, file=sys.stderr)
            return 1
    cells = [(s, p, args.budget) for s in specs for p in props]
    workers = int(os.environ.get("RINGLAB_WORKERS", os.cpu_count() or 1))
    exhausted = False
    with open(args.out, "w") as fh:
        if workers > 1 and len(cells) > 1:
            with concurrent.futures.ProcessPoolExecutor(workers) as pool:
                for rec, exh in pool.map(_sweep_cell, cells):
                    fh.write(rec.to_json() + "\n")
                    fh.flush()
                    exhausted |= exh
        else:
            for cell in cells:
                rec, exh = _sweep_cell(cell)
                fh.write(rec.to_json() + "\n")
                fh.flush()
                exhausted |= exh
    print(f"wrote {len(cells)} records to {args.out}")
    return 2 if exhausted else 0


def _cmd_reduce(args) -> int:
    ring = parse_ring_spec(args.ring)
    M = parse_matrix_literal(ring, args.matrix)
    try:
        cert = diagonal_reduce(ring, M)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    payload = {
        "ring": args.ring,
        "matrix": args.matrix,
        "P": format_matrix(cert.p),
        "Q": format_matrix(cert.q),
        "D": format_matrix(cert.d),
        "diagonal": [format_element(ring, d) for d in cert.diagonal],
    }
    if args.json:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        for key in ("P", "Q", "D"):
            print(f"{key} = {payload[key]}")
        print("diagonal:", ", ".join(payload["diagonal"]))
    return 0


def _cmd_construct(args) -> int:
    ring = parse_ring_spec(args.ring)
    literals = [s for s in args.args.split(";") if s.strip()]
    elems = [parse_element(ring, s) for s in literals]
    fmt = lambda a: format_element(ring, a)  # noqa: E731
    if args.procedure == "theorem1":
        w = proofs.theorem1_transfer(ring, *elems)
        payload = {
            name: fmt(getattr(w, name))
            for name in ("a", "b", "t", "u", "x", "w", "y", "p", "q",
                         "result_unit")
        }
    elif args.procedure == "prop1":
        payload = {"v": fmt(proofs.prop1_unit_commute(ring, *elems))}
    elif args.procedure == "prop2":
        payload = {"y": fmt(proofs.prop2_witness(ring, *elems))}
    elif args.procedure == "prop4":
        u, w = proofs.prop4_unit_sum(ring, *elems)
        payload = {"u": fmt(u), "w": fmt(w)}
    else:
        payload = {"z": fmt(proofs.prop5_duo_witness(ring, *elems))}
    if args.json:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(" ".join(f"{k}={v}" for k, v in payload.items()))
    return 0


def _cmd_probe(args) -> int:
    report = probe_unit_central_commutative(args.max_order)
    for entry in report.entries:
        print(
            f"{entry.ring.spec_string()}: unit-central={entry.unit_central} "
            f"sr1={entry.stable_range_1} commutative={entry.commutative}"
        )
    if report.counterexamples:
        for entry in report.counterexamples:
            print(f"COUNTEREXAMPLE CANDIDATE: {entry.ring.spec_string()}")
    else:
        print(
            f"no counterexample among {len(report.entries)} tested rings "
            f"(consistency only; the question remains open)"
        )
    return 0


def run_command(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "reduce":
            return _cmd_reduce(args)
        if args.command == "construct":
            return _cmd_construct(args)
        if args.command == "probe":
            return _cmd_probe(args)
    except (ParseError, SemanticError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        print(GRAMMAR_HELP, file=sys.stderr)
        return 1
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    except RinglabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError(args.command)


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
