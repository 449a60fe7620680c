"""``froblab`` command line: analyze, invariance, scenario, fuzz, laws.

JSON reports go to stdout, a short summary to stderr.  Exit status is 0 when
every check passes, 1 on a check failure and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path
from typing import Optional

from .diagram import InvarianceClass, topology
from .evaluation import LabellingError
from .fileio import (InputError, diagram_from_json, functor_from_json, labelling_from_json,
                     load_json, structure_from_json)
from .frobenius import (FROBENIUS_LAWS, FrobeniusAlgebra, check_frobenius_algebra,
                        check_frobenius_functor, is_separable, separability_defect,
                        verify_invariance)
from .fuzz import RunConfig, run_fuzz
from .laws import LawReport, serialize_morphism
from .matrix import I, ShapeError, ident
from .scenarios import SCENARIOS, run_scenario
from .structures import (check_bimonoid, check_distributive_law, check_lax_yb, check_weak_bimonoid,
                         check_weak_distributive_law, check_weak_yb, check_yb)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class Output:
    def __init__(self, json_only: bool):
        self.json_only = json_only

    def note(self, msg: str) -> None:
        if not self.json_only:
            print(msg, file=sys.stderr)

    def emit(self, report: dict) -> None:
        print(json.dumps(report, indent=2, ensure_ascii=False))


def _functor_arg(arg: str):
    path = Path(arg)
    data = load_json(path) if path.exists() else arg
    return functor_from_json(data)


def cmd_analyze(args, out: Output) -> int:
    scheme, d = diagram_from_json(load_json(args.diagram))
    t = topology(d)
    out.emit({"command": "analyze", "diagram": str(args.diagram),
              "nodes": len(d.nodes), "slices": len(d.slices), "topology": t.to_dict()})
    out.note(f"{args.diagram}: components={t.components} betti1={t.betti1} "
             f"-> {t.predicted_class.value}")
    return EXIT_OK


def _law_summary(report: LawReport) -> dict:
    frob = report.subset(FROBENIUS_LAWS)
    sep = report.subset({"separability"})
    return {"frobenius": frob.ok, "separable": frob.ok and sep.ok,
            "failed": sorted(e.name for e in report.failures),
            "entries": [e.to_dict() for e in report.failures]}


def cmd_invariance(args, out: Output) -> int:
    scheme, d = diagram_from_json(load_json(args.diagram))
    v = labelling_from_json(load_json(args.labelling), scheme)
    F = _functor_arg(args.functor)
    # laws of these functors see only dimensions, so one sample per dimension suffices
    by_dim = {}
    for x in sorted(scheme.vertices):
        by_dim.setdefault(v.wires[x].dim, v.wires[x])
    samples = [I] + [by_dim[k] for k in sorted(by_dim)]
    laws = _law_summary(check_frobenius_functor(F, samples))
    t = topology(d)
    res = verify_invariance(F, d, v, args.config.handle())
    cls = t.predicted_class
    guaranteed = ((cls is InvarianceClass.FROBENIUS_INVARIANT and laws["frobenius"])
                  or (cls is InvarianceClass.SEPARABLE_ONLY and laws["separable"]))
    consistent = res.equal or not guaranteed
    report = {"command": "invariance", "diagram": str(args.diagram),
              "labelling": str(args.labelling), "functor": str(args.functor),
              "laws": laws, "topology": t.to_dict(),
              "guaranteed": guaranteed, "equal": res.equal, "consistent": consistent}
    if not res.equal:
        report["witness"] = {"lhs": serialize_morphism(res.lhs), "rhs": serialize_morphism(res.rhs)}
    out.emit(report)
    out.note(f"prediction {cls.value}, functor frobenius={laws['frobenius']} "
             f"separable={laws['separable']}: {'equal' if res.equal else 'unequal'}"
             f"{'' if consistent else '  (CONTRADICTS THEOREM)'}")
    return EXIT_OK if consistent and laws["frobenius"] else EXIT_FAIL


def cmd_scenario(args, out: Output) -> int:
    name = args.name or args.scenario
    if not name:
        raise InputError(f"give a scenario name or 'all'; known: {', '.join(SCENARIOS)}")
    names = list(SCENARIOS) if name == "all" else [name]
    if any(n not in SCENARIOS for n in names):
        raise InputError(f"unknown scenario {name!r}; known: {', '.join(SCENARIOS)}")
    results = [run_scenario(n, args.config.seed) for n in names]
    out.emit({"command": "scenario", "passed": all(r.passed for r in results),
              "scenarios": [r.to_dict() for r in results]})
    for r in results:
        out.note(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.claim}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_fuzz(args, out: Output) -> int:
    start = time.perf_counter()
    report = run_fuzz(args.config)
    out.emit(report)
    for f in report["families"]:
        out.note(f"{f['family']:13s} {f['passed']}/{f['trials']} passed  ({', '.join(f['functors'])})")
    out.note(f"elapsed {time.perf_counter() - start:.1f}s")
    return EXIT_OK if report["passed"] else EXIT_FAIL


def _algebra_report(alg: FrobeniusAlgebra, require_separable: bool) -> LawReport:
    report = check_frobenius_algebra(alg)
    if require_separable:
        report.check("separability", separability_defect(alg), ident(alg.carrier))
    return report


def cmd_laws(args, out: Output) -> int:
    data = load_json(args.structure)
    tag, payload = structure_from_json(data)
    extra = {}
    if tag == "algebra":
        report = _algebra_report(payload, bool(data.get("require_separable")))
        extra["separable"] = is_separable(payload)
    elif tag == "functor":
        F, samples = payload
        report = check_frobenius_functor(F, samples)
    else:
        checker = {"yb": check_yb, "lax-yb": check_lax_yb, "weak-yb": check_weak_yb,
                   "distributive-law": check_distributive_law,
                   "weak-distributive-law": check_weak_distributive_law,
                   "bimonoid": check_bimonoid, "weak-bimonoid": check_weak_bimonoid}[tag]
        report = checker(payload)
    out.emit({"command": "laws", "structure": str(args.structure), "type": tag, **extra,
              **report.to_dict()})
    out.note(f"{tag}: {len(report.entries) - len(report.failures)}/{len(report.entries)} laws hold"
             + (f"; failed {sorted(report.failed_laws())}" if report.failures else ""))
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--backend", choices=["rational", "float64"], default="rational")
    common.add_argument("--tolerance", type=float, default=1e-9,
                        help="equality tolerance in float64 mode")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-dim", type=int, default=4)
    common.add_argument("--max-slices", type=int, default=6)
    common.add_argument("--trials", type=int, default=200)
    common.add_argument("--json-only", action="store_true", help="no summary on stderr")

    p = argparse.ArgumentParser(prog="froblab", description="String diagrams under Frobenius monoidal functors.")
    sub = p.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", parents=[common], help="topology and invariance class")
    a.add_argument("diagram")
    a.set_defaults(func=cmd_analyze)
    i = sub.add_parser("invariance", parents=[common], help="compare v^F(Γ) with v(Γ)^F")
    i.add_argument("diagram")
    i.add_argument("labelling")
    i.add_argument("functor", help="functor JSON file, algebra name, or 'identity'")
    i.set_defaults(func=cmd_invariance)
    s = sub.add_parser("scenario", parents=[common], help="run a named scenario or 'all'")
    s.add_argument("name", nargs="?")
    s.add_argument("--scenario")
    s.set_defaults(func=cmd_scenario)
    f = sub.add_parser("fuzz", parents=[common], help="random diagrams against both theorems")
    f.set_defaults(func=cmd_fuzz)
    l_ = sub.add_parser("laws", parents=[common], help="check a structure file")
    l_.add_argument("structure")
    l_.set_defaults(func=cmd_laws)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args.json_only)
    try:
        seed = int(os.environ["FROBLAB_SEED"]) if os.environ.get("FROBLAB_SEED") else args.seed
        args.config = RunConfig(args.backend, args.tolerance, seed, args.max_dim,
                                args.max_slices, args.trials)
        return args.func(args, out)
    except (InputError, LabellingError, ShapeError, ValueError, KeyError) as exc:
        print(f"froblab: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
