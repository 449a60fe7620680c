"""Seeded fuzzing of both invariance theorems and their converses."""

from __future__ import annotations

import dataclasses
import random
from dataclasses import asdict, dataclass
from typing import Optional

from .diagram import topology
from .evaluation import BackendHandle
from .frobenius import (algebra_induced_functor, complex_over_rationals, dual_numbers,
                        matrix_algebra_frobenius, verify_invariance)
from .random_diagrams import (GeneratorConfig, RandomDiagram, random_connected,
                              random_disconnected, random_labelling)


@dataclass
class RunConfig:
    backend: str = "rational"  # rational | float64
    tolerance: float = 1e-9
    seed: int = 0
    max_dimension: int = 4
    max_slices: int = 6
    trials: int = 200
    disconnected_trials: Optional[int] = None  # default: trials // 4
    refutation_attempts: int = 5

    def __post_init__(self):
        if self.backend not in ("rational", "float64"):
            raise ValueError(f"unknown backend {self.backend!r}")
        if self.tolerance < 0:
            raise ValueError("tolerance must be nonnegative")
        if self.max_dimension < 1 or self.max_slices < 1 or self.trials < 0:
            raise ValueError("dimensions, slices and trials must be positive")
        self.seed &= (1 << 64) - 1

    def handle(self) -> BackendHandle:
        if self.backend == "rational":
            return BackendHandle("matrix", True)
        return BackendHandle("matrix", False, self.tolerance)

    def generator(self) -> GeneratorConfig:
        return GeneratorConfig(max_nodes=self.max_slices, max_dim=self.max_dimension)

    def to_dict(self) -> dict:
        out = asdict(self)
        if self.backend == "rational":
            out.pop("tolerance")
        out["disconnected_trials"] = self.n_disconnected
        return out

    @property
    def n_disconnected(self) -> int:
        if self.disconnected_trials is not None:
            return self.disconnected_trials
        return max(1, self.trials // 4) if self.trials else 0


def fuzz_functors():
    return {
        "separable": {"complex(2,0)": algebra_induced_functor(complex_over_rationals(2, 0)),
                      "matrix(2)": algebra_induced_functor(matrix_algebra_frobenius(2))},
        "frobenius": {"dual": algebra_induced_functor(dual_numbers())},
    }


def _shape(r: RandomDiagram) -> dict:
    t = topology(r.diagram)
    return {"nodes": len(r.diagram.nodes), "slices": len(r.diagram.slices),
            "inputs": len(r.diagram.input), "outputs": len(r.diagram.output),
            "components": t.components, "betti1": t.betti1,
            "predicted_class": t.predicted_class.value,
            "dims": [r.dims[x] for x in sorted(r.dims)]}


def _trial_rng(cfg: RunConfig, kind: str, i: int) -> random.Random:
    return random.Random(f"{cfg.seed}:{kind}:{i}")


def run_fuzz(cfg: RunConfig) -> dict:
    """Run every trial family and return a JSON-ready report.

    Records are ordered by family and trial index, so equal configs give
    identical reports.
    """
    functors = fuzz_functors()
    backend, gen = cfg.handle(), cfg.generator()
    families = []

    def family(kind, n, make, funcs, acyclic):
        trials, failures = [], 0
        for i in range(n):
            rng = _trial_rng(cfg, kind, i)
            r = make(rng)
            rec = {"index": i, **_shape(r)}
            ok = rec["components"] == 1 and (not acyclic or rec["betti1"] == 0)
            rec["generator_ok"] = ok
            v = random_labelling(rng, r, gen)
            rec["equal"] = {name: verify_invariance(F, r.diagram, v, backend).equal
                            for name, F in funcs.items()}
            passed = ok and all(rec["equal"].values())
            rec["passed"] = passed
            failures += not passed
            trials.append(rec)
        families.append({"family": kind, "functors": sorted(funcs), "trials": n,
                         "passed": n - failures, "failed": failures, "records": trials})

    family("connected", cfg.trials, lambda rng: random_connected(rng, gen),
           functors["separable"], False)
    family("acyclic", cfg.trials, lambda rng: random_connected(rng, gen, acyclic=True),
           functors["frobenius"], True)

    # converse: every disconnected diagram is refuted by some labelling.
    # a zero label can make both sides vanish, so refutations draw nonzero entries
    sep = functors["separable"]["complex(2,0)"]
    generic = dataclasses.replace(gen, nonzero=True)
    trials, failures = [], 0
    for i in range(cfg.n_disconnected):
        rng = _trial_rng(cfg, "disconnected", i)
        r = random_disconnected(rng, gen)
        rec = {"index": i, **_shape(r)}
        refuted_at = None
        for attempt in range(cfg.refutation_attempts):
            v = random_labelling(rng, r, generic)
            if not verify_invariance(sep, r.diagram, v, backend).equal:
                refuted_at = attempt
                break
        rec["generator_ok"] = rec["components"] > 1
        rec["refuted"] = refuted_at is not None
        rec["attempts"] = (refuted_at + 1) if refuted_at is not None else cfg.refutation_attempts
        rec["passed"] = rec["generator_ok"] and rec["refuted"]
        failures += not rec["passed"]
        trials.append(rec)
    families.append({"family": "disconnected", "functors": ["complex(2,0)"],
                     "trials": cfg.n_disconnected, "passed": cfg.n_disconnected - failures,
                     "failed": failures, "records": trials})
    return {"command": "fuzz", "config": cfg.to_dict(),
            "passed": all(f["failed"] == 0 for f in families),
            "families": families}
