"""Run the seeded fuzz families and print a per-family summary.

    python scripts/run_fuzz.py --trials 200 --seed 0 --out fuzz.json
"""

import argparse
import json
import time

from froblab.fuzz import RunConfig, run_fuzz


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-dim", type=int, default=4)
    p.add_argument("--max-slices", type=int, default=6)
    p.add_argument("--backend", default="rational", choices=["rational", "float64"])
    p.add_argument("--out", help="write the full JSON report here")
    args = p.parse_args()

    cfg = RunConfig(backend=args.backend, seed=args.seed, trials=args.trials,
                    max_dimension=args.max_dim, max_slices=args.max_slices)
    t0 = time.perf_counter()
    report = run_fuzz(cfg)
    dt = time.perf_counter() - t0
    for fam in report["families"]:
        print(f"{fam['family']:>12}  {fam['passed']:4d}/{fam['trials']:<4d}  {', '.join(fam['functors'])}")
    print(f"{'PASS' if report['passed'] else 'FAIL'} in {dt:.1f}s")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(report, fh, indent=2)


if __name__ == "__main__":
    main()
