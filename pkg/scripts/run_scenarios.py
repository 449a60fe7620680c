"""Run every registered scenario and list its checks."""

import sys

from froblab.scenarios import SCENARIOS, run_scenario


def main(seed: int = 0) -> int:
    bad = 0
    for name in SCENARIOS:
        res = run_scenario(name, seed)
        print(f"{'PASS' if res.passed else 'FAIL'}  {name}: {res.claim}")
        for c in res.checks:
            mark = "ok " if c.passed else "BAD"
            print(f"    {mark} {c.name} (observed {c.observed}, expected {c.expected})")
        bad += not res.passed
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(int(sys.argv[1]) if len(sys.argv) > 1 else 0))
