"""Seeded property suites, small enough to run in a few seconds.

The full-size runs are the acceptance tests; ``halfspace-lab verify`` runs
the same suites from the shell.
"""

import json

from halfspace_lab import verify

for name, trials in [("thm1_3", 5), ("thm1_4", 10), ("thm6_2", 5), ("cor4_7", 10), ("counts", 5)]:
    rep = verify.run_suite(name, trials=trials, seed=7)
    notes = f" {json.dumps(rep.notes)}" if rep.notes else ""
    print(f"{name:7} checked {rep.checked:4}  violations {len(rep.violations)}{notes}")
