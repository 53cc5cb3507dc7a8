"""Run the built-in claim suite and print one line per claim.

    python3 scripts/run_examples.py [substring]
"""

import sys

from crossgrade.claims import run, select

if __name__ == "__main__":
    results = run(select(sys.argv[1] if len(sys.argv) > 1 else None))
    for r in results:
        print(r.line())
    print(f"{sum(r.passed for r in results)}/{len(results)} claims passed")
    sys.exit(0 if all(r.passed for r in results) else 1)
