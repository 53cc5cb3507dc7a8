"""Real graded division algebra catalogs for a few small groups.

    python3 scripts/catalog.py [c2 s3 c4 c2xc2 c4xc4 ...]
"""

import sys
import time

from crossgrade import problem as pf
from crossgrade.classify import classify_strata

if __name__ == "__main__":
    specs = sys.argv[1:] or ["c2", "c3", "c4", "c2xc2", "s3", "c4xc4"]
    for spec in specs:
        G = pf.build_group(pf.group_desc_from_spec(spec))
        t = time.perf_counter()
        strata = classify_strata(G)
        dt = time.perf_counter() - t
        parts = [f"{s.base}[|N|={len(s.kernel)}]={s.count}" for s in strata]
        print(f"{spec:<8} total {sum(s.count for s in strata):>3}  " + "  ".join(parts) + f"  ({dt:.1f}s)")
