"""Real graded division algebras with grading group G, stratum by stratum.

Base R and base H: one entry per class of H^2(G, {+-1}) (positive reals are
uniquely divisible and contribute nothing).  Base C: for trivial eta and
for each index-2 kernel N, one entry per conjugation orbit {[a], [a-bar]} in
H^2_eta(G, C*), computed on the root-of-unity ladder.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cohom import (CohomologyGroup, divisible_cohomology, merge_conjugate_classes, second_cohomology,
                    trivial_module)
from .groups import FiniteGroup, index_two_subgroups


@dataclass
class CatalogEntry:
    base: str                    # "R" | "H" | "C"
    kernel: tuple                # kernel of eta; all of G when eta is trivial
    class_label: np.ndarray      # normalized representative, unit indices of the module
    class_set_size: int          # 1 when [a] = [a-bar], else 2
    module_order: int            # |U| the representative lives in
    class_index: int = 0


@dataclass
class Stratum:
    base: str
    kernel: tuple
    cohomology: list             # invariant factors before merging
    entries: list

    @property
    def count(self) -> int:
        return len(self.entries)


def _entries(base, kernel, h2: CohomologyGroup, merge: bool) -> list[CatalogEntry]:
    if not merge:
        return [CatalogEntry(base, kernel, rep, 1, h2.module.size, i) for i, rep in enumerate(h2.representatives)]
    out = []
    for s in merge_conjugate_classes(h2):
        out.append(CatalogEntry(base, kernel, h2.representatives[s[0]], len(s), h2.module.size, s[0]))
    return out


def classify_strata(group: FiniteGroup) -> list[Stratum]:
    everything = tuple(range(group.order))
    sign = second_cohomology(group, trivial_module(group, (2,)))
    strata = [Stratum("R", everything, list(sign.invariant_factors), _entries("R", everything, sign, False)),
              Stratum("H", everything, list(sign.invariant_factors), _entries("H", everything, sign, False))]
    triv = divisible_cohomology(group)
    strata.append(Stratum("C", everything, list(triv.invariant_factors), _entries("C", everything, triv, True)))
    for N in index_two_subgroups(group):
        h = divisible_cohomology(group, kernel=N)
        strata.append(Stratum("C", tuple(N), list(h.invariant_factors), _entries("C", tuple(N), h, True)))
    return strata


def classify_real(group: FiniteGroup) -> list[CatalogEntry]:
    return [e for s in classify_strata(group) for e in s.entries]


def strata_counts(group: FiniteGroup) -> tuple[int, int, int, list[int]]:
    """(R, H, C with trivial eta, [C per index-2 kernel])."""
    s = classify_strata(group)
    return s[0].count, s[1].count, s[2].count, [x.count for x in s[3:]]
