"""Built-in reproducibility suite: each claim computes a value and compares it
with the published one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import coeffs as cf
from .classify import strata_counts
from .cohom import conjugation_character, divisible_cohomology, second_cohomology, trivial_module
from .crossed import from_structure_constants_bicyclic, make_pair, skew_pair, trivial_pair
from .decide import decide, emit_isomorphism
from .groups import direct_product, index_two_subgroups, make_cyclic, make_symmetric3


@dataclass
class Claim:
    name: str
    text: str
    compute: Callable[[], object]
    expected: object


@dataclass
class ClaimResult:
    claim: Claim
    observed: object
    passed: bool
    flipped: bool = False

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        exp = f"anything but {self.claim.expected!r}" if self.flipped else repr(self.claim.expected)
        return f"{tag} {self.claim.name}: {self.claim.text} (observed {self.observed!r}, expected {exp})"


def c4c4():
    return direct_product(make_cyclic(4), make_cyclic(4))


def conjugate_pair_c4c4():
    C = cf.roots_of_unity(4, True)
    return from_structure_constants_bicyclic(4, 4, 1, C), from_structure_constants_bicyclic(4, 4, 3, C)


def three_algebras_c2():
    """Group algebra CG, skew C_eta G = M2(R), and the H-pair, over G = C2."""
    G, C = make_cyclic(2), cf.roots_of_unity(4, True)
    ga = trivial_pair(G, C)
    ms = skew_pair(G, C, [0, 1], "M2(R)")
    hp = make_pair(G, C, [[0, 0], [0, 2]], [0, 1], "H")
    return ga, ms, hp


def galois_skew_pairs(i=1, j=2):
    G, C = make_cyclic(2), cf.galois_s3()
    return skew_pair(G, C, [0, i], f"L_eta{i}"), skew_pair(G, C, [0, j], f"L_eta{j}")


def _conjugate_verdicts():
    a, b = conjugate_pair_c4c4()
    return {"C-graded iso": decide("graded_iso", a, b, restrict_autos=[0]).equivalent,
            "graded equivalent": decide("graded_equiv", a, b).equivalent,
            "R-graded iso": decide("graded_iso", a, b).equivalent,
            "Clifford": decide("clifford", a, b).equivalent}


def _three_algebras():
    ga, ms, hp = three_algebras_c2()
    ps = [ga, ms, hp]
    equiv = [decide("graded_equiv", ps[i], ps[j]).equivalent for i in range(3) for j in range(i + 1, 3)]
    return {"validated": all(p.validated for p in ps), "graded_equiv pairwise": equiv,
            "Clifford M2(R) vs H": decide("clifford", ms, hp).equivalent}


def _s3_inflated():
    """The sign-inflated H cocycle is the nontrivial twisted class of S3."""
    G = make_symmetric3()
    N = index_two_subgroups(G)[0]
    h2 = divisible_cohomology(G, kernel=N)
    chi = conjugation_character(G, N)
    Nn = h2.module.factors[0]
    alpha = np.array([[Nn // 2 if chi[x] and chi[y] else 0 for y in range(G.order)] for x in range(G.order)])
    idx, _ = h2.decompose(alpha)
    return idx != 0


def _galois_iso():
    p1, p2 = galois_skew_pairs()
    v = decide("graded_iso", p1, p2)
    m = emit_isomorphism(v.witness, p1, p2, element_names=["1", "sigma"])
    lab = p1.coeff.auto_labels[v.witness.phi]
    return {"equivalent": v.equivalent, "phi": lab, "lambda trivial": not v.witness.lam.any(),
            "formula": m.formula, "multiplicative": m.multiplicative and m.compatible}


def _galois_eta3():
    p1, p3 = galois_skew_pairs(1, 3)
    return decide("graded_iso", p1, p3).equivalent


CLAIMS = [
    Claim("c2-three-algebras", "group algebra, M2(R) and H pairs over C2 are distinct",
          _three_algebras, {"validated": True, "graded_equiv pairwise": [False, False, False], "Clifford M2(R) vs H": False}),
    Claim("c4c4-conjugate-pair", "[alpha] vs [alpha-bar] over C4xC4: the four relations",
          _conjugate_verdicts, {"C-graded iso": False, "graded equivalent": True, "R-graded iso": True, "Clifford": False}),
    Claim("c4c4-sign", "H^2(C4xC4, {+-1})", lambda: list(second_cohomology(c4c4(), trivial_module(c4c4(), (2,))).invariant_factors), [2, 2, 2]),
    Claim("c4c4-multiplier", "H^2(C4xC4, C*)", lambda: list(divisible_cohomology(c4c4()).invariant_factors), [4]),
    Claim("c4c4-twisted", "H^2_eta(C4xC4, C*) for every index-2 kernel",
          lambda: [list(divisible_cohomology(c4c4(), kernel=N).invariant_factors) for N in index_two_subgroups(c4c4())],
          [[2, 2]] * 3),
    Claim("c4c4-catalog", "C4xC4 strata counts R/H/C/C-kernels", lambda: strata_counts(c4c4()), (8, 8, 3, [4, 4, 4])),
    Claim("s3-sign", "H^2(S3, {+-1})", lambda: list(second_cohomology(make_symmetric3(), trivial_module(make_symmetric3(), (2,))).invariant_factors), [2]),
    Claim("s3-multiplier", "H^2(S3, C*) is trivial", lambda: list(divisible_cohomology(make_symmetric3()).invariant_factors), []),
    Claim("s3-twisted", "H^2_eta(S3, C*) with kernel A3",
          lambda: list(divisible_cohomology(make_symmetric3(), kernel=index_two_subgroups(make_symmetric3())[0]).invariant_factors), [2]),
    Claim("s3-inflated", "the nontrivial twisted S3 class is inflated from the H-pair", _s3_inflated, True),
    Claim("s3-catalog", "S3 strata counts R/H/C/C-kernels", lambda: strata_counts(make_symmetric3()), (2, 2, 1, [2])),
    Claim("galois-skew-eta1-eta2", "L_eta1 G and L_eta2 G are graded isomorphic via eta3", _galois_iso,
          {"equivalent": True, "phi": "eta3", "lambda trivial": True,
           "formula": "psi(l_1 + l_2 u_sigma) = eta3(l_1) + eta3(l_2) v_sigma", "multiplicative": True}),
    Claim("galois-skew-eta1-eta3", "L_eta1 G and L_eta3 G are graded isomorphic", _galois_eta3, True),
    Claim("c2-catalog", "C2 strata counts R/H/C/C-kernels", lambda: strata_counts(make_cyclic(2)), (2, 2, 1, [2])),
]


def select(filt: str | None) -> list[Claim]:
    if filt is None:
        return list(CLAIMS)
    return [c for c in CLAIMS if filt in c.name]


def run(claims: list[Claim], flip: set[str] = frozenset()) -> list[ClaimResult]:
    """Evaluate claims; names in ``flip`` get a deliberately wrong expectation."""
    out = []
    for c in claims:
        obs = c.compute()
        ok = obs == c.expected
        if c.name in flip:
            ok = not ok
        out.append(ClaimResult(c, obs, ok, c.name in flip))
    return out

