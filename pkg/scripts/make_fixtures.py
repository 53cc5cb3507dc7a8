"""Write the golden problem files under fixtures/.

Run from the repository root: python3 scripts/make_fixtures.py
"""

from pathlib import Path

import numpy as np

from crossgrade import problem as pf
from crossgrade.claims import conjugate_pair_c4c4, galois_skew_pairs, three_algebras_c2
from crossgrade.coeffs import S3_GALOIS_LABELS, S3_GALOIS_PERMS
from crossgrade.crossed import make_pair
from crossgrade.kaction import KElement, apply, k_identity, normalizing_element, pure_phi

OUT = Path(__file__).resolve().parent.parent / "fixtures"

C2 = {"kind": "cyclic", "n": 2}
C4C4 = {"kind": "product", "factors": [{"kind": "cyclic", "n": 4}, {"kind": "cyclic", "n": 4}]}
MU4C = {"kind": "roots_of_unity", "n": 4, "conjugation": True}
GAL = {"kind": "galois", "perms": [list(p) for p in S3_GALOIS_PERMS], "labels": S3_GALOIS_LABELS}


def problem(gd, cd, pairs, k=None, query=None):
    G, C = pf.build_group(gd), pf.build_coeff(cd)
    return pf.Problem(G, C, gd, cd, pairs, k, query or {})


def write(name, prob):
    text = pf.emit(prob)
    assert pf.same_problem(pf.parse(text), prob), name
    (OUT / name).write_text(text, encoding="utf-8")
    print("wrote", name)


def main():
    OUT.mkdir(exist_ok=True)
    ga, ms, hp = three_algebras_c2()
    write("c2_group_algebra.json", problem(C2, MU4C, [ga]))
    write("c2_skew_conjugation.json", problem(C2, MU4C, [ms]))
    write("c2_quaternion_pair.json", problem(C2, MU4C, [hp]))
    write("c2_three_algebras.json", problem(C2, MU4C, [ga, ms, hp]))
    bad = make_pair(hp.group, hp.coeff, [[0, 0], [0, 1]], [0, 1], "H with alpha(g,g)=i")
    write("c2_corrupted_alpha.json", problem(C2, MU4C, [bad]))

    a, b = conjugate_pair_c4c4()
    write("c4c4_alpha.json", problem(C4C4, MU4C, [a]))
    write("c4c4_alpha_bar.json", problem(C4C4, MU4C, [b]))
    write("c4c4_conjugate_pairs.json", problem(C4C4, MU4C, [a, b],
                                               query={"relation": "graded_iso", "restrict_autos": [0]}))
    write("c4c4_act_conj.json", problem(C4C4, MU4C, [a], pure_phi(a.group, 1)))
    write("c4c4_act_identity.json", problem(C4C4, MU4C, [a], k_identity(a.group)))

    # an unnormalized pair: alpha multiplied by the coboundary of a constant lambda
    lam = np.array([1, 0])
    G, C = hp.group, hp.coeff
    shifted = KElement(lam, 0, (0, 1))
    un = apply(shifted, hp)
    un = make_pair(G, C, un.alpha, un.eta, "H, unnormalized")
    write("c2_act_normalize.json", problem(C2, MU4C, [un], normalizing_element(un)))

    p1, p2 = galois_skew_pairs()
    write("galois_skew_eta1.json", problem(C2, GAL, [p1]))
    write("galois_skew_eta2.json", problem(C2, GAL, [p2], query={"relation": "graded_iso"}))


if __name__ == "__main__":
    main()
