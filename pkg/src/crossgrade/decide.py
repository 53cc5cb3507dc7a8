"""The four orbit relations on pairs and the explicit isomorphism they induce.

relation      subgroup of K
clifford      U^G
graded_iso    U^G x| A        (A optionally replaced by a subgroup)
isometry      U^G x| Aut(G)
graded_equiv  K

Two strategies.  For commutative coefficients every candidate (phi, phi_G)
is tried in index order and the remaining lambda is found by a coboundary
solve.  Otherwise the orbit of the first pair is enumerated breadth-first.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .cohom import AbelianModule, is_coboundary, module_from_coeffs
from .coeffs import CoefficientSystem
from .crossed import GammaPair
from .groups import FiniteGroup, GuardExceeded, automorphism_group, compose_perm
from .kaction import KElement, apply, k_compose, k_identity, pure_lambda, pure_phi, pure_phi_g

RELATIONS = ("clifford", "graded_iso", "isometry", "graded_equiv")
ALIASES = {"iso": "graded_iso", "equivalence": "graded_equiv", "equiv": "graded_equiv"}
BRUTE_GUARD = 2 ** 20


class ContextMismatch(ValueError):
    pass


@dataclass
class EquivalenceVerdict:
    relation: str
    equivalent: bool
    witness: KElement | None
    strategy: str                    # "cohomological" | "brute-orbit"
    checked: int = 0                 # candidates tried / orbit size

    def to_json(self) -> dict:
        out = {"relation": self.relation, "equivalent": self.equivalent, "strategy": self.strategy}
        if self.witness is not None:
            w = self.witness
            out["witness"] = {"lambda": w.lam.tolist(), "phi": w.phi, "phi_g": list(w.phi_g)}
        return out


def normalize_relation(relation: str) -> str:
    rel = ALIASES.get(relation, relation)
    if rel not in RELATIONS:
        raise ValueError(f"unknown relation {relation!r}; expected one of {RELATIONS}")
    return rel


def allowed_autos(coeff: CoefficientSystem, relation: str, restrict: Sequence[int] | None = None) -> list[int]:
    if relation in ("clifford", "isometry"):
        return [0]
    if restrict is None:
        return list(range(coeff.n_autos))
    for a in restrict:
        if not 0 <= int(a) < coeff.n_autos:
            raise ValueError(f"automorphism index {a} out of range")
    return sorted(coeff.autos.generated([int(a) for a in restrict]))


def allowed_group_autos(group: FiniteGroup, relation: str) -> list[tuple[int, ...]]:
    if relation in ("clifford", "graded_iso"):
        return [tuple(range(group.order))]
    return automorphism_group(group)


def _check_context(p1: GammaPair, p2: GammaPair) -> None:
    if not p1.same_context(p2):
        raise ContextMismatch("pairs live over different groups or coefficient systems")
    for p in (p1, p2):
        if not p.validated:
            raise ContextMismatch(f"pair {p.name or p!r} is not in Gamma")


_MODULES: dict = {}


def _module(group: FiniteGroup, coeff: CoefficientSystem, eta: np.ndarray) -> AbelianModule:
    key = (id(group), id(coeff), np.asarray(eta).tobytes())
    hit = _MODULES.get(key)
    if hit is None or hit[0] is not group or hit[1] is not coeff:
        if len(_MODULES) > 256:
            _MODULES.clear()
        hit = (group, coeff, module_from_coeffs(group, coeff, eta))
        _MODULES[key] = hit
    return hit[2]


def _cohomological(rel: str, p1: GammaPair, p2: GammaPair, autos, gautos) -> EquivalenceVerdict:
    G, C = p1.group, p1.coeff
    m = C.units.table
    tried = 0
    for phi in autos:
        for f in gautos:
            tried += 1
            base = KElement(np.zeros(G.order, dtype=np.int64), phi, f)
            moved = apply(base, p1)
            if not np.array_equal(moved.eta, p2.eta):
                continue
            mod = _module(G, C, p2.eta)
            diff = m[p2.alpha, C.units.inv[moved.alpha]]
            lam = is_coboundary(G, mod, diff)
            if lam is None:
                continue
            k = k_compose(pure_lambda(lam), base, C)
            _assert_witness(k, p1, p2)
            return EquivalenceVerdict(rel, True, k, "cohomological", tried)
    return EquivalenceVerdict(rel, False, None, "cohomological", tried)


def _generators(rel: str, p1: GammaPair, autos, gautos) -> list[KElement]:
    G, C = p1.group, p1.coeff
    gens = []
    for g in range(G.order):
        for u in C.units.generating_set():
            lam = np.zeros(G.order, dtype=np.int64)
            lam[g] = u
            gens.append(pure_lambda(lam))
    if len(autos) > 1:
        gens += [pure_phi(G, a) for a in _perm_generators_autos(C, autos)]
    if len(gautos) > 1:
        gens += [pure_phi_g(f) for f in _perm_generators(gautos)]
    return gens


def _perm_generators(perms: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Greedy generating set of a permutation group, in list order."""
    span = {perms[0]}
    gens = []
    for p in perms:
        if p in span:
            continue
        gens.append(p)
        frontier = list(span)
        span = set(span)
        todo = deque(frontier)
        while todo:
            x = todo.popleft()
            for s in gens:
                y = compose_perm(s, x)
                if y not in span:
                    span.add(y)
                    todo.append(y)
    return gens


def _perm_generators_autos(C: CoefficientSystem, autos: list[int]) -> list[int]:
    gens, span = [], {0}
    for a in autos:
        if a not in span:
            gens.append(a)
            span = set(C.autos.generated(gens))
    return gens


def _brute(rel: str, p1: GammaPair, p2: GammaPair, autos, gautos) -> EquivalenceVerdict:
    G, C = p1.group, p1.coeff
    if C.n_units ** G.order > BRUTE_GUARD:
        raise GuardExceeded(f"|U|^|G| = {C.n_units}^{G.order} exceeds the orbit-search guard 2^20")
    gens = _generators(rel, p1, autos, gautos)
    start = k_identity(G)
    seen = {p1.key(): start}
    queue = deque([(p1, start)])
    target = p2.key()
    while queue:
        pair, k = queue.popleft()
        if pair.key() == target:
            _assert_witness(k, p1, p2)
            return EquivalenceVerdict(rel, True, k, "brute-orbit", len(seen))
        for s in gens:
            nxt = apply(s, pair)
            key = nxt.key()
            if key not in seen:
                kk = k_compose(s, k, C)
                seen[key] = kk
                queue.append((nxt, kk))
    return EquivalenceVerdict(rel, False, None, "brute-orbit", len(seen))


def _assert_witness(k: KElement, p1: GammaPair, p2: GammaPair) -> None:
    if apply(k, p1) != p2:
        raise AssertionError("witness does not map the first pair to the second")


def decide(relation: str, pair1: GammaPair, pair2: GammaPair, restrict_autos: Sequence[int] | None = None,
           strategy: str = "auto") -> EquivalenceVerdict:
    """Is pair2 in the orbit of pair1 under the subgroup of K named by ``relation``?

    ``restrict_autos`` replaces A by the subgroup generated by those indices
    (a smaller field of scalars); ``strategy`` is auto, cohomological or brute.
    """
    rel = normalize_relation(relation)
    _check_context(pair1, pair2)
    autos = allowed_autos(pair1.coeff, rel, restrict_autos)
    gautos = allowed_group_autos(pair1.group, rel)
    if strategy == "auto":
        strategy = "cohomological" if pair1.coeff.commutative else "brute"
    if strategy == "cohomological":
        if not pair1.coeff.commutative:
            raise ValueError("cohomological strategy needs a commutative coefficient system")
        return _cohomological(rel, pair1, pair2, autos, gautos)
    if strategy in ("brute", "brute-orbit"):
        return _brute(rel, pair1, pair2, autos, gautos)
    raise ValueError(f"unknown strategy {strategy!r}")


def delta_equivalent(eta1, eta2, coeff: CoefficientSystem) -> int | None:
    """First phi with phi eta1(g) phi^-1 eta2(g)^-1 inner for every g."""
    eta1, eta2 = np.asarray(eta1), np.asarray(eta2)
    At, inv = coeff.autos.table, coeff.autos.inv
    inner = np.zeros(coeff.n_autos, dtype=bool)
    inner[list(coeff.inner_subgroup)] = True
    for phi in range(coeff.n_autos):
        c = At[At[At[phi, eta1], inv[phi]], inv[eta2]]
        if inner[c].all():
            return phi
    return None


# ---------------------------------------------------------------------------
# the induced map on crossed products

@dataclass
class IsomorphismMap:
    """psi(sum r_g u_g) = sum phi(r_g) lam(f(g))^-1 v_f(g).

    ``basis[g] = (unit, target)`` encodes u_g -> unit * v_target.
    """
    phi: int
    phi_label: str
    basis: list
    multiplicative: bool
    compatible: bool
    failures: list = field(default_factory=list)
    formula: str = ""

    def to_json(self) -> dict:
        return {"phi": self.phi, "phi_label": self.phi_label,
                "basis": [{"unit": u, "target": t} for u, t in self.basis],
                "multiplicative": self.multiplicative, "coefficient_compatible": self.compatible,
                "formula": self.formula}


def emit_isomorphism(witness: KElement, pair1: GammaPair, pair2: GammaPair,
                     element_names: Sequence[str] | None = None) -> IsomorphismMap:
    if apply(witness, pair1) != pair2:
        raise ValueError("witness does not map pair1 to pair2")
    G, C = pair1.group, pair1.coeff
    U, At = C.units, C.autos.table
    f, phi, lam = witness.phi_g, witness.phi, witness.lam
    basis = [(int(U.inv[lam[f[g]]]), int(f[g])) for g in range(G.order)]
    failures = []
    # psi(u_a u_b) = psi(u_a) psi(u_b) on every basis pair
    for a in range(G.order):
        for b in range(G.order):
            fa, fb, fab = f[a], f[b], f[G.table[a, b]]
            lhs = U.table[C.act[phi, pair1.alpha[a, b]], basis[G.table[a, b]][0]]
            ub = C.act[pair2.eta[fa], basis[b][0]]
            rhs = U.table[U.table[basis[a][0], ub], pair2.alpha[fa, fb]]
            if lhs != rhs or G.table[fa, fb] != fab:
                failures.append(("mult", a, b))
    # psi(u_g r) = psi(u_g) psi(r): eta2(f g) phi = iota_lam(f g) phi eta1(g)
    compatible = True
    for g in range(G.order):
        lhs = At[pair2.eta[f[g]], phi]
        rhs = At[C.inner[lam[f[g]]], At[phi, pair1.eta[g]]]
        if lhs != rhs:
            compatible = False
            failures.append(("coeff", g))
    names = list(element_names) if element_names else list(G.labels)
    plabel = C.auto_labels[phi] if C.auto_labels else str(phi)
    lhs_terms, rhs_terms = [], []
    for g in range(G.order):
        r = f"l_{g + 1}"
        lhs_terms.append(r if g == 0 else f"{r} u_{names[g]}")
        unit, tgt = basis[g]
        coef = f"{plabel}({r})" if phi else r
        if unit:
            coef += f" {U.labels[unit]}"
        rhs_terms.append(coef if tgt == 0 else f"{coef} v_{names[tgt]}")
    formula = f"psi({' + '.join(lhs_terms)}) = {' + '.join(rhs_terms)}"
    mult = not any(x[0] == "mult" for x in failures)
    return IsomorphismMap(phi, plabel, basis, mult, compatible, failures, formula)
