"""The group K = U^G x| (A x Aut(G)) and its action on pairs.

A K-element is kept in the normal form lambda * phi * phi_G.  With
``phi(lam)(g) = phi(lam(g))`` and ``phi_G(lam)(g) = lam(phi_G^-1(g))`` the
product is

    (l1 p1 f1)(l2 p2 f2) = (l1 . (p1 f1)(l2)) (p1 p2) (f1 f2),

and the action on a pair is

    eta'(g)    = iota_{lam(g)} o phi o eta(f^-1 g) o phi^-1
    alpha'(g,h) = lam(g) . [phi o eta(f^-1 g) o phi^-1](lam(h))
                  . phi(alpha(f^-1 g, f^-1 h)) . lam(gh)^-1
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .coeffs import CoefficientSystem
from .crossed import GammaPair, check_pair
from .groups import FiniteGroup, compose_perm, inverse_perm


class InternalConsistencyError(AssertionError):
    """The action produced a pair outside Gamma."""


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=np.int64)
    a.setflags(write=False)
    return a


@dataclass(eq=False)
class KElement:
    lam: np.ndarray
    phi: int
    phi_g: tuple[int, ...]

    def __post_init__(self):
        self.lam = _frozen(self.lam)
        self.phi = int(self.phi)
        self.phi_g = tuple(int(x) for x in self.phi_g)

    def __eq__(self, other) -> bool:
        return (isinstance(other, KElement) and self.phi == other.phi
                and self.phi_g == other.phi_g and np.array_equal(self.lam, other.lam))

    def __hash__(self) -> int:
        return hash((self.lam.tobytes(), self.phi, self.phi_g))

    def __repr__(self) -> str:
        return f"KElement(lam={self.lam.tolist()}, phi={self.phi}, phi_g={list(self.phi_g)})"

    def is_identity(self) -> bool:
        return self.phi == 0 and not self.lam.any() and self.phi_g == tuple(range(len(self.phi_g)))


def k_identity(group: FiniteGroup, coeff: CoefficientSystem | None = None) -> KElement:
    n = group.order
    return KElement(np.zeros(n, dtype=np.int64), 0, tuple(range(n)))


def pure_lambda(lam: Sequence[int]) -> KElement:
    lam = np.asarray(lam)
    return KElement(lam, 0, tuple(range(len(lam))))


def pure_phi(group: FiniteGroup, phi: int) -> KElement:
    return KElement(np.zeros(group.order, dtype=np.int64), phi, tuple(range(group.order)))


def pure_phi_g(perm: Sequence[int]) -> KElement:
    return KElement(np.zeros(len(perm), dtype=np.int64), 0, tuple(perm))


def _twist_lambda(coeff: CoefficientSystem, phi: int, phi_g: Sequence[int], lam: np.ndarray) -> np.ndarray:
    """(phi, phi_g)(lam): g -> phi(lam(phi_g^-1 g))."""
    fin = np.asarray(inverse_perm(phi_g))
    return coeff.act[phi][lam[fin]]


def k_compose(k1: KElement, k2: KElement, coeff: CoefficientSystem) -> KElement:
    if len(k1.lam) != len(k2.lam):
        raise ValueError("K-elements over different groups")
    m = coeff.units.table
    lam = m[k1.lam, _twist_lambda(coeff, k1.phi, k1.phi_g, k2.lam)]
    return KElement(lam, coeff.compose(k1.phi, k2.phi), compose_perm(k1.phi_g, k2.phi_g))


def k_inverse(k: KElement, coeff: CoefficientSystem) -> KElement:
    # (lam p f)^-1 = (p^-1 f^-1)(lam^-1) . p^-1 . f^-1
    pinv = coeff.auto_inv(k.phi)
    finv = inverse_perm(k.phi_g)
    lam_inv = coeff.units.inv[k.lam]
    return KElement(_twist_lambda(coeff, pinv, finv, lam_inv), pinv, finv)


def apply(k: KElement, pair: GammaPair, verify: bool = False) -> GammaPair:
    """Act by k on a pair.  ``verify`` re-checks that the output lies in Gamma."""
    G, C = pair.group, pair.coeff
    if len(k.lam) != G.order or not 0 <= k.phi < C.n_autos:
        raise ValueError("K-element does not match the pair's group/coefficients")
    At, m, act = C.autos.table, C.units.table, C.act
    t = G.table
    fin = np.asarray(inverse_perm(k.phi_g))
    phi, phi_inv = k.phi, C.auto_inv(k.phi)
    lam = k.lam
    # phi o eta(f^-1 g) o phi^-1, per g
    base = At[At[phi, pair.eta[fin]], phi_inv]
    eta_new = At[C.inner[lam], base]
    moved = act[phi][pair.alpha[fin[:, None], fin[None, :]]]     # phi(alpha(f^-1 g, f^-1 h))
    twisted = act[base[:, None], lam[None, :]]                    # base(g)(lam(h))
    alpha_new = m[m[m[lam[:, None], twisted], moved], C.units.inv[lam[t]]]
    out = GammaPair(G, C, alpha_new, eta_new, pair.validated, pair.name)
    if verify and not check_pair(G, C, alpha_new, eta_new):
        raise InternalConsistencyError(f"{k!r} moved a pair out of Gamma")
    return out


def normalizing_element(pair: GammaPair) -> KElement:
    """lam with lam(e) = alpha(e,e)^-1, 1 elsewhere; its image has alpha(e,.) = alpha(.,e) = 1."""
    lam = np.zeros(pair.group.order, dtype=np.int64)
    lam[0] = pair.coeff.units.inv[pair.alpha[0, 0]]
    return pure_lambda(lam)


@dataclass
class ActionReport:
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def action_axiom_check(pairs: Iterable[GammaPair], ks: Iterable[tuple[KElement, KElement]] | Sequence[KElement],
                       coeff: CoefficientSystem | None = None) -> ActionReport:
    """Check k1(k2 p) == (k1 k2) p over all pairs and all (k1, k2) combinations.

    ``ks`` is either a list of K-elements (all ordered pairs are used) or an
    explicit iterable of (k1, k2) tuples.
    """
    pairs = list(pairs)
    ks = list(ks)
    if ks and isinstance(ks[0], KElement):
        combos = [(a, b) for a in ks for b in ks]
    else:
        combos = ks
    report = ActionReport()
    for p in pairs:
        C = coeff or p.coeff
        for k1, k2 in combos:
            lhs = apply(k1, apply(k2, p))
            rhs = apply(k_compose(k1, k2, C), p)
            report.checked += 1
            if lhs != rhs:
                report.violations.append((k1, k2, p))
    return report
