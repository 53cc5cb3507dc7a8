"""Pairs (alpha, eta) defining crossed products R^alpha_eta G.

``alpha`` is a |G| x |G| table of unit indices and ``eta`` a length-|G| array
of indices into the coefficient automorphisms.  Pairs are stored exactly as
given; no normalization alpha(e, .) = 1 is imposed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .coeffs import CoefficientSystem
from .groups import FiniteGroup


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=np.int64)
    a.setflags(write=False)
    return a


@dataclass(eq=False)
class GammaPair:
    group: FiniteGroup
    coeff: CoefficientSystem
    alpha: np.ndarray
    eta: np.ndarray
    validated: bool = False
    name: str = field(default="", compare=False)

    def __post_init__(self):
        self.alpha = _frozen(self.alpha)
        self.eta = _frozen(self.eta)

    def key(self) -> bytes:
        return self.alpha.tobytes() + b"|" + self.eta.tobytes()

    def same_context(self, other: "GammaPair") -> bool:
        return (self.coeff is other.coeff or _same_coeff(self.coeff, other.coeff)) and \
            self.group == other.group

    def __eq__(self, other) -> bool:
        return (isinstance(other, GammaPair) and np.array_equal(self.alpha, other.alpha)
                and np.array_equal(self.eta, other.eta))

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"GammaPair{tag}(|G|={self.group.order}, eta={self.eta.tolist()}, validated={self.validated})"


def _same_coeff(a: CoefficientSystem, b: CoefficientSystem) -> bool:
    return (a.units == b.units and a.autos == b.autos and np.array_equal(a.act, b.act)
            and np.array_equal(a.inner, b.inner))


def outer_action_violations(group: FiniteGroup, coeff: CoefficientSystem, eta) -> list[tuple[int, int]]:
    """Pairs (g, h) with eta(g) eta(h) eta(gh)^-1 not inner."""
    eta = np.asarray(eta)
    At = coeff.autos.table
    c = At[At[eta[:, None], eta[None, :]], coeff.autos.inv[eta[group.table]]]
    inner = np.zeros(coeff.n_autos, dtype=bool)
    inner[list(coeff.inner_subgroup)] = True
    bad = np.argwhere(~inner[c])
    return [tuple(map(int, x)) for x in bad]


def verify_outer_action(group: FiniteGroup, coeff: CoefficientSystem, eta) -> bool:
    return not outer_action_violations(group, coeff, eta)


def twisting_violations(group: FiniteGroup, coeff: CoefficientSystem, alpha, eta,
                        limit: int | None = None) -> list[tuple[int, int, int]]:
    """Triples violating alpha(a,b) alpha(ab,c) = eta(a)(alpha(b,c)) alpha(a,bc)."""
    alpha, eta = np.asarray(alpha), np.asarray(eta)
    t, m = group.table, coeff.units.table
    lhs = m[alpha[:, :, None], alpha[t][:, :, :]]                 # alpha(a,b) alpha(ab,c)
    twisted = coeff.act[eta[:, None, None], alpha[None, :, :]]      # eta(a)(alpha(b,c))
    rhs = m[twisted, alpha[:, t]]                                  # ... alpha(a, bc)
    bad = np.argwhere(lhs != rhs)
    if limit is not None:
        bad = bad[:limit]
    return [tuple(map(int, x)) for x in bad]


def alpha_outer_violations(group: FiniteGroup, coeff: CoefficientSystem, alpha, eta) -> list[tuple[int, int]]:
    """Pairs (g, h) with eta(g) o eta(h) != inner(alpha(g,h)) o eta(gh)."""
    alpha, eta = np.asarray(alpha), np.asarray(eta)
    At = coeff.autos.table
    lhs = At[eta[:, None], eta[None, :]]
    rhs = At[coeff.inner[alpha], eta[group.table]]
    return [tuple(map(int, x)) for x in np.argwhere(lhs != rhs)]


def verify_twisting(pair: GammaPair) -> bool:
    return not twisting_violations(pair.group, pair.coeff, pair.alpha, pair.eta, limit=1)


def verify_alpha_outer(pair: GammaPair) -> bool:
    return not alpha_outer_violations(pair.group, pair.coeff, pair.alpha, pair.eta)


def check_pair(group: FiniteGroup, coeff: CoefficientSystem, alpha, eta) -> bool:
    return (verify_outer_action(group, coeff, eta)
            and not twisting_violations(group, coeff, alpha, eta, limit=1)
            and not alpha_outer_violations(group, coeff, alpha, eta))


def make_pair(group: FiniteGroup, coeff: CoefficientSystem, alpha, eta, name: str = "") -> GammaPair:
    alpha = np.asarray(alpha, dtype=np.int64)
    eta = np.asarray(eta, dtype=np.int64)
    n = group.order
    if alpha.shape != (n, n):
        raise ValueError(f"alpha must be {n}x{n}, got {alpha.shape}")
    if eta.shape != (n,):
        raise ValueError(f"eta must have length {n}, got {eta.shape}")
    if alpha.size and (alpha.min() < 0 or alpha.max() >= coeff.n_units):
        raise ValueError("alpha entry is not a unit index")
    if eta.min() < 0 or eta.max() >= coeff.n_autos:
        raise ValueError("eta entry is not an automorphism index")
    return GammaPair(group, coeff, alpha, eta, check_pair(group, coeff, alpha, eta), name)


def trivial_pair(group: FiniteGroup, coeff: CoefficientSystem) -> GammaPair:
    """The group algebra: alpha = 1, eta = id."""
    n = group.order
    return make_pair(group, coeff, np.zeros((n, n), dtype=int), np.zeros(n, dtype=int), "group algebra")


def skew_pair(group: FiniteGroup, coeff: CoefficientSystem, eta_hom, name: str = "") -> GammaPair:
    """Skew group ring: alpha = 1 and eta a homomorphism G -> A."""
    eta_hom = np.asarray(eta_hom, dtype=np.int64)
    if not group.is_homomorphism(eta_hom, coeff.autos):
        raise ValueError("eta is not a homomorphism G -> A")
    n = group.order
    pair = make_pair(group, coeff, np.zeros((n, n), dtype=int), eta_hom, name)
    assert pair.validated
    return pair


def _unit_power(coeff: CoefficientSystem, u: int, k: int) -> int:
    return coeff.units.power(u, k)


def from_structure_constants_bicyclic(m: int, n: int, q: int, coeff: CoefficientSystem,
                                      group: FiniteGroup | None = None) -> GammaPair:
    """Twisted group algebra of C_m x C_n = <g> x <h> with u_g u_h = q u_h u_g.

    Basis u_{g^a h^b} = u_g^a u_h^b with u_g^m = u_h^n = 1 gives
    alpha(g^a h^b, g^c h^d) = q^(-b c).  ``q`` must be central; consistency
    of q with the orders is checked through the cocycle identity.
    """
    from .groups import direct_product, make_cyclic

    if group is None:
        group = direct_product(make_cyclic(m), make_cyclic(n))
    if group.order != m * n:
        raise ValueError("group order does not match m*n")
    U = coeff.units
    if q not in U.center():
        raise ValueError("q must be central in U")
    alpha = np.zeros((m * n, m * n), dtype=np.int64)
    for x in range(m * n):
        b = x % n
        for y in range(m * n):
            c = y // n
            alpha[x, y] = _unit_power(coeff, q, -b * c)
    eta = np.zeros(m * n, dtype=np.int64)
    bad = twisting_violations(group, coeff, alpha, eta, limit=1)
    if bad:
        raise ValueError(f"q is inconsistent with u_g^{m} = u_h^{n} = 1: "
                         f"twisting fails at (g1, g2, g3) = {bad[0]}")
    pair = make_pair(group, coeff, alpha, eta, f"bicyclic q={U.labels[q]}")
    if not pair.validated:
        raise ValueError("bicyclic pair violates the alpha/eta compatibility")
    return pair
