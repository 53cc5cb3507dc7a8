"""Second cohomology of finite groups with finite abelian coefficients.

A module ``U = Z/n_1 + ... + Z/n_r`` carries a G-action by integer matrices.
Cochains are stored in additive coordinates; the cocycle and coboundary maps
are the additive forms of

    alpha(a,b) alpha(ab,c) = eta(a)(alpha(b,c)) alpha(a,bc)
    (d lam)(g,h) = lam(g) eta(g)(lam(h)) lam(gh)^-1.

Everything is split into p-primary parts and solved over Z/p^k (see
``zmod``); results are recombined by the Chinese remainder theorem.  Cochains
are not normalized during the linear algebra; class representatives are
normalized afterwards (alpha(e, .) = alpha(., e) = 1).

C* is handled by a ladder of roots of unity mu_N, see ``divisible_cohomology``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import gcd, prod
from typing import Sequence

import numpy as np

from . import zmod
from .coeffs import CoefficientSystem
from .groups import FiniteGroup, GuardExceeded

MAX_GROUP_ORDER = 64


class LadderNotStable(RuntimeError):
    """The root-of-unity ladder did not stabilize within its depth."""


def _factorize(n: int) -> dict[int, int]:
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _vp(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


# ---------------------------------------------------------------------------
# finite abelian groups from tables

def abelian_basis(U: FiniteGroup) -> tuple[list[int], list[int]]:
    """Prime-power cyclic decomposition of an abelian table group.

    Returns (orders, basis) with U the internal direct sum of the cyclic
    subgroups generated by ``basis``; factors are grouped by prime, largest
    first within a prime.
    """
    if not U.is_abelian():
        raise ValueError("unit group is not abelian")
    orders = [U.element_order(x) for x in range(U.order)]
    factors: list[int] = []
    basis: list[int] = []
    for p in sorted(_factorize(U.order)):
        P = [x for x in range(U.order) if _factorize(orders[x]).keys() <= {p}]
        top = max(_vp(orders[x], p) for x in P)
        counts = [sum(1 for x in P if _vp(orders[x], p) <= j) for j in range(top + 1)]
        ranks = [round(np.log(counts[j] / counts[j - 1]) / np.log(p)) for j in range(1, top + 1)]
        exps = []
        for e in range(top, 0, -1):
            exact = ranks[e - 1] - (ranks[e] if e < top else 0)
            exps += [e] * exact
        chosen = _choose_basis(U, P, [p ** e for e in exps], orders)
        factors += [p ** e for e in exps]
        basis += chosen
    return factors, basis


def _choose_basis(U: FiniteGroup, P: list[int], want: list[int], orders: list[int]) -> list[int]:
    def span(gens):
        return set(U.generated(gens))

    def search(i, chosen, cur):
        if i == len(want):
            return chosen
        for b in P:
            if orders[b] != want[i] or b in cur:
                continue
            new = span(chosen + [b])
            if len(new) == len(cur) * want[i]:
                res = search(i + 1, chosen + [b], new)
                if res is not None:
                    return res
        return None

    res = search(0, [], {0})
    if res is None:
        raise RuntimeError("no basis found")
    return res


# ---------------------------------------------------------------------------
# modules

@dataclass(eq=False)
class AbelianModule:
    """U = sum Z/n_i with G acting by integer matrices ``action[g]``.

    ``coords[u]`` are the coordinates of unit index u; by default units are
    numbered in mixed radix (first coordinate fastest).
    """
    group: FiniteGroup
    factors: tuple
    action: np.ndarray
    coords: np.ndarray | None = None
    name: str = ""

    def __post_init__(self):
        self.factors = tuple(int(n) for n in self.factors)
        r = len(self.factors)
        G = self.group
        self.action = np.array(self.action, dtype=np.int64).reshape(G.order, r, r)
        if any(n < 1 for n in self.factors):
            raise ValueError("factors must be positive")
        if self.coords is None:
            size = prod(self.factors)
            idx = np.arange(size)
            cols, rad = [], 1
            for n in self.factors:
                cols.append((idx // rad) % n)
                rad *= n
            self.coords = np.stack(cols, axis=1) if r else np.zeros((size, 0), dtype=np.int64)
        self.coords = np.asarray(self.coords, dtype=np.int64)
        self.validate()
        radix = np.cumprod((1,) + self.factors[:-1]) if r else np.zeros(0, dtype=np.int64)
        self._radix = radix
        lookup = np.full(prod(self.factors), -1, dtype=np.int64)
        lookup[self.coords @ radix if r else np.zeros(len(self.coords), dtype=np.int64)] = \
            np.arange(len(self.coords))
        self._lookup = lookup

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def size(self) -> int:
        return prod(self.factors)

    @property
    def mods(self) -> np.ndarray:
        return np.array(self.factors, dtype=np.int64)

    def validate(self) -> None:
        G, A, n = self.group, self.action, self.mods
        r = self.rank
        if self.coords.shape != (self.size, r):
            raise ValueError("coords table has wrong shape")
        if r == 0:
            return
        # well defined: n_i | a_ij n_j
        if ((A * n[None, None, :]) % n[None, :, None]).any():
            raise ValueError("action matrix entry is not a hom Z/n_j -> Z/n_i")
        ident = np.eye(r, dtype=np.int64)
        if ((A[0] - ident) % n[:, None]).any():
            raise ValueError("identity of G must act trivially")
        prodm = np.einsum("gij,hjk->ghik", A, A)
        if ((prodm - A[G.table]) % n[None, None, :, None]).any():
            raise ValueError("action is not a homomorphism")

    def encode(self, c: np.ndarray) -> np.ndarray:
        c = np.asarray(c, dtype=np.int64) % self.mods
        if self.rank == 0:
            return np.zeros(c.shape[:-1], dtype=np.int64)
        return self._lookup[c @ self._radix]

    def decode(self, u) -> np.ndarray:
        return self.coords[np.asarray(u, dtype=np.int64)]

    def act(self, g: int, c: np.ndarray) -> np.ndarray:
        return (np.asarray(c) @ self.action[g].T) % self.mods

    # additive cochain maps in global coordinates, shape (|G|^k, r)

    def coboundary(self, lam: np.ndarray) -> np.ndarray:
        """d(lam)(g,h) = lam(g) + g.lam(h) - lam(gh), shape (n, n, r)."""
        lam = np.asarray(lam, dtype=np.int64).reshape(self.group.order, self.rank)
        t = self.group.table
        gl = np.einsum("gij,hj->ghi", self.action, lam)
        return (lam[:, None, :] + gl - lam[t]) % self.mods

    def cocycle_defect(self, alpha: np.ndarray) -> np.ndarray:
        n = self.group.order
        a = np.asarray(alpha, dtype=np.int64).reshape(n, n, self.rank)
        t = self.group.table
        ga = np.einsum("gij,bcj->gbci", self.action, a)
        d = ga - a[t][:, :, :, :] + a[:, t] - a[:, :, None, :]
        return d % self.mods

    def is_cocycle(self, alpha: np.ndarray) -> bool:
        return not self.cocycle_defect(alpha).any()

    def table_to_coords(self, table) -> np.ndarray:
        return self.decode(table)

    def coords_to_table(self, c) -> np.ndarray:
        return self.encode(c)

    @cached_property
    def primes(self) -> list[int]:
        return sorted({p for n in self.factors for p in _factorize(n)})

    @cached_property
    def _coboundary_solvers(self) -> dict:
        return {p: self.local(p).coboundary_solver() for p in self.primes}

    def local(self, p: int) -> "_LocalModule":
        return _LocalModule(self, p)


def trivial_module(group: FiniteGroup, factors: Sequence[int]) -> AbelianModule:
    r = len(factors)
    act = np.broadcast_to(np.eye(r, dtype=np.int64), (group.order, r, r)).copy()
    return AbelianModule(group, tuple(factors), act, name=f"Z{list(factors)} trivial")


def cyclic_module(group: FiniteGroup, n: int, chi: Sequence[int] | None = None) -> AbelianModule:
    """Z/n with g acting as (-1)^chi(g); chi = None is the trivial action."""
    if chi is None:
        chi = [0] * group.order
    act = np.array([[[(-1) ** int(c)]] for c in chi], dtype=np.int64)
    return AbelianModule(group, (n,), act, name=f"Z/{n}" + (" twisted" if any(chi) else ""))


def module_from_coeffs(group: FiniteGroup, coeff: CoefficientSystem, eta: Sequence[int]) -> AbelianModule:
    """The abelian unit group of ``coeff`` with g acting through eta(g)."""
    U = coeff.units
    factors, basis = abelian_basis(U)
    r = len(factors)
    coords = np.zeros((U.order, r), dtype=np.int64)
    for c in product(*[range(n) for n in factors]):
        x = 0
        for b, e in zip(basis, c):
            x = U.table[x, U.power(b, e)]
        coords[x] = c
    lookup = {tuple(c): u for u, c in enumerate(coords.tolist())}
    act = np.zeros((group.order, r, r), dtype=np.int64)
    for g in range(group.order):
        a = int(eta[g])
        for j, b in enumerate(basis):
            act[g, :, j] = coords[coeff.act[a, b]]
    mod = AbelianModule(group, tuple(factors), act, coords, name=f"{coeff.name} via eta")
    assert len(lookup) == U.order
    return mod


# ---------------------------------------------------------------------------
# p-local computations

class _LocalModule:
    """p-primary part of a module: coordinates mod q_i = p^v_p(n_i)."""

    def __init__(self, mod: AbelianModule, p: int):
        self.mod, self.p = mod, p
        self.comps = [i for i, n in enumerate(mod.factors) if n % p == 0]
        self.qs = np.array([p ** _vp(mod.factors[i], p) for i in self.comps], dtype=np.int64)
        self.k = int(max(_vp(mod.factors[i], p) for i in self.comps))
        self.q = p ** self.k
        self.d = len(self.comps)
        self.A = mod.action[:, self.comps][:, :, self.comps] % self.q
        self.n = mod.group.order

    def project(self, c: np.ndarray) -> np.ndarray:
        """Global coords (..., r) -> flat local vector."""
        c = np.asarray(c, dtype=np.int64)[..., self.comps] % self.qs
        return c.reshape(-1)

    def rel_rows(self, ncells: int) -> np.ndarray:
        """Rows q_i e_(cell, i) for components with q_i < q."""
        rows = []
        for i, qi in enumerate(self.qs):
            if qi < self.q:
                for cell in range(ncells):
                    v = np.zeros(ncells * self.d, dtype=np.int64)
                    v[cell * self.d + i] = qi
                    rows.append(v)
        return np.array(rows, dtype=np.int64).reshape(len(rows), ncells * self.d)

    def d1_rows(self) -> np.ndarray:
        """Row (x, j) = d(e_(x, j)) as a flat C^2 vector."""
        n, dd, t = self.n, self.d, self.mod.group.table
        D = np.zeros((n, dd, n, n, dd), dtype=np.int64)
        for x in range(n):
            for j in range(dd):
                D[x, j, x, :, j] += 1
                D[x, j, :, x, :] += self.A[:, :, j]
                gs, hs = np.nonzero(t == x)
                D[x, j, gs, hs, j] -= 1
        return D.reshape(n * dd, n * n * dd) % self.q

    def d2_block(self, a: int) -> np.ndarray:
        """Columns of d: C^2 -> C^3 at triples (a, *, *); rows index C^2."""
        n, dd, t, inv = self.n, self.d, self.mod.group.table, self.mod.group.inv
        D = np.zeros((n, n, dd, n, n, dd), dtype=np.int64)   # (x, y, j) -> (b, c, i)
        ar = np.arange(n)
        for j in range(dd):
            # + a.alpha(b, c): from cell (x, y) = (b, c)
            D[ar[:, None], ar[None, :], j, ar[:, None], ar[None, :], :] += self.A[a, :, j]
            # - alpha(ab, c): cell (ab, c)
            D[t[a][:, None], ar[None, :], j, ar[:, None], ar[None, :], j] -= 1
            # + alpha(a, bc): cell (a, bc)
            D[a, t[ar[:, None], ar[None, :]], j, ar[:, None], ar[None, :], j] += 1
            # - alpha(a, b): cell (a, b)
            D[a, ar[:, None], j, ar[:, None], ar[None, :], j] -= 1
        del inv
        return D.reshape(n * n * dd, n * n * dd) % self.q

    def cocycles(self) -> np.ndarray:
        """Generators of Z^2 (rows, flat local C^2 vectors)."""
        n, dd, p, k = self.n, self.d, self.p, self.k
        m = n * n * dd
        K = np.eye(m, dtype=np.int64)
        rel3 = self.rel_rows(n * n)
        for a in range(n):
            blk = self.d2_block(a)
            imgs = K @ blk % self.q
            if not imgs.any():
                continue
            T = zmod.kernel(imgs, p, k, rel3 if len(rel3) else None)
            K = T @ K % self.q
            ech = zmod.echelon(K, p, k)
            K = ech.rows
        return K

    def coboundary_gens(self, extra: np.ndarray | None = None) -> np.ndarray:
        n = self.n
        parts = [self.d1_rows(), self.rel_rows(n * n)]
        if extra is not None and len(extra):
            parts.append(np.asarray(extra, dtype=np.int64) % self.q)
        return np.vstack([x for x in parts if len(x)])

    def coboundary_solver(self) -> zmod.Solver:
        return zmod.Solver(self.coboundary_gens(), self.p, self.k)


@dataclass
class _LocalH2:
    loc: _LocalModule
    Z: np.ndarray            # cocycle generators
    B: np.ndarray            # coboundary generators (first n*d rows are d(e_(x,j)))
    exps: list               # exponents of the nontrivial cyclic factors
    gens: np.ndarray         # one cocycle per nontrivial factor
    V: np.ndarray
    keep: list
    zb_solver: zmod.Solver
    b_solver: zmod.Solver

    def coordinates(self, x: np.ndarray) -> np.ndarray | None:
        """Class coordinates of a flat local cocycle, or None if not a cocycle."""
        c = self.zb_solver.solve(x)
        if c is None:
            return None
        cz = c[: len(self.Z)]
        new = cz @ self.V % self.loc.q
        return np.array([new[i] % self.loc.p ** e for i, e in zip(self.keep, self.exps)], dtype=np.int64)


def _local_h2(loc: _LocalModule, extra_B: np.ndarray | None = None) -> _LocalH2:
    p, k, q = loc.p, loc.k, loc.q
    Z = loc.cocycles()
    B = loc.coboundary_gens(extra_B)
    s = len(Z)
    rel = zmod.kernel(Z, p, k, B) if s else np.zeros((0, 0), dtype=np.int64)
    sm = zmod.local_smith(rel, s, p, k) if s else zmod.LocalSmith([], np.zeros((0, 0)), np.zeros((0, 0)))
    keep = [i for i, e in enumerate(sm.exponents) if e > 0]
    exps = [sm.exponents[i] for i in keep]
    gens = (sm.Vinv[keep] @ Z % q) if keep else np.zeros((0, Z.shape[1] if s else 0), dtype=np.int64)
    zb = zmod.Solver(np.vstack([Z, B]) if s else B, p, k)
    return _LocalH2(loc, Z, B, exps, gens, sm.V, keep, zb, zmod.Solver(B, p, k))


# ---------------------------------------------------------------------------
# assembled cohomology groups

def _crt_weights(mod: AbelianModule, p: int, loc: _LocalModule) -> np.ndarray:
    """e_i = 1 mod q_i, 0 mod n_i/q_i for each local component."""
    w = []
    for i, qi in zip(loc.comps, loc.qs):
        n = mod.factors[i]
        rest = n // int(qi)
        # rest * t = 1 mod qi
        t = pow(rest, -1, int(qi)) if qi > 1 else 0
        w.append(rest * t % n)
    return np.array(w, dtype=np.int64)


def _embed(mod: AbelianModule, locs: dict, parts: dict, cells: int) -> np.ndarray:
    """Combine flat local vectors into global coords of shape (cells, r)."""
    out = np.zeros((cells, mod.rank), dtype=np.int64)
    for p, loc in locs.items():
        if p not in parts:
            continue
        x = np.asarray(parts[p], dtype=np.int64).reshape(cells, loc.d)
        w = _crt_weights(mod, p, loc)
        out[:, loc.comps] += x * w
    return out % mod.mods


def _combine_factors(pfactors: dict[int, list[int]]) -> list[list[tuple[int, int]]]:
    """Group prime-power factors into invariant factors.

    Returns, per invariant factor (ascending), the list of (p, slot) pairs
    contributing to it.
    """
    depth = max((len(v) for v in pfactors.values()), default=0)
    groups = []
    for j in range(depth):
        members = []
        for p, exps in pfactors.items():
            order = sorted(range(len(exps)), key=lambda i: -exps[i])
            if j < len(order):
                members.append((p, order[j]))
        groups.append(members)
    return groups[::-1]


class CohomologyGroup:
    """H^2 as invariant factors, one representative per class, and ``decompose``.

    Class index ``i`` has coordinates ``a_j`` (mod ``invariant_factors[j]``)
    in mixed radix, first factor fastest.  ``decompose(alpha)`` returns
    ``(index, lam)`` with ``alpha = rep[index] * d(lam)``; ``lam`` lives in
    ``witness_module`` (the module itself, or a larger mu_N' on the ladder)
    and for the ladder satisfies ``d(lam) = iota(alpha / rep[index])`` with
    iota the inclusion mu_N -> mu_N'.
    """

    def __init__(self, module: AbelianModule, locals_: dict, witness=None):
        self.module = module
        self.group = module.group
        self._loc = locals_                               # p -> _LocalH2
        self._witness = witness                           # p -> (fn coeffs -> local lam), module
        pf = {p: h.exps for p, h in locals_.items() if h.exps}
        slots = _combine_factors(pf)
        self._slots = slots
        self.invariant_factors = tuple(prod(p ** pf[p][i] for p, i in members) for members in slots)
        n = self.group.order
        # global generator cocycles per invariant factor
        locs = {p: h.loc for p, h in locals_.items()}
        self._gen = []
        for members in slots:
            parts = {}
            for p, i in members:
                parts[p] = locals_[p].gens[i]
            self._gen.append(_embed(module, locs, parts, n * n))
        self._locs = locs
        self.representatives = [self._normalize(self._rep_coords(i)) for i in range(self.order)]

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"CohomologyGroup({list(self.invariant_factors)})"

    def index_to_coords(self, index: int) -> list[int]:
        out = []
        for d in self.invariant_factors:
            out.append(index % d)
            index //= d
        return out

    def coords_to_index(self, a: Sequence[int]) -> int:
        idx, rad = 0, 1
        for x, d in zip(a, self.invariant_factors):
            idx += (int(x) % d) * rad
            rad *= d
        return idx

    def _rep_coords(self, index: int) -> np.ndarray:
        n, mod = self.group.order, self.module
        tot = np.zeros((n * n, mod.rank), dtype=np.int64)
        for a, g in zip(self.index_to_coords(index), self._gen):
            tot += a * g
        return tot % mod.mods

    def _normalize(self, c2: np.ndarray) -> np.ndarray:
        mod = self.module
        n = self.group.order
        c2 = c2.reshape(n, n, mod.rank)
        const = np.broadcast_to(c2[0, 0], (n, mod.rank))
        c2 = (c2 - mod.coboundary(const)) % mod.mods
        return mod.encode(c2)

    def decompose(self, alpha) -> tuple[int, np.ndarray]:
        mod = self.module
        n = self.group.order
        c = mod.decode(np.asarray(alpha)).reshape(n, n, mod.rank)
        if not mod.is_cocycle(c):
            raise ValueError("not a cocycle for this module")
        a_global = [0] * len(self.invariant_factors)
        local_coords = {}
        for p, h in self._loc.items():
            coords = h.coordinates(h.loc.project(c))
            if coords is None:
                raise ValueError("cocycle not in the span of computed cocycles")
            local_coords[p] = coords
        for j, members in enumerate(self._slots):
            # CRT over primes of this invariant factor
            d = self.invariant_factors[j]
            val = 0
            for p, i in members:
                pe = self._loc[p].loc.p ** self._loc[p].exps[i]
                rest = d // pe
                val += int(local_coords[p][i]) * rest * pow(rest, -1, pe)
            a_global[j] = val % d
        index = self.coords_to_index(a_global)
        rep = mod.decode(self.representatives[index]).reshape(n, n, mod.rank)
        diff = (c - rep) % mod.mods
        lam = self._witness_for(diff)
        return index, lam

    def _witness_for(self, diff: np.ndarray) -> np.ndarray:
        n = self.group.order
        if self._witness is not None:
            return self._witness(diff)
        mod = self.module
        parts = {}
        for p, h in self._loc.items():
            coef = h.b_solver.solve(h.loc.project(diff))
            if coef is None:
                raise AssertionError("difference from representative is not a coboundary")
            parts[p] = coef[: n * h.loc.d]
        lam = _embed(mod, self._locs, parts, n)
        return mod.encode(lam)

    def witness_module(self) -> AbelianModule:
        return getattr(self, "_witness_module", self.module)


def _check_size(group: FiniteGroup) -> None:
    if group.order > MAX_GROUP_ORDER:
        raise GuardExceeded(f"|G| = {group.order} exceeds cohomology guard {MAX_GROUP_ORDER}")


def second_cohomology(group: FiniteGroup, module: AbelianModule) -> CohomologyGroup:
    _check_size(group)
    if module.group is not group and module.group != group:
        raise ValueError("module is over a different group")
    locs = {p: _local_h2(module.local(p)) for p in module.primes}
    return CohomologyGroup(module, locs)


def is_coboundary(group: FiniteGroup, module: AbelianModule, cocycle) -> np.ndarray | None:
    """lam (unit indices) with d(lam) = cocycle, or None."""
    n = group.order
    c = module.decode(np.asarray(cocycle)).reshape(n, n, module.rank)
    if not module.is_cocycle(c):
        raise ValueError("not a cocycle for this module")
    parts = {}
    locs = {}
    for p, solver in module._coboundary_solvers.items():
        loc = module.local(p)
        locs[p] = loc
        coef = solver.solve(loc.project(c))
        if coef is None:
            return None
        parts[p] = coef[: n * loc.d]
    lam = _embed(module, locs, parts, n)
    return module.encode(lam)


# ---------------------------------------------------------------------------
# the divisible ladder

@dataclass
class LadderResult:
    rungs: list = field(default_factory=list)        # (N, raw |H^2(mu_N)|, stabilized count)


def _lift_cocycles_extra(group: FiniteGroup, chi, p: int, a: int, mp: int) -> np.ndarray:
    """Rows d(lift k)/mp mod p^a for k generating Z^1(G, Z/mp).

    These are the cocycles with values in mu_N that become coboundaries of
    mu_{N'} valued functions, beyond the mu_N coboundaries.
    """
    n = group.order
    if mp == 1:
        return np.zeros((0, n * n), dtype=np.int64), np.zeros((0, n), dtype=np.int64)
    mmod = cyclic_module(group, mp, chi)
    loc = mmod.local(p)
    d1 = loc.d1_rows()
    ks = zmod.kernel(d1, p, loc.k)          # rows: k in (Z/mp)^n with d k = 0
    sign = np.array([(-1) ** int(c) for c in chi], dtype=np.int64)
    t = group.table
    rows = []
    for kv in ks:
        kv = kv % mp
        dk = kv[:, None] + sign[:, None] * kv[None, :] - kv[t]     # exact integers
        assert not (dk % mp).any()
        rows.append((dk // mp).reshape(-1) % p ** a)
    return np.array(rows, dtype=np.int64).reshape(len(rows), n * n), ks % mp


def _ladder_rung(group: FiniteGroup, N: int, chi, Nnext: int):
    module = cyclic_module(group, N, chi)
    bigger = cyclic_module(group, Nnext, chi)
    m = Nnext // N
    n = group.order
    locs, raw_locs, liftdata = {}, {}, {}
    for p in module.primes:
        a, ab = _vp(N, p), _vp(Nnext, p)
        mp = p ** (ab - a)
        extra, ks = _lift_cocycles_extra(group, chi, p, a, mp)
        loc = module.local(p)
        locs[p] = _local_h2(loc, extra)
        raw_locs[p] = _local_h2(loc)
        liftdata[p] = (mp, ks)

    def witness(diff: np.ndarray) -> np.ndarray:
        # lam in Z/N' with d(lam) = m * diff mod N'
        lam = np.zeros(n, dtype=np.int64)
        for p, h in locs.items():
            coef = h.b_solver.solve(h.loc.project(diff))
            if coef is None:
                raise AssertionError("difference is not a ladder coboundary")
            mp, ks = liftdata[p]
            ab = _vp(Nnext, p)
            pab = p ** ab
            nd1 = n                         # d1 rows first; no relation rows for cyclic modules
            lam_p = mp * coef[:nd1]
            for t_, kv in enumerate(ks):
                lam_p = lam_p + int(coef[nd1 + t_]) * kv
            unit = (m // mp) % pab
            lam_p = lam_p * unit % pab
            rest = Nnext // pab
            lam += lam_p * rest * pow(rest, -1, pab)
        return lam % Nnext

    grp = CohomologyGroup(module, locs, witness)
    grp._witness_module = bigger
    raw = prod(p ** e for h in raw_locs.values() for e in h.exps)
    return grp, raw


def conjugation_character(group: FiniteGroup, kernel: Sequence[int]) -> tuple[int, ...]:
    ker = set(int(x) for x in kernel)
    if len(ker) * 2 != group.order:
        raise ValueError("kernel must have index 2")
    chi = tuple(0 if x in ker else 1 for x in range(group.order))
    from .groups import make_cyclic
    if not group.is_homomorphism(chi, make_cyclic(2)):
        raise ValueError("complement of kernel is not a coset of an index-2 subgroup")
    return chi


def divisible_cohomology(group: FiniteGroup, n_start: int | None = None, kernel: Sequence[int] | None = None,
                         depth: int = 3, report: LadderResult | None = None) -> CohomologyGroup:
    """H^2(G, C*) (trivial action) or H^2_eta(G, C*) with eta conjugation off ``kernel``.

    Rung N computes H^2(G, mu_N) and identifies classes that become
    coboundaries of functions with values in mu_N', N' = 2 N |G|.  The ladder
    stops when two consecutive rungs give the same class count and returns
    the earlier of the two.
    """
    _check_size(group)
    chi = conjugation_character(group, kernel) if kernel is not None else (0,) * group.order
    N = n_start or group.order
    counts, prev = [], None
    for _ in range(depth):
        Nn = 2 * N * group.order
        grp, raw = _ladder_rung(group, N, chi, Nn)
        counts.append(grp.order)
        if report is not None:
            report.rungs.append((N, raw, grp.order))
        if len(counts) > 1 and counts[-1] == counts[-2]:
            # the earlier rung already surjects; keep its smaller module
            return prev
        prev = grp
        N = Nn
    raise LadderNotStable(f"class counts {counts} did not stabilize within {depth} rungs")


def merge_conjugate_classes(h2: CohomologyGroup, conj=None) -> list[list[int]]:
    """Orbits of the involution [alpha] -> [conj(alpha)] on class indices.

    ``conj`` maps unit indices to unit indices (an array); by default it is
    negation on a cyclic module, i.e. complex conjugation on mu_N.
    """
    mod = h2.module
    if conj is None:
        conj = mod.encode((-mod.coords) % mod.mods)
    conj = np.asarray(conj)
    image = []
    for rep in h2.representatives:
        j, _ = h2.decompose(conj[rep])
        image.append(j)
    for i, j in enumerate(image):
        if image[j] != i:
            raise ValueError("conjugation does not induce an involution on classes")
    sets, seen = [], set()
    for i, j in enumerate(image):
        if i in seen:
            continue
        s = sorted({i, j})
        seen.update(s)
        sets.append(s)
    return sets
