"""Finite coefficient models (U, A, inner).

``U`` is a finite group of units, ``A`` an abstract finite group of
coefficient automorphisms acting on ``U`` through ``act[a, u]``, and
``inner[u]`` is the element of ``A`` acting as ``x -> u x u^-1``.  The action
of ``A`` need not be faithful on ``U``: in the Galois model ``U`` is trivial
while ``A`` is a copy of S3.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

import numpy as np

from .groups import FiniteGroup, compose_perm, make_cyclic


@dataclass(eq=False)
class CoefficientSystem:
    units: FiniteGroup
    autos: FiniteGroup          # table[a, b] = a o b
    act: np.ndarray             # act[a, u] = a(u)
    inner: np.ndarray           # inner[u] = index of iota_u in autos
    commutative: bool
    name: str = "custom"
    auto_labels: tuple[str, ...] = field(default=())
    perms: list | None = None   # Galois model: the permutations behind autos

    def __post_init__(self):
        self.act = np.array(self.act, dtype=np.int64)
        self.act.setflags(write=False)
        self.inner = np.array(self.inner, dtype=np.int64)
        self.inner.setflags(write=False)
        if not self.auto_labels:
            self.auto_labels = tuple(f"a{i}" if i else "id" for i in range(self.autos.order))
        self.validate()

    @property
    def inner_subgroup(self) -> frozenset[int]:
        return frozenset(int(a) for a in self.inner)

    @property
    def n_units(self) -> int:
        return self.units.order

    @property
    def n_autos(self) -> int:
        return self.autos.order

    def compose(self, a: int, b: int) -> int:
        return int(self.autos.table[a, b])

    def auto_inv(self, a: int) -> int:
        return int(self.autos.inv[a])

    def is_inner(self, a: int) -> bool:
        return int(a) in self.inner_subgroup

    def validate(self) -> None:
        U, A = self.units, self.autos
        nu, na = U.order, A.order
        if self.act.shape != (na, nu) or self.inner.shape != (nu,):
            raise ValueError("act/inner have wrong shape")
        ut = U.table
        for a in range(na):
            row = self.act[a]
            if sorted(row.tolist()) != list(range(nu)):
                raise ValueError(f"automorphism {a} is not a bijection of U")
            if not np.array_equal(row[ut], ut[row[:, None], row[None, :]]):
                raise ValueError(f"automorphism {a} is not multiplicative on U")
        if not np.array_equal(self.act[0], np.arange(nu)):
            raise ValueError("autos index 0 must act as the identity")
        # act is an action: (a o b)(u) = a(b(u))
        if not np.array_equal(self.act[A.table], self.act[np.arange(na)[:, None, None], self.act[None, :, :]]):
            raise ValueError("act is not compatible with composition in autos")
        inn = self.inner
        if not np.array_equal(inn[ut], A.table[inn[:, None], inn[None, :]]):
            raise ValueError("inner is not a homomorphism U -> A")
        conj = ut[ut, U.inv[:, None]]          # conj[u, x] = u x u^-1
        if not np.array_equal(self.act[inn], conj):
            raise ValueError("inner[u] does not act as conjugation by u")
        for a in range(na):
            ainv = int(A.inv[a])
            lhs = A.table[A.table[a, inn], ainv]
            if not np.array_equal(lhs, inn[self.act[a]]):
                raise ValueError("a o inner(u) o a^-1 != inner(a(u))")
        if self.commutative and (not U.is_abelian() or set(inn.tolist()) != {0}):
            raise ValueError("commutative system needs abelian U and trivial inner")


def _perm_group(perms: Sequence[Sequence[int]]) -> tuple[FiniteGroup, list[tuple[int, ...]]]:
    """Abstract group of a closed list of permutations, identity moved to index 0."""
    perms = [tuple(int(x) for x in p) for p in perms]
    if not perms:
        raise ValueError("empty permutation list")
    m = len(perms[0])
    ident = tuple(range(m))
    if any(sorted(p) != list(ident) for p in perms):
        raise ValueError("not a list of permutations of a common point set")
    if len(set(perms)) != len(perms):
        raise ValueError("repeated permutation")
    if ident not in perms:
        raise ValueError("permutations do not include the identity")
    perms = [ident] + [p for p in perms if p != ident]
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for p in perms:
        row = []
        for q in perms:
            r = compose_perm(p, q)
            if r not in index:
                raise ValueError("permutations are not closed under composition")
            row.append(index[r])
        table.append(row)
    return FiniteGroup(table), perms


def sign_units() -> CoefficientSystem:
    """{+1, -1} with only the identity automorphism (real coefficients)."""
    U = FiniteGroup([[0, 1], [1, 0]], ["1", "-1"])
    return CoefficientSystem(U, FiniteGroup([[0]]), [[0, 1]], [0, 0], True, name="sign")


def roots_of_unity(n: int, with_conjugation: bool = False) -> CoefficientSystem:
    """mu_n as exponents of zeta = exp(2 pi i/n); optional complex conjugation.

    With conjugation, A = {id, conj} even for n <= 2 where conj fixes mu_n
    pointwise: conj is still the non-identity element of Aut_R(C).
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    labels = {4: ("1", "i", "-1", "-i"), 2: ("1", "-1")}.get(n) or ["1"] + [f"z{n}^{k}" for k in range(1, n)]
    U = FiniteGroup(make_cyclic(n).table, labels, check=False)
    ident = np.arange(n)
    if with_conjugation:
        A = make_cyclic(2)
        act = [ident, (-ident) % n]
        return CoefficientSystem(U, A, act, np.zeros(n, dtype=int), True,
                                 name=f"mu{n}+conj", auto_labels=("id", "conj"))
    return CoefficientSystem(U, FiniteGroup([[0]]), [ident], np.zeros(n, dtype=int), True,
                             name=f"mu{n}")


# Q8 element order: 1, -1, i, -i, j, -j, k, -k
_Q8_LABELS = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")


def _q8_table() -> np.ndarray:
    # unit quaternion basis products (sign, basis): basis 0=1,1=i,2=j,3=k
    basis = {(0, b): (1, b) for b in range(4)}
    basis.update({(b, 0): (1, b) for b in range(4)})
    basis.update({(1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
                  (1, 2): (1, 3), (2, 1): (-1, 3), (2, 3): (1, 1), (3, 2): (-1, 1),
                  (3, 1): (1, 2), (1, 3): (-1, 2)})

    def split(x):
        return (1 if x % 2 == 0 else -1), x // 2

    t = np.zeros((8, 8), dtype=int)
    for x, y in product(range(8), repeat=2):
        sx, bx = split(x)
        sy, by = split(y)
        s, b = basis[bx, by]
        s *= sx * sy
        t[x, y] = 2 * b + (0 if s == 1 else 1)
    return t


def quaternion_units() -> CoefficientSystem:
    """Q8 inside H*, with A = Inn(Q8) = {id, iota_i, iota_j, iota_k}."""
    U = FiniteGroup(_q8_table(), _Q8_LABELS)
    conj = U.table[U.table, U.inv[:, None]]
    reps = [0, 2, 4, 6]
    perms = [tuple(conj[u].tolist()) for u in reps]
    A, perms = _perm_group(perms)
    index = {p: i for i, p in enumerate(perms)}
    inner = [index[tuple(conj[u].tolist())] for u in range(8)]
    return CoefficientSystem(U, A, np.array(perms), inner, False, name="quaternion",
                             auto_labels=("id", "iota_i", "iota_j", "iota_k"))


def galois_system(perms: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> CoefficientSystem:
    """Trivial units with an abstract Galois group given by permutations.

    ``perms`` must form a group; the identity is moved to index 0 and the
    remaining permutations keep their given order (and labels).
    """
    perms = [tuple(int(x) for x in p) for p in perms]
    if labels is not None and len(labels) != len(perms):
        raise ValueError("one label per permutation")
    A, ordered = _perm_group(perms)
    if labels is not None:
        names = dict(zip(perms, labels))
        auto_labels = tuple(names[p] for p in ordered)
    else:
        auto_labels = ()
    U = FiniteGroup([[0]], ["1"])
    return CoefficientSystem(U, A, np.zeros((A.order, 1), dtype=int), [0], True,
                             name="galois", auto_labels=auto_labels, perms=ordered)


# Gal(Q(omega, 2^(1/3))/Q) on the roots (c, omega c, omega^2 c) of x^3 - 2.
# eta1, eta2, eta3 are the transpositions; eta3 eta1 eta3 = eta2.
S3_GALOIS_PERMS = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)]
S3_GALOIS_LABELS = ["id", "eta1", "eta2", "eta3", "rho", "rho2"]


def galois_s3() -> CoefficientSystem:
    return galois_system(S3_GALOIS_PERMS, S3_GALOIS_LABELS)


def custom_system(unit_table, autos: Sequence[Sequence[int]], inner: Sequence[int] | None = None,
                  commutative: bool | None = None, unit_labels=None) -> CoefficientSystem:
    """System with faithful automorphisms given as permutations of U.

    ``inner[u]`` indexes into the reordered ``autos`` (identity first); when
    omitted it is computed from the conjugation action, which then must be a
    member of ``autos``.
    """
    U = FiniteGroup(unit_table, unit_labels)
    A, perms = _perm_group(autos)
    index = {p: i for i, p in enumerate(perms)}
    conj = U.table[U.table, U.inv[:, None]]
    if inner is None:
        try:
            inner = [index[tuple(conj[u].tolist())] for u in range(U.order)]
        except KeyError as e:
            raise ValueError("inner automorphisms missing from autos") from e
    if commutative is None:
        commutative = U.is_abelian()
    return CoefficientSystem(U, A, np.array(perms), inner, commutative)


def inversion_system(units: FiniteGroup) -> CoefficientSystem:
    """Abelian U with A = {id, u -> u^-1} (or {id} when inversion is trivial)."""
    if not units.is_abelian():
        raise ValueError("inversion is an automorphism only for abelian U")
    ident = tuple(range(units.order))
    inv = tuple(int(x) for x in units.inv)
    autos = [ident] if inv == ident else [ident, inv]
    return CoefficientSystem(units, FiniteGroup([[0]]) if len(autos) == 1 else make_cyclic(2),
                             np.array(autos), np.zeros(units.order, dtype=int), True,
                             name=f"inv{units.order}",
                             auto_labels=("id",) if len(autos) == 1 else ("id", "inv"))
