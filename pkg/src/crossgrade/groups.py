"""Finite groups given by multiplication tables.

Elements are the integers ``0..order-1`` and element ``0`` is always the
identity.  Automorphisms are stored as tuples ``perm`` with ``perm[x]`` the
image of ``x``; they are hashable and sort lexicographically.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Sequence

import numpy as np

MAX_AUT_ORDER = 64


class GuardExceeded(RuntimeError):
    """A size guard on an exhaustive computation was hit."""


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=np.int64)
    a.setflags(write=False)
    return a


class FiniteGroup:
    """A finite group as a Cayley table, ``table[a, b] = a*b``."""

    def __init__(self, table, labels: Sequence[str] | None = None, *, check: bool = True):
        self.table = _frozen(table)
        n = self.table.shape[0]
        if self.table.ndim != 2 or self.table.shape != (n, n) or n == 0:
            raise ValueError("table must be a non-empty square array")
        self.order = n
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        if len(self.labels) != n:
            raise ValueError("one label per element required")
        if check:
            self.validate()
        inv = np.empty(n, dtype=np.int64)
        rows, cols = np.nonzero(self.table == 0)
        inv[rows] = cols
        self.inv = _frozen(inv)

    def validate(self) -> None:
        t = self.table
        n = self.order
        ar = np.arange(n)
        if t.min() < 0 or t.max() >= n:
            raise ValueError("table entries out of range")
        if not (np.array_equal(t[0], ar) and np.array_equal(t[:, 0], ar)):
            raise ValueError("element 0 is not the identity")
        srt = np.sort(t, axis=1)
        if not (srt == ar).all() or not (np.sort(t, axis=0) == ar[:, None]).all():
            raise ValueError("table is not a Latin square")
        # (ab)c == a(bc) for all a, b, c
        if not np.array_equal(t[t, :], t[:, t]):
            raise ValueError("table is not associative")

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.table.tobytes())

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def power(self, a: int, k: int) -> int:
        x = 0
        if k < 0:
            a, k = int(self.inv[a]), -k
        for _ in range(k):
            x = int(self.table[x, a])
        return x

    def element_order(self, a: int) -> int:
        x, k = a, 1
        while x != 0:
            x = int(self.table[x, a])
            k += 1
        return k

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def center(self) -> list[int]:
        t = self.table
        return [a for a in range(self.order) if np.array_equal(t[a], t[:, a])]

    def generated(self, gens: Sequence[int]) -> list[int]:
        """Sorted subgroup generated by ``gens``."""
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = int(self.table[x, s])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def generating_set(self) -> list[int]:
        """A small generating set, chosen greedily by decreasing element order."""
        by_order = sorted(range(1, self.order), key=lambda a: (-self.element_order(a), a))
        gens: list[int] = []
        span = {0}
        for a in by_order:
            if a not in span:
                gens.append(a)
                span = set(self.generated(gens))
                if len(span) == self.order:
                    break
        return gens

    def is_homomorphism(self, images: Sequence[int], target: "FiniteGroup") -> bool:
        img = np.asarray(images)
        return bool(np.array_equal(img[self.table], target.table[img[:, None], img[None, :]]))


def make_cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    ar = np.arange(n)
    return FiniteGroup((ar[:, None] + ar[None, :]) % n, [f"g^{i}" if i else "e" for i in range(n)],
                       check=False)


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    """Componentwise product; ``(a, b)`` has index ``a*|g2| + b``."""
    n1, n2 = g1.order, g2.order
    a = np.arange(n1 * n2)
    i, j = a // n2, a % n2
    table = g1.table[i[:, None], i[None, :]] * n2 + g2.table[j[:, None], j[None, :]]
    labels = [f"({x},{y})" for x in g1.labels for y in g2.labels]
    return FiniteGroup(table, labels, check=False)


def _cycle_label(p: tuple[int, ...]) -> str:
    seen, parts = set(), []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            seen.add(s)
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = p[x]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "e"


def make_symmetric(n: int = 3) -> FiniteGroup:
    """S_n on points 1..n; elements in ``itertools.permutations`` order of
    images of (0..n-1), product ``(p*q)(x) = p(q(x))``.

    For n = 3 the order is e, (23), (12), (123), (132), (13).
    """
    if n < 1 or n > 5:
        raise ValueError("symmetric group supported for 1 <= n <= 5")
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    return FiniteGroup(table, [_cycle_label(p) for p in perms])


def make_symmetric3() -> FiniteGroup:
    return make_symmetric(3)


def from_table(table, labels=None) -> FiniteGroup:
    return FiniteGroup(table, labels)


def automorphism_group(g: FiniteGroup) -> list[tuple[int, ...]]:
    """All automorphisms of ``g`` sorted lexicographically (identity first).

    Images of a greedy generating set are chosen by backtracking; each partial
    assignment is extended to the subgroup it generates and pruned as soon as
    it stops being a well-defined injective homomorphism.
    """
    if g.order > MAX_AUT_ORDER:
        raise GuardExceeded(f"|G| = {g.order} exceeds automorphism guard {MAX_AUT_ORDER}")
    gens = g.generating_set()
    if not gens:
        return [(0,)]
    t = g.table
    orders = [g.element_order(a) for a in range(g.order)]
    candidates = [[b for b in range(1, g.order) if orders[b] == orders[s]] for s in gens]
    found: list[tuple[int, ...]] = []

    def extend(phi: dict[int, int], k: int) -> dict[int, int] | None:
        # close phi over right multiplication by gens[:k]
        phi = dict(phi)
        frontier = list(phi)
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens[:k]:
                    y = int(t[x, s])
                    img = int(t[phi[x], phi[s]])
                    if y in phi:
                        if phi[y] != img:
                            return None
                    else:
                        phi[y] = img
                        nxt.append(y)
            frontier = nxt
        if len(set(phi.values())) != len(phi):
            return None
        return phi

    def search(k: int, phi: dict[int, int]) -> None:
        if k == len(gens):
            if len(phi) == g.order:
                found.append(tuple(phi[x] for x in range(g.order)))
            return
        # gens[k] lies outside the subgroup generated by gens[:k]
        for b in candidates[k]:
            trial = dict(phi)
            trial[gens[k]] = b
            ext = extend(trial, k + 1)
            if ext is not None:
                search(k + 1, ext)

    search(0, {0: 0})
    return sorted(set(found))


def compose_perm(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """``p o q``: first q, then p."""
    return tuple(p[x] for x in q)


def inverse_perm(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def homomorphisms_to_c2(g: FiniteGroup) -> list[tuple[int, ...]]:
    """All homomorphisms G -> C2 as 0/1 tuples, trivial one first."""
    gens = g.generating_set()
    c2 = make_cyclic(2)
    out = []
    for bits in product((0, 1), repeat=len(gens)):
        phi = {0: 0}
        frontier = [0]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for s, b in zip(gens, bits):
                    y = int(g.table[x, s])
                    img = (phi[x] + b) % 2
                    if y in phi:
                        if phi[y] != img:
                            ok = False
                            break
                    else:
                        phi[y] = img
                        nxt.append(y)
                if not ok:
                    break
            frontier = nxt
        if ok:
            hom = tuple(phi[x] for x in range(g.order))
            if g.is_homomorphism(hom, c2):
                out.append(hom)
    return sorted(set(out))


def index_two_subgroups(g: FiniteGroup) -> list[list[int]]:
    """Kernels of the surjections G -> C2, as sorted element lists."""
    kernels = [sorted(x for x in range(g.order) if chi[x] == 0)
               for chi in homomorphisms_to_c2(g) if any(chi)]
    return sorted(kernels)
