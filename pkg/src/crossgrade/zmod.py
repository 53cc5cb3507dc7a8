"""Row modules over Z/p^k.

Every subgroup of a finite abelian p-group handled here is a submodule of
(Z/q)^n with q = p^k.  Elimination picks, in each column, the entry of least
p-valuation (it divides all others up to a unit), and after using a row with
pivot p^v it feeds p^(k-v) times that row back into the pool.  The resulting
echelon form has the Howell property, so reduction decides membership and
the rows vanishing on a leading block span the whole intersection of the
module with that block's kernel.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def valuation(x: np.ndarray, p: int, k: int) -> np.ndarray:
    """p-adic valuation of entries of x mod p^k (k for zero entries)."""
    x = np.asarray(x) % p ** k
    v = np.zeros(x.shape, dtype=np.int64)
    cur = x.copy()
    for _ in range(k):
        div = (cur % p == 0) & (v < k)
        if not div.any():
            break
        v += div
        cur = np.where(div, cur // p, cur)
    v[x == 0] = k
    return v


@dataclass
class Echelon:
    """Echelon form of a row module over Z/p^k on columns ``[0, stop)``.

    ``pivots[i] = (col, v)`` with ``rows[i, col] = p^v``; ``rest`` holds rows
    of the module that vanish on the leading block.
    """
    p: int
    k: int
    stop: int
    pivots: list
    rows: np.ndarray
    rest: np.ndarray

    @property
    def q(self) -> int:
        return self.p ** self.k

    def reduce(self, x: np.ndarray) -> tuple[np.ndarray, bool]:
        """Reduce x by the pivot rows; returns (remainder, leading block cleared)."""
        q, p = self.q, self.p
        x = np.asarray(x, dtype=np.int64) % q
        if self.rows.shape[1] != x.shape[0]:
            raise ValueError("vector length does not match the module")
        ok = True
        for (c, v), row in zip(self.pivots, self.rows):
            t = int(x[c])
            if t == 0:
                continue
            pv = p ** v
            if t % pv:
                ok = False
                break
            x = (x - (t // pv) * row) % q
        return x, ok and not x[: self.stop].any()


def echelon(M: np.ndarray, p: int, k: int, stop: int | None = None) -> Echelon:
    q = p ** k
    active = np.asarray(M, dtype=np.int64) % q
    if active.ndim != 2:
        raise ValueError("matrix expected")
    ncols = active.shape[1]
    stop = ncols if stop is None else stop
    pivots, prow = [], []
    active = active[active.any(axis=1)]
    for c in range(stop):
        if active.shape[0] == 0:
            break
        col = active[:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        vals = valuation(col[nz], p, k)
        j = int(np.argmin(vals))
        i, v = int(nz[j]), int(vals[j])
        pv = p ** v
        unit = int(col[i]) // pv
        row = active[i] * pow(unit, -1, q) % q
        others = np.delete(active, i, axis=0)
        if others.shape[0]:
            f = others[:, c] // pv
            others = (others - f[:, None] * row[None, :]) % q
        extra = row * p ** (k - v) % q
        if extra.any():
            others = np.vstack([others, extra[None, :]])
        active = others[others.any(axis=1)] if others.shape[0] else others
        pivots.append((c, v))
        prow.append(row)
    rows = np.array(prow, dtype=np.int64).reshape(len(prow), ncols)
    rest = active[active.any(axis=1)] if active.shape[0] else active.reshape(0, ncols)
    return Echelon(p, k, stop, pivots, rows, rest)


def kernel(images: np.ndarray, p: int, k: int, target_rel: np.ndarray | None = None) -> np.ndarray:
    """Generators of {c in (Z/q)^m : sum c_j images[j] in span(target_rel)}."""
    images = np.asarray(images, dtype=np.int64)
    m, n = images.shape
    top = np.hstack([images, np.eye(m, dtype=np.int64)])
    if target_rel is not None and len(target_rel):
        rel = np.asarray(target_rel, dtype=np.int64)
        top = np.vstack([top, np.hstack([rel, np.zeros((rel.shape[0], m), dtype=np.int64)])])
    ech = echelon(top, p, k, stop=n)
    return ech.rest[:, n:] % p ** k


class Solver:
    """Express vectors as Z/q-combinations of fixed generators."""

    def __init__(self, gens: np.ndarray, p: int, k: int):
        gens = np.asarray(gens, dtype=np.int64)
        self.ngens, self.n = gens.shape
        self.p, self.k, self.q = p, k, p ** k
        aug = np.hstack([gens % self.q, np.eye(self.ngens, dtype=np.int64)])
        self.ech = echelon(aug, p, k, stop=self.n)

    def solve(self, x: np.ndarray) -> np.ndarray | None:
        """Coefficients c with c @ gens == x (mod q), or None."""
        x = np.asarray(x, dtype=np.int64) % self.q
        aug = np.concatenate([x, np.zeros(self.ngens, dtype=np.int64)])
        rem, ok = self.ech.reduce(aug)
        if not ok:
            return None
        return (-rem[self.n:]) % self.q

    def contains(self, x: np.ndarray) -> bool:
        return self.solve(x) is not None


@dataclass
class LocalSmith:
    """Z^s / (rowspace(R) + q Z^s) = direct sum of Z/p^e_i.

    ``V`` maps old coordinates to new ones (c -> c V); row i of ``Vinv`` is
    the old-coordinate vector of the i-th new generator.
    """
    exponents: list
    V: np.ndarray
    Vinv: np.ndarray


def local_smith(R: np.ndarray, s: int, p: int, k: int) -> LocalSmith:
    q = p ** k
    R = (np.asarray(R, dtype=np.int64) % q).reshape(-1, s).copy()
    V = np.eye(s, dtype=np.int64)
    Vinv = np.eye(s, dtype=np.int64)
    exps = [k] * s
    r = 0
    nrows = R.shape[0]
    for d in range(s):
        if r >= nrows:
            break
        sub = R[r:, d:]
        if not sub.any():
            break
        vals = valuation(sub, p, k)
        i, j = np.unravel_index(int(np.argmin(vals)), vals.shape)
        v = int(vals[i, j])
        i, j = i + r, j + d
        R[[r, i]] = R[[i, r]]
        if j != d:
            R[:, [d, j]] = R[:, [j, d]]
            V[:, [d, j]] = V[:, [j, d]]
            Vinv[[d, j]] = Vinv[[j, d]]
        pv = p ** v
        unit = int(R[r, d]) // pv
        R[r] = R[r] * pow(unit, -1, q) % q
        # clear column d below the pivot (row ops)
        f = R[r + 1:, d] // pv
        R[r + 1:] = (R[r + 1:] - f[:, None] * R[r][None, :]) % q
        # clear row r right of the pivot (column ops)
        for jj in range(d + 1, s):
            t = int(R[r, jj])
            if t:
                g = t // pv
                R[:, jj] = (R[:, jj] - g * R[:, d]) % q
                V[:, jj] = (V[:, jj] - g * V[:, d]) % q
                Vinv[d] = (Vinv[d] + g * Vinv[jj]) % q
        exps[d] = v
        r += 1
    return LocalSmith(exps, V % q, Vinv % q)
