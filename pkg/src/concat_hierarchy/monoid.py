"""Finite monoids given by multiplication tables, and their Green relations.

Elements are integers ``0..n-1`` with ``0`` the identity. All relation
matrices use the convention ``rel[s, t] == True`` iff ``s rel t``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np


def _closure(adj: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a boolean adjacency matrix."""
    n = adj.shape[0]
    reach = adj.astype(bool) | np.eye(n, dtype=bool)
    while True:
        m = reach.astype(np.float32)
        nxt = (m @ m) > 0
        if np.array_equal(nxt, reach):
            return reach
        reach = nxt


@dataclass(frozen=True, eq=False)
class FiniteMonoid:
    table: np.ndarray
    generators: tuple[int, ...] | None = None
    _omega: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        table = np.ascontiguousarray(self.table, dtype=np.int32)
        table.setflags(write=False)
        object.__setattr__(self, "table", table)
        n = table.shape[0]
        if table.ndim != 2 or table.shape != (n, n) or n == 0:
            raise ValueError("multiplication table must be a nonempty square array")
        if table.min() < 0 or table.max() >= n:
            raise ValueError("table entries out of range")
        ids = np.arange(n)
        if not (np.array_equal(table[0], ids) and np.array_equal(table[:, 0], ids)):
            raise ValueError("element 0 must be the identity")
        object.__setattr__(self, "_omega", _omega_powers(table))

    @property
    def size(self) -> int:
        return self.table.shape[0]

    @property
    def identity(self) -> int:
        return 0

    def mul(self, *elements: int) -> int:
        acc = 0
        for x in elements:
            acc = int(self.table[acc, x])
        return acc

    def power(self, s: int, k: int) -> int:
        acc = 0
        for _ in range(k):
            acc = int(self.table[acc, s])
        return acc

    @cached_property
    def idempotent_mask(self) -> np.ndarray:
        ids = np.arange(self.size)
        return self.table[ids, ids] == ids

    @cached_property
    def idempotents(self) -> np.ndarray:
        return np.flatnonzero(self.idempotent_mask)

    @property
    def omega(self) -> np.ndarray:
        """``omega[s]`` is the idempotent power of ``s``."""
        return self._omega

    @cached_property
    def omega_plus(self) -> np.ndarray:
        return self.table[self._omega, np.arange(self.size)]

    @classmethod
    def trivial(cls) -> FiniteMonoid:
        return cls(np.zeros((1, 1), dtype=np.int32))


def _omega_powers(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    ids = np.arange(n)
    power = ids.copy()
    result = np.full(n, -1, dtype=np.int32)
    for _ in range(n + 1):
        idem = (table[power, power] == power) & (result < 0)
        result[idem] = power[idem]
        if (result >= 0).all():
            break
        power = table[power, ids]
    assert (result >= 0).all()
    return result


def check_associative(m: FiniteMonoid) -> bool:
    t = m.table
    lhs = t[t, :]  # (s u) v
    rhs = t[np.arange(m.size)[:, None, None], t[None, :, :]]  # s (u v)
    return bool(np.array_equal(lhs, rhs))


def omega_power(m: FiniteMonoid, s: int) -> int:
    return int(m.omega[s])


def is_aperiodic(m: FiniteMonoid) -> bool:
    return bool(np.array_equal(m.omega_plus, m.omega))


# ---------------------------------------------------------------------------
# Green relations


def _classes(eq: np.ndarray) -> tuple[tuple[int, ...], ...]:
    n = eq.shape[0]
    seen = np.zeros(n, dtype=bool)
    out = []
    for s in range(n):
        if not seen[s]:
            members = np.flatnonzero(eq[s])
            seen[members] = True
            out.append(tuple(int(x) for x in members))
    return tuple(out)


@dataclass(frozen=True, eq=False)
class GreenData:
    le_j: np.ndarray
    le_l: np.ndarray
    le_r: np.ndarray
    le_h: np.ndarray

    @cached_property
    def j(self) -> np.ndarray:
        return self.le_j & self.le_j.T

    @cached_property
    def l(self) -> np.ndarray:  # noqa: E743
        return self.le_l & self.le_l.T

    @cached_property
    def r(self) -> np.ndarray:
        return self.le_r & self.le_r.T

    @cached_property
    def h(self) -> np.ndarray:
        return self.le_h & self.le_h.T

    @cached_property
    def j_classes(self):
        return _classes(self.j)

    @cached_property
    def l_classes(self):
        return _classes(self.l)

    @cached_property
    def r_classes(self):
        return _classes(self.r)

    @cached_property
    def h_classes(self):
        return _classes(self.h)

    @cached_property
    def j_index(self) -> np.ndarray:
        idx = np.empty(self.le_j.shape[0], dtype=np.int32)
        for k, cls in enumerate(self.j_classes):
            idx[list(cls)] = k
        return idx

    def same(self, other: GreenData) -> bool:
        return all(
            np.array_equal(getattr(self, k), getattr(other, k))
            for k in ("le_j", "le_l", "le_r", "le_h")
        )


def green_relations(m: FiniteMonoid) -> GreenData:
    """Green preorders by reachability in the left and right Cayley graphs."""
    n = m.size
    gens = np.arange(n) if m.generators is None else np.asarray(m.generators)
    right = np.zeros((n, n), dtype=bool)
    left = np.zeros((n, n), dtype=bool)
    ids = np.arange(n)
    for g in gens:
        right[ids, m.table[ids, g]] = True  # t -> t g
        left[ids, m.table[g, ids]] = True  # t -> g t
    # reach[t, s]: s reachable from t, i.e. s in tM (right) or Mt (left)
    le_r = _closure(right).T
    le_l = _closure(left).T
    # s = x t y  iff  s <=_L u for some u <=_R t
    le_j = (le_l.astype(np.float32) @ le_r.astype(np.float32)) > 0
    return GreenData(le_j, le_l, le_r, le_l & le_r)


def is_j_trivial(g: GreenData) -> bool:
    return all(len(c) == 1 for c in g.j_classes)
