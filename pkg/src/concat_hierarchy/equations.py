"""Equation checkers over a finite monoid, parameterized by relation oracles.

Every checker returns an :class:`EquationVerdict`. On failure the verdict
carries the least violating tuple in lexicographic order of element ids,
using the component order given in ``EquationVerdict.names``, so the
witness is deterministic.

Equations, with ``w`` the idempotent power and ``w+1`` = ``w`` times the base:

* ``pol``      s^(w+1) <= s^w t s^w               for pairs (s, t)
* ``cacp``     (eset)^(w+1) = (eset)^w et (eset)^w for pairs (e, s), e idempotent, all t
* ``capolcp``  s^(w+1) = s^w t s^w                for pairs (t, s)
* ``csides``/``swap``
               (eqfre)^w (esfte)^w = (eqfre)^w qft (esfte)^w
               for tuples (e, f, q, r, s, t) accepted by a set or swap oracle
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ResourceError
from .relations import PairSet, SetFamilyOracle, SwapOracle
from .syntactic import SyntacticMorphism

DEFAULT_MAX_TUPLES = 10**13


@dataclass(frozen=True)
class EquationVerdict:
    equation: str
    passed: bool
    names: tuple[str, ...] = ()
    elements: tuple[int, ...] = ()
    lhs: int | None = None
    rhs: int | None = None
    words: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.passed

    def describe(self) -> str:
        if self.passed:
            return f"{self.equation}: holds"
        parts = ", ".join(f"{n}={w or '1'}" for n, w in zip(self.names, self.words))
        return f"{self.equation}: fails at {parts}"


def _fail(sm: SyntacticMorphism, equation, names, elements, lhs, rhs) -> EquationVerdict:
    elements = tuple(int(x) for x in elements)
    return EquationVerdict(equation, False, names, elements, int(lhs), int(rhs),
                           tuple(sm.witnesses[x] for x in elements))


def check_pol_equation(sm: SyntacticMorphism, order: np.ndarray, pairs: PairSet) -> EquationVerdict:
    m = sm.monoid
    t = m.table
    s_idx, t_idx = np.nonzero(pairs.matrix)
    w = m.omega[s_idx]
    lhs = m.omega_plus[s_idx]
    rhs = t[t[w, t_idx], w]
    bad = ~order[lhs, rhs]
    if not bad.any():
        return EquationVerdict("pol", True)
    k = int(np.argmax(bad))  # nonzero() is row-major, so this is lexicographic
    return _fail(sm, "pol", ("s", "t"), (s_idx[k], t_idx[k]), lhs[k], rhs[k])


def check_eq_cacp(sm: SyntacticMorphism, pairs: PairSet) -> EquationVerdict:
    m = sm.monoid
    tab = m.table
    ts = np.arange(m.size)
    for e in m.idempotents:
        ss = np.flatnonzero(pairs.matrix[e])
        if ss.size == 0:
            continue
        x = tab[tab[tab[e, ss], e][:, None], ts[None, :]]  # eset
        w = m.omega[x]
        lhs = m.omega_plus[x]
        rhs = tab[tab[w, tab[e, ts][None, :]], w]
        bad = lhs != rhs
        if bad.any():
            i, j = np.argwhere(bad)[0]
            return _fail(sm, "cacp", ("e", "s", "t"), (e, ss[i], j), lhs[i, j], rhs[i, j])
    return EquationVerdict("cacp", True)


def check_eq_capolcp(sm: SyntacticMorphism, pol_pairs: PairSet) -> EquationVerdict:
    m = sm.monoid
    tab = m.table
    t_idx, s_idx = np.nonzero(pol_pairs.matrix)
    w = m.omega[s_idx]
    lhs = m.omega_plus[s_idx]
    rhs = tab[tab[w, t_idx], w]
    bad = lhs != rhs
    if not bad.any():
        return EquationVerdict("capolcp", True)
    k = int(np.argmax(bad))
    return _fail(sm, "capolcp", ("t", "s"), (t_idx[k], s_idx[k]), lhs[k], rhs[k])


# ---------------------------------------------------------------------------
# six-variable equation


def _pack(bits: np.ndarray) -> np.ndarray:
    """Pack the last axis of a bool array into uint64 words."""
    width = bits.shape[-1]
    words = max(1, (width + 63) // 64)
    padded = np.zeros(bits.shape[:-1] + (words * 64,), dtype=np.uint64)
    padded[..., :width] = bits
    shifts = np.arange(64, dtype=np.uint64)
    return (padded.reshape(bits.shape[:-1] + (words, 64)) << shifts).sum(axis=-1, dtype=np.uint64)


class _SixKernel:
    """Shared precomputation for the (e, f, q, r, s, t) equation.

    For idempotents x, y and any m, ``bad[x, m]`` packs the y's with
    ``x m y != x y``. Both sides of the equation have that shape with
    x = (eqfre)^w, y = (esfte)^w and m = qft.
    """

    def __init__(self, sm: SyntacticMorphism):
        m = sm.monoid
        self.sm = sm
        self.tab = m.table
        self.omega = m.omega
        self.idem = m.idempotents
        self.idem_pos = np.full(m.size, -1, dtype=np.int64)
        self.idem_pos[self.idem] = np.arange(self.idem.size)
        tab, idem = self.tab, self.idem
        xm = tab[idem, :]  # (E, n)
        xmy = tab[xm[:, :, None], idem[None, None, :]]  # (E, n, E)
        xy = tab[idem[:, None], idem[None, :]]  # (E, E)
        self.bad = _pack(xmy != xy[:, None, :])  # (E, n, W)

    def values(self, e: int, f: int, dom: np.ndarray):
        tab, om = self.tab, self.omega
        left = tab[tab[e, dom], f]  # e q f  /  e s f
        x = om[tab[tab[left[:, None], dom[None, :]], e]]  # (eqfre)^w indexed [q, r]
        return x

    def first_failure(self, ef: np.ndarray, dom: np.ndarray, limit=None):
        """Least failing (e, f, q, r, s, t) with e, f in ef and the rest in dom."""
        tab, idem_pos, bad = self.tab, self.idem_pos, self.bad
        n_e = self.idem.size
        for e in ef:
            for f in ef:
                if limit is not None and (e, f) > limit[:2]:
                    return None
                # (eqfre)^w and (esfte)^w are the same table: x[q, r], y[s, t]
                x = y = self.values(e, f, dom)
                ymem = np.zeros((dom.size, n_e), dtype=bool)
                ymem[np.arange(dom.size)[None, :].repeat(dom.size, 0), idem_pos[y]] = True
                ybits = _pack(ymem)  # (t, W)
                xmem = np.zeros((dom.size, n_e), dtype=bool)
                xmem[np.arange(dom.size)[:, None].repeat(dom.size, 1), idem_pos[x]] = True
                qft = tab[tab[dom, f][:, None], dom[None, :]]  # [q, t]
                qi, xi = np.nonzero(xmem)
                hits = (bad[xi[:, None], qft[qi]] & ybits[None, :, :]).any(axis=(1, 2))
                if hits.any():
                    return self._locate(e, f, dom, x, y, qft)
        return None

    def _locate(self, e, f, dom, x, y, qft):
        tab = self.tab
        for qi in range(dom.size):
            for ri in range(dom.size):
                xv = x[qi, ri]
                lhs = tab[xv, y]  # [s, t]
                rhs = tab[tab[xv, qft[qi]][None, :], y]
                diff = lhs != rhs
                if diff.any():
                    si, ti = np.argwhere(diff)[0]
                    tup = (e, f, dom[qi], dom[ri], dom[si], dom[ti])
                    return tuple(int(v) for v in tup), int(lhs[si, ti]), int(rhs[si, ti])
        raise AssertionError("packed check reported a failure that was not found")


def _six_check(sm, equation: str, domains, max_tuples: int) -> EquationVerdict:
    m = sm.monoid
    idem_mask = m.idempotent_mask
    plans = []
    total = 0
    for ef_mask, rest_mask in domains:
        ef = np.flatnonzero(ef_mask & idem_mask)
        dom = np.flatnonzero(rest_mask)
        if ef.size == 0 or dom.size == 0:
            continue
        total += ef.size ** 2 * dom.size ** 4
        plans.append((ef, dom))
    if total > max_tuples:
        biggest = max(d.size for _, d in plans)
        raise ResourceError(
            f"{equation}: {total} tuples exceed the cap of {max_tuples} "
            f"(largest set has {biggest} elements)"
        )
    kernel = _SixKernel(sm)
    best = None
    for ef, dom in plans:
        found = kernel.first_failure(ef, dom, None if best is None else best[0])
        if found is not None and (best is None or found[0] < best[0]):
            best = found
    if best is None:
        return EquationVerdict(equation, True)
    tup, lhs, rhs = best
    return _fail(sm, equation, ("e", "f", "q", "r", "s", "t"), tup, lhs, rhs)


def check_eq_csides(sm: SyntacticMorphism, sets: SetFamilyOracle,
                    max_tuples: int = DEFAULT_MAX_TUPLES) -> EquationVerdict:
    return _six_check(sm, "csides", sets.domains(), max_tuples)


def check_eq_swap(sm: SyntacticMorphism, swaps: SwapOracle,
                  max_tuples: int = DEFAULT_MAX_TUPLES) -> EquationVerdict:
    return _six_check(sm, "swap", swaps.domains(), max_tuples)


def six_sides(sm: SyntacticMorphism, e, f, q, r, s, t) -> tuple[int, int]:
    """Both sides of the six-variable equation for one tuple (slow path)."""
    m = sm.monoid
    x = int(m.omega[m.mul(e, q, f, r, e)])
    y = int(m.omega[m.mul(e, s, f, t, e)])
    return m.mul(x, y), m.mul(x, q, f, t, y)
