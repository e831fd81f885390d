"""Pair, set and swap relations of a morphism for the ST and AT bases.

ST is the trivial class {empty, A*}; AT is the Boolean algebra generated by
the languages A*aA*, i.e. the languages that only depend on the content of
a word. Sub-alphabets are bitmasks over alphabet positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .oracles import language_of_element, subword_upclosure
from .syntactic import SyntacticMorphism


@dataclass(frozen=True, eq=False)
class PairSet:
    matrix: np.ndarray
    tag: str

    def __contains__(self, pair) -> bool:
        s, t = pair
        return bool(self.matrix[s, t])

    def is_reflexive(self) -> bool:
        return bool(self.matrix.diagonal().all())

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.matrix, self.matrix.T))

    def is_multiplicative(self, table: np.ndarray) -> bool:
        """Closed under componentwise products."""
        s1, t1 = np.nonzero(self.matrix)
        for s2, t2 in zip(s1, t1):
            if not self.matrix[table[s1, s2], table[t1, t2]].all():
                return False
        return True


@dataclass(frozen=True, eq=False)
class ContentImages:
    """``exact[B]`` is Im_B as a bool mask, ``upto[B]`` is the image of B*."""

    alphabet: tuple[str, ...]
    exact: np.ndarray
    upto: np.ndarray

    def image(self, letters: Iterable[str]) -> frozenset:
        return _members(self.exact[self.mask(letters)])

    def image_upto(self, letters: Iterable[str]) -> frozenset:
        return _members(self.upto[self.mask(letters)])

    def mask(self, letters: Iterable[str]) -> int:
        return sum(1 << self.alphabet.index(a) for a in set(letters))

    def as_dict(self) -> dict:
        return {
            frozenset(a for i, a in enumerate(self.alphabet) if b >> i & 1): _members(row)
            for b, row in enumerate(self.exact)
        }

    @cached_property
    def maximal_masks(self) -> tuple[int, ...]:
        """Sub-alphabets whose Im_B is inclusion-maximal (first one kept on ties)."""
        return _maximal_rows(self.exact)


def _members(row: np.ndarray) -> frozenset:
    return frozenset(int(x) for x in np.flatnonzero(row))


def _maximal_rows(rows: np.ndarray) -> tuple[int, ...]:
    keep = []
    for i, row in enumerate(rows):
        dominated = False
        for j, other in enumerate(rows):
            if i == j:
                continue
            if not (row & ~other).any():
                # strictly smaller, or equal with an earlier representative
                if (other & ~row).any() or j < i:
                    dominated = True
                    break
        if not dominated:
            keep.append(i)
    return tuple(keep)


def content_images(sm: SyntacticMorphism) -> ContentImages:
    """Im_B for every sub-alphabet B by a fixpoint over (content, element).

    Contents only grow along a word, so sub-alphabets are processed in
    increasing numeric order: close Im_B under its own letters, then push
    one step along each letter outside B.
    """
    k = len(sm.alphabet)
    n = sm.size
    exact = np.zeros((1 << k, n), dtype=bool)
    exact[0, 0] = True
    for b in range(1 << k):
        inside = [i for i in range(k) if b >> i & 1]
        row = exact[b]
        while inside:
            grown = row.copy()
            for i in inside:
                grown[sm.right[row, i]] = True
            if np.array_equal(grown, row):
                break
            row = grown
        exact[b] = row
        for i in range(k):
            if not b >> i & 1:
                exact[b | 1 << i, sm.right[row, i]] = True
    upto = np.zeros_like(exact)
    for b in range(1 << k):
        for c in range(b + 1):
            if c & ~b == 0:
                upto[b] |= exact[c]
    return ContentImages(sm.alphabet, exact, upto)


# ---------------------------------------------------------------------------
# pairs


def at_pairs(ci: ContentImages) -> PairSet:
    """(s, t) such that some content class meets both preimages."""
    e = ci.exact.astype(np.float32)
    return PairSet((e.T @ e) > 0, "AT")


def st_pairs(sm: SyntacticMorphism) -> PairSet:
    return PairSet(np.ones((sm.size, sm.size), dtype=bool), "ST")


def polst_pairs(sm: SyntacticMorphism) -> PairSet:
    """(s, t) such that the upward closure of the s-preimage meets the t-preimage.

    Pol(ST) is the class of subword-upward-closed languages, so the
    smallest candidate separator of the s-preimage is its upward closure.
    Each closure is run against the monoid automaton in one product so a
    single pass yields a full row.
    """
    n, k = sm.size, len(sm.alphabet)
    matrix = np.zeros((n, n), dtype=bool)
    for s in range(n):
        up = subword_upclosure(language_of_element(sm, s))
        delta = np.asarray(up.delta, dtype=np.int32).reshape(up.n_states, k)
        seen = np.zeros((up.n_states, n), dtype=bool)
        seen[up.initial, 0] = True
        frontier = [(up.initial, 0)]
        while frontier:
            nxt = []
            for q, m in frontier:
                for i in range(k):
                    q2, m2 = delta[q, i], sm.right[m, i]
                    if not seen[q2, m2]:
                        seen[q2, m2] = True
                        nxt.append((q2, m2))
            frontier = nxt
        acc = np.zeros(up.n_states, dtype=bool)
        acc[list(up.accepting)] = True
        matrix[s] = seen[acc].any(axis=0)
    return PairSet(matrix, "PolST")


# ---------------------------------------------------------------------------
# sets and swaps


class SetFamilyOracle:
    """Downward-closed family of subsets of M, given by its maximal members."""

    def __init__(self, tag: str, maximal: Iterable[np.ndarray], size: int):
        self.tag = tag
        self.size = size
        self.maximal = tuple(np.asarray(m, dtype=bool) for m in maximal)

    def __call__(self, elements: Iterable[int]) -> bool:
        elems = sorted(set(int(x) for x in elements))
        if not elems:
            raise ValueError("set queries need a nonempty set")
        return any(m[elems].all() for m in self.maximal)

    def domains(self) -> list[tuple[np.ndarray, np.ndarray]]:
        """(allowed e/f values, allowed q/r/s/t values) per maximal set."""
        return [(m, m) for m in self.maximal]


def at_sets(ci: ContentImages) -> SetFamilyOracle:
    return SetFamilyOracle("AT", [ci.exact[b] for b in ci.maximal_masks], ci.exact.shape[1])


def st_sets(sm: SyntacticMorphism) -> SetFamilyOracle:
    return SetFamilyOracle("ST", [np.ones(sm.size, dtype=bool)], sm.size)


def at_set_query(ci: ContentImages, elements: Iterable[int]) -> bool:
    return at_sets(ci)(elements)


def st_set_query(elements: Iterable[int]) -> bool:
    if not set(elements):
        raise ValueError("set queries need a nonempty set")
    return True


class SwapOracle:
    """Content-morphism swaps: (q,r,s,t,e,f) with e, f in Im_B and the rest in Im_(<=B)."""

    tag = "AT"

    def __init__(self, ci: ContentImages):
        self.ci = ci

    def __call__(self, q, r, s, t, e, f) -> bool:
        ex, up = self.ci.exact, self.ci.upto
        return bool((ex[:, e] & ex[:, f] & up[:, q] & up[:, r] & up[:, s] & up[:, t]).any())

    def domains(self) -> list[tuple[np.ndarray, np.ndarray]]:
        doms = [(self.ci.exact[b], self.ci.upto[b]) for b in range(self.ci.exact.shape[0])]
        out = []
        for i, (ef, rest) in enumerate(doms):
            dominated = any(
                j != i and not (ef & ~ef2).any() and not (rest & ~rest2).any()
                and ((ef2 & ~ef).any() or (rest2 & ~rest).any() or j < i)
                for j, (ef2, rest2) in enumerate(doms)
            )
            if not dominated:
                out.append((ef, rest))
        return out


def content_swaps(ci: ContentImages) -> SwapOracle:
    return SwapOracle(ci)
