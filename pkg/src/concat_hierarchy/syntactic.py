"""Syntactic morphism of a regular language from its minimal DFA."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .automata import Dfa
from .errors import ResourceError
from .monoid import FiniteMonoid

DEFAULT_MAX_MONOID = 100_000


@dataclass(frozen=True, eq=False)
class SyntacticMorphism:
    """Transition monoid of a minimal DFA together with the word map.

    ``functions[m]`` is the state transformation of element ``m``,
    ``right[m, i]`` is ``m`` times the i-th letter and ``witnesses[m]``
    is the shortlex-least word mapping to ``m``.
    """

    alphabet: tuple[str, ...]
    monoid: FiniteMonoid
    functions: np.ndarray
    right: np.ndarray
    witnesses: tuple[str, ...]
    accepting_mask: np.ndarray
    dfa: Dfa | None = None

    @property
    def size(self) -> int:
        return self.monoid.size

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self.right[0])

    @property
    def accepting(self) -> frozenset:
        return frozenset(int(x) for x in np.flatnonzero(self.accepting_mask))

    def image(self, word: str) -> int:
        m = 0
        for a in word:
            m = int(self.right[m, self.alphabet.index(a)])
        return m

    def name(self, m: int) -> str:
        return self.witnesses[m] or "1"

    @cached_property
    def order(self) -> np.ndarray:
        return syntactic_order(self)

    def with_accepting(self, mask) -> SyntacticMorphism:
        return SyntacticMorphism(self.alphabet, self.monoid, self.functions, self.right,
                                 self.witnesses, np.asarray(mask, dtype=bool), self.dfa)


def transition_monoid(d: Dfa, max_size: int = DEFAULT_MAX_MONOID) -> SyntacticMorphism:
    """BFS closure of the letter transformations of ``d``.

    ``d`` should be minimal (otherwise the result recognizes the same
    language but need not be the syntactic monoid).
    """
    k = len(d.alphabet)
    delta = np.asarray(d.delta, dtype=np.int32).reshape(d.n_states, k)
    start = tuple(range(d.n_states))
    index = {start: 0}
    funcs = [start]
    words = [""]
    parent = [-1]
    via = [-1]
    right: list[list[int]] = []
    queue = deque([0])
    while queue:
        m = queue.popleft()
        f = np.asarray(funcs[m])
        row = []
        for i, a in enumerate(d.alphabet):
            g = tuple(int(x) for x in delta[f, i])
            if g not in index:
                if len(funcs) >= max_size:
                    raise ResourceError(
                        f"monoid exceeds the cap of {max_size} elements "
                        f"(minimal DFA has {d.n_states} states)"
                    )
                index[g] = len(funcs)
                funcs.append(g)
                words.append(words[m] + a)
                parent.append(m)
                via.append(i)
                queue.append(index[g])
            row.append(index[g])
        right.append(row)
    n = len(funcs)
    right_arr = np.asarray(right, dtype=np.int32).reshape(n, k)
    # column t of the table: s * t = (s * parent(t)) * letter
    table = np.empty((n, n), dtype=np.int32)
    table[:, 0] = np.arange(n)
    for t in range(1, n):
        table[:, t] = right_arr[table[:, parent[t]], via[t]]
    functions = np.asarray(funcs, dtype=np.int32).reshape(n, d.n_states)
    acc = np.zeros(d.n_states, dtype=bool)
    acc[list(d.accepting)] = True
    mask = acc[functions[:, d.initial]]
    monoid = FiniteMonoid(table, generators=tuple(int(x) for x in right_arr[0]))
    return SyntacticMorphism(d.alphabet, monoid, functions, right_arr, tuple(words), mask, d)


def _residual_inclusion(d: Dfa) -> np.ndarray:
    """incl[p, q] iff the language accepted from p is contained in that from q."""
    n = d.n_states
    delta = np.asarray(d.delta, dtype=np.int32).reshape(n, len(d.alphabet))
    acc = np.zeros(n, dtype=bool)
    acc[list(d.accepting)] = True
    incl = ~(acc[:, None] & ~acc[None, :])
    while True:
        nxt = incl.copy()
        for i in range(len(d.alphabet)):
            nxt &= incl[delta[:, i][:, None], delta[:, i][None, :]]
        if np.array_equal(nxt, incl):
            return incl
        incl = nxt


def syntactic_order(sm: SyntacticMorphism) -> np.ndarray:
    """``order[s, t]`` iff every accepting context of s accepts t.

    With this direction the accepting set is an upper set. Computed from
    residual inclusion of the minimal DFA: ``s <= t`` iff ``s(p)`` has a
    residual included in that of ``t(p)`` for every state ``p``.
    """
    if sm.dfa is None:
        raise ValueError("syntactic order needs the generating DFA")
    incl = _residual_inclusion(sm.dfa)
    f = sm.functions
    return incl[f[:, None, :], f[None, :, :]].all(axis=2)


def recognizes_check(sm: SyntacticMorphism, d: Dfa, max_len: int = 10) -> bool:
    """Compare ``image(w) in F`` with DFA acceptance on all words up to max_len."""
    k = len(d.alphabet)
    if k != len(sm.alphabet):
        return False
    delta = np.asarray(d.delta, dtype=np.int32).reshape(d.n_states, k)
    acc = np.zeros(d.n_states, dtype=bool)
    acc[list(d.accepting)] = True
    elems = np.zeros(1, dtype=np.int32)
    states = np.full(1, d.initial, dtype=np.int32)
    for length in range(max_len + 1):
        if not np.array_equal(sm.accepting_mask[elems], acc[states]):
            return False
        if length == max_len or k == 0:
            break
        elems = sm.right[elems][:, :].reshape(-1)
        states = delta[states].reshape(-1)
    return True
