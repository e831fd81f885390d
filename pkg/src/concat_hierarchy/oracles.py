"""Definition-level oracles and random inputs used to cross-check the engine.

Nothing in here is on the decision path except ``subword_upclosure``, which
backs the Pol(ST)-pair computation. Everything else recomputes an existing
result from first principles.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .automata import Dfa, Nfa, compile, dfa_boolean, minimize
from .errors import ResourceError
from .monoid import FiniteMonoid, GreenData
from .syntactic import SyntacticMorphism, transition_monoid


def subword_upclosure(d: Dfa, max_states: int = 100_000) -> Dfa:
    """Words having a member of L(d) as a scattered subword.

    Nondeterministic copy of ``d`` with a self-loop on every letter at
    every state, then determinized and minimized.
    """
    trans = set()
    for p, row in enumerate(d.delta):
        for i, a in enumerate(d.alphabet):
            trans.add((p, a, row[i]))
            trans.add((p, a, p))
    nfa = Nfa(d.n_states, d.alphabet, frozenset(trans), frozenset(),
              frozenset({d.initial}), d.accepting)
    return compile(nfa, max_states)


def is_upward_closed(d: Dfa) -> bool:
    return minimize(d) == subword_upclosure(d)


def subword_pair_reachability(sm: SyntacticMorphism) -> np.ndarray:
    """pairs[s, t] iff some word of image t has a subword of image s.

    Independent route to the Pol(ST)-pairs: BFS over (subword image,
    word image) where each letter is either kept in both or only read by
    the word.
    """
    n, k = sm.size, len(sm.alphabet)
    seen = np.zeros((n, n), dtype=bool)
    seen[0, 0] = True
    queue = deque([(0, 0)])
    while queue:
        u, w = queue.popleft()
        for i in range(k):
            w2 = sm.right[w, i]
            for u2 in (sm.right[u, i], u):
                if not seen[u2, w2]:
                    seen[u2, w2] = True
                    queue.append((u2, w2))
    return seen


def brute_green(m: FiniteMonoid) -> GreenData:
    """Green preorders straight from the definitions (cubic)."""
    n = m.size
    if n > 200:
        raise ResourceError("brute_green is limited to monoids of size <= 200")
    t = m.table
    le_l = np.zeros((n, n), dtype=bool)
    le_r = np.zeros((n, n), dtype=bool)
    le_j = np.zeros((n, n), dtype=bool)
    for b in range(n):
        le_l[t[:, b], b] = True  # x b
        le_r[t[b, :], b] = True  # b y
        le_j[t[t[:, b][:, None], np.arange(n)[None, :]].ravel(), b] = True  # x b y
    return GreenData(le_j, le_l, le_r, le_l & le_r)


def brute_syntactic_order(sm: SyntacticMorphism) -> np.ndarray:
    """order[s, t] iff for all x, y: xsy in F implies xty in F."""
    t = sm.monoid.table
    n = sm.size
    # ctx[s, x, y] = x s y in F
    xs = t[:, :].T  # xs[s, x] = x s
    ctx = sm.accepting_mask[t[xs[:, :, None], np.arange(n)[None, None, :]]]
    flat = ctx.reshape(n, -1).astype(np.float64)
    return (flat @ (1.0 - flat).T) == 0


def contexts_separate(sm: SyntacticMorphism) -> bool:
    """Every two distinct elements are told apart by some context."""
    t = sm.monoid.table
    n = sm.size
    xs = t.T
    ctx = sm.accepting_mask[t[xs[:, :, None], np.arange(n)[None, None, :]]].reshape(n, -1)
    return len({row.tobytes() for row in ctx}) == n


def stabilization_bound(sm: SyntacticMorphism) -> int:
    return (2 ** len(sm.alphabet)) * sm.size


def enumerate_images(sm: SyntacticMorphism, max_len: int,
                     budget: int = 10_000_000) -> tuple[dict, bool]:
    """Images of all words of length <= max_len, grouped by content.

    Returns ``(images, exact)`` where images maps a frozenset of letters to a
    frozenset of elements. The frontier of (content, image) pairs at each
    exact length is a function of the previous one, so once a frontier
    repeats nothing new can appear and the result is exact regardless of
    max_len. ``exact`` is also true when max_len reaches the diameter bound.
    """
    k = len(sm.alphabet)
    frontier = frozenset({(0, 0)})
    found = set(frontier)
    seen_frontiers = {frontier}
    exact = max_len >= stabilization_bound(sm)
    work = 0
    for _ in range(max_len):
        nxt = set()
        for c, m in frontier:
            for i in range(k):
                nxt.add((c | (1 << i), int(sm.right[m, i])))
        work += len(frontier) * k
        if work > budget:
            raise ResourceError("enumeration budget exceeded")
        frontier = frozenset(nxt)
        found |= frontier
        if frontier in seen_frontiers:
            exact = True
            break
        seen_frontiers.add(frontier)
    images: dict = {}
    for c, m in found:
        key = frozenset(a for i, a in enumerate(sm.alphabet) if c >> i & 1)
        images.setdefault(key, set()).add(m)
    return {b: frozenset(v) for b, v in images.items()}, exact


# ---------------------------------------------------------------------------
# random inputs


@dataclass(frozen=True)
class RandomMorphismSpec:
    seed: int
    max_states: int = 5
    alphabet_size: int = 3
    monoid_cap: int = 120
    retries: int = 1000


ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def random_dfa(rng: np.random.Generator, max_states: int, alphabet_size: int) -> Dfa:
    n = int(rng.integers(1, max_states + 1))
    k = int(rng.integers(1, alphabet_size + 1))
    delta = rng.integers(0, n, size=(n, k))
    accepting = frozenset(int(q) for q in np.flatnonzero(rng.random(n) < 0.5))
    d = Dfa(tuple(ALPHABET[:k]), tuple(tuple(int(x) for x in row) for row in delta), 0,
            accepting)
    return minimize(d)


def random_morphism(spec: RandomMorphismSpec) -> SyntacticMorphism:
    rng = np.random.default_rng(spec.seed)
    for _ in range(spec.retries):
        d = random_dfa(rng, spec.max_states, spec.alphabet_size)
        try:
            return transition_monoid(d, spec.monoid_cap)
        except ResourceError:
            continue
    raise ResourceError(f"no morphism under the cap after {spec.retries} samples")


def random_regex(rng: np.random.Generator, max_len: int = 12, alphabet_size: int = 3) -> str:
    """Random well-formed expression of at most max_len characters."""
    letters = ALPHABET[:alphabet_size]

    def gen(budget: int) -> str:
        if budget <= 2:
            return str(rng.choice(list(letters)))
        kind = rng.integers(0, 5)
        if kind == 0:
            return str(rng.choice(list(letters)))
        if kind == 1:
            left = int(rng.integers(1, budget))
            return gen(left) + gen(budget - left)
        if kind == 2 and budget >= 5:
            left = int(rng.integers(1, budget - 3))
            return "(" + gen(left) + "|" + gen(budget - 3 - left) + ")"
        if kind == 3 and budget >= 4:
            inner = gen(budget - 3)
            return "(" + inner + ")" + str(rng.choice(["*", "+", "?"]))
        return gen(budget - 1) + str(rng.choice(["*", "?"]))

    while True:
        text = gen(int(rng.integers(1, max_len + 1)))
        if len(text) <= max_len:
            return text


def language_of_element(sm: SyntacticMorphism, s: int) -> Dfa:
    """Minimal DFA of the preimage of a single element."""
    acc = frozenset({s})
    d = Dfa(sm.alphabet, tuple(tuple(int(x) for x in row) for row in sm.right), 0, acc)
    return minimize(d)


def separable_by_upward_closure(sm: SyntacticMorphism, s: int, t: int) -> bool:
    up = subword_upclosure(language_of_element(sm, s))
    return dfa_boolean("intersection", up, language_of_element(sm, t)).is_empty()
