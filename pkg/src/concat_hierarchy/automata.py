"""Regular expressions, NFAs and complete minimal DFAs.

Regex grammar::

    expr   := term ("|" term)*
    term   := factor+
    factor := base ("*" | "+" | "?")*
    base   := letter | "(" expr ")" | "~" | "#"

``~`` is the empty word, ``#`` the empty language, letters are ``a``-``z``.

Every DFA produced here is complete, minimal and canonical: states are
numbered in breadth-first discovery order from the initial state, exploring
edges in alphabet order. Two equal languages over the same alphabet
therefore give ``==`` DFAs.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import AlphabetError, InputError, RegexSyntaxError, ResourceError

DEFAULT_MAX_STATES = 100_000


# ---------------------------------------------------------------------------
# regex AST


@dataclass(frozen=True)
class Letter:
    symbol: str


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Concat:
    parts: tuple


@dataclass(frozen=True)
class Union:
    parts: tuple


@dataclass(frozen=True)
class Star:
    inner: object


@dataclass(frozen=True)
class Plus:
    inner: object


@dataclass(frozen=True)
class Opt:
    inner: object


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str | None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self):
        if self.peek() is None:
            raise RegexSyntaxError("empty expression", self.pos)
        node = self.expr()
        if self.peek() is not None:
            raise RegexSyntaxError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return node

    def expr(self):
        parts = [self.term()]
        while self.peek() == "|":
            self.pos += 1
            parts.append(self.term())
        return parts[0] if len(parts) == 1 else Union(tuple(parts))

    def term(self):
        parts = []
        while (c := self.peek()) is not None and c not in "|)":
            parts.append(self.factor())
        if not parts:
            raise RegexSyntaxError("expected an expression", self.pos)
        return parts[0] if len(parts) == 1 else Concat(tuple(parts))

    def factor(self):
        node = self.base()
        while (c := self.peek()) is not None and c in "*+?":
            self.pos += 1
            node = {"*": Star, "+": Plus, "?": Opt}[c](node)
        return node

    def base(self):
        c = self.peek()
        start = self.pos
        if c is None:
            raise RegexSyntaxError("unexpected end of expression", start)
        if c == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                raise RegexSyntaxError("unbalanced parenthesis", self.pos)
            self.pos += 1
            return node
        self.pos += 1
        if c == "~":
            return Epsilon()
        if c == "#":
            return Empty()
        if "a" <= c <= "z":
            return Letter(c)
        raise RegexSyntaxError(f"unexpected {c!r}", start)


def parse_regex_ast(text: str):
    return _Parser(text).parse()


def _letters(node) -> set[str]:
    if isinstance(node, Letter):
        return {node.symbol}
    if isinstance(node, (Concat, Union)):
        return set().union(*(_letters(p) for p in node.parts))
    if isinstance(node, (Star, Plus, Opt)):
        return _letters(node.inner)
    return set()


def _may_be_nonempty(node) -> bool:
    if isinstance(node, Empty):
        return False
    if isinstance(node, Concat):
        return all(_may_be_nonempty(p) for p in node.parts)
    if isinstance(node, Union):
        return any(_may_be_nonempty(p) for p in node.parts)
    if isinstance(node, (Star, Opt)):
        return True
    if isinstance(node, Plus):
        return _may_be_nonempty(node.inner)
    return True


# ---------------------------------------------------------------------------
# NFA


@dataclass(frozen=True)
class Nfa:
    n_states: int
    alphabet: tuple[str, ...]
    transitions: frozenset  # of (state, symbol, state)
    epsilon: frozenset  # of (state, state)
    initial: frozenset
    accepting: frozenset

    def __post_init__(self):
        sym = set(self.alphabet)
        for p, a, q in self.transitions:
            if not (0 <= p < self.n_states and 0 <= q < self.n_states):
                raise InputError(f"transition ({p}, {a}, {q}) references a missing state")
            if a not in sym:
                raise AlphabetError(f"symbol {a!r} is not in the alphabet")
        for p, q in self.epsilon:
            if not (0 <= p < self.n_states and 0 <= q < self.n_states):
                raise InputError(f"epsilon edge ({p}, {q}) references a missing state")
        if any(not 0 <= q < self.n_states for q in self.initial | self.accepting):
            raise InputError("initial/accepting state out of range")

    def _closure(self, states: Iterable[int], eps: dict) -> frozenset:
        seen = set(states)
        stack = list(seen)
        while stack:
            p = stack.pop()
            for q in eps.get(p, ()):
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        return frozenset(seen)

    def accepts(self, word: str) -> bool:
        eps = _adjacency(self.epsilon)
        moves = _moves(self.transitions)
        cur = self._closure(self.initial, eps)
        for a in word:
            cur = self._closure((q for p in cur for q in moves.get((p, a), ())), eps)
        return bool(cur & self.accepting)


def _adjacency(pairs) -> dict:
    adj: dict = {}
    for p, q in sorted(pairs):
        adj.setdefault(p, []).append(q)
    return adj


def _moves(transitions) -> dict:
    moves: dict = {}
    for p, a, q in sorted(transitions):
        moves.setdefault((p, a), []).append(q)
    return moves


class _Thompson:
    def __init__(self):
        self.n = 0
        self.trans: set = set()
        self.eps: set = set()

    def new(self) -> int:
        self.n += 1
        return self.n - 1

    def build(self, node) -> tuple[int, int]:
        s, f = self.new(), self.new()
        if isinstance(node, Letter):
            self.trans.add((s, node.symbol, f))
        elif isinstance(node, Epsilon):
            self.eps.add((s, f))
        elif isinstance(node, Empty):
            pass
        elif isinstance(node, Concat):
            cur = s
            for part in node.parts:
                ps, pf = self.build(part)
                self.eps.add((cur, ps))
                cur = pf
            self.eps.add((cur, f))
        elif isinstance(node, Union):
            for part in node.parts:
                ps, pf = self.build(part)
                self.eps.add((s, ps))
                self.eps.add((pf, f))
        elif isinstance(node, (Star, Plus, Opt)):
            ps, pf = self.build(node.inner)
            self.eps.add((s, ps))
            self.eps.add((pf, f))
            if not isinstance(node, Opt):
                self.eps.add((pf, ps))
            if not isinstance(node, Plus):
                self.eps.add((s, f))
        else:  # pragma: no cover
            raise TypeError(node)
        return s, f


def resolve_alphabet(text: str, alphabet: Sequence[str] | str | None) -> tuple[str, ...]:
    letters = _letters(parse_regex_ast(text))
    return _resolve(letters, alphabet)


def _resolve(letters: set[str], alphabet) -> tuple[str, ...]:
    if alphabet is None:
        return tuple(sorted(letters))
    alpha = tuple(alphabet)
    for a in alpha:
        if len(a) != 1 or not "a" <= a <= "z":
            raise AlphabetError(f"invalid alphabet symbol {a!r}")
    if len(set(alpha)) != len(alpha):
        raise AlphabetError("duplicate alphabet symbols")
    missing = letters - set(alpha)
    if missing:
        raise AlphabetError(f"letters {''.join(sorted(missing))} are not in the declared alphabet")
    return tuple(sorted(alpha))


def parse_regex(text: str, alphabet: Sequence[str] | str | None = None) -> Nfa:
    """Thompson NFA of ``text`` over the declared alphabet, else over its letters."""
    ast = parse_regex_ast(text)
    alpha = _resolve(_letters(ast), alphabet)
    if not alpha and _may_be_nonempty(ast):
        raise AlphabetError("empty alphabet for an expression denoting a nonempty language")
    t = _Thompson()
    s, f = t.build(ast)
    return Nfa(t.n, alpha, frozenset(t.trans), frozenset(t.eps), frozenset({s}), frozenset({f}))


# ---------------------------------------------------------------------------
# DFA


@dataclass(frozen=True)
class Dfa:
    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]  # delta[state][symbol index]
    initial: int
    accepting: frozenset

    @property
    def n_states(self) -> int:
        return len(self.delta)

    def step(self, state: int, symbol: str) -> int:
        return self.delta[state][self.alphabet.index(symbol)]

    def run(self, word: str, state: int | None = None) -> int:
        q = self.initial if state is None else state
        index = {a: i for i, a in enumerate(self.alphabet)}
        for a in word:
            try:
                q = self.delta[q][index[a]]
            except KeyError:
                raise AlphabetError(f"symbol {a!r} is not in the alphabet") from None
        return q

    def accepts(self, word: str) -> bool:
        return self.run(word) in self.accepting

    def is_empty(self) -> bool:
        return not self.accepting

    def to_json(self) -> str:
        return json.dumps(
            {
                "alphabet": list(self.alphabet),
                "states": self.n_states,
                "initial": self.initial,
                "accepting": sorted(self.accepting),
                "transitions": [
                    {"from": p, "on": a, "to": self.delta[p][i]}
                    for p in range(self.n_states)
                    for i, a in enumerate(self.alphabet)
                ],
            }
        )


def _determinize(nfa: Nfa, max_states: int) -> Dfa:
    eps = _adjacency(nfa.epsilon)
    moves = _moves(nfa.transitions)
    start = nfa._closure(nfa.initial, eps)
    index = {start: 0}
    order = [start]
    delta: list[list[int]] = []
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        row = []
        for a in nfa.alphabet:
            nxt = nfa._closure((q for p in cur for q in moves.get((p, a), ())), eps)
            if nxt not in index:
                if len(index) >= max_states:
                    raise ResourceError(f"subset construction exceeded {max_states} states")
                index[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            row.append(index[nxt])
        delta.append(row)
    accepting = frozenset(i for i, s in enumerate(order) if s & nfa.accepting)
    return Dfa(nfa.alphabet, tuple(map(tuple, delta)), 0, accepting)


def minimize(d: Dfa) -> Dfa:
    """Minimal canonical DFA for ``d`` (Moore partition refinement)."""
    reach = _reachable(d)
    cls = {q: int(q in d.accepting) for q in reach}
    n_cls = len(set(cls.values()))
    while True:
        sig = {q: (cls[q],) + tuple(cls[r] for r in d.delta[q]) for q in reach}
        ids: dict = {}
        new = {q: ids.setdefault(sig[q], len(ids)) for q in reach}
        cls = new
        if len(ids) == n_cls:
            break
        n_cls = len(ids)
    rep: dict = {}
    for q in reach:
        rep.setdefault(cls[q], q)
    quotient = Dfa(
        d.alphabet,
        tuple(tuple(cls[r] for r in d.delta[rep[c]]) for c in range(n_cls)),
        cls[d.initial],
        frozenset(cls[q] for q in reach if q in d.accepting),
    )
    return canonicalize(quotient)


def _reachable(d: Dfa) -> list[int]:
    seen = {d.initial}
    order = [d.initial]
    queue = deque(order)
    while queue:
        p = queue.popleft()
        for q in d.delta[p]:
            if q not in seen:
                seen.add(q)
                order.append(q)
                queue.append(q)
    return order


def canonicalize(d: Dfa) -> Dfa:
    """Renumber reachable states in BFS order; unreachable states are dropped."""
    order = _reachable(d)
    num = {q: i for i, q in enumerate(order)}
    return Dfa(
        d.alphabet,
        tuple(tuple(num[r] for r in d.delta[q]) for q in order),
        0,
        frozenset(num[q] for q in order if q in d.accepting),
    )


def compile(nfa: Nfa, max_states: int = DEFAULT_MAX_STATES) -> Dfa:  # noqa: A001
    return minimize(_determinize(nfa, max_states))


def regex_to_dfa(text: str, alphabet=None, max_states: int = DEFAULT_MAX_STATES) -> Dfa:
    return compile(parse_regex(text, alphabet), max_states)


def dfa_boolean(op: str, left: Dfa, right: Dfa | None = None,
                max_states: int = DEFAULT_MAX_STATES) -> Dfa:
    if op == "complement":
        if right is not None:
            raise ValueError("complement takes a single operand")
        acc = frozenset(range(left.n_states)) - left.accepting
        return minimize(Dfa(left.alphabet, left.delta, left.initial, acc))
    combine = {
        "union": lambda x, y: x or y,
        "intersection": lambda x, y: x and y,
        "difference": lambda x, y: x and not y,
    }.get(op)
    if combine is None:
        raise ValueError(f"unknown operation {op!r}")
    if right is None:
        raise ValueError(f"{op} needs two operands")
    if left.alphabet != right.alphabet:
        raise AlphabetError(f"alphabet mismatch: {left.alphabet} vs {right.alphabet}")
    start = (left.initial, right.initial)
    index = {start: 0}
    order = [start]
    delta = []
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        row = []
        for i in range(len(left.alphabet)):
            nxt = (left.delta[p][i], right.delta[q][i])
            if nxt not in index:
                if len(index) >= max_states:
                    raise ResourceError(f"product automaton exceeded {max_states} states")
                index[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            row.append(index[nxt])
        delta.append(tuple(row))
    acc = frozenset(
        i for i, (p, q) in enumerate(order)
        if combine(p in left.accepting, q in right.accepting)
    )
    return minimize(Dfa(left.alphabet, tuple(delta), 0, acc))


def equivalent(left: Dfa, right: Dfa) -> bool:
    return minimize(left) == minimize(right)


def universal_dfa(alphabet: Sequence[str]) -> Dfa:
    alpha = tuple(alphabet)
    return Dfa(alpha, ((0,) * len(alpha),), 0, frozenset({0}))


def parse_dfa(document: str) -> Dfa:
    """Read the JSON DFA format; missing transitions go to a fresh sink."""
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed DFA document: {exc}") from None
    if not isinstance(doc, dict):
        raise InputError("DFA document must be a JSON object")
    for key in ("alphabet", "states", "initial", "accepting", "transitions"):
        if key not in doc:
            raise InputError(f"DFA document is missing {key!r}")
    alphabet = doc["alphabet"]
    if not isinstance(alphabet, list) or not all(isinstance(a, str) for a in alphabet):
        raise InputError("alphabet must be an array of 1-character strings")
    alpha = _resolve(set(), alphabet)
    n = doc["states"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError("states must be a positive integer")

    def state(x, what):
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
            raise InputError(f"{what} {x!r} is out of range")
        return x

    initial = state(doc["initial"], "initial state")
    if not isinstance(doc["accepting"], list):
        raise InputError("accepting must be an array")
    accepting = frozenset(state(q, "accepting state") for q in doc["accepting"])
    table: dict = {}
    if not isinstance(doc["transitions"], list):
        raise InputError("transitions must be an array")
    for t in doc["transitions"]:
        if not isinstance(t, dict) or set(t) != {"from", "on", "to"}:
            raise InputError(f"malformed transition {t!r}")
        p, q = state(t["from"], "state"), state(t["to"], "state")
        a = t["on"]
        if a not in alpha:
            raise AlphabetError(f"transition symbol {a!r} is not in the alphabet")
        if (p, a) in table:
            raise InputError(f"duplicate transition from {p} on {a!r}")
        table[(p, a)] = q
    sink = n
    rows = [tuple(table.get((p, a), sink) for a in alpha) for p in range(n)]
    rows.append((sink,) * len(alpha))
    return minimize(Dfa(alpha, tuple(rows), initial, accepting))


def words(alphabet: Sequence[str], max_len: int) -> Iterator[str]:
    """All words of length <= max_len, shortlex order."""
    for k in range(max_len + 1):
        for w in product(alphabet, repeat=k):
            yield "".join(w)
