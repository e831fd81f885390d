"""Membership verdicts for the lower Straubing-Therien levels and star-freeness.

Class names used throughout:

``star_free``  aperiodic syntactic monoid
``pol_st``     Pol(ST), the upward-closed languages (Sigma_1)
``bpol_st``    BPol(ST), the piecewise-testable languages
``pol_at``     Pol(AT) (equal to Sigma_2 by a classical result, not claimed here)
``bpol_at``    BPol(AT) = level two of the Straubing-Therien hierarchy
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .automata import Dfa
from .equations import (
    DEFAULT_MAX_TUPLES,
    EquationVerdict,
    check_eq_cacp,
    check_eq_csides,
    check_pol_equation,
)
from .errors import InconsistencyError
from .monoid import green_relations, is_aperiodic, is_j_trivial
from .relations import at_pairs, at_sets, content_images, st_pairs, st_sets
from .syntactic import DEFAULT_MAX_MONOID, SyntacticMorphism, transition_monoid

VERDICTS = ("star_free", "pol_st", "bpol_st", "pol_at", "bpol_at")
LEVELS = {"sf": "star_free", "polst": "pol_st", "bpolst": "bpol_st",
          "polat": "pol_at", "bpolat": "bpol_at"}


def _aperiodicity_verdict(sm: SyntacticMorphism) -> EquationVerdict:
    m = sm.monoid
    for s in range(m.size):
        if m.omega_plus[s] != m.omega[s]:
            return EquationVerdict("aperiodic", False, ("s",), (s,), int(m.omega_plus[s]),
                                   int(m.omega[s]), (sm.witnesses[s],))
    return EquationVerdict("aperiodic", True)


def star_free_checks(sm: SyntacticMorphism) -> list[EquationVerdict]:
    return [_aperiodicity_verdict(sm)]


def pol_st_checks(sm: SyntacticMorphism) -> list[EquationVerdict]:
    return [_tag(check_pol_equation(sm, sm.order, st_pairs(sm)), "ST")]


def pol_at_checks(sm: SyntacticMorphism, ci=None) -> list[EquationVerdict]:
    ci = content_images(sm) if ci is None else ci
    return [_tag(check_pol_equation(sm, sm.order, at_pairs(ci)), "AT")]


def bpol_st_checks(sm: SyntacticMorphism, max_tuples: int = DEFAULT_MAX_TUPLES) -> list[EquationVerdict]:
    return [
        _tag(check_eq_cacp(sm, st_pairs(sm)), "ST"),
        _tag(check_eq_csides(sm, st_sets(sm), max_tuples), "ST"),
    ]


def bpol_at_checks(sm: SyntacticMorphism, ci=None,
                   max_tuples: int = DEFAULT_MAX_TUPLES) -> list[EquationVerdict]:
    ci = content_images(sm) if ci is None else ci
    return [
        _tag(check_eq_cacp(sm, at_pairs(ci)), "AT"),
        _tag(check_eq_csides(sm, at_sets(ci), max_tuples), "AT"),
    ]


def _tag(v: EquationVerdict, base: str) -> EquationVerdict:
    return EquationVerdict(f"{v.equation}[{base}]", v.passed, v.names, v.elements,
                           v.lhs, v.rhs, v.words)


def decide_star_free(sm: SyntacticMorphism) -> bool:
    return is_aperiodic(sm.monoid)


def decide_pol_st(sm: SyntacticMorphism) -> bool:
    return all(pol_st_checks(sm))


def decide_bpol_st(sm: SyntacticMorphism, max_tuples: int = DEFAULT_MAX_TUPLES) -> bool:
    """Equation route, checked against J-triviality of the monoid."""
    by_equations = all(bpol_st_checks(sm, max_tuples))
    by_simon = is_j_trivial(green_relations(sm.monoid))
    if by_equations != by_simon:
        raise InconsistencyError(
            f"BPol(ST) equations say {by_equations} but J-triviality says {by_simon}"
        )
    return by_equations


def decide_pol_at(sm: SyntacticMorphism) -> bool:
    return all(pol_at_checks(sm))


def decide_bpol_at(sm: SyntacticMorphism, max_tuples: int = DEFAULT_MAX_TUPLES) -> bool:
    return all(bpol_at_checks(sm, max_tuples=max_tuples))


# ---------------------------------------------------------------------------
# report


@dataclass
class Report:
    input: str
    alphabet: tuple[str, ...]
    dfa_states: int
    monoid_size: int
    j_classes: int
    j_trivial: bool
    aperiodic: bool
    verdicts: dict
    failures: dict = field(default_factory=dict)  # verdict -> [EquationVerdict]
    timings_ms: dict = field(default_factory=dict)
    morphism: SyntacticMorphism | None = field(default=None, repr=False)
    green: object = field(default=None, repr=False)

    def witnesses(self) -> list[dict]:
        out = []
        for name in VERDICTS:
            for v in self.failures.get(name, ()):
                out.append({
                    "verdict": name,
                    "equation": v.equation,
                    "elements": [f"{n}=m{x}" for n, x in zip(v.names, v.elements)],
                    "words": list(v.words),
                })
        return out

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "input": self.input,
            "alphabet": list(self.alphabet),
            "dfa_states": self.dfa_states,
            "monoid_size": self.monoid_size,
            "green": {"j_classes": self.j_classes, "j_trivial": self.j_trivial,
                      "aperiodic": self.aperiodic},
            "verdicts": dict(self.verdicts),
            "witnesses": self.witnesses(),
            "timings_ms": {k: round(v, 3) for k, v in self.timings_ms.items()} if timings else {},
        }

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), indent=2)

    def to_text(self, timings: bool = False) -> str:
        sm = self.morphism
        lines = [
            f"input:        {self.input}",
            f"alphabet:     {{{', '.join(self.alphabet)}}}",
            f"minimal DFA:  {self.dfa_states} states",
            f"monoid:       {self.monoid_size} elements",
        ]
        if sm is not None and sm.size <= 64:
            names = [f"m{i}={sm.name(i)}" for i in range(sm.size)]
            lines.append("elements:     " + " ".join(names))
            idem = [sm.name(int(e)) for e in sm.monoid.idempotents]
            lines.append("idempotents:  " + " ".join(idem))
            lines.append("accepting:    " + " ".join(sm.name(i) for i in sorted(sm.accepting)))
        lines.append(f"J-classes:    {self.j_classes} "
                     f"(J-trivial: {_yn(self.j_trivial)}, aperiodic: {_yn(self.aperiodic)})")
        if self.green is not None and sm is not None and sm.size <= 64:
            for cls in self.green.j_classes:
                if len(cls) > 1:
                    lines.append("  " + _eggbox(self.green, cls, sm))
        lines.append("verdicts:")
        for name in VERDICTS:
            if name in self.verdicts:
                lines.append(f"  {name:<10}{_yn(self.verdicts[name])}")
        for name in VERDICTS:
            for v in self.failures.get(name, ()):
                lines.append(f"  [{name}] {v.describe()}")
        if timings:
            lines.append("timings (ms): " + ", ".join(
                f"{k}={v:.1f}" for k, v in self.timings_ms.items()))
        return "\n".join(lines) + "\n"


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def _eggbox(green, cls, sm) -> str:
    """One J-class as R-rows of H-classes, elements named by witness words."""
    rows = []
    seen = set()
    for s in cls:
        if s in seen:
            continue
        row = [x for x in cls if green.r[s, x]]
        seen.update(row)
        cells = []
        done = set()
        for x in row:
            if x in done:
                continue
            h = [y for y in row if green.h[x, y]]
            done.update(h)
            cells.append(",".join(sm.name(y) for y in h))
        rows.append(" | ".join(cells))
    return "J-class: [" + " / ".join(rows) + "]"


def analyze(d: Dfa, source: str = "", level: str = "all",
            max_monoid: int = DEFAULT_MAX_MONOID,
            max_tuples: int = DEFAULT_MAX_TUPLES) -> Report:
    """Run every selected decider on the language of ``d``.

    With ``level="all"`` the five verdicts are cross-checked: they must
    form the inclusion chain, and BPol(ST) must agree with J-triviality.
    """
    timings: dict = {}
    clock = time.perf_counter()

    def lap(stage: str):
        nonlocal clock
        now = time.perf_counter()
        timings[stage] = (now - clock) * 1000.0
        clock = now

    sm = transition_monoid(d, max_monoid)
    lap("syntactic")
    green = green_relations(sm.monoid)
    j_trivial = is_j_trivial(green)
    aperiodic = is_aperiodic(sm.monoid)
    lap("green")
    ci = content_images(sm)
    lap("relations")

    wanted = VERDICTS if level == "all" else (LEVELS[level],)
    checks = {
        "star_free": lambda: star_free_checks(sm),
        "pol_st": lambda: pol_st_checks(sm),
        "bpol_st": lambda: bpol_st_checks(sm, max_tuples),
        "pol_at": lambda: pol_at_checks(sm, ci),
        "bpol_at": lambda: bpol_at_checks(sm, ci, max_tuples),
    }
    verdicts: dict = {}
    failures: dict = {}
    for name in wanted:
        results = checks[name]()
        verdicts[name] = all(results)
        bad = [v for v in results if not v]
        if bad:
            failures[name] = bad
        lap(name)

    if "bpol_st" in verdicts and verdicts["bpol_st"] != j_trivial:
        raise InconsistencyError(
            f"BPol(ST) equations say {verdicts['bpol_st']} but J-triviality says {j_trivial}"
        )
    if "star_free" in verdicts and verdicts["star_free"] != aperiodic:
        raise InconsistencyError("aperiodicity verdicts disagree")
    if level == "all":
        chain = [verdicts[v] for v in VERDICTS[1:]] + [verdicts["star_free"]]
        for lower, upper in zip(chain, chain[1:]):
            if lower and not upper:
                raise InconsistencyError(f"verdict chain violated: {verdicts}")

    return Report(
        input=source,
        alphabet=d.alphabet,
        dfa_states=d.n_states,
        monoid_size=sm.size,
        j_classes=len(green.j_classes),
        j_trivial=j_trivial,
        aperiodic=aperiodic,
        verdicts=verdicts,
        failures=failures,
        timings_ms=timings,
        morphism=sm,
        green=green,
    )
