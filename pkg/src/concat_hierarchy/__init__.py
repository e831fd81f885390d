"""Membership in the lower levels of the Straubing-Therien hierarchy.

Typical use::

    from concat_hierarchy import regex_to_dfa, analyze
    report = analyze(regex_to_dfa("(ab)*"), "(ab)*")
    report.verdicts
"""

from .automata import Dfa, Nfa, compile, dfa_boolean, parse_dfa, parse_regex, regex_to_dfa
from .deciders import (
    Report,
    analyze,
    decide_bpol_at,
    decide_bpol_st,
    decide_pol_at,
    decide_pol_st,
    decide_star_free,
)
from .monoid import FiniteMonoid, GreenData, green_relations, is_aperiodic, is_j_trivial
from .syntactic import SyntacticMorphism, syntactic_order, transition_monoid

__all__ = [
    "Dfa", "Nfa", "compile", "dfa_boolean", "parse_dfa", "parse_regex", "regex_to_dfa",
    "Report", "analyze", "decide_bpol_at", "decide_bpol_st", "decide_pol_at",
    "decide_pol_st", "decide_star_free", "FiniteMonoid", "GreenData", "green_relations",
    "is_aperiodic", "is_j_trivial", "SyntacticMorphism", "syntactic_order",
    "transition_monoid",
]
