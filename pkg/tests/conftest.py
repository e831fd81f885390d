import pytest

from concat_hierarchy.automata import regex_to_dfa
from concat_hierarchy.syntactic import transition_monoid

FIXTURES = {
    "ab_star": ("(ab)*", None),
    "aa_star": ("(aa)*", None),
    "contains_a": ("(a|b)*a(a|b)*", None),
    "b_star": ("b*", "ab"),
    "subword_ab": ("(a|b)*a(a|b)*b(a|b)*", None),
}


def morphism(regex, alphabet=None):
    return transition_monoid(regex_to_dfa(regex, alphabet))


def elem(sm, word):
    """Element id of a word's image."""
    return sm.image(word)


@pytest.fixture(scope="session")
def ab_star():
    return morphism("(ab)*")


@pytest.fixture(scope="session")
def aa_star():
    return morphism("(aa)*")


@pytest.fixture(scope="session")
def contains_a():
    return morphism("(a|b)*a(a|b)*")


@pytest.fixture(scope="session")
def b_star():
    return morphism("b*", "ab")


@pytest.fixture(scope="session")
def universal():
    return morphism("(a|b)*")
