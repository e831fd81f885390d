"""
Placing languages in the hierarchy
==================================

``analyze`` runs every decider, cross-checks the verdict chain and
returns a report that prints as text or JSON.
"""

from concat_hierarchy import analyze, regex_to_dfa

languages = [
    ("(ab)*", None),
    ("(aa)*", None),
    ("(a|b)*a(a|b)*", None),
    ("b*", "ab"),
    ("(a|b)*a(a|b)*b(a|b)*", None),
    ("(a|b)*ab", None),
]

header = ["star_free", "pol_st", "bpol_st", "pol_at", "bpol_at"]
print(f"{'language':<24}" + "".join(f"{h:>10}" for h in header))
for regex, alphabet in languages:
    report = analyze(regex_to_dfa(regex, alphabet), regex)
    row = "".join(f"{'yes' if report.verdicts[h] else 'no':>10}" for h in header)
    print(f"{regex:<24}{row}")

# the full text report for one language
print()
print(analyze(regex_to_dfa("(ab)*"), "(ab)*").to_text())
