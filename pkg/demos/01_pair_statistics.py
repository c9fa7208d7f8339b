"""
Pair statistics on a toy record collection
==========================================

"""

from coocnet import (
    AnalysisMode,
    ScenarioRecord,
    analyze,
    build_incidence,
    coincidence,
)

# four scenarios, two events: A and B share exactly one scenario
records = [
    ScenarioRecord("r1", frozenset({"A", "B"})),
    ScenarioRecord("r2", frozenset({"A"})),
    ScenarioRecord("r3", frozenset({"B"})),
    ScenarioRecord("r4", frozenset()),
]
inc = build_incidence(records)
print("events:", inc.catalog.labels)
print("frequencies:", inc.catalog.frequencies.tolist())

# the coincidence matrix counts joint occurrences; the diagonal holds the
# per-event frequencies
cm = coincidence(inc)
print("C =")
print(cm.to_dense())

# with both events in half the scenarios, one shared scenario is exactly
# the independence expectation: residuals are zero and no edge appears
table = analyze(inc)
for edge in table:
    print(
        f"{inc.catalog.labels[edge.i]}-{inc.catalog.labels[edge.j]}: "
        f"c={edge.c} expected={edge.expected} e={edge.e} d={edge.d} "
        f"adjacent={edge.adjacent}"
    )

# push the pair above expectation and the verdict flips
records = [
    ScenarioRecord("r1", frozenset({"A", "B"})),
    ScenarioRecord("r2", frozenset({"A", "B"})),
    ScenarioRecord("r3", frozenset()),
    ScenarioRecord("r4", frozenset()),
]
table = analyze(build_incidence(records))
(edge,) = list(table)
print("doubled pair: e =", edge.e, "d =", edge.d, "adjacent =", edge.adjacent)

# sample mode asks for significance instead of a bare positive sign;
# d = 2 sits at a one-sided p just above 2%
table = analyze(build_incidence(records), AnalysisMode(kind="sample", alpha=0.05))
(edge,) = list(table)
print("sample mode: p =", edge.p, "adjacent =", edge.adjacent)
