"""The four Lie bialgebra structures on e(2) and which of them are coboundaries.

Run with ``python3 demos/classification_and_coboundaries.py``.
"""

from e2quantum.lie import (
    J,
    P1,
    P2,
    WedgeElement,
    builtin_cobracket,
    check_bialgebra_axioms,
    classification_constraints,
    coboundary_solve,
    make_e2,
    schouten_mcybe,
)
from e2quantum.scalars import I

g = make_e2()
constraints = classification_constraints(g)

print("Cobrackets on e(2) in the basis P1, P2, J")
for case in ("delta1", "delta2", "delta3", "delta4"):
    delta = builtin_cobracket(case)
    print(f"  {case}: {delta}")
    print(f"    axioms {bool(check_bialgebra_axioms(delta))}, constraints {bool(constraints.satisfied_by(delta))}")

print()
print("Solving delta = dr for an antisymmetric r")
for case in ("delta1", "delta2", "delta3", "delta4"):
    res = coboundary_solve(builtin_cobracket(case))
    if res.solvable:
        print(f"  {case}: r = {res.r}, ambiguity spanned by {[str(w) for w in res.ambiguity]}")
    else:
        print(f"  {case}: no r exists, certificate residual {res.certificate.residual}")

print()
print("Schouten bracket [[r, r]] of the two coboundary r-matrices")
for name, r in (("r3", WedgeElement(g, {(P2, J): -1})), ("r4", WedgeElement(g, {(P1, J): -1, (P2, J): -I}))):
    res = schouten_mcybe(r)
    print(f"  {name}: [[r,r]] = 0: {bool(res.cybe)}, invariant: {bool(res.mcybe)}")
