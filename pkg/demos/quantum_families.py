"""Quantum deformations of E(2): Hopf axioms, classical limits, star
structures and the semiclassical link to the Poisson brackets.

Run with ``python3 demos/quantum_families.py``.
"""

from e2quantum.cocycle import assemble_cocycle
from e2quantum.hopf import (
    builtin_family,
    check_hopf_axioms,
    check_quantum_multiplicativity,
    check_star_structure,
    classical_limit_cobracket,
)
from e2quantum.poisson import poisson_from_cocycle, semiclassical_check, semiclassical_partner

ORDER = 6

print(f"Hopf axioms (series families truncated at order {ORDER})")
for tag in ("A", "B", "C", "D", "Aprime", "Bprime", "Dprime"):
    report = check_hopf_axioms(builtin_family(tag, ORDER))
    failed = [name for name, v in report.verdicts.items() if not v]
    print(f"  {tag:7} {'all hold' if not failed else 'fail: ' + ', '.join(failed)}")

print()
print("Classical limits of the enveloping-algebra families")
for tag in ("A", "B", "C", "D"):
    lim = classical_limit_cobracket(builtin_family(tag, ORDER))
    print(f"  {tag}: {lim.scalar} * {lim.case}")

print()
print("Star structures with the default involution")
for tag in ("B", "C"):
    v = check_star_structure(builtin_family(tag, ORDER))
    print(f"  {tag}: {v.ok}" + ("" if v else f", fails at {v.witness}"))

print()
print("First-order commutators against the Poisson bracket")
for tag in ("Aprime", "Bprime", "Dprime"):
    P = poisson_from_cocycle(assemble_cocycle(semiclassical_partner(tag)))
    res = semiclassical_check(P, builtin_family(tag))
    print(f"  {tag}: single constant found: {res.verdict.ok}, lambda = {res.constant}")

print()
print(f"Dprime: [Delta eta, Delta etabar] = ih Delta c: {check_quantum_multiplicativity().ok}")
