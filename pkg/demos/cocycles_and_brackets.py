"""Integrate cobrackets to group cocycles on E(2) and read off the
multiplicative Poisson brackets.

Run with ``python3 demos/cocycles_and_brackets.py``.
"""

from e2quantum.cocycle import assemble_cocycle, verify_cocycle
from e2quantum.lie import builtin_cobracket
from e2quantum.poisson import (
    check_jacobi,
    check_multiplicativity,
    complex_generators,
    poisson_from_cocycle,
)

z = complex_generators()

for case in ("delta1", "delta2", "delta3", "delta4"):
    phi = assemble_cocycle(builtin_cobracket(case))
    P = poisson_from_cocycle(phi)
    print(f"{case}")
    print(f"  cocycle phi(a, b, c) = {phi.wedge}")
    print(f"  cocycle identity holds: {verify_cocycle(phi).ok}")
    print(f"  Jacobi: {check_jacobi(P).ok}, multiplicative: {check_multiplicativity(P).ok}")
    print(f"  {{eta, etabar}} = {P.bracket(z['eta'], z['etabar'])}")
    print(f"  {{eta, t}}      = {P.bracket(z['eta'], z['t'])}")
    print()

print("Left-invariant fields with the same cocycle do not give a Poisson-Lie bracket:")
for case in ("delta1", "delta3", "delta4"):
    P = poisson_from_cocycle(assemble_cocycle(builtin_cobracket(case)), chirality="left")
    v = check_multiplicativity(P)
    print(f"  {case}: multiplicative {v.ok}, witness {v.witness}")
