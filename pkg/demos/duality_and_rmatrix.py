"""Recover a coproduct from the dual function algebra, then solve for a
truncated universal R-matrix of family B.

Run with ``python3 demos/duality_and_rmatrix.py``.
"""

from e2quantum.duality import derive_dual_coproduct
from e2quantum.hopf import builtin_family
from e2quantum.rmatrix import intertwiner_residual, qybe_residual, solve_R_truncated

res = derive_dual_coproduct(X="J", degree=2)
print("Coproduct of J induced by the pairing with the function algebra")
print(f"  Delta(J) = {res.coproduct}")
print(f"  first-order constant: {res.correction_constant}")

print()
print("Truncated R-matrix for family B")
for order in (1, 2, 3):
    H = builtin_family("B", order)
    R = solve_R_truncated(H, order=order, degree=4)
    print(f"  order {order}: {R.status}, intertwines the coproducts: {intertwiner_residual(R, H).ok}")
    if order == 1:
        print(f"    R_1 = {R.terms[0]}")
    if order >= 2:
        residual = qybe_residual(R, order=order)
        print(f"    Yang-Baxter residual has {len(residual.terms)} terms")
