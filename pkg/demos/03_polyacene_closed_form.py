# Closed forms for linear chains, and why the delta numerator ends in -x^3.
#
# The closed forms are rational functions; dividing out (x^2 - 1) exactly is
# itself a check, because a wrong numerator leaves a remainder.

from edgehosoya.poly import X_SQUARED_MINUS_ONE, InexactDivision, divide_exact
from edgehosoya.polyacene import beta_closed, delta_closed, delta_numerator, edge_hosoya_closed
from edgehosoya.indices import edge_hyper_wiener, edge_wiener

for h in range(1, 6):
    p = edge_hosoya_closed(h)
    print(f"L_{h}: W_e={edge_wiener(p):>6}  WW_e={edge_hyper_wiener(p):>7}  H_e={p}")

print("\nbeta_3 =", beta_closed(3))
print("delta_3 =", delta_closed(3))

try:
    divide_exact(delta_numerator(1, tail_x3=+1), X_SQUARED_MINUS_ONE)
except InexactDivision as exc:
    print("\n+x^3 reading:", exc)

p = edge_hosoya_closed(10_000)
print("\nL_10000: degree", p.degree, "W_e", edge_wiener(p))
