"""Scan the 3-fold bases for the Picard number bound of the 4-folds built on
them by point blow-ups."""

from fano4 import threefolds

scan = threefolds.elementary_bound_scan(6)
for row in scan.rows:
    b = row.base
    print(f"{b.name:28s} -K^3={b.minusK3:3d} rho={b.rho}  {row.describe()}")
print("largest rho_X:", scan.global_max_rho_X)
print("h0(-K) on a degree 64 base:", threefolds.h0_minusK(64))
