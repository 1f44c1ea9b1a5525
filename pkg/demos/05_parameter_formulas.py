#!/usr/bin/env python3
"""The closed-form parameter formulas behind the randomized colourers.

odd_surplus(d) is the palette margin beyond the maximum degree that the
resampling analysis needs; resample_size(d) is the matching resample-set
size, defined through the lower Lambert W branch. Twice the resample size
never exceeds the surplus once d >= 49, which is what lets the schedule
use m = floor(surplus/2).
"""

from oddcolour import bounds

print(f"  {'degree':>8} {'surplus':>8} {'resample m':>11} {'palette':>8} {'2m <= surplus':>14}")
print("  " + "-" * 56)
for d in (49, 64, 128, 512, 4096, 10 ** 5):
    p = bounds.odd_params(d)
    print(f"  {d:>8} {p.eta:>8} {p.m:>11} {p.k:>8} {str(2 * p.m <= p.eta):>14}")

print()
print("  Lambert W lower branch (bracketed bisection, residual <= 1e-12|y|):")
for y in (-0.3678794, -0.1, -0.01, -1e-6):
    x = bounds.lambert_wm1(y)
    print(f"    W(-1, {y:>12.7g}) = {x:>12.6f}   residual {abs(x * 2.718281828459045 ** x - y):.2e}")

print()
print("  h-odd surplus: headroom t, resample size m, surplus eta, closed cap")
print(f"  {'h':>4} {'eps':>5} {'t':>4} {'m':>4} {'eta':>7} {'cap':>9}")
print("  " + "-" * 38)
for h, eps in ((2, 4), (3, 8), (5, 16), (9, 16), (17, 64), (33, 128)):
    t, m, eta, cap = bounds.hodd_surplus(h, eps, 64)
    print(f"  {h:>4} {eps:>5} {t:>4} {m:>4} {eta:>7} {cap:>9.0f}")

print()
checks = sum(bounds.factorial_ratio_check(n) for n in range(2, 301, 2))
print(f"  factorial halving bound n!/(n/2)! <= sqrt(2)(2n/e)^(n/2): {checks}/150 even n pass")

print()
print("  greedy h-odd palette h*maxdeg(H) + maxdeg(G) + 1:")
for h, dg, dh in ((1, 2, 2), (2, 3, 3), (4, 6, 6)):
    print(f"    h={h}, maxdeg(G)={dg}, maxdeg(H)={dh}: {bounds.greedy_hodd_bound(h, dg, dh)}")
