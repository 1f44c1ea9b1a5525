#!/usr/bin/env python3
"""Monte-Carlo verification of the concentration bounds.

The biased +-1 walk models the odd-colour count of a constraint while its
resample set is redrawn: the count drops only when the fresh colour hits
one of the currently odd colours, which happens with probability at most
(current count)/tau when tau colours are available. The analytic tail
bound must dominate the adversarial simulation, which sits exactly on the
allowed down-step probability.
"""

from oddcolour import bounds

SAMPLES = 200_000

print("  adversarial biased walk: empirical P(S_n <= k) vs analytic bound")
print(f"  {'n':>4} {'k':>4} {'tau':>6} {'empirical':>12} {'bound':>12} {'ok':>4}")
print("  " + "-" * 48)
for n in (10, 20, 40):
    for k in (0, n // 4):
        for tau in (4 * n, 16 * n):
            est = bounds.simulate_walk(bounds.WalkConfig(n=n, k=k, tau=tau),
                                       SAMPLES, seed=n + k + tau)
            analytic = bounds.biased_walk_tail_bound(n, k, tau)
            ok = est.p_hat <= analytic + 3 * est.half_width
            print(f"  {n:>4} {k:>4} {tau:>6} {est.p_hat:>12.3g} {analytic:>12.3g} "
                  f"{'yes' if ok else 'NO':>4}")

print()
print("  binomial tails vs the two exponential bounds")
print(f"  {'n':>5} {'p':>5} {'dev':>5} {'low emp':>10} {'low bound':>10} "
      f"{'high emp':>10} {'high bound':>10}")
print("  " + "-" * 62)
for n, p, dev in ((200, 0.5, 20), (500, 0.1, 15), (1000, 0.3, 40)):
    mu = n * p
    tails = bounds.binomial_tails(n, p, dev, SAMPLES, seed=7)
    lo = bounds.chernoff_lower(mu, dev)
    hi = bounds.chernoff_upper(mu, dev)
    print(f"  {n:>5} {p:>5} {dev:>5} {tails.emp_lower:>10.4g} {lo:>10.4g} "
          f"{tails.emp_upper:>10.4g} {hi:>10.4g}")

print()
print("  sanity: the never-step-down policy drifts straight up")
est = bounds.simulate_walk(bounds.WalkConfig(n=25, k=20, tau=1.0, policy="never"),
                           10_000, seed=1)
print(f"    mean final state {est.mean_final:.1f} (start 0 + 25 steps), "
      f"P(S_n <= 20) = {est.p_hat}")
