"""The classical quadratic transformation and its two-term rewrite.

Each of sn, cn, dn at the transformed parameter m~ = (1-k')^2/(1+k')^2
equals a rational combination of the functions at m.  The dn identity can
also be written as a two-term sum with arguments a quarter period apart,
which is the p = 2 seed of the general multi-term formulas.

Run:  python demos/02_two_term_transformation.py
"""

import numpy as np

from landen import (classic_cn, classic_dn, classic_dn_two_term,
                    classic_m_tilde, classic_sn, complete_elliptic_k)

for m in (0.5, 0.9):
    mt = classic_m_tilde(m)
    kp = np.sqrt(1 - m)
    print(f"m = {m}:  k' = {kp:.6f}  ->  m~ = {mt:.10f}")
    span = 4 * complete_elliptic_k(mt)
    u = np.linspace(0.0, span, 200) / (1 + kp)
    for name, op in (("sn", classic_sn), ("cn", classic_cn), ("dn", classic_dn)):
        res = op(u, m)
        print(f"  {name}: max |lhs - rhs| over a period = "
              f"{np.max(np.abs(res.lhs - res.rhs)):.3e}")
    x = np.linspace(0.0, 2 * complete_elliptic_k(mt), 200)
    two = classic_dn_two_term(x, m)
    print(f"  dn two-term sum:                  = "
          f"{np.max(np.abs(two.lhs - two.rhs)):.3e}")
    print()

print("Sample of the two-term sum at m = 0.9, x = 2.3:")
two = classic_dn_two_term(2.3, 0.9)
print(f"  dn(x, m~)                      = {two.lhs:.15f}")
print(f"  [dn(u, m) + dn(u + K, m)]/(1+k') = {two.rhs:.15f}")
