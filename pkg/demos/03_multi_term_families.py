"""The six multi-term families: coefficients, residuals, agreement.

For every function family (dn, cn, sn) and parity of the term count p,
a p-term combination of shifted functions at parameter m reproduces a
single function at a transformed parameter m~.  Remarkably, all three
families with the same p produce the same m~.

Run:  python demos/03_multi_term_families.py
"""

from landen import Family, LandenSpec, coefficients, verify_identity

print("Coefficients at m = 0.9, p = 5 (odd families):")
for family in (Family.DN, Family.CN, Family.SN):
    co = coefficients(LandenSpec(family, 5), 0.9)
    a_sum = "None     " if co.a_sum is None else f"{co.a_sum:<9.6f}"
    print(f"  {family.value}: alpha = {co.alpha:<12.8f} A = {a_sum} "
          f"m~ = {co.m_tilde:.10e}  arg scale = {co.arg_scale:.8f}")

print("\nCoefficients at m = 0.9, p = 6 (even families; cn uses the")
print("alternating sum, sn the product normalization A5):")
for family in (Family.DN, Family.CN, Family.SN):
    co = coefficients(LandenSpec(family, 6), 0.9)
    print(f"  {family.value}: alpha = {co.alpha:<14.8f} A = {co.a_sum:<12.8f} "
          f"m~ = {co.m_tilde:.10e}")

print("\nIdentity residuals over one period of the left-hand side")
print("(128 points; 'rhs' is the p-term sum or product):")
header = "  p" + "".join(f"  {f.value:>10}" for f in Family)
print(header)
for p in range(2, 8):
    row = [f"  {p}"]
    for family in (Family.DN, Family.CN, Family.SN):
        res = verify_identity(LandenSpec(family, p), 0.5, 128)
        row.append(f"  {res.max_abs:>10.2e}")
    print("".join(row))

print("\nCross-family agreement of m~ (worst pairwise difference):")
for m in (0.25, 0.5, 0.9, 0.99):
    worst = 0.0
    for p in range(2, 8):
        vals = [coefficients(LandenSpec(f, p), m).m_tilde for f in Family]
        worst = max(worst, max(vals) - min(vals))
    print(f"  m = {m:<5}: {worst:.3e}")
