"""Check the positivity decompositions of -K and list the low-degree curves
through the blown-up points together with their anticanonical degrees."""

from fano4 import families

for fam, rs in (("A", range(5)), ("B", range(5)), ("C", range(3))):
    for r in rs:
        rep = families.decomposition_certificate(fam, r)
        coeffs = ", ".join(f"{c}*{label}" for c, label, _ in rep.terms)
        flag = "ok" if rep.ok else "FAILS"
        print(f"{fam} r={r}: {flag:5s} identity={rep.identity_ok} nonneg={rep.coefficients_nonneg}  [{coeffs}]")

# B at r=0: the identity holds but the E coefficient is r-1 = -1
print()
for n in (2, 5, 8):
    print(f"audit with {n} points")
    for e in families.general_position_audit(n):
        print(f"  {e.curve:42s} degree {e.degree:3d}  {e.cls.value}")
