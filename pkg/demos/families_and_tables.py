"""Build every supported family member, print the five tables and report how
each one compares with the reference values."""

from fano4 import families

for k in range(1, 6):
    t = families.emit_table(k)
    print(f"Table {k}: {t.title}")
    print("  r  " + "  ".join(f"{c:>6}" for c in t.columns))
    for row in t.rows:
        print(f"  {row.r}  " + "  ".join(f"{v:>6}" for v in row.values))
    print()

bad = families.check_tables()
print("mismatching cells:", len(bad))

# surfaces feeding family B
for r in range(5):
    spec = families.family("B", r)
    print(f"B r={r}: surface {spec.surface.as_tuple()} base K4={spec.base.K4} -> K4={spec.record.K4}")

for name, r in (("A", 5), ("cone", 0)):
    try:
        families.family(name, r)
    except families.UnsupportedOpenQuestion as exc:
        print(f"{name} r={r}: unsupported ({exc})")
