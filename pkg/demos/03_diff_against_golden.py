"""Compare a transformation result with a reference document.

Run:  python3 demos/03_diff_against_golden.py
"""

from pathlib import Path

from ntiers import transform
from ntiers.data import laboratory_pim_path
from ntiers.diff import diff
from ntiers.metamodel import validate_psm
from ntiers.xmi import load_pim, load_psm, parse_psm, serialize_psm

data = Path(__file__).resolve().parent.parent / "tests" / "data"
# The reference listing carries names and references only, so compare it
# with the compact ("compat") rendering of the result.
psm = parse_psm(serialize_psm(transform(load_pim(laboratory_pim_path())).psm, full=False))

# %% The corrected reference listing matches once element order is ignored.
golden = load_psm(data / "golden_laboratory.xml")
result = diff(psm, golden, order_sensitive=False)
print("golden, order-insensitive:", "identical" if result.empty else f"{len(result)} differences")

# %% With order taken into account, the listing's ordering shows up as renames.
ordered = diff(psm, golden)
print("golden, order-sensitive:  ", len(ordered), "differences, e.g.")
for entry in list(ordered)[:3]:
    print("   ", entry.format())

# %% The listing as originally published has broken links; validation reports them.
original = load_psm(data / "original_laboratory_listing.xml")
report = validate_psm(original)
print(f"\noriginal listing: {len(report)} diagnostics")
for d in list(report)[:4]:
    print("   ", d.format())
