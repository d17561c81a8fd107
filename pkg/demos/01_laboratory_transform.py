"""Compile the bundled laboratory model into an N-tiers CRUD model.

Run:  python3 demos/01_laboratory_transform.py
"""

from ntiers import transform
from ntiers.transform import RULES
from ntiers.data import laboratory_pim_path
from ntiers.xmi import load_pim, serialize_psm

# %% The source model: four classes, each with create/remove/update/display.
pim = load_pim(laboratory_pim_path())
print("package:", pim.name)
for cls in pim.classes:
    ops = ", ".join(op.name for op in cls.operations)
    print(f"  {cls.name:8s} attributes={len(cls.attributes)}  operations: {ops}")

# %% Apply the eight rules. The result is sealed; the trace records every rule firing.
psm, trace = transform(pim)
print("\ntarget root:", psm.name)
print("pojos:   ", [p.name for p in psm.dao_package.pojos])
print("services:", [s.name for s in psm.business_package.services])
print("pages:   ", len(psm.pages), " actions:", len(psm.actions), " forms:", len(psm.forms))

# %% Cross references: each interface knows its implementation and vice versa.
iservice = psm.business_package.services[0]
print(f"\n{iservice.name} -> {iservice.implemented_by.name}")
print(f"{iservice.implemented_by.name} <- {[i.name for i in iservice.implemented_by.interfaces]}")

# %% Controller wiring: every action forwards to the class's display page;
# the create form is filled on its own page and submitted to the End action.
create = next(a for a in psm.actions if a.name == "CreatePatientAction")
end = next(a for a in psm.actions if a.name == "CreatePatientEndAction")
print(f"\n{create.name}: forward -> {create.forward.target.name}")
print(f"{end.name}: forward -> {end.forward.target.name}, form -> {end.form.name}")
print(f"{end.form.name}: input -> {end.form.input.name}, attribute -> {end.form.attribute.name}")

# %% The trace, grouped by rule.
print("\ntrace links per rule:")
for rule in RULES:
    print(f"  {rule:12s} {len(trace.by_rule(rule))}")
print("first link:", next(iter(trace)).to_json())

# %% Serialization is byte-deterministic.
text = serialize_psm(psm)
assert text == serialize_psm(psm)
print("\n" + "\n".join(text.splitlines()[:12]) + "\n  ...")
