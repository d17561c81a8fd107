"""Emit stub source files for every generated element.

Run:  python3 demos/04_scaffold.py [out_dir]
"""

import sys
import tempfile
from pathlib import Path

from ntiers import transform
from ntiers.data import laboratory_pim_path
from ntiers.scaffold import DEFAULT_TEMPLATES, TemplateSet, emit_scaffold
from ntiers.xmi import load_pim

psm, _ = transform(load_pim(laboratory_pim_path()))
out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp(prefix="ntiers-"))

# %% Default templates, one per element kind.
manifest = emit_scaffold(psm, TemplateSet(), out)
print(f"{len(manifest)} files under {out}")
for entry in list(manifest)[:6]:
    print(f"  {entry.path:40s} from {entry.source}")

print("\n--- dao/PatientDaoImpl.daoimpl.txt ---")
print((out / "dao" / "PatientDaoImpl.daoimpl.txt").read_text())

# %% Templates can be overridden per kind; unknown placeholders are rejected.
custom = dict(DEFAULT_TEMPLATES, pojo="public class {name} {{\n{attributes}\n}}\n")
emit_scaffold(psm, TemplateSet(custom), out)
print("--- dao/Patient.pojo.txt (custom template) ---")
print((out / "dao" / "Patient.pojo.txt").read_text())
