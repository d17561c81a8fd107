"""Fragment paths: how cross references are written in the XML documents.

Run:  python3 demos/02_fragment_paths.py
"""

from ntiers import transform
from ntiers.data import laboratory_pim_path
from ntiers.metamodel import FragmentPath, fragment_path_of, resolve_fragment
from ntiers.errors import UnresolvedPathError
from ntiers.xmi import load_pim

psm, _ = transform(load_pim(laboratory_pim_path()))

# %% Every contained element has a path from the root. Multi-valued
# features carry an index; single-valued ones (the packages) do not.
for element in [psm.business_package, psm.business_package.serviceimpls[3], psm.pages[0], psm.actions[1].forward]:
    print(f"{fragment_path_of(element).render():40s} {type(element).__name__} {getattr(element, 'name', '')}")

# %% Parsing and resolving are the inverse of computing a path.
path = FragmentPath.parse("//@uPack/@cPack/@actionmapping/@form.2")
form = resolve_fragment(psm, path)
print("\nresolved", path, "->", form.name)
assert fragment_path_of(form) == path

# %% Every element round-trips.
count = 0
for element in psm.walk():
    assert resolve_fragment(psm, fragment_path_of(element)) is element
    count += 1
print(f"{count} elements: path -> element -> path is the identity")

# %% A path that points nowhere is an error, not a silent None.
try:
    resolve_fragment(psm, "//@dPack/@pojo.99")
except UnresolvedPathError as exc:
    print("\nexpected failure:", exc.code, "-", exc)
