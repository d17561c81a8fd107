import pytest
from hypothesis import given, settings

from ntiers.diff import diff, structurally_equal
from ntiers.errors import KindMismatchError
from ntiers.metamodel import AttributeDecl
from ntiers.transform import transform
from ntiers.xmi import load_psm

from pimgen import pims


def test_reflexive(lab_psm, lab_pim):
    assert diff(lab_psm, lab_psm).empty
    assert diff(lab_pim, lab_pim).empty


def test_one_renamed_pojo(lab_psm):
    other = lab_psm.copy()
    other.dao_package.pojos[2].name = "Outcome"
    for mode in (True, False):
        d = diff(lab_psm, other, order_sensitive=mode)
        assert [(e.kind, e.path) for e in d] == [("renamed", "//@dPack/@pojo.2")]


def test_relinked(lab_psm):
    other = lab_psm.copy()
    am = other.ui_package.controller_package.action_mapping
    am.actions[0].forward.target = other.pages[0]
    d = diff(lab_psm, other)
    assert [(e.kind, e.path) for e in d] == [("relinked", "//@uPack/@cPack/@actionmapping/@action.0/@forward")]


def test_added_removed_symmetry(lab_psm):
    smaller = lab_psm.copy()
    smaller.ui_package.view_package.pages.pop()
    # actions forwarding to the dropped page are reported as relinked as well
    ab, ba = diff(lab_psm, smaller), diff(smaller, lab_psm)
    assert [e.path for e in ab.of_kind("removed")] == [e.path for e in ba.of_kind("added")]
    assert len(ab.of_kind("added")) == len(ba.of_kind("removed")) == 0


def test_changed_property(lab_psm):
    other = lab_psm.copy()
    other.dao_package.pojos[0].attributes = (AttributeDecl("id", "Integer"),)
    assert [e.kind for e in diff(lab_psm, other)] == ["changed"]


def test_order_insensitive(lab_psm):
    other = lab_psm.copy()
    other.dao_package.daos.reverse()
    other.ui_package.view_package.pages.reverse()
    assert not diff(lab_psm, other).empty
    assert diff(lab_psm, other, order_sensitive=False).empty


def test_kind_mismatch(lab_psm, lab_pim):
    with pytest.raises(KindMismatchError) as exc:
        diff(lab_pim, lab_psm)
    assert exc.value.code == "kind-mismatch"


def test_golden_against_transform(data_dir, lab_pim):
    from ntiers.xmi import parse_psm, serialize_psm

    generated = parse_psm(serialize_psm(transform(lab_pim).psm, full=False))
    golden = load_psm(data_dir / "golden_laboratory.xml")
    assert diff(generated, golden, order_sensitive=False).empty
    assert not diff(generated, golden, order_sensitive=True).empty


def test_golden_with_wrong_link_is_detected(data_dir, lab_pim):
    from ntiers.xmi import parse_psm, serialize_psm

    generated = parse_psm(serialize_psm(transform(lab_pim).psm, full=False))
    broken = load_psm(data_dir / "golden_laboratory.xml").copy()
    broken.actions[0].forward.target = broken.pages[5]
    assert [e.kind for e in diff(generated, broken, order_sensitive=False)] == ["relinked"]


@settings(max_examples=25, deadline=None)
@given(pims(), pims())
def test_diff_kind_symmetry(p, q):
    a, b = transform(p).psm, transform(q).psm
    for mode in (True, False):
        ab, ba = diff(a, b, mode), diff(b, a, mode)
        assert len(ab.of_kind("added")) == len(ba.of_kind("removed"))
        assert len(ab.of_kind("removed")) == len(ba.of_kind("added"))
        assert structurally_equal(a, b, mode) == structurally_equal(b, a, mode)
