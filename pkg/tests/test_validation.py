import pytest

from ntiers.metamodel import (
    AttributeDecl,
    UmlAttribute,
    UmlClass,
    UmlDataType,
    UmlOperation,
    UmlPackage,
    UmlParameter,
    validate_pim,
    validate_psm,
)
from ntiers.xmi import load_psm


def test_laboratory_pim_is_valid(lab_pim):
    assert validate_pim(lab_pim).ok


def test_duplicate_classifier():
    report = validate_pim(UmlPackage("p", [UmlClass("Patient"), UmlClass("Patient")]))
    assert report.codes() == ["duplicate-classifier-name"]
    assert report.diagnostics[0].path.render() == "//@class.1"


def test_unresolved_attribute_type():
    report = validate_pim(UmlPackage("p", [UmlClass("Patient", [UmlAttribute("x", "Unknown")])]))
    assert report.codes() == ["unresolved-type-ref"]
    assert report.diagnostics[0].severity == "error"


def test_class_datatype_name_clash():
    report = validate_pim(UmlPackage("p", [UmlClass("Date")], [UmlDataType("Date")]))
    assert report.codes() == ["duplicate-classifier-name"]


@pytest.mark.parametrize(
    "pim, code",
    [
        (UmlPackage("9p"), "invalid-identifier"),
        (UmlPackage("p", [UmlClass("patient")]), "invalid-class-name"),
        (UmlPackage("p", [UmlClass("Pa-tient")]), "invalid-identifier"),
        (UmlPackage("p", [UmlClass("A", [UmlAttribute("x", "A"), UmlAttribute("x", "A")])]), "duplicate-attribute-name"),
        (UmlPackage("p", [UmlClass("A", [], [UmlOperation("create"), UmlOperation("create")])]), "duplicate-operation-name"),
        (
            UmlPackage("p", [UmlClass("A", [], [UmlOperation("f", [UmlParameter("x", "A"), UmlParameter("x", "A")])])]),
            "duplicate-parameter-name",
        ),
        (UmlPackage("p", [UmlClass("A", [], [UmlOperation("f", [UmlParameter("x", "B")])])]), "unresolved-type-ref"),
        (UmlPackage("p", [UmlClass("A", [], [UmlOperation("f", [UmlParameter("x", "A", "inout")])])]), "invalid-direction"),
    ],
)
def test_pim_codes(pim, code):
    assert validate_pim(pim).codes() == [code]


@pytest.mark.parametrize(
    "classes, clashes",
    [
        ([UmlClass("Foo"), UmlClass("IFooDao")], 1),  # pojo IFooDao vs dao interface IFooDao
        ([UmlClass("Foo"), UmlClass("FooDaoImpl")], 1),
        # page, action, End action and form all clash
        ([UmlClass("Foo", [], [UmlOperation("create"), UmlOperation("Create")])], 4),
        ([UmlClass("Foo", [], [UmlOperation("remove"), UmlOperation("Remove")])], 1),
        ([UmlClass("Foo", [], [UmlOperation("create")]), UmlClass("FooEnd", [], [UmlOperation("create")])], 1),
    ],
)
def test_generated_name_collisions(classes, clashes):
    report = validate_pim(UmlPackage("p", classes))
    assert report.codes() == ["generated-name-collision"] * clashes


def test_prefixed_class_name_without_clash():
    # the pojo IFooService lives in the dao package, the interface IFooService in the business package
    assert validate_pim(UmlPackage("p", [UmlClass("Foo"), UmlClass("IFooService")])).ok


def test_validate_pim_does_not_modify(lab_pim):
    before = [(c.name, len(c.operations)) for c in lab_pim.classes]
    validate_pim(lab_pim)
    assert [(c.name, len(c.operations)) for c in lab_pim.classes] == before


def test_transform_output_validates(lab_psm):
    assert validate_psm(lab_psm).ok


def test_asymmetric_dao_link(lab_psm):
    psm = lab_psm.copy()
    psm.dao_package.daoimpls[0].interfaces.clear()
    report = validate_psm(psm)
    assert report.codes() == ["asymmetric-link"]
    assert report.diagnostics[0].path.render() == "//@dPack/@dao.0"


def test_dto_pojo_mismatch(lab_psm):
    psm = lab_psm.copy()
    psm.business_package.dtos[1].attributes = (AttributeDecl("other", "String"),)
    assert validate_psm(psm).codes() == ["dto-pojo-mismatch"]


def test_asymmetric_form_link(lab_psm):
    psm = lab_psm.copy()
    psm.actions[1].form = None
    assert validate_psm(psm).codes() == ["asymmetric-link"]


def test_reference_outside_model(lab_psm):
    psm = lab_psm.copy()
    other = lab_psm.copy()
    psm.dao_package.pojos[0].dto = other.business_package.dtos[0]
    assert "unresolved-reference" in validate_psm(psm).codes()


def test_naming_and_duplicates(lab_psm):
    psm = lab_psm.copy()
    psm.pages[0].name = "Wrong"
    psm.dao_package.pojos[1].name = "Patient"
    codes = validate_psm(psm).codes()
    assert "naming-convention" in codes
    assert "duplicate-name" in codes


def test_original_listing_defects_are_reported(data_dir):
    report = validate_psm(load_psm(data_dir / "original_laboratory_listing.xml"))
    paths = {(d.path.render(), d.code) for d in report}
    # misspelt names linked to correctly named partners
    assert ("//@bPack/@services.3", "link-name-mismatch") in paths
    assert ("//@bPack/@dto.1", "link-name-mismatch") in paths
    # swapped pojo->dto references
    assert ("//@dPack/@pojo.2", "asymmetric-link") in paths
    assert ("//@dPack/@pojo.3", "asymmetric-link") in paths
    assert not report.ok


def test_golden_listing_is_valid(data_dir):
    assert validate_psm(load_psm(data_dir / "golden_laboratory.xml")).ok
