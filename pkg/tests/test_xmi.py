import random

import pytest
from hypothesis import given, settings

from ntiers.diff import diff
from ntiers.errors import DocumentError, UnresolvedPathError, ValidationFailed
from ntiers.metamodel import CrudProjectPackage, UmlPackage
from ntiers.transform import transform
from ntiers.xmi import load_model, model_kind, parse_pim, parse_psm, serialize_pim, serialize_psm

from pimgen import pims, random_pim

HEAD = '<?xml version="1.0" encoding="UTF-8"?>\n'
PIM_OPEN = '<UmlMM:UmlPackage xmlns:UmlMM="http://UmlMM.ecore" name="p">'

EMPTY_PSM = """<?xml version="1.0" encoding="UTF-8"?>
<NtiersMM:CrudProjectPackage xmlns:xmi="http://www.omg.org/XMI" xmlns:NtiersMM="http://NtiersMM.ecore" name="crudp">
  <uPack name="presentationPackage">
    <vPack name="viewPackage">
    </vPack>
    <cPack name="controllerPackage">
      <actionmapping>
      </actionmapping>
    </cPack>
  </uPack>
  <bPack name="businessPackage">
  </bPack>
  <dPack name="daoPackage">
  </dPack>
</NtiersMM:CrudProjectPackage>
"""


def test_parse_laboratory(lab_pim):
    assert lab_pim.name == "laboratoire"
    assert [c.name for c in lab_pim.classes] == ["Patient", "Request", "Result", "Sample"]
    for c in lab_pim.classes:
        assert [o.name for o in c.operations] == ["create", "remove", "update", "display"]
    assert lab_pim.validation.ok and lab_pim.sealed


def test_parse_empty_package():
    pim = parse_pim(HEAD + PIM_OPEN + "</UmlMM:UmlPackage>")
    assert pim.name == "p" and pim.classes == ()


@pytest.mark.parametrize(
    "body",
    [
        "<widget/>",
        '<class name="A"><widget/></class>',
        '<class name="A" abstract="true"/>',
        "<class/>",
        '<class name="A"><operation name="f"><parameter name="x"/></operation></class>',
        '<class name="A">text</class>',
    ],
)
def test_schema_violations(body):
    with pytest.raises(DocumentError) as exc:
        parse_pim(HEAD + PIM_OPEN + body + "</UmlMM:UmlPackage>")
    assert exc.value.code == "schema-violation"


def test_wrong_root_is_schema_violation(lab_psm):
    with pytest.raises(DocumentError) as exc:
        parse_pim(serialize_psm(lab_psm))
    assert exc.value.code == "schema-violation"
    with pytest.raises(DocumentError):
        parse_psm(serialize_pim(UmlPackage("p")))


@pytest.mark.parametrize("parse", [parse_pim, parse_psm])
def test_malformed_xml(parse):
    with pytest.raises(DocumentError) as exc:
        parse("<UmlMM:UmlPackage")
    assert exc.value.code == "xml-malformed"


def test_validation_failure_is_attached_or_raised():
    doc = HEAD + PIM_OPEN + '<class name="Patient"/><class name="Patient"/></UmlMM:UmlPackage>'
    with pytest.raises(ValidationFailed) as exc:
        parse_pim(doc)
    assert exc.value.code == "validation-failed"
    assert exc.value.model.name == "p"
    pim = parse_pim(doc, strict=False)
    assert pim.validation.codes() == ["duplicate-classifier-name"]


def test_pim_round_trip(lab_pim):
    text = serialize_pim(lab_pim)
    again = parse_pim(text)
    assert diff(lab_pim, again).empty
    assert serialize_pim(again) == text


def test_services_line(lab_psm):
    text = serialize_psm(lab_psm, full=False)
    assert '    <services name="IPatientService" implementedBy="//@bPack/@serviceimpl.0"/>\n' in text
    assert '    <serviceimpl name="PatientServiceImpl" interfaces="//@bPack/@services.0"/>\n' in text
    assert '    <dto name="PatientDTO" pojos="//@dPack/@pojo.0"/>\n' in text
    assert '    <pojo name="Patient" dto="//@bPack/@dto.0"/>\n' in text


def test_reference_attributes_are_alphabetical(lab_psm):
    text = serialize_psm(lab_psm)
    assert (
        '<action name="CreatePatientEndAction" form="//@uPack/@cPack/@actionmapping/@form.0" '
        'forward="//@uPack/@vPack/@jsp.2"/>'
    ) in text
    assert (
        '<form name="CreatePatientForm" attribute="//@uPack/@cPack/@actionmapping/@action.1" '
        'input="//@uPack/@vPack/@jsp.0"/>'
    ) in text


def test_full_output_has_declarations(lab_psm):
    text = serialize_psm(lab_psm)
    assert '      <parameter name="patient" type="Patient" direction="out"/>' in text
    assert '      <attribute name="birthDate" type="Date"/>' in text
    assert "<method" not in serialize_psm(lab_psm, full=False)


def test_empty_psm_bytes():
    assert serialize_psm(transform(UmlPackage("p")).psm) == EMPTY_PSM


def test_serialize_invalid_model(lab_psm):
    psm = lab_psm.copy()
    psm.dao_package.daoimpls[0].interfaces.clear()
    with pytest.raises(ValidationFailed) as exc:
        serialize_psm(psm)
    assert exc.value.code == "invalid-model"


def test_serialization_is_deterministic(lab_psm):
    assert serialize_psm(lab_psm) == serialize_psm(lab_psm) == serialize_psm(lab_psm.copy())


def test_parse_golden_counts(data_dir):
    psm = parse_psm((data_dir / "golden_laboratory.xml").read_bytes())
    dp, bp = psm.dao_package, psm.business_package
    assert [len(x) for x in (bp.services, bp.serviceimpls, bp.dtos, dp.daos, dp.pojos, dp.daoimpls)] == [4] * 6
    assert bp.services[2].implemented_by.name == "ResultServiceImpl"


def test_parse_original_listing_without_controller(data_dir):
    psm = parse_psm((data_dir / "original_laboratory_listing.xml").read_bytes())
    assert psm.actions == () and psm.pages == ()
    assert psm.business_package.serviceimpls[2].name == "SampletServiceImpl"


def test_dangling_reference(lab_psm):
    text = serialize_psm(lab_psm, full=False).replace('implementedBy="//@bPack/@serviceimpl.0"', 'implementedBy="//@bPack/@serviceimpl.9"')
    with pytest.raises(UnresolvedPathError) as exc:
        parse_psm(text)
    assert exc.value.code == "unresolved-path"


def test_reference_to_wrong_kind(lab_psm):
    text = serialize_psm(lab_psm, full=False).replace('implementedBy="//@bPack/@serviceimpl.0"', 'implementedBy="//@bPack/@dto.0"')
    with pytest.raises(UnresolvedPathError):
        parse_psm(text)


def test_unknown_psm_element(lab_psm):
    text = serialize_psm(lab_psm).replace("<bPack name=\"businessPackage\">", "<bPack name=\"businessPackage\">\n<table name=\"T\"/>")
    with pytest.raises(DocumentError) as exc:
        parse_psm(text)
    assert exc.value.code == "schema-violation"


def test_psm_round_trip(lab_psm):
    text = serialize_psm(lab_psm)
    again = parse_psm(text)
    assert diff(lab_psm, again).empty
    assert serialize_psm(again) == text


@settings(max_examples=30, deadline=None)
@given(pims())
def test_psm_round_trip_property(pim):
    psm = transform(pim).psm
    text = serialize_psm(psm)
    again = parse_psm(text)
    assert diff(psm, again).empty
    assert serialize_psm(again) == text


def test_load_model_detects_kind(tmp_path, lab_psm, lab_pim):
    (tmp_path / "a.xml").write_text(serialize_pim(lab_pim))
    (tmp_path / "b.xml").write_text(serialize_psm(lab_psm))
    assert isinstance(load_model(tmp_path / "a.xml"), UmlPackage)
    assert isinstance(load_model(tmp_path / "b.xml"), CrudProjectPackage)
    assert model_kind(serialize_pim(lab_pim)) == "pim"


def test_names_are_escaped():
    psm = transform(random_pim(random.Random(3), 2, 2)).psm.copy()
    psm.name = 'crud"<&>'
    assert parse_psm(serialize_psm(psm)).name == 'crud"<&>'
