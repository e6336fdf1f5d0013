import json

import pytest

from hopfcross.braiding import h4_c3_quadruple
from hopfcross.exactfield import Field, zeta
from hopfcross.fixtures import FAULTS, build_fixture_documents, data_path
from hopfcross.hopfcore import cyclic_group_algebra, sweedler_h4
from hopfcross.presets import corpus, h4_c3_system
from hopfcross.serial import (
    DocumentError,
    dump_json,
    field_from_spec,
    hopf_from_doc,
    hopf_to_doc,
    linmap_from_doc,
    linmap_to_doc,
    quadruple_from_doc,
    quadruple_to_doc,
    system_from_doc,
    system_to_doc,
)
from hopfcross.tensorlinalg import LinMap

DOCS = build_fixture_documents()


@pytest.mark.parametrize("rel", sorted(DOCS))
def test_bundled_fixture_is_up_to_date(rel):
    assert data_path(rel).read_text() == dump_json(DOCS[rel])


def test_every_fault_file_is_bundled():
    for fault in FAULTS:
        for rel in fault.files:
            assert rel in DOCS


@pytest.mark.parametrize("H", [sweedler_h4(), sweedler_h4(Field(3)), cyclic_group_algebra(4, "c")], ids=lambda H: H.name)
def test_hopf_round_trip(H):
    doc = json.loads(dump_json(hopf_to_doc(H)))
    back = hopf_from_doc(doc)
    assert (back.mult, back.comult, back.counit, back.antipode, back.labels) == (H.mult, H.comult, H.counit, H.antipode, H.labels)


@pytest.mark.parametrize("name", sorted(corpus()))
def test_system_round_trip(name):
    S = corpus()[name]
    assert system_from_doc(json.loads(dump_json(system_to_doc(S)))) == S


def test_quadruple_and_map_round_trip():
    F = Field(3)
    S = h4_c3_system(F)
    q = h4_c3_quadruple(2, zeta(3), F, "corrected")
    assert quadruple_from_doc(json.loads(dump_json(quadruple_to_doc(q))), S) == q
    M = LinMap((2,), (3,), {(0, 0): 1, (2, 1): zeta(3)})
    assert linmap_from_doc(linmap_to_doc(M)) == M


def test_references_resolve_relative_to_the_document():
    S = system_from_doc(str(data_path("h4_c3_system.json")))
    assert S == h4_c3_system(Field(3))


def test_field_specs():
    assert field_from_spec(None) is None
    assert field_from_spec("Q") == Field(1) == field_from_spec("rational")
    assert field_from_spec("cyclotomic:3") == Field(3) == field_from_spec("3")
    with pytest.raises(DocumentError):
        field_from_spec("reals")


def test_session_field_joins_document_field():
    H = hopf_from_doc(str(data_path("c2.json")), field=Field(3))
    assert H.field == Field(3)
    with pytest.raises(DocumentError):
        system_from_doc(str(data_path("h4_c3_system.json")), field=Field(5))


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("mult"),
        lambda d: d.update(dim=0),
        lambda d: d.update(unit=["1"]),
        lambda d: d["mult"].append([0, 0, 9, "1"]),
        lambda d: d["mult"].append([0, 0]),
        lambda d: d["comult"].append([0, 0, 0, "1/0"]),
        lambda d: d["antipode"].append([0, 0, 1.5]),
        lambda d: d.update(field={"type": "finite"}),
        lambda d: d.update(basis_labels=["1"]),
    ],
)
def test_malformed_hopf_documents(mutate):
    doc = json.loads(dump_json(DOCS["c2.json"]))
    mutate(doc)
    with pytest.raises(DocumentError):
        hopf_from_doc(doc)


def test_unreadable_files(tmp_path):
    with pytest.raises(DocumentError):
        hopf_from_doc(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(DocumentError):
        hopf_from_doc(str(bad))
