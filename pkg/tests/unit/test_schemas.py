# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Versioned JSON document unit tests."""

import json

import pytest

import perm_two_group
from autos import automorphism_group
from cohomology import Cochain, trivial_module
from exceptions import InvalidGroupError
from groups import FiniteGroup, cyclic
from schemas import GroupModel, OuterStructureModel, PresentationModel, VerdictModel
from state import Limits
from two_group import TwoGroupPresentation


def test_group_document(d4: FiniteGroup):
    """
    arrange: the dihedral group of order 8.
    act: dump it and read it back.
    assert: the document carries the schema version and rebuilds the same group.
    """
    text = GroupModel.from_group(d4).dumps()

    document = json.loads(text)
    group = GroupModel.parse_raw(text).to_group()

    assert document["schema"] == 1
    assert document["family_tag"] == "dihedral(4)"
    assert group == d4
    assert group.labels == d4.labels


def test_group_document_order_mismatch():
    """
    arrange: a document declaring order 3 with a table of order 2.
    act: rebuild the group.
    assert: ValueError is raised.
    """
    document = GroupModel(order=3, table=[[0, 1], [1, 0]], identity=0)

    with pytest.raises(ValueError):
        document.to_group()


def test_group_document_rejects_invalid_tables():
    """
    arrange: a table that is not a Latin square.
    act: rebuild the group.
    assert: InvalidGroupError is raised.
    """
    document = GroupModel(order=2, table=[[0, 1], [1, 1]], identity=0)

    with pytest.raises(InvalidGroupError):
        document.to_group()


def test_outer_structure_document(d4: FiniteGroup):
    """
    arrange: the outer structure of D4.
    act: serialize it.
    assert: Aut has order 8, Inn order 4, and the section starts at the identity.
    """
    document = OuterStructureModel.from_outer(automorphism_group(d4))

    assert len(document.aut_table) == 8
    assert len(document.inn) == 4
    assert len(document.out_table) == 2
    assert document.section[0] == 0
    assert sorted(document.center) == [0, 2]


def test_presentation_document(limits: Limits):
    """
    arrange: the non-split 2-group over (Z2, Z2).
    act: dump it and read it back.
    assert: the rebuilt associator equals the original one.
    """
    module = trivial_module(cyclic(2), cyclic(2))
    z = Cochain.from_entries(module, 3, [((1, 1, 1), 1)])
    presentation = TwoGroupPresentation(module.acting_group, module, z)

    text = PresentationModel.from_presentation(presentation).dumps()
    rebuilt = PresentationModel.parse_raw(text).to_presentation(limits)

    assert json.loads(text)["z"]["entries"] == [[[1, 1, 1], 1]]
    assert rebuilt.z.entries() == z.entries()
    assert rebuilt.pi0 == presentation.pi0


@pytest.mark.parametrize(
    "method, kind",
    [
        pytest.param("coboundary", "cochain", id="coboundary"),
        pytest.param("section-search", "section-lifting", id="section search"),
        pytest.param("homomorphic-section", "homomorphic-section", id="homomorphic section"),
        pytest.param("all", "all", id="all"),
    ],
)
def test_verdict_document_kinds(method: str, kind: str, d4: FiniteGroup, limits: Limits):
    """
    arrange: a verdict on D4 from one decider.
    act: serialize it.
    assert: the witness is tagged with its kind and the document is valid JSON.
    """
    verdict = perm_two_group.is_permutationally_split(d4, method, limits)

    document = VerdictModel.from_verdict(verdict)

    assert document.split is True
    assert document.witness is not None
    assert document.witness["kind"] == kind
    assert json.loads(document.dumps())["split"] is True


def test_verdict_document_certificate(d8: FiniteGroup, limits: Limits):
    """
    arrange: the certificate verdict on D8.
    act: serialize it.
    assert: the certificate fields are plain JSON values.
    """
    verdict = perm_two_group.is_permutationally_split(d8, "witness", limits)

    document = json.loads(VerdictModel.from_verdict(verdict).dumps())

    assert document["split"] is False
    assert document["witness"]["kind"] == "nonsplit-certificate"
    assert document["witness"]["outer_class"] == 3
    assert len(document["witness"]["members"]) == 8


def test_inconclusive_verdict_document(d4: FiniteGroup, limits: Limits):
    """
    arrange: the inconclusive certificate verdict on D4.
    act: serialize it.
    assert: split and witness are both null.
    """
    verdict = perm_two_group.is_permutationally_split(d4, "witness", limits)

    document = json.loads(VerdictModel.from_verdict(verdict).dumps())

    assert document["split"] is None
    assert document["witness"] is None
