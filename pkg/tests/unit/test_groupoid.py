# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Finite type groupoid unit tests."""

import json

import pytest

import groupoid
from exceptions import CapExceededError, ExpressionParseError, InvalidGroupError
from groups import cyclic, dicyclic, dihedral, symmetric
from state import Limits
from two_group import describe_presentation


def test_normalize_merges_isomorphic_groups(limits: Limits):
    """
    arrange: D3 once and S3 twice, listed separately, and Z2.
    act: normalize the components.
    assert: the isomorphic groups are merged into one component of multiplicity 3.
    """
    raw = [(1, dihedral(3, limits)), (2, symmetric(3, limits)), (1, cyclic(2, limits))]

    spec = groupoid.normalize(raw)

    assert [n for n, _ in spec.components] == [1, 3]
    assert spec.components[1][1].order == 6
    assert spec.object_count == 4


def test_normalize_rejects_empty_multiplicities(limits: Limits):
    """
    arrange: a component with multiplicity 0.
    act: normalize.
    assert: InvalidGroupError is raised.
    """
    with pytest.raises(InvalidGroupError):
        groupoid.normalize([(0, cyclic(2, limits))])


def test_finite_sets_merge_the_trivial_groups(limits: Limits):
    """
    arrange: the finite sets of cardinality 0..3.
    act: normalize the components.
    assert: S0 and S1 form one component of multiplicity 2 and the truncation is kept.
    """
    raw, truncation = groupoid.finite_sets(3, limits=limits)

    spec = groupoid.normalize(raw, truncation)

    assert [(n, g.order) for n, g in spec.components] == [(2, 1), (1, 2), (1, 6)]
    assert spec.truncation == 3


@pytest.mark.parametrize(
    "start, description",
    [
        pytest.param(0, "Z2[1]xZ2[0]", id="with empty set"),
        pytest.param(1, "Z2[1]", id="nonempty"),
    ],
)
def test_small_finite_sets(start: int, description: str, limits: Limits):
    """
    arrange: the finite sets of cardinality start..3.
    act: assemble the invariants and decide splitness.
    assert: the two trivial components contribute a swap to pi0 only when S0 is included.
    """
    raw, truncation = groupoid.finite_sets(3, start=start, limits=limits)
    spec = groupoid.normalize(raw, truncation)

    presentation = groupoid.assemble_invariants(spec, limits)
    verdict = groupoid.is_split_finite_type(spec, limits=limits, presentation=presentation)

    assert describe_presentation(presentation, limits) == description
    assert verdict.split is True
    assert verdict.global_split is True


@pytest.mark.slow
@pytest.mark.parametrize(
    "start, pi0_order",
    [pytest.param(0, 4, id="0..6"), pytest.param(1, 2, id="1..6")],
)
def test_finite_sets_up_to_six(start: int, pi0_order: int, limits: Limits):
    """
    arrange: the finite sets of cardinality start..6.
    act: assemble the invariants and decide splitness.
    assert: pi1 = Z2 from S2, pi0 gains Z2 from Out(S6) and the result is split.
    """
    raw, truncation = groupoid.finite_sets(6, start=start, limits=limits)
    spec = groupoid.normalize(raw, truncation)

    verdict = groupoid.is_split_finite_type(spec, limits=limits)

    assert verdict.split is True
    assert verdict.details["pi0_order"] == pi0_order
    assert verdict.details["pi1_order"] == 2
    assert verdict.details["truncation"] == 6


def test_split_finite_type(limits: Limits):
    """
    arrange: two copies of D4 and one copy of Z2.
    act: decide splitness.
    assert: every component is split and so is the assembled class.
    """
    spec = groupoid.normalize([(2, dihedral(4, limits)), (1, cyclic(2, limits))])

    verdict = groupoid.is_split_finite_type(spec, limits=limits)

    assert verdict.split is True
    assert [c.multiplicity for c in verdict.components] == [1, 2]
    assert all(c.verdict.split for c in verdict.components)
    assert verdict.details["pi0_order"] == 8
    assert verdict.details["pi1_order"] == 8


def test_non_split_component_makes_the_groupoid_non_split(limits: Limits):
    """
    arrange: one copy of D8 next to a copy of Z2.
    act: decide splitness.
    assert: the D8 component is not split, so neither is the groupoid.
    """
    spec = groupoid.normalize([(1, dihedral(8, limits)), (1, cyclic(2, limits))])

    verdict = groupoid.is_split_finite_type(spec, limits=limits)

    assert verdict.split is False
    assert verdict.global_split is False
    assert [c.verdict.split for c in verdict.components] == [True, False]


@pytest.mark.slow
def test_two_copies_of_d8_are_not_split(limits: Limits):
    """
    arrange: two copies of D8.
    act: decide splitness.
    assert: the wreath 2-product stays non-split.
    """
    spec = groupoid.normalize([(2, dihedral(8, limits))])

    verdict = groupoid.is_split_finite_type(spec, limits=limits)

    assert verdict.split is False
    assert verdict.global_split is False


def test_inconclusive_components(limits: Limits):
    """
    arrange: one copy of D4 and the sufficient-only certificate search.
    act: decide splitness.
    assert: the verdict is inconclusive while the assembled class is still trivial.
    """
    spec = groupoid.normalize([(1, dihedral(4, limits))])

    verdict = groupoid.is_split_finite_type(spec, method="witness", limits=limits)

    assert verdict.split is None
    assert verdict.global_split is True


def test_component_caps_name_the_component(limits: Limits):
    """
    arrange: limits capping group orders at 50 and three copies of Q8.
    act: assemble the invariants.
    assert: the cap error names the offending component.
    """
    capped = Limits(**{**limits.dict(), "max_group_order": 50})
    spec = groupoid.normalize([(3, dicyclic(2, capped))])

    with pytest.raises(CapExceededError) as info:
        groupoid.assemble_invariants(spec, capped)

    assert "3×dicyclic(2)" in info.value.msg


def test_parse_groupoid_terms(limits: Limits):
    """
    arrange: a groupoid written as terms.
    act: parse it.
    assert: multiplicities are read with every multiplication sign.
    """
    spec = groupoid.parse_groupoid("2×dihedral:4, 3xcyclic:2, 1*symmetric:3", limits)

    assert sorted((n, g.order) for n, g in spec.components) == [(1, 6), (2, 8), (3, 2)]


def test_parse_groupoid_finite_sets(limits: Limits):
    """
    arrange: the finite sets preset.
    act: parse it.
    assert: it expands to S0..S3 with the truncation recorded.
    """
    spec = groupoid.parse_groupoid("finite-sets:3", limits)

    assert spec.truncation == 3
    assert spec.object_count == 4


def test_groupoid_from_json(limits: Limits):
    """
    arrange: a JSON document with an expression component and a table component.
    act: read it.
    assert: both components are built and the table group is Z2.
    """
    document = {
        "components": [
            {"multiplicity": 2, "group": "dihedral:4"},
            {"group": {"order": 2, "table": [[0, 1], [1, 0]], "identity": 0}},
        ]
    }

    spec = groupoid.parse_groupoid(json.dumps(document), limits)

    assert [(n, g.order) for n, g in spec.components] == [(1, 2), (2, 8)]


@pytest.mark.parametrize(
    "text",
    [
        pytest.param("{not json", id="invalid json"),
        pytest.param('{"groups": []}', id="no components"),
        pytest.param('{"components": [{"multiplicity": 1}]}', id="no group"),
        pytest.param(
            '{"components": [{"group": {"order": 3, "table": [[0, 1], [1, 0]], "identity": 0}}]}',
            id="order mismatch",
        ),
    ],
)
def test_groupoid_from_json_errors(text: str, limits: Limits):
    """
    arrange: a malformed groupoid document.
    act: read it.
    assert: InvalidGroupError is raised.
    """
    with pytest.raises(InvalidGroupError):
        groupoid.parse_groupoid(text, limits)


def test_parse_groupoid_errors(limits: Limits):
    """
    arrange: malformed groupoid terms.
    act: parse them.
    assert: ExpressionParseError is raised.
    """
    with pytest.raises(ExpressionParseError):
        groupoid.parse_groupoid("", limits)
    with pytest.raises(ExpressionParseError):
        groupoid.parse_groupoid("2 dihedral:4", limits)


@pytest.mark.parametrize(
    "components, functors, classes",
    [
        pytest.param([(2, symmetric(3))], 72, 2, id="2xS3"),
        pytest.param([(2, cyclic(2))], 2, 2, id="2xZ2"),
        pytest.param([(1, dihedral(4))], 8, 2, id="D4"),
        pytest.param([(1, cyclic(2)), (1, cyclic(3))], 2, 2, id="Z2+Z3"),
    ],
)
def test_count_self_equivalences(components, functors: int, classes: int, limits: Limits):
    """
    arrange: a small skeletal groupoid.
    act: count its self-equivalences by brute force.
    assert: the counts match, and the classes match |pi0| of the assembled invariants.
    """
    spec = groupoid.normalize(components)

    count = groupoid.count_self_equivalences(spec, limits)

    assert count.functors == functors
    assert count.classes == classes
    assert groupoid.assemble_invariants(spec, limits).pi0.order == classes


def test_count_self_equivalences_cap(limits: Limits):
    """
    arrange: a section budget of 1 and two objects.
    act: count self-equivalences.
    assert: CapExceededError is raised.
    """
    tight = Limits(**{**limits.dict(), "section_budget": 1})

    with pytest.raises(CapExceededError):
        groupoid.count_self_equivalences(groupoid.normalize([(2, cyclic(2))]), tight)


@pytest.mark.parametrize(
    "n, order, pi0_order, pi1_order",
    [
        pytest.param(2, 2, 2, 4, id="2xZ2"),
        pytest.param(2, 4, 8, 16, id="2xZ4"),
        pytest.param(3, 2, 6, 8, id="3xZ2"),
    ],
)
def test_cayley_check(n: int, order: int, pi0_order: int, pi1_order: int, limits: Limits):
    """
    arrange: n copies of a cyclic group A.
    act: compare Sym of the copies with A^n[1] x| (S_n wr Aut(A))[0].
    assert: pi0, the action and the trivial class all match.
    """
    report = groupoid.cayley_check(n, cyclic(order, limits), limits)

    assert report.ok
    assert report.pi0_order == pi0_order
    assert report.pi1_order == pi1_order


def test_cayley_check_rejects_non_abelian_groups(s3, limits: Limits):
    """
    arrange: S3.
    act: run the comparison.
    assert: InvalidGroupError is raised.
    """
    with pytest.raises(InvalidGroupError):
        groupoid.cayley_check(2, s3, limits)
