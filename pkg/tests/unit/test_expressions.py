# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Group expression parser unit tests."""

import pathlib

import pytest

from exceptions import CapExceededError, ExpressionParseError
from expressions import ExpressionParser, parse_group
from groups import dihedral
from schemas import GroupModel
from state import Limits


@pytest.mark.parametrize(
    "text, order, tag",
    [
        pytest.param("cyclic:5", 5, "cyclic(5)", id="cyclic"),
        pytest.param("dihedral:8", 16, "dihedral(8)", id="dihedral"),
        pytest.param(" symmetric : 4 ", 24, "symmetric(4)", id="spaces"),
        pytest.param("dicyclic:2", 8, "dicyclic(2)", id="dicyclic"),
        pytest.param(
            "product(cyclic:2, product(cyclic:3, symmetric:3))",
            36,
            "product(cyclic(2),product(cyclic(3),symmetric(3)))",
            id="nested product",
        ),
    ],
)
def test_parse_group(text: str, order: int, tag: str, limits: Limits):
    """
    arrange: a group expression.
    act: parse it.
    assert: the group has the expected order and family tag.
    """
    group = parse_group(text, limits)

    assert group.order == order
    assert group.family_tag == tag


@pytest.mark.parametrize(
    "text, position",
    [
        pytest.param("cyclic", 6, id="missing colon"),
        pytest.param("cyclic:", 7, id="missing integer"),
        pytest.param("circle:3", 0, id="unknown family"),
        pytest.param("cyclic:3 extra", 9, id="trailing input"),
        pytest.param("product(cyclic:2", 16, id="unclosed product"),
        pytest.param("dihedral:0", 9, id="invalid parameter"),
    ],
)
def test_parse_group_errors(text: str, position: int, limits: Limits):
    """
    arrange: a malformed group expression.
    act: parse it.
    assert: ExpressionParseError points at the offending position.
    """
    with pytest.raises(ExpressionParseError) as info:
        parse_group(text, limits)

    assert info.value.position == position
    assert repr(text) in info.value.msg


def test_parse_group_cap():
    """
    arrange: a symmetric degree cap of 5.
    act: parse symmetric:6.
    assert: the cap error is reported unchanged.
    """
    with pytest.raises(CapExceededError):
        parse_group("symmetric:6", Limits(max_symmetric_degree=5))


def test_parse_group_table(tmp_path: pathlib.Path, limits: Limits):
    """
    arrange: the table of D4 saved as a JSON document.
    act: parse a table expression with a relative path.
    assert: the group read back equals D4.
    """
    group = dihedral(4, limits)
    (tmp_path / "d4.json").write_text(GroupModel.from_group(group).dumps(), encoding="utf-8")

    parsed = parse_group("table:@d4.json", limits, base_dir=tmp_path)

    assert parsed == group


def test_parse_group_missing_table(tmp_path: pathlib.Path, limits: Limits):
    """
    arrange: no table file.
    act: parse a table expression.
    assert: ExpressionParseError is raised at the path.
    """
    with pytest.raises(ExpressionParseError) as info:
        parse_group("table:@missing.json", limits, base_dir=tmp_path)

    assert info.value.position == 7


def test_components_with_finite_sets(limits: Limits):
    """
    arrange: a groupoid mixing a preset and a term.
    act: parse the components.
    assert: the preset expands to S0..S2 and the truncation is returned.
    """
    raw, truncation = ExpressionParser("finite-sets:2, 2×cyclic:3", limits).components()

    assert [(n, g.order) for n, g in raw] == [(1, 1), (1, 1), (1, 2), (2, 3)]
    assert truncation == 2


def test_components_reject_zero_multiplicity(limits: Limits):
    """
    arrange: a term with multiplicity 0.
    act: parse the components.
    assert: ExpressionParseError points at the term.
    """
    with pytest.raises(ExpressionParseError) as info:
        ExpressionParser("cyclic:2, 0×cyclic:3", limits).components()

    assert info.value.position == 10
