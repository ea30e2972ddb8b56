# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Special 2-group presentation unit tests."""

import numpy as np
import pytest

import two_group
from checks import negation_module
from cohomology import Cochain, coboundary, random_cochain, trivial_module
from exceptions import BudgetExceededError, InvalidCellError, InvalidModuleError
from groups import cyclic, symmetric, wreath_index, wreath_product
from state import Limits
from two_group import TwoGroupPresentation
from types_ import TwoCell


@pytest.fixture(scope="module", name="nonsplit")
def nonsplit_fixture() -> TwoGroupPresentation:
    """Z2[1] over Z2[0] with the generator of H^3(Z2, Z2) as associator."""
    module = trivial_module(cyclic(2), cyclic(2))
    return TwoGroupPresentation(
        module.acting_group, module, Cochain.from_entries(module, 3, [((1, 1, 1), 1)])
    )


def test_presentation_rejects_non_cocycles():
    """
    arrange: Z3 acting trivially on Z3 and the 3-cochain with the single value z(1, 1, 1) = 1.
    act: build a presentation, checked and unchecked.
    assert: the checked one fails and the unchecked one reports the broken pentagon.
    """
    module = trivial_module(cyclic(3), cyclic(3))
    z = Cochain.from_entries(module, 3, [((1, 1, 1), 1)])

    with pytest.raises(InvalidModuleError):
        TwoGroupPresentation(module.acting_group, module, z)
    report = two_group.verify_coherence(
        TwoGroupPresentation.unchecked(module.acting_group, module, z)
    )

    assert not report.pentagon_ok
    assert not report.cocycle_ok
    assert report.triangle_ok
    assert report.violations, "the failing quadruples should be reported"


def test_presentation_rejects_foreign_modules(z2, z3):
    """
    arrange: a module over Z3 and pi0 = Z2.
    act: build a presentation.
    assert: InvalidModuleError is raised.
    """
    module = trivial_module(z3, z2)

    with pytest.raises(InvalidModuleError):
        TwoGroupPresentation(z2, module, Cochain.zero(module, 3))


def test_coherence_of_cocycles(rng: np.random.Generator):
    """
    arrange: random 3-coboundaries over Z3 with Z3 coefficients.
    act: verify the pentagon and triangle identities.
    assert: every check passes.
    """
    module = trivial_module(cyclic(3), cyclic(3))
    for _ in range(5):
        z = coboundary(random_cochain(module, 2, rng))

        report = two_group.verify_coherence(TwoGroupPresentation(module.acting_group, module, z))

        assert report.ok
        assert report.violations == []


def test_cell_arithmetic(nonsplit: TwoGroupPresentation):
    """
    arrange: the non-split 2-group over (Z2, Z2).
    act: tensor, compose and invert cells.
    assert: the results follow the formulas of the semidirect cell arithmetic.
    """
    cell = TwoCell(1, 1)

    assert two_group.tensor_cells(nonsplit, cell, cell) == TwoCell(0, 0)
    assert two_group.compose_cells(nonsplit, cell, cell) == TwoCell(0, 1)
    assert two_group.associator(nonsplit, 1, 1, 1) == TwoCell(1, 1)
    assert two_group.associator(nonsplit, 0, 1, 1) == TwoCell(0, 0)
    assert two_group.unit_cell(nonsplit) == TwoCell(0, 0)
    assert two_group.inverse_cell(nonsplit, cell) == cell


def test_tensor_inverse_in_twisted_module():
    """
    arrange: the strict 2-group of Z2 acting by negation on Z3.
    act: tensor a cell with its tensor inverse.
    assert: the result is the unit cell.
    """
    presentation = two_group.elementary(negation_module())
    cell = TwoCell(1, 1)

    inverse = two_group.tensor_inverse(presentation, cell)

    assert inverse == TwoCell(1, 1)
    assert two_group.tensor_cells(presentation, cell, inverse) == TwoCell(0, 0)


def test_cell_errors(nonsplit: TwoGroupPresentation):
    """
    arrange: the non-split 2-group over (Z2, Z2).
    act: compose cells on different objects and use out of range cells.
    assert: InvalidCellError is raised.
    """
    with pytest.raises(InvalidCellError):
        two_group.compose_cells(nonsplit, TwoCell(0, 0), TwoCell(0, 1))
    with pytest.raises(InvalidCellError):
        two_group.tensor_cells(nonsplit, TwoCell(2, 0), TwoCell(0, 0))


@pytest.mark.parametrize(
    "factory, expected",
    [
        pytest.param(lambda: two_group.discrete(cyclic(1)), "trivial", id="trivial"),
        pytest.param(lambda: two_group.discrete(symmetric(3)), "S3[0]", id="discrete"),
        pytest.param(lambda: two_group.abelian(cyclic(4)), "Z4[1]", id="abelian"),
        pytest.param(
            lambda: two_group.elementary(negation_module()), "Z3[1]⋊Z2[0]", id="semidirect"
        ),
        pytest.param(
            lambda: two_group.product_presentation(
                [two_group.abelian(cyclic(2)), two_group.discrete(cyclic(2))]
            ),
            "Z2[1]xZ2[0]",
            id="product",
        ),
    ],
)
def test_describe_presentation(factory, expected: str):
    """
    arrange: a special 2-group.
    act: describe it.
    assert: the short name matches.
    """
    assert two_group.describe_presentation(factory()) == expected


def test_describe_non_split(nonsplit: TwoGroupPresentation):
    """
    arrange: the non-split 2-group over (Z2, Z2).
    act: describe it and decide splitness.
    assert: it is reported with a twisted associator.
    """
    assert two_group.is_split(nonsplit) is None
    assert two_group.describe_presentation(nonsplit) == "Z2[1]⋊_zZ2[0]"


def test_presentations_equivalent(nonsplit: TwoGroupPresentation, limits: Limits):
    """
    arrange: the product Z2[1] x Z2[0], the strict 2-group of the trivial module and the
        non-split 2-group.
    act: compare them.
    assert: the split ones are equivalent, the non-split one is not.
    """
    product = two_group.product_presentation(
        [two_group.abelian(cyclic(2)), two_group.discrete(cyclic(2))]
    )
    strict = two_group.elementary(trivial_module(cyclic(2), cyclic(2)))

    equivalence = two_group.presentations_equivalent(product, strict, limits)

    assert equivalence is not None
    assert equivalence.rho.is_bijective and equivalence.beta.is_bijective
    assert equivalence.is_module_map(product.pi1, strict.pi1)
    assert two_group.presentations_equivalent(product, nonsplit, limits) is None
    assert two_group.presentations_equivalent(product, two_group.abelian(cyclic(2))) is None


def test_presentations_equivalent_budget(nonsplit: TwoGroupPresentation, limits: Limits):
    """
    arrange: limits allowing pi0 of order 1 only.
    act: compare two 2-groups over Z2.
    assert: BudgetExceededError names the pi0 budget.
    """
    tight = Limits(**{**limits.dict(), "equivalence_max_pi0": 1})

    with pytest.raises(BudgetExceededError) as info:
        two_group.presentations_equivalent(nonsplit, nonsplit, tight)

    assert info.value.budget == "equivalence_max_pi0"


def test_morphism_data_checks_degrees(nonsplit: TwoGroupPresentation, limits: Limits):
    """
    arrange: the identity equivalence of the non-split 2-group.
    act: rebuild it with a 1-cochain as w.
    assert: InvalidModuleError is raised.
    """
    equivalence = two_group.presentations_equivalent(nonsplit, nonsplit, limits)

    assert equivalence is not None
    with pytest.raises(InvalidModuleError):
        two_group.TwoGroupMorphismData(
            equivalence.rho, equivalence.beta, Cochain.zero(equivalence.w.module, 1)
        )


def test_wreath_object_tensor_matches_wreath_product(z3):
    """
    arrange: objects (swap, (1, 2)) and (swap, (0, 1)) of S2 wr wr Z3[0].
    act: tensor them.
    assert: the result is (id, (2, 2)), the product in S2 wr Z3.
    """
    first, second = (1, (1, 2)), (1, (0, 1))

    product = two_group.wreath_object_tensor(2, z3, first, second)
    wreath = wreath_product(2, z3)

    assert product == (0, (2, 2))
    assert wreath.multiply(
        wreath_index(2, 3, 1, [1, 2]), wreath_index(2, 3, 1, [0, 1])
    ) == wreath_index(2, 3, *product)


@pytest.mark.parametrize("split", [True, False])
def test_wreath_presentation_preserves_splitness(nonsplit: TwoGroupPresentation, split: bool):
    """
    arrange: a split or non-split 2-group over (Z2, Z2).
    act: take its wreath 2-product with S2.
    assert: the result is split exactly when the input is, and is coherent.
    """
    base = two_group.elementary(nonsplit.pi1) if split else nonsplit

    wreath = two_group.wreath_presentation(2, base)

    assert wreath.pi0.order == 8
    assert wreath.pi1.coeff.order == 4
    assert (two_group.is_split(wreath) is not None) == split
    assert two_group.verify_coherence(wreath).ok


def test_unit_violations_cover_every_slot():
    """
    arrange: associator values over a group of order 3 that are non-zero at (0, 1, 2), (1, 0, 2),
        (1, 2, 0) and (1, 1, 1), with 0 the identity.
    act: collect the unit violations.
    assert: the three triples with an identity entry are reported and (1, 1, 1) is not.
    """
    full = np.zeros((3, 3, 3), dtype=np.int64)
    for triple in [(0, 1, 2), (1, 0, 2), (1, 2, 0), (1, 1, 1)]:
        full[triple] = 1

    found = two_group.unit_violations(full, 0, 0)

    assert [tuple(row) for row in found.tolist()] == [(0, 1, 2), (1, 0, 2), (1, 2, 0)]


def test_normalized_associators_pass_the_triangle(nonsplit: TwoGroupPresentation):
    """
    arrange: the non-split 2-group over (Z2, Z2).
    act: verify its coherence.
    assert: the triangle holds because stored associators are normalized.
    """
    report = two_group.verify_coherence(nonsplit)

    assert report.triangle_ok
    assert not two_group.unit_violations(nonsplit.z.full(), 0, 0).size
