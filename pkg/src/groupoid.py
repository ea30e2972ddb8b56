# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Finite type groupoids in skeletal normal form and the invariants of their Sym.

A groupoid of finite type is described by its homogeneous components ``(n_i, G_i)``: ``n_i``
connected components sharing the base group ``G_i``. Sym of the groupoid is equivalent to the
product over i of the wreath 2-products ``S_{n_i} wr wr Sym(G_i)``, which is what
:func:`assemble_invariants` computes.
"""

import dataclasses
import itertools
import json
import logging
import math
import pathlib
import typing

import numpy as np

from autos import automorphism_group, homomorphisms, is_isomorphic
from cohomology import is_coboundary
from exceptions import (
    CapExceededError,
    DeciderDisagreementError,
    ExpressionParseError,
    InvalidGroupError,
)
from expressions import ExpressionParser, RawComponents, parse_group
from groups import (
    FiniteGroup,
    _permutations,
    product_coordinates,
    symmetric,
    wreath_coordinates,
    wreath_product,
)
from perm_two_group import is_permutationally_split, sym_invariants
from schemas import GroupModel
from state import Limits, default_limits
from two_group import (
    TwoGroupPresentation,
    describe_group,
    product_presentation,
    wreath_presentation,
)
from types_ import CayleyReport, ComponentVerdict, FiniteTypeVerdict, SelfEquivalenceCount

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class GroupoidSpec:
    """Normalized homogeneous components of a finite type groupoid.

    Attributes:
        components: ``(multiplicity, base group)`` pairs, pairwise non-isomorphic groups sorted
            by their canonical key.
        truncation: largest cardinality kept when the spec truncates the finite sets groupoid.
    """

    components: typing.Tuple[typing.Tuple[int, FiniteGroup], ...]
    truncation: typing.Optional[int] = None

    @property
    def object_count(self) -> int:
        """Number of objects of the skeletal groupoid."""
        return sum(n for n, _ in self.components)


def normalize(raw: RawComponents, truncation: typing.Optional[int] = None) -> GroupoidSpec:
    """Merge isomorphic base groups and sort the components.

    Args:
        raw: ``(multiplicity, group)`` pairs in any order.
        truncation: finite sets truncation level to record.

    Returns:
        The normalized spec; multiplicities of isomorphic groups are summed and the group with
        the least canonical key represents its class.

    Raises:
        InvalidGroupError: if a multiplicity is below 1.
    """
    merged: typing.List[typing.List[typing.Any]] = []
    for n, group in raw:
        if n < 1:
            raise InvalidGroupError(f"multiplicities must be at least 1, got {n}")
        for entry in merged:
            if is_isomorphic(entry[1], group) is not None:
                entry[0] += n
                if group.key < entry[1].key:
                    entry[1] = group
                break
        else:
            merged.append([n, group])
    merged.sort(key=lambda entry: entry[1].key)
    components = tuple((int(n), group) for n, group in merged)
    logger.debug("Normalized %d raw components into %d", len(raw), len(components))
    return GroupoidSpec(components=components, truncation=truncation)


def finite_sets(
    max_n: int, start: int = 0, limits: typing.Optional[Limits] = None
) -> typing.Tuple[RawComponents, int]:
    """Components of the groupoid of finite sets of cardinality ``start..max_n``.

    Args:
        max_n: largest cardinality.
        start: smallest cardinality.
        limits: active limits.

    Returns:
        The raw components ``(1, S_k)`` and the truncation level.
    """
    return [(1, symmetric(k, limits)) for k in range(start, max_n + 1)], max_n


def _component_context(n: int, group: FiniteGroup) -> str:
    """Describe a component for error messages.

    Args:
        n: multiplicity.
        group: base group.

    Returns:
        A string such as ``2×dihedral(8)``.
    """
    return f"component {n}×{group.family_tag or describe_group(group)}"


def assemble_invariants(
    spec: GroupoidSpec, limits: typing.Optional[Limits] = None
) -> TwoGroupPresentation:
    """Invariant triple of Sym of the groupoid.

    Args:
        spec: the normalized groupoid.
        limits: active limits.

    Returns:
        The product over the components of the wreath presentations of Sym(G_i).

    Raises:
        CapExceededError: naming the component whose invariants are too large.
    """
    limits = limits or default_limits()
    factors = []
    for n, group in spec.components:
        try:
            factors.append(wreath_presentation(n, sym_invariants(group, limits), limits))
        except CapExceededError as exc:
            raise CapExceededError(
                exc.cap, exc.limit, exc.requested, _component_context(n, group)
            ) from exc
    presentation = product_presentation(factors, limits)
    logger.info(
        "Assembled invariants: |pi0|=%d |pi1|=%d",
        presentation.pi0.order,
        presentation.pi1.coeff.order,
    )
    return presentation


def is_split_finite_type(
    spec: GroupoidSpec,
    method: str = "coboundary",
    limits: typing.Optional[Limits] = None,
    presentation: typing.Optional[TwoGroupPresentation] = None,
) -> FiniteTypeVerdict:
    """Decide splitness of Sym of the groupoid component by component.

    The verdict is the conjunction of the component verdicts, cross-checked against the class
    of the assembled cocycle.

    Args:
        spec: the normalized groupoid.
        method: splitness decider for the components.
        limits: active limits.
        presentation: the assembled invariants, computed when omitted.

    Returns:
        The verdict with the per-component details.

    Raises:
        DeciderDisagreementError: if the global class contradicts the component verdicts.
    """
    limits = limits or default_limits()
    components = []
    for n, group in spec.components:
        try:
            verdict = is_permutationally_split(group, method, limits)
        except CapExceededError as exc:
            raise CapExceededError(
                exc.cap, exc.limit, exc.requested, _component_context(n, group)
            ) from exc
        components.append(ComponentVerdict(n, describe_group(group), verdict))
    verdicts = [c.verdict.split for c in components]
    split: typing.Optional[bool]
    if False in verdicts:
        split = False
    elif None in verdicts:
        split = None
    else:
        split = True
    presentation = presentation or assemble_invariants(spec, limits)
    global_split = is_coboundary(presentation.z, limits) is not None
    if split is not None and split != global_split:
        raise DeciderDisagreementError(
            "assembled class disagrees with the component verdicts",
            {"components": split, "global": global_split},
        )
    details = {
        "pi0_order": presentation.pi0.order,
        "pi1_order": presentation.pi1.coeff.order,
        "truncation": spec.truncation,
    }
    return FiniteTypeVerdict(
        split=split, components=components, global_split=global_split, details=details
    )


def groupoid_from_json(
    document: typing.Union[str, typing.Dict[str, typing.Any]],
    limits: typing.Optional[Limits] = None,
    base_dir: typing.Optional[pathlib.Path] = None,
) -> GroupoidSpec:
    """Read a groupoid from ``{"components": [{"multiplicity": n, "group": ...}]}``.

    Args:
        document: the JSON text or the decoded document; every group is an expression string
            or a group table document.
        limits: active limits.
        base_dir: directory for relative table paths.

    Returns:
        The normalized spec.

    Raises:
        InvalidGroupError: if the document is not in the components format.
    """
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except ValueError as exc:
            raise InvalidGroupError(f"groupoid document is not valid JSON: {exc}") from exc
    if not isinstance(document, dict) or not isinstance(document.get("components"), list):
        raise InvalidGroupError("groupoid document needs a components list")
    raw: RawComponents = []
    for entry in document["components"]:
        if not isinstance(entry, dict) or "group" not in entry:
            raise InvalidGroupError(f"malformed component {entry!r}")
        group = entry["group"]
        if isinstance(group, str):
            parsed = parse_group(group, limits, base_dir)
        else:
            try:
                parsed = GroupModel.parse_obj(group).to_group(limits)
            except ValueError as exc:
                raise InvalidGroupError(f"malformed group document: {exc}") from exc
        raw.append((int(entry.get("multiplicity", 1)), parsed))
    return normalize(raw, document.get("truncation"))


def parse_groupoid(
    text: str,
    limits: typing.Optional[Limits] = None,
    base_dir: typing.Optional[pathlib.Path] = None,
) -> GroupoidSpec:
    """Parse a groupoid given as ``2×dihedral:4, symmetric:3`` terms or as JSON.

    Args:
        text: the specification.
        limits: active limits.
        base_dir: directory for relative table paths.

    Returns:
        The normalized spec.

    Raises:
        ExpressionParseError: on malformed terms.
    """
    if text.lstrip().startswith("{"):
        return groupoid_from_json(text, limits, base_dir)
    raw, truncation = ExpressionParser(text, limits, base_dir).components()
    if not raw:
        raise ExpressionParseError("empty groupoid", text, 0)
    return normalize(raw, truncation)


def _inner_orbit_key(target: FiniteGroup, images: np.ndarray) -> typing.Tuple[int, ...]:
    """Least image array among the maps c_g o f, g in the target.

    Args:
        target: the codomain.
        images: image array of f.

    Returns:
        The key shared by every map in the orbit of f under inner automorphisms.
    """
    conjugated = target.table[target.table[:, images], target.inverse[:, None]]
    return min(tuple(row) for row in conjugated.tolist())


def count_self_equivalences(
    spec: GroupoidSpec, limits: typing.Optional[Limits] = None
) -> SelfEquivalenceCount:
    """Count the self-equivalences of the skeletal groupoid by exhaustive enumeration.

    Every object map is enumerated, together with every homomorphism between the base groups
    of an object and its image. Two functors are isomorphic when they agree on objects and
    their arrow maps differ by inner automorphisms of the targets.

    Args:
        spec: a small normalized groupoid.
        limits: active limits; ``section_budget`` bounds the number of object maps.

    Returns:
        The functor and isomorphism class counts.

    Raises:
        CapExceededError: if there are too many object maps to enumerate.
    """
    limits = limits or default_limits()
    objects = [group for n, group in spec.components for _ in range(n)]
    count = len(objects)
    if count**count > limits.section_budget:
        raise CapExceededError("section_budget", limits.section_budget, count**count)
    isos: typing.Dict[typing.Tuple[int, int], typing.List[np.ndarray]] = {}
    classes: typing.Dict[typing.Tuple[int, int], int] = {}
    for i, source in enumerate(objects):
        for j, target in enumerate(objects):
            found = []
            if source.order == target.order:
                found = [hom.images for hom in homomorphisms(source, target, injective=True)]
            isos[i, j] = found
            classes[i, j] = len({_inner_orbit_key(target, images) for images in found})
    functors = 0
    iso_classes = 0
    for image in itertools.product(range(count), repeat=count):
        if len(set(image)) != count:
            continue
        functors += math.prod(len(isos[i, j]) for i, j in enumerate(image))
        iso_classes += math.prod(classes[i, j] for i, j in enumerate(image))
    logger.info("Self-equivalences: %d functors in %d classes", functors, iso_classes)
    return SelfEquivalenceCount(functors=functors, classes=iso_classes)


def cayley_check(
    n: int, coeff: FiniteGroup, limits: typing.Optional[Limits] = None
) -> CayleyReport:
    """Compare Sym of n copies of an abelian group A with A^n[1] x| (S_n wr Aut(A))[0].

    Args:
        n: number of copies.
        coeff: the abelian group A.
        limits: active limits.

    Returns:
        The comparison; the action is checked on every (pi0, pi1) pair.

    Raises:
        InvalidGroupError: if A is not abelian.
    """
    if not coeff.is_abelian:
        raise InvalidGroupError(f"{coeff!r} is not abelian")
    limits = limits or default_limits()
    presentation = assemble_invariants(normalize([(n, coeff)]), limits)
    outer = automorphism_group(coeff, limits)
    expected = wreath_product(n, outer.aut, limits)
    pi0_matches = bool(np.array_equal(presentation.pi0.table, expected.table))
    sigma, phi = wreath_coordinates(n, outer.aut.order)
    inverse = np.argsort(_permutations(n), axis=1)
    values = product_coordinates([coeff.order] * n)
    rows = np.arange(len(sigma))
    components = []
    for j in range(n):
        source = inverse[sigma, j]
        components.append(outer.aut_elements[phi[rows, source][:, None], values[:, source].T])
    action = np.ravel_multi_index(tuple(components), (coeff.order,) * n)
    action_matches = pi0_matches and bool(np.array_equal(presentation.pi1.action, action))
    split = is_coboundary(presentation.z, limits) is not None
    return CayleyReport(
        pi0_order=presentation.pi0.order,
        pi1_order=presentation.pi1.coeff.order,
        pi0_matches=pi0_matches,
        action_matches=action_matches,
        split=split,
    )
