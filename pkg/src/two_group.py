# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Special 2-groups A[1] x|_z G[0] given by their invariant triple (pi0, pi1, z).

Objects are the elements of pi0, every morphism is an automorphism ``(u, [x])`` with ``u`` in
pi1. The tensor product is ``(u, x) (x) (u', x') = (u + x.u', x x')``, composition adds the pi1
components and the associator of ``(x, x', x'')`` is ``(z(x, x', x''), x x' x'')``.
"""

import dataclasses
import logging
import typing

import numpy as np

from autos import GroupHom, homomorphisms
from cohomology import (
    Cochain,
    GModule,
    is_coboundary,
    is_cocycle,
    product_module,
    pullback,
    pullback_module,
    pushforward,
    trivial_module,
    wreath_module,
    xi,
    zeta,
)
from exceptions import BudgetExceededError, ConsistencyError, InvalidCellError, InvalidModuleError
from groups import FiniteGroup, _lex_ranks, _permutations, _symmetric_degree, cyclic
from modular import abelian_invariants
from state import Limits, default_limits
from types_ import CoherenceReport, TwoCell

logger = logging.getLogger(__name__)

MAX_REPORTED_VIOLATIONS = 50


@dataclasses.dataclass(frozen=True, eq=False)
class TwoGroupPresentation:
    """The invariant triple of a special 2-group.

    Attributes:
        pi0: the group of objects.
        pi1: the module of automorphisms of the unit.
        z: normalized 3-cocycle giving the associator.
        checked: whether the cocycle condition was enforced on construction.
    """

    pi0: FiniteGroup
    pi1: GModule
    z: Cochain
    checked: bool = dataclasses.field(default=True, repr=False)

    def __post_init__(self) -> None:
        """Validate the triple.

        Raises:
            InvalidModuleError: if the pieces do not fit together or z is not a cocycle.
        """
        if self.pi1.acting_group != self.pi0:
            raise InvalidModuleError("pi1 is not a module over pi0")
        if self.z.module is not self.pi1 or self.z.degree != 3:
            raise InvalidModuleError("z must be a 3-cochain with coefficients in pi1")
        if self.checked and not is_cocycle(self.z):
            raise InvalidModuleError("z is not a 3-cocycle")

    @classmethod
    def unchecked(cls, pi0: FiniteGroup, pi1: GModule, z: Cochain) -> "TwoGroupPresentation":
        """Build a triple without the cocycle check, for coherence experiments.

        Args:
            pi0: the group of objects.
            pi1: the module.
            z: any normalized 3-cochain.

        Returns:
            The (possibly incoherent) presentation.
        """
        return cls(pi0, pi1, z, checked=False)


@dataclasses.dataclass(frozen=True, eq=False)
class TwoGroupMorphismData:
    """A morphism of special 2-groups: (rho, beta, w).

    Attributes:
        rho: homomorphism pi0 -> pi0'.
        beta: module map pi1 -> pi1' along rho.
        w: normalized 2-cochain over (pi0, pi1' pulled back along rho).
    """

    rho: GroupHom
    beta: GroupHom
    w: Cochain

    def __post_init__(self) -> None:
        """Check that w lives over the source pi0 with values in the target pi1.

        Raises:
            InvalidModuleError: if w does not fit rho and beta.
        """
        if self.w.degree != 2 or self.w.group != self.rho.domain:
            raise InvalidModuleError("w must be a 2-cochain over the source pi0")
        if self.w.module.coeff != self.beta.codomain:
            raise InvalidModuleError("w must take values in the target pi1")

    def is_module_map(self, source: GModule, target: GModule) -> bool:
        """Check the module map law ``beta(g.a) = rho(g).beta(a)``.

        Args:
            source: pi1 of the source 2-group.
            target: pi1 of the target 2-group.

        Returns:
            True when beta is compatible with rho.
        """
        return _module_map_ok(source, target, self.rho, self.beta)


def _module_map_ok(source: GModule, target: GModule, rho: GroupHom, beta: GroupHom) -> bool:
    """Whether ``beta(g.a) = rho(g).beta(a)`` for every g and a.

    Args:
        source: module over rho's domain.
        target: module over rho's codomain.
        rho: homomorphism of acting groups.
        beta: homomorphism of coefficient groups.

    Returns:
        True for module maps.
    """
    left = beta.images[source.action]
    right = target.action[rho.images][:, beta.images]
    return bool(np.array_equal(left, right))


def _check_cell(presentation: TwoGroupPresentation, cell: TwoCell) -> TwoCell:
    """Validate membership of a cell.

    Args:
        presentation: the 2-group.
        cell: the candidate cell.

    Returns:
        The cell as plain integers.

    Raises:
        InvalidCellError: if a component is out of range.
    """
    u, x = int(cell[0]), int(cell[1])
    if not 0 <= u < presentation.pi1.coeff.order or not 0 <= x < presentation.pi0.order:
        raise InvalidCellError(f"({u}, {x}) is not a cell of this 2-group")
    return TwoCell(u, x)


def _tensor(
    presentation: TwoGroupPresentation,
    u: np.ndarray,
    x: np.ndarray,
    u2: np.ndarray,
    x2: np.ndarray,
) -> typing.Tuple[np.ndarray, np.ndarray]:
    """Vectorized tensor product of cells.

    Args:
        presentation: the 2-group.
        u: pi1 components of the left cells.
        x: pi0 components of the left cells.
        u2: pi1 components of the right cells.
        x2: pi0 components of the right cells.

    Returns:
        ``(u + x.u2, x x2)``.
    """
    coeff = presentation.pi1.coeff
    acted = presentation.pi1.action[x, u2]
    return coeff.table[u, acted], presentation.pi0.table[x, x2]


def tensor_cells(presentation: TwoGroupPresentation, first: TwoCell, second: TwoCell) -> TwoCell:
    """Tensor product of two cells.

    Args:
        presentation: the 2-group.
        first: the cell (u, x).
        second: the cell (u', x').

    Returns:
        ``(u + x.u', x x')``.
    """
    first, second = _check_cell(presentation, first), _check_cell(presentation, second)
    u, x = _tensor(presentation, first.u, first.x, second.u, second.x)
    return TwoCell(int(u), int(x))


def compose_cells(presentation: TwoGroupPresentation, first: TwoCell, second: TwoCell) -> TwoCell:
    """Composite of two automorphisms of the same object.

    Args:
        presentation: the 2-group.
        first: the cell (u, x).
        second: the cell (u', x).

    Returns:
        ``(u + u', x)``.

    Raises:
        InvalidCellError: if the cells live on different objects.
    """
    first, second = _check_cell(presentation, first), _check_cell(presentation, second)
    if first.x != second.x:
        raise InvalidCellError(f"cannot compose cells on objects {first.x} and {second.x}")
    return TwoCell(presentation.pi1.add(first.u, second.u), first.x)


def associator(presentation: TwoGroupPresentation, x: int, y: int, w: int) -> TwoCell:
    """The associator cell of three objects.

    Args:
        presentation: the 2-group.
        x: first object.
        y: second object.
        w: third object.

    Returns:
        ``(z(x, y, w), x y w)``.
    """
    pi0 = presentation.pi0
    for obj in (x, y, w):
        pi0.check_element(obj)
    return TwoCell(presentation.z.value(x, y, w), pi0.product((x, y, w)))


def unit_cell(presentation: TwoGroupPresentation, x: typing.Optional[int] = None) -> TwoCell:
    """Identity cell of an object, the unit object by default.

    Args:
        presentation: the 2-group.
        x: the object.

    Returns:
        ``(0, x)``.
    """
    x = presentation.pi0.identity if x is None else presentation.pi0.check_element(x)
    return TwoCell(presentation.pi1.zero, x)


def inverse_cell(presentation: TwoGroupPresentation, cell: TwoCell) -> TwoCell:
    """Inverse of a cell under composition.

    Args:
        presentation: the 2-group.
        cell: the cell (u, x).

    Returns:
        ``(-u, x)``.
    """
    cell = _check_cell(presentation, cell)
    return TwoCell(presentation.pi1.neg(cell.u), cell.x)


def tensor_inverse(presentation: TwoGroupPresentation, cell: TwoCell) -> TwoCell:
    """A cell whose tensor product with the given one is the unit cell.

    Args:
        presentation: the 2-group.
        cell: the cell (u, x).

    Returns:
        ``(-(x^-1 . u), x^-1)``.
    """
    cell = _check_cell(presentation, cell)
    x_inv = presentation.pi0.invert(cell.x)
    return TwoCell(presentation.pi1.neg(presentation.pi1.act(x_inv, cell.u)), x_inv)


def unit_violations(full: np.ndarray, identity: int, zero: int) -> np.ndarray:
    """Triples with an identity entry where the associator is not the unit cell.

    Args:
        full: dense associator values, shape (n, n, n).
        identity: identity index of pi0.
        zero: zero index of pi1.

    Returns:
        Array (m, 3) of offending (x, y, w) in lexicographic order.
    """
    x, y, w = np.indices(full.shape, sparse=True)
    touches_unit = (x == identity) | (y == identity) | (w == identity)
    return np.argwhere(touches_unit & (full != zero))


def verify_coherence(
    presentation: TwoGroupPresentation, limits: typing.Optional[Limits] = None
) -> CoherenceReport:
    """Check the pentagon and triangle identities on every tuple of objects.

    The pentagon for (x, y, v, w) compares
    ``a(x, y, vw) o a(xy, v, w)`` with ``(x (x) a(y, v, w)) o a(x, yv, w) o (a(x, y, v) (x) w)``
    using the cell arithmetic; both sides live on the object ``x y v w``.
    The triangle check asks for the unit cell at every triple with an identity entry,
    z(e, x, y) = z(x, e, y) = z(x, y, e) = 0.

    Args:
        presentation: the 2-group, possibly built with :meth:`TwoGroupPresentation.unchecked`.
        limits: active limits.

    Returns:
        The report.

    Raises:
        ConsistencyError: if the pentagon verdict disagrees with the cocycle condition.
    """
    pi0, pi1 = presentation.pi0, presentation.pi1
    n = pi0.order
    full = presentation.z.full()
    x, y, v, w = np.indices((n,) * 4, sparse=True)
    zero = np.full((1, 1, 1, 1), pi1.zero, dtype=np.int64)
    add = pi1.coeff.table
    table = pi0.table

    left = add[full[x, y, table[v, w]], full[table[x, y], v, w]]
    # x (x) a(y, v, w): unit cell of x tensored with the associator
    whisker_left, _ = _tensor(presentation, zero, x, full[y, v, w], table[table[y, v], w])
    middle = full[x, table[y, v], w]
    # a(x, y, v) (x) w: associator tensored with the unit cell of w
    whisker_right, _ = _tensor(presentation, full[x, y, v], table[table[x, y], v], zero, w)
    right = add[add[whisker_left, middle], whisker_right]
    failing = np.argwhere(np.broadcast_to(left != right, (n,) * 4))

    triangle = unit_violations(full, pi0.identity, pi1.zero)
    violations = [tuple(int(v) for v in row) for row in failing[:MAX_REPORTED_VIOLATIONS]]
    violations += [tuple(int(v) for v in row) for row in triangle[:MAX_REPORTED_VIOLATIONS]]
    pentagon_ok = not failing.size
    cocycle_ok = is_cocycle(presentation.z, limits)
    if pentagon_ok != cocycle_ok:
        raise ConsistencyError(
            "pentagon identity and cocycle condition disagree",
            {"pentagon": pentagon_ok, "cocycle": cocycle_ok},
        )
    logger.debug("Coherence of %r: %d pentagon failures", pi0, len(failing))
    return CoherenceReport(
        pentagon_ok=pentagon_ok,
        triangle_ok=not triangle.size,
        cocycle_ok=cocycle_ok,
        violations=violations,
    )


def elementary(module: GModule) -> TwoGroupPresentation:
    """The strict 2-group A[1] x| G[0] (z = 0).

    Args:
        module: the module A over G.

    Returns:
        The presentation.
    """
    return TwoGroupPresentation(module.acting_group, module, Cochain.zero(module, 3))


def discrete(group: FiniteGroup) -> TwoGroupPresentation:
    """The discrete 2-group G[0].

    Args:
        group: the group G.

    Returns:
        The presentation with trivial pi1.
    """
    return elementary(trivial_module(group, cyclic(1)))


def abelian(coeff: FiniteGroup) -> TwoGroupPresentation:
    """The 2-group A[1] with a single object.

    Args:
        coeff: an abelian group A.

    Returns:
        The presentation with trivial pi0.
    """
    return elementary(trivial_module(cyclic(1), coeff))


def product_presentation(
    family: typing.Sequence[TwoGroupPresentation], limits: typing.Optional[Limits] = None
) -> TwoGroupPresentation:
    """Product of a finite family of 2-groups, computed on invariants.

    Args:
        family: the factors.
        limits: active limits.

    Returns:
        pi0 the product group, pi1 the product module and z the product cocycle.
    """
    module = product_module([t.pi1 for t in family], limits)
    z = zeta([t.z for t in family], module, limits)
    return TwoGroupPresentation(module.acting_group, module, z)


def wreath_presentation(
    n: int, presentation: TwoGroupPresentation, limits: typing.Optional[Limits] = None
) -> TwoGroupPresentation:
    """The wreath 2-product S_n wr wr T, computed on invariants.

    Args:
        n: number of letters.
        presentation: the 2-group T.
        limits: active limits.

    Returns:
        pi0 = S_n wr pi0(T), pi1 = pi1(T)^n with the permute-then-act action, z = xi_n(z).
    """
    module = wreath_module(n, presentation.pi1, limits)
    z = xi(n, presentation.z, module, limits)
    return TwoGroupPresentation(module.acting_group, module, z)


def wreath_object_tensor(
    n: int,
    base: FiniteGroup,
    first: typing.Tuple[int, typing.Sequence[int]],
    second: typing.Tuple[int, typing.Sequence[int]],
) -> typing.Tuple[int, typing.Tuple[int, ...]]:
    """Tensor product of objects of S_n wr wr G[0].

    Args:
        n: number of letters.
        base: the group G.
        first: ``(sigma, x)`` with sigma an index of ``symmetric(n)``.
        second: ``(sigma', x')``.

    Returns:
        ``(sigma sigma', (x_{sigma'(1)} x'_1, ..., x_{sigma'(n)} x'_n))``.
    """
    perms = _permutations(n)
    sigma, x = first
    sigma2, x2 = second
    if len(x) != n or len(x2) != n:
        raise InvalidCellError(f"wreath objects need {n} components")
    shifted = perms[sigma2]
    composed = perms[sigma][shifted]
    product = tuple(base.multiply(x[int(shifted[i])], x2[i]) for i in range(n))
    return int(_lex_ranks(composed)), product


def presentations_equivalent(
    first: TwoGroupPresentation,
    second: TwoGroupPresentation,
    limits: typing.Optional[Limits] = None,
) -> typing.Optional[TwoGroupMorphismData]:
    """Decide whether two special 2-groups are equivalent.

    Isomorphisms rho of pi0 and compatible isomorphisms beta of pi1 are tried in canonical
    order; the first pair for which ``beta_* z - rho^* z'`` is a coboundary wins.

    Args:
        first: the first 2-group.
        second: the second 2-group.
        limits: active limits.

    Returns:
        An equivalence (rho, beta, w) or None.

    Raises:
        BudgetExceededError: if the groups are larger than the search budget.
    """
    limits = limits or default_limits()
    if first.pi0.order != second.pi0.order or first.pi1.coeff.order != second.pi1.coeff.order:
        return None
    if first.pi0.order > limits.equivalence_max_pi0:
        raise BudgetExceededError("equivalence_max_pi0", f"|pi0| = {first.pi0.order}")
    if first.pi1.coeff.order > limits.equivalence_max_pi1:
        raise BudgetExceededError("equivalence_max_pi1", f"|pi1| = {first.pi1.coeff.order}")
    betas = list(homomorphisms(first.pi1.coeff, second.pi1.coeff, injective=True))
    for rho in homomorphisms(first.pi0, second.pi0, injective=True):
        target = pullback_module(second.pi1, rho)
        pulled = pullback(second.z, rho, target)
        for beta in betas:
            if not _module_map_ok(first.pi1, second.pi1, rho, beta):
                continue
            difference = pushforward(first.z, beta, target) - pulled
            w = is_coboundary(difference, limits)
            if w is not None:
                logger.info("Equivalence found with rho %s", rho.images.tolist())
                return TwoGroupMorphismData(rho, beta, w)
    return None


def is_split(
    presentation: TwoGroupPresentation, limits: typing.Optional[Limits] = None
) -> typing.Optional[Cochain]:
    """Whether the 2-group is split, i.e. its class vanishes.

    Args:
        presentation: the 2-group.
        limits: active limits.

    Returns:
        A 2-cochain trivializing z, or None.
    """
    return is_coboundary(presentation.z, limits)


def describe_group(group: FiniteGroup) -> str:
    """Short name of a group.

    Args:
        group: the group.

    Returns:
        ``1`` for the trivial group, ``Z2xZ4``-style names for abelian groups and ``S3`` for
        symmetric groups, otherwise the family tag or the order.
    """
    if group.order == 1:
        return "1"
    if group.is_abelian:
        return "x".join(f"Z{d}" for d in abelian_invariants(group))
    tag = group.family_tag or ""
    if tag.startswith("symmetric("):
        return f"S{_symmetric_degree(group)}"
    return tag or f"order {group.order}"


def describe_presentation(
    presentation: TwoGroupPresentation, limits: typing.Optional[Limits] = None
) -> str:
    """Short description of a 2-group up to equivalence.

    Args:
        presentation: the 2-group.
        limits: active limits.

    Returns:
        ``trivial``, ``A[1]``, ``G[0]``, ``A[1]xG[0]``, ``A[1]⋊G[0]`` or ``A[1]⋊_zG[0]``.
    """
    pi0, pi1 = presentation.pi0, presentation.pi1
    if pi0.order == 1 and pi1.coeff.order == 1:
        return "trivial"
    objects, arrows = describe_group(pi0), describe_group(pi1.coeff)
    if pi0.order == 1:
        return f"{arrows}[1]"
    if pi1.coeff.order == 1:
        return f"{objects}[0]"
    if is_split(presentation, limits) is None:
        return f"{arrows}[1]⋊_z{objects}[0]"
    if pi1.is_trivial_action:
        return f"{arrows}[1]x{objects}[0]"
    return f"{arrows}[1]⋊{objects}[0]"
