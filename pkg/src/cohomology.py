# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Normalized group cochains with coefficients in a finite module.

Coefficient groups are abelian :class:`groups.FiniteGroup` instances written additively: the
sum of two coefficients is their product in the table. A normalized k-cochain stores one value
per k-tuple of non-identity elements; tuples containing the identity are implicitly zero.
"""

import dataclasses
import itertools
import logging
import math
import typing

import numpy as np

import modular
from autos import GroupHom
from exceptions import (
    BudgetExceededError,
    CapExceededError,
    ConsistencyError,
    InvalidModuleError,
)
from groups import (
    FiniteGroup,
    _build_symmetric,
    _permutations,
    direct_product,
    product_coordinates,
    wreath_coordinates,
    wreath_product,
)
from state import Limits, default_limits

logger = logging.getLogger(__name__)

STRATEGIES = ("auto", "linear", "enumerate")


@dataclasses.dataclass(frozen=True, eq=False)
class GModule:
    """A finite abelian group with a left action.

    Attributes:
        acting_group: the group G.
        coeff: the abelian coefficient group A.
        action: array (|G|, |A|), ``action[g]`` is the automorphism ``a -> g.a``.
    """

    acting_group: FiniteGroup
    coeff: FiniteGroup
    action: np.ndarray

    def __post_init__(self) -> None:
        """Freeze the action and check the module laws.

        Raises:
            InvalidModuleError: if A is not abelian or the action is not a left action by
                automorphisms.
        """
        action = np.array(self.action, dtype=np.int64)
        group, coeff = self.acting_group, self.coeff
        if not coeff.is_abelian:
            raise InvalidModuleError(f"coefficient group {coeff!r} is not abelian")
        if action.shape != (group.order, coeff.order):
            raise InvalidModuleError(f"action has shape {action.shape}")
        if not np.array_equal(action[group.identity], np.arange(coeff.order)):
            raise InvalidModuleError("the identity does not act trivially")
        for g in range(group.order):
            row = action[g]
            if not np.array_equal(row[coeff.table], coeff.table[row[:, None], row[None, :]]):
                raise InvalidModuleError(f"element {g} does not act by a homomorphism")
        for g in range(group.order):
            # action[gh] = action[g] o action[h] for all h at once
            if not np.array_equal(action[group.table[g]], action[g][action]):
                raise InvalidModuleError(f"left action law fails for {g}")
        action.flags.writeable = False
        object.__setattr__(self, "action", action)

    @property
    def zero(self) -> int:
        """The zero coefficient."""
        return self.coeff.identity

    @property
    def is_trivial_action(self) -> bool:
        """Whether every element acts as the identity."""
        return bool((self.action == np.arange(self.coeff.order)).all())

    def act(self, g: int, a: int) -> int:
        """Action of a group element on a coefficient.

        Args:
            g: element of the acting group.
            a: coefficient.

        Returns:
            ``g . a``.
        """
        return int(self.action[g, a])

    def add(self, a: int, b: int) -> int:
        """Sum of two coefficients.

        Args:
            a: first summand.
            b: second summand.

        Returns:
            ``a + b``.
        """
        return int(self.coeff.table[a, b])

    def neg(self, a: int) -> int:
        """Negative of a coefficient.

        Args:
            a: the coefficient.

        Returns:
            ``-a``.
        """
        return int(self.coeff.inverse[a])


def trivial_module(group: FiniteGroup, coeff: FiniteGroup) -> GModule:
    """Module with the trivial action.

    Args:
        group: acting group.
        coeff: abelian coefficient group.

    Returns:
        The module.
    """
    action = np.tile(np.arange(coeff.order), (group.order, 1))
    return GModule(group, coeff, action)


def product_module(
    modules: typing.Sequence[GModule], limits: typing.Optional[Limits] = None
) -> GModule:
    """Product of modules over the product of the acting groups, acting componentwise.

    Args:
        modules: the factors.
        limits: active limits.

    Returns:
        The product module.
    """
    group = direct_product(*(m.acting_group for m in modules), limits=limits)
    coeff = direct_product(*(m.coeff for m in modules), limits=limits)
    g_coords = product_coordinates([m.acting_group.order for m in modules])
    a_coords = product_coordinates([m.coeff.order for m in modules])
    components = [
        m.action[g_coords[:, t][:, None], a_coords[:, t][None, :]] for t, m in enumerate(modules)
    ]
    if modules:
        action = np.ravel_multi_index(tuple(components), tuple(m.coeff.order for m in modules))
    else:
        action = np.zeros((1, 1), dtype=np.int64)
    return GModule(group, coeff, action)


def _inverse_permutations(n: int) -> np.ndarray:
    """Inverse of every permutation of S_n in canonical order.

    Args:
        n: number of letters.

    Returns:
        Array (n!, n) with ``inv[s, s(i)] = i``.
    """
    perms = _permutations(n)
    inverse = np.empty_like(perms)
    rows = np.arange(len(perms))[:, None]
    inverse[rows, perms] = np.arange(n)[None, :]
    return inverse


def wreath_module(n: int, module: GModule, limits: typing.Optional[Limits] = None) -> GModule:
    """The module A^n over S_n wr G: ``((s, g) . a)_j = g_{s^-1(j)} . a_{s^-1(j)}``.

    Args:
        n: number of letters.
        module: the module A over G.
        limits: active limits.

    Returns:
        The permute-then-act module.
    """
    group = wreath_product(n, module.acting_group, limits=limits)
    coeff = direct_product(*([module.coeff] * n), limits=limits)
    sigma, x = wreath_coordinates(n, module.acting_group.order)
    inverse = _inverse_permutations(n)
    a_coords = product_coordinates([module.coeff.order] * n)
    components = []
    for j in range(n):
        source = inverse[sigma, j]
        g = x[np.arange(len(sigma)), source]
        components.append(module.action[g[:, None], a_coords[:, source].T])
    action = np.ravel_multi_index(tuple(components), (module.coeff.order,) * n)
    return GModule(group, coeff, action)


def pullback_module(module: GModule, rho: GroupHom) -> GModule:
    """Restrict the acting group along a homomorphism into it.

    Args:
        module: module over ``rho.codomain``.
        rho: the homomorphism.

    Returns:
        The module over ``rho.domain`` with ``g . a = rho(g) . a``.
    """
    return GModule(rho.domain, module.coeff, module.action[rho.images])


@dataclasses.dataclass(frozen=True, eq=False)
class Cochain:
    """A normalized k-cochain.

    Attributes:
        module: the coefficient module.
        degree: k.
        values: array of shape (|G|-1,)*k indexed by positions of non-identity elements.
    """

    module: GModule
    degree: int
    values: np.ndarray

    def __post_init__(self) -> None:
        """Freeze and check the value array.

        Raises:
            InvalidModuleError: if the array has the wrong shape or entries.
        """
        values = np.array(self.values, dtype=np.int64)
        size = self.module.acting_group.order - 1
        if values.shape != (size,) * self.degree:
            raise InvalidModuleError(
                f"degree {self.degree} cochain needs shape {(size,) * self.degree}"
            )
        if values.size and (values.min() < 0 or values.max() >= self.module.coeff.order):
            raise InvalidModuleError("cochain values must be coefficients")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @property
    def group(self) -> FiniteGroup:
        """The acting group."""
        return self.module.acting_group

    @property
    def nontrivial(self) -> np.ndarray:
        """Non-identity elements in increasing order (the value axes)."""
        return _nontrivial(self.group)

    def full(self) -> np.ndarray:
        """Values on every k-tuple, zero on tuples containing the identity.

        Returns:
            Array of shape (|G|,)*k.
        """
        order = self.group.order
        full = np.full((order,) * self.degree, self.module.zero, dtype=np.int64)
        full[np.ix_(*([self.nontrivial] * self.degree))] = self.values
        return full

    def value(self, *args: int) -> int:
        """Value on a k-tuple of group elements.

        Args:
            args: k group elements.

        Returns:
            The coefficient.

        Raises:
            InvalidModuleError: if the number of arguments is not the degree.
        """
        if len(args) != self.degree:
            raise InvalidModuleError(f"expected {self.degree} arguments, got {len(args)}")
        if any(a == self.group.identity for a in args):
            return self.module.zero
        position = _positions(self.group)
        return int(self.values[tuple(position[a] for a in args)])

    @property
    def is_zero(self) -> bool:
        """Whether every value is zero."""
        return bool((self.values == self.module.zero).all())

    def entries(self) -> typing.List[typing.Tuple[typing.Tuple[int, ...], int]]:
        """Nonzero values keyed by argument tuples.

        Returns:
            Sorted list of ``(tuple, value)``.
        """
        nontrivial = self.nontrivial
        found = np.argwhere(self.values != self.module.zero)
        return [
            (tuple(int(nontrivial[p]) for p in pos), int(self.values[tuple(pos)]))
            for pos in found
        ]

    def _combine(self, other: "Cochain", values: np.ndarray) -> "Cochain":
        """Cochain with the same module and degree.

        Args:
            other: the other operand, checked for compatibility.
            values: the new values.

        Returns:
            The combined cochain.

        Raises:
            InvalidModuleError: if the operands live in different modules or degrees.
        """
        if other.module is not self.module or other.degree != self.degree:
            raise InvalidModuleError("cochains live in different modules or degrees")
        return Cochain(self.module, self.degree, values)

    def __add__(self, other: "Cochain") -> "Cochain":
        """Pointwise sum.

        Args:
            other: the other cochain.

        Returns:
            The sum.
        """
        return self._combine(other, self.module.coeff.table[self.values, other.values])

    def __neg__(self) -> "Cochain":
        """Pointwise negative.

        Returns:
            The negated cochain.
        """
        return Cochain(self.module, self.degree, self.module.coeff.inverse[self.values])

    def __sub__(self, other: "Cochain") -> "Cochain":
        """Pointwise difference.

        Args:
            other: the subtracted cochain.

        Returns:
            The difference.
        """
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        """Equality of module, degree and values.

        Args:
            other: object to compare with.

        Returns:
            True when both cochains agree everywhere.
        """
        if not isinstance(other, Cochain):
            return NotImplemented
        return (
            other.module is self.module
            and other.degree == self.degree
            and bool(np.array_equal(self.values, other.values))
        )

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def zero(cls, module: GModule, degree: int) -> "Cochain":
        """The zero cochain.

        Args:
            module: coefficient module.
            degree: k.

        Returns:
            The zero cochain.
        """
        size = module.acting_group.order - 1
        return cls(module, degree, np.full((size,) * degree, module.zero, dtype=np.int64))

    @classmethod
    def from_full(cls, module: GModule, full: np.ndarray) -> "Cochain":
        """Cochain from values on every tuple, checking normalization.

        Args:
            module: coefficient module.
            full: array of shape (|G|,)*k.

        Returns:
            The cochain.

        Raises:
            InvalidModuleError: if a tuple containing the identity has a nonzero value.
        """
        full = np.asarray(full, dtype=np.int64)
        degree = full.ndim
        group = module.acting_group
        nontrivial = _nontrivial(group)
        values = full[np.ix_(*([nontrivial] * degree))] if degree else full
        check = full.copy()
        if degree:
            check[np.ix_(*([nontrivial] * degree))] = module.zero
        if degree and (check != module.zero).any():
            bad = tuple(int(v) for v in np.argwhere(check != module.zero)[0])
            raise InvalidModuleError(f"cochain is not normalized at {bad}")
        return cls(module, degree, values)

    @classmethod
    def from_function(
        cls, module: GModule, degree: int, function: typing.Callable[..., int]
    ) -> "Cochain":
        """Cochain from a function on non-identity tuples.

        Args:
            module: coefficient module.
            degree: k.
            function: called with k group elements, returns a coefficient.

        Returns:
            The cochain.
        """
        nontrivial = _nontrivial(module.acting_group).tolist()
        size = len(nontrivial)
        values = np.empty((size,) * degree, dtype=np.int64)
        for pos in itertools.product(range(size), repeat=degree):
            values[pos] = function(*(nontrivial[p] for p in pos))
        return cls(module, degree, values)

    @classmethod
    def from_entries(
        cls,
        module: GModule,
        degree: int,
        entries: typing.Iterable[typing.Tuple[typing.Sequence[int], int]],
    ) -> "Cochain":
        """Cochain from its nonzero entries.

        Args:
            module: coefficient module.
            degree: k.
            entries: ``(tuple, value)`` pairs, tuples of non-identity elements.

        Returns:
            The cochain.

        Raises:
            InvalidModuleError: if an entry has an identity argument.
        """
        values = np.array(cls.zero(module, degree).values)
        position = _positions(module.acting_group)
        for args, value in entries:
            if len(args) != degree or any(position[a] < 0 for a in args):
                raise InvalidModuleError(f"invalid cochain entry {tuple(args)}")
            values[tuple(position[a] for a in args)] = value
        return cls(module, degree, values)


def _nontrivial(group: FiniteGroup) -> np.ndarray:
    """Non-identity elements in increasing order.

    Args:
        group: the group.

    Returns:
        Array of element indices.
    """
    return np.delete(np.arange(group.order), group.identity)


def _positions(group: FiniteGroup) -> np.ndarray:
    """Position of every element among the non-identity elements (-1 for the identity).

    Args:
        group: the group.

    Returns:
        Array of positions.
    """
    position = np.full(group.order, -1, dtype=np.int64)
    position[_nontrivial(group)] = np.arange(group.order - 1)
    return position


def _check_entries(count: int, limits: typing.Optional[Limits], context: str) -> None:
    """Enforce the cochain size cap.

    Args:
        count: number of tuples requested.
        limits: active limits.
        context: what is being built.

    Raises:
        CapExceededError: if the count is above the cap.
    """
    limits = limits or default_limits()
    if count > limits.max_cochain_entries:
        raise CapExceededError("max_cochain_entries", limits.max_cochain_entries, count, context)


def coboundary(c: Cochain, limits: typing.Optional[Limits] = None) -> Cochain:
    """Bar differential of a normalized cochain.

    ``(dc)(g1..g{k+1}) = g1.c(g2..) + sum_i (-1)^i c(.., g_i g_{i+1}, ..) + (-1)^{k+1} c(g1..gk)``.

    Args:
        c: a normalized k-cochain.
        limits: active limits.

    Returns:
        The normalized (k+1)-cochain ``dc``.
    """
    module, k = c.module, c.degree
    group, coeff = module.acting_group, module.coeff
    n = group.order
    _check_entries(n ** (k + 1), limits, "coboundary")
    full = c.full()
    idx = np.indices((n,) * (k + 1), sparse=True)
    table, neg = coeff.table, coeff.inverse
    result = module.action[idx[0], full[tuple(idx[1:])]] if k else module.action[idx[0], full]
    for i in range(1, k + 1):
        merged = list(idx[:i - 1]) + [group.table[idx[i - 1], idx[i]]] + list(idx[i + 1 :])
        term = full[tuple(merged)]
        result = table[result, neg[term] if i % 2 else term]
    last = full[tuple(idx[:k])] if k else np.broadcast_to(full, result.shape)
    result = table[result, last if (k + 1) % 2 == 0 else neg[last]]
    result = np.broadcast_to(result, (n,) * (k + 1))
    try:
        return Cochain.from_full(module, result)
    except InvalidModuleError as exc:
        raise ConsistencyError("coboundary of a normalized cochain is not normalized") from exc


def is_cocycle(z: Cochain, limits: typing.Optional[Limits] = None) -> bool:
    """Whether ``dz = 0``.

    Args:
        z: a normalized cochain.
        limits: active limits.

    Returns:
        True for cocycles.
    """
    return coboundary(z, limits).is_zero


class _System(typing.NamedTuple):
    """The linear system ``dc = z`` restricted to the coordinates of one prime.

    Attrs:
        prime: the prime p.
        power: E, the largest exponent of p among the coordinates.
        coordinates: basis positions belonging to p.
        rows: row index of every coefficient entry.
        cols: column index of every coefficient entry.
        vals: value of every coefficient entry (before reduction mod p^E).
        rhs: right hand side.
        shape: (number of rows, number of columns).
    """

    prime: int
    power: int
    coordinates: typing.List[int]
    rows: np.ndarray
    cols: np.ndarray
    vals: np.ndarray
    rhs: np.ndarray
    shape: typing.Tuple[int, int]


def _build_systems(z: Cochain) -> typing.List[_System]:
    """Linear systems, one per prime, whose solutions are the normalized c with dc = z.

    Equation rows are indexed by (non-identity k-tuple, coordinate), unknowns by
    (non-identity (k-1)-tuple, coordinate). A coordinate of order p^e is embedded in Z/p^E by
    scaling its equations by p^(E-e).

    Args:
        z: the cocycle.

    Returns:
        The systems.
    """
    module, k = z.module, z.degree
    group = module.acting_group
    decomposition = modular.primary_decomposition(module.coeff)
    m = group.order - 1
    nontrivial = _nontrivial(group)
    position = _positions(group)
    tuples = nontrivial[np.indices((m,) * k).reshape(k, -1)]
    count = tuples.shape[1]
    target = decomposition.coords[z.values.reshape(-1)]
    matrices = np.stack([decomposition.matrix(module.action[g]) for g in range(group.order)])

    def unknown(args: typing.List[np.ndarray]) -> np.ndarray:
        """Flat unknown index of (k-1)-tuples given as position arrays.

        Args:
            args: k-1 arrays of group elements.

        Returns:
            Flat indices.
        """
        if not args:
            return np.zeros(count, dtype=np.int64)
        return np.ravel_multi_index(tuple(position[a] for a in args), (m,) * len(args))

    terms = [(tuples[0], unknown(list(tuples[1:])), None, np.ones(count, dtype=bool))]
    for i in range(1, k):
        merged = group.table[tuples[i - 1], tuples[i]]
        valid = merged != group.identity
        merged = np.where(valid, merged, nontrivial[0])
        args = list(tuples[: i - 1]) + [merged] + list(tuples[i + 1 :])
        terms.append((None, unknown(args), (-1) ** i, valid))
    terms.append((None, unknown(list(tuples[: k - 1])), (-1) ** k, np.ones(count, dtype=bool)))

    systems = []
    row_index = np.arange(count)
    for prime in sorted(set(decomposition.primes)):
        coordinates = [j for j, p in enumerate(decomposition.primes) if p == prime]
        width = len(coordinates)
        power = max(decomposition.exponents[j] for j in coordinates)
        scale = np.array(
            [prime ** (power - decomposition.exponents[j]) for j in coordinates], dtype=np.int64
        )
        rows, cols, vals = [], [], []
        for acting, unknowns, sign, valid in terms:
            base_rows, base_cols = row_index[valid], unknowns[valid]
            if acting is not None:
                blocks = matrices[acting[valid]][:, coordinates][:, :, coordinates]
                for a in range(width):
                    for b in range(width):
                        rows.append(base_rows * width + a)
                        cols.append(base_cols * width + b)
                        vals.append(blocks[:, a, b] * scale[a])
            else:
                for a in range(width):
                    rows.append(base_rows * width + a)
                    cols.append(base_cols * width + a)
                    vals.append(np.full(len(base_rows), sign * scale[a], dtype=np.int64))
        rhs = (target[:, coordinates] * scale[None, :]).reshape(-1)
        systems.append(
            _System(
                prime=prime,
                power=power,
                coordinates=coordinates,
                rows=np.concatenate(rows),
                cols=np.concatenate(cols),
                vals=np.concatenate(vals),
                rhs=rhs,
                shape=(count * width, (m ** (k - 1)) * width),
            )
        )
    return systems


def _solve_linear(z: Cochain, limits: Limits) -> typing.Optional[Cochain]:
    """Decide ``dc = z`` with the prime power eliminators.

    Args:
        z: the cocycle.
        limits: active limits.

    Returns:
        A witness or None.

    Raises:
        BudgetExceededError: if a system is larger than the solver budget.
    """
    module, k = z.module, z.degree
    decomposition = modular.primary_decomposition(module.coeff)
    m = module.acting_group.order - 1
    unknowns = m ** (k - 1)
    coordinates = np.zeros((unknowns, len(decomposition.basis)), dtype=np.int64)
    for system in _build_systems(z):
        rows, cols = system.shape
        modulus = system.prime**system.power
        logger.debug(
            "Solving %d x %d system over Z/%d for a degree %d cocycle", rows, cols, modulus, k
        )
        if modulus == 2:
            if rows * cols > limits.solver_bitset_max_entries:
                raise BudgetExceededError("solver_bitset_max_entries", f"{rows} x {cols} system")
            keys = system.rows * cols + system.cols
            unique, inverse = np.unique(keys, return_inverse=True)
            parity = np.bincount(inverse, weights=system.vals % 2).astype(np.int64) % 2
            odd = unique[parity == 1]
            solution = modular.solve_gf2_sparse(odd // cols, odd % cols, system.rhs % 2, cols)
        else:
            if rows * cols > limits.solver_max_entries:
                raise BudgetExceededError("solver_max_entries", f"{rows} x {cols} system")
            matrix = np.zeros((rows, cols), dtype=np.int64)
            np.add.at(matrix, (system.rows, system.cols), system.vals)
            solution = modular.solve_prime_power(matrix, system.rhs, system.prime, system.power)
        if solution is None:
            return None
        coordinates[:, system.coordinates] = solution.reshape(unknowns, len(system.coordinates))
    moduli = decomposition.moduli
    coordinates %= moduli[None, :] if len(moduli) else 1
    if len(moduli):
        elements = decomposition.decode[tuple(coordinates.T)]
    else:
        elements = np.full(unknowns, module.zero, dtype=np.int64)
    return Cochain(module, k - 1, elements.reshape((m,) * (k - 1)))


def _solve_enumerate(z: Cochain, limits: Limits) -> typing.Optional[Cochain]:
    """Decide ``dc = z`` by trying every normalized (k-1)-cochain.

    Args:
        z: the cocycle.
        limits: active limits.

    Returns:
        A witness or None.

    Raises:
        BudgetExceededError: if there are too many unknowns.
    """
    module, k = z.module, z.degree
    m = module.acting_group.order - 1
    unknowns = m ** (k - 1)
    if unknowns > limits.enumeration_max_unknowns:
        raise BudgetExceededError(
            "enumeration_max_unknowns", f"{unknowns} unknown values to enumerate"
        )
    for values in itertools.product(range(module.coeff.order), repeat=unknowns):
        candidate = Cochain(module, k - 1, np.array(values).reshape((m,) * (k - 1)))
        if coboundary(candidate, limits) == z:
            return candidate
    return None


def is_coboundary(
    z: Cochain, limits: typing.Optional[Limits] = None, strategy: str = "auto"
) -> typing.Optional[Cochain]:
    """Decide whether a cocycle is a coboundary.

    Args:
        z: a normalized cocycle of degree k >= 1.
        limits: active limits.
        strategy: ``linear``, ``enumerate`` or ``auto`` (linear, enumeration when the linear
            system is over budget).

    Returns:
        A normalized (k-1)-cochain ``c`` with ``dc = z``, or None when the class is nonzero.

    Raises:
        InvalidModuleError: for degree 0 or an unknown strategy.
        BudgetExceededError: if no strategy fits the budgets.
        ConsistencyError: if a witness fails re-verification.
    """
    limits = limits or default_limits()
    if z.degree < 1:
        raise InvalidModuleError("only positive degree cochains can be coboundaries")
    if strategy not in STRATEGIES:
        raise InvalidModuleError(f"unknown strategy {strategy!r}")
    if z.is_zero:
        return Cochain.zero(z.module, z.degree - 1)
    if strategy == "enumerate":
        witness = _solve_enumerate(z, limits)
    else:
        try:
            witness = _solve_linear(z, limits)
        except BudgetExceededError:
            if strategy == "linear":
                raise
            logger.info("Linear system over budget, falling back to enumeration")
            witness = _solve_enumerate(z, limits)
    if witness is not None and coboundary(witness, limits) != z:
        raise ConsistencyError(
            "coboundary witness fails verification", {"entries": witness.entries()[:20]}
        )
    return witness


def cohomologous(
    first: Cochain, second: Cochain, limits: typing.Optional[Limits] = None
) -> typing.Optional[Cochain]:
    """Decide whether two cocycles differ by a coboundary.

    Args:
        first: a cocycle.
        second: a cocycle in the same module and degree.
        limits: active limits.

    Returns:
        ``c`` with ``dc = first - second``, or None.
    """
    return is_coboundary(first - second, limits)


def pullback(c: Cochain, rho: GroupHom, module: typing.Optional[GModule] = None) -> Cochain:
    """Precompose a cochain with a homomorphism of acting groups.

    Args:
        c: cochain over ``rho.codomain``.
        rho: the homomorphism.
        module: the pulled back module, built when omitted.

    Returns:
        ``(g1..gk) -> c(rho(g1)..rho(gk))``.
    """
    module = module or pullback_module(c.module, rho)
    full = c.full()
    images = rho.images
    pulled = full[np.ix_(*([images] * c.degree))] if c.degree else full
    return Cochain.from_full(module, pulled)


def pushforward(c: Cochain, beta: GroupHom, module: GModule) -> Cochain:
    """Apply a coefficient homomorphism to every value.

    Args:
        c: the cochain.
        beta: homomorphism from ``c.module.coeff`` to ``module.coeff``.
        module: target module over the same acting group.

    Returns:
        ``beta o c``.
    """
    return Cochain(module, c.degree, beta.images[c.values])


def random_cochain(module: GModule, degree: int, rng: np.random.Generator) -> Cochain:
    """Uniformly random normalized cochain.

    Args:
        module: coefficient module.
        degree: k.
        rng: numpy random generator.

    Returns:
        The cochain.
    """
    size = module.acting_group.order - 1
    return Cochain(module, degree, rng.integers(0, module.coeff.order, size=(size,) * degree))


def enumerate_cochains(module: GModule, degree: int) -> typing.Iterator[Cochain]:
    """Every normalized cochain of a degree, in lexicographic order of values.

    Args:
        module: coefficient module.
        degree: k.

    Yields:
        The cochains.
    """
    size = module.acting_group.order - 1
    for values in itertools.product(range(module.coeff.order), repeat=size**degree):
        yield Cochain(module, degree, np.array(values, dtype=np.int64).reshape((size,) * degree))


def xi(
    n: int,
    c: Cochain,
    module: typing.Optional[GModule] = None,
    limits: typing.Optional[Limits] = None,
) -> Cochain:
    """Transfer a cochain over (G, A) to (S_n wr G, A^n).

    Component j of the value on ``((s1, g1), ..., (sk, gk))`` is
    ``c(g1[s1^-1(j)], g2[(s1 s2)^-1(j)], ..., gk[(s1..sk)^-1(j)])``.

    Args:
        n: number of letters.
        c: a normalized cochain.
        module: ``wreath_module(n, c.module)``, built when omitted.
        limits: active limits.

    Returns:
        The transferred cochain.
    """
    base = c.module
    k = c.degree
    order = math.factorial(n) * base.acting_group.order**n
    _check_entries((order - 1) ** k, limits, f"xi({n})")
    module = module or wreath_module(n, base, limits)
    group = module.acting_group
    sigma, x = wreath_coordinates(n, base.acting_group.order)
    sn_table = _build_symmetric(n, limits or default_limits()).table
    inverse = _inverse_permutations(n)
    nontrivial = _nontrivial(group)
    m = group.order - 1
    full = c.full()
    grids = np.indices((m,) * k, sparse=True) if k else []
    elements = [nontrivial[g] for g in grids]
    components = []
    for j in range(n):
        prefix = None
        args = []
        for w in elements:
            prefix = sigma[w] if prefix is None else sn_table[prefix, sigma[w]]
            args.append(x[w, inverse[prefix, j]])
        components.append(full[tuple(args)] if k else full)
    shape = (m,) * k
    values = np.ravel_multi_index(
        tuple(np.broadcast_to(comp, shape) for comp in components), (base.coeff.order,) * n
    )
    return Cochain(module, k, values)


def zeta(
    cochains: typing.Sequence[Cochain],
    module: typing.Optional[GModule] = None,
    limits: typing.Optional[Limits] = None,
) -> Cochain:
    """Product cochain over (prod G_i, prod A_i), evaluated componentwise.

    Args:
        cochains: cochains of a common degree.
        module: ``product_module`` of their modules, built when omitted.
        limits: active limits.

    Returns:
        The product cochain.

    Raises:
        InvalidModuleError: if the degrees differ.
    """
    degrees = {c.degree for c in cochains}
    if len(degrees) > 1:
        raise InvalidModuleError(f"cochains of different degrees {sorted(degrees)}")
    k = degrees.pop() if degrees else 3
    module = module or product_module([c.module for c in cochains], limits)
    group = module.acting_group
    _check_entries((group.order - 1) ** k, limits, "zeta")
    coords = product_coordinates([c.group.order for c in cochains])
    nontrivial = _nontrivial(group)
    m = group.order - 1
    grids = np.indices((m,) * k, sparse=True) if k else []
    shape = (m,) * k
    components = []
    for t, c in enumerate(cochains):
        full = c.full()
        args = tuple(coords[nontrivial[g], t] for g in grids)
        components.append(np.broadcast_to(full[args] if k else full, shape))
    if not cochains:
        return Cochain.zero(module, k)
    values = np.ravel_multi_index(tuple(components), tuple(c.module.coeff.order for c in cochains))
    return Cochain(module, k, values)
