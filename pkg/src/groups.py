# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Finite groups stored as dense multiplication tables.

Every group is a :class:`FiniteGroup` whose elements are the integers ``0..order-1``. The
constructors fix a canonical element order so that every downstream search and tie-break is
reproducible:

* ``cyclic(n)``: ``a^0, a^1, ..., a^(n-1)``.
* ``dihedral(n)``: ``e, r, ..., r^(n-1), s, sr, ..., sr^(n-1)`` (``sr^k`` has index ``n + k``).
* ``symmetric(n)``: permutations in lexicographic one-line order, product ``(st)(i) = s(t(i))``.
* ``dicyclic(m)``: ``a^0..a^(2m-1), x, xa, ..., xa^(2m-1)``.
* ``direct_product(G, H, ...)``: mixed radix, first factor most significant.
* ``wreath_product(n, G)``: ``(sigma, x)`` with sigma major and ``x`` mixed radix.
"""

import dataclasses
import functools
import itertools
import logging
import math
import typing

import numpy as np

from exceptions import CapExceededError, InvalidGroupError
from state import Limits, default_limits

logger = logging.getLogger(__name__)

# Elements are plain indices into the table of the group they belong to.
GroupElement = int


@dataclasses.dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its multiplication table.

    Attributes:
        table: order x order array, ``table[a, b]`` is the index of ``a * b``.
        identity: index of the identity element.
        labels: optional human readable element names.
        family_tag: optional constructor metadata such as ``dihedral(8)``.
    """

    table: np.ndarray
    identity: int = 0
    labels: typing.Optional[typing.Tuple[str, ...]] = None
    family_tag: typing.Optional[str] = None

    def __post_init__(self) -> None:
        """Freeze the table so the group can be shared safely."""
        table = np.ascontiguousarray(self.table, dtype=np.int32)
        table.flags.writeable = False
        object.__setattr__(self, "table", table)

    @property
    def order(self) -> int:
        """Number of elements."""
        return int(self.table.shape[0])

    @functools.cached_property
    def key(self) -> typing.Tuple[int, int, bytes]:
        """Canonical comparison key: order, identity and the raw table bytes."""
        return (self.order, self.identity, self.table.tobytes())

    def __eq__(self, other: object) -> bool:
        """Compare two groups by their tables.

        Args:
            other: object to compare with.

        Returns:
            True when both have the same table and identity.
        """
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        """Hash consistent with equality.

        Returns:
            Hash of the comparison key.
        """
        return hash(self.key)

    def __repr__(self) -> str:
        """Short description of the group.

        Returns:
            The family tag or the order.
        """
        return f"FiniteGroup({self.family_tag or 'order=' + str(self.order)})"

    @functools.cached_property
    def inverse(self) -> np.ndarray:
        """Array mapping every element to its inverse."""
        rows, cols = np.nonzero(self.table == self.identity)
        inverse = np.empty(self.order, dtype=np.int64)
        inverse[rows] = cols
        inverse.flags.writeable = False
        return inverse

    @functools.cached_property
    def element_orders(self) -> np.ndarray:
        """Array with the order of every element."""
        index = np.arange(self.order)
        orders = np.zeros(self.order, dtype=np.int64)
        power = index.copy()
        step = 1
        while True:
            orders[(power == self.identity) & (orders == 0)] = step
            if orders.all():
                break
            power = self.table[power, index]
            step += 1
        orders.flags.writeable = False
        return orders

    @property
    def exponent(self) -> int:
        """Least common multiple of the element orders."""
        return int(np.lcm.reduce(self.element_orders))

    @functools.cached_property
    def is_abelian(self) -> bool:
        """Whether the table is symmetric."""
        return bool(np.array_equal(self.table, self.table.T))

    @functools.cached_property
    def conjugacy_class_ids(self) -> np.ndarray:
        """Array assigning every element the index of its conjugacy class."""
        ids = np.full(self.order, -1, dtype=np.int64)
        next_id = 0
        for x in range(self.order):
            if ids[x] >= 0:
                continue
            ids[np.unique(self.table[self.table[:, x], self.inverse])] = next_id
            next_id += 1
        ids.flags.writeable = False
        return ids

    @functools.cached_property
    def class_sizes(self) -> np.ndarray:
        """Array with the size of the conjugacy class of every element."""
        counts = np.bincount(self.conjugacy_class_ids)
        sizes = counts[self.conjugacy_class_ids]
        sizes.flags.writeable = False
        return sizes

    @functools.cached_property
    def generators(self) -> typing.Tuple[int, ...]:
        """A small generating set chosen greedily by descending element order, then index."""
        return generating_set(self)

    def multiply(self, a: GroupElement, b: GroupElement) -> GroupElement:
        """Product of two elements.

        Args:
            a: left factor.
            b: right factor.

        Returns:
            The index of ``a * b``.
        """
        return int(self.table[a, b])

    def invert(self, x: GroupElement) -> GroupElement:
        """Inverse of an element.

        Args:
            x: the element.

        Returns:
            The index of ``x^-1``.
        """
        return int(self.inverse[x])

    def power(self, x: GroupElement, exponent: int) -> GroupElement:
        """Integer power of an element.

        Args:
            x: the element.
            exponent: any integer, negative values use the inverse.

        Returns:
            The index of ``x^exponent``.
        """
        base = x if exponent >= 0 else self.invert(x)
        result = self.identity
        for _ in range(abs(exponent) % int(self.element_orders[x])):
            result = int(self.table[result, base])
        return result

    def product(self, elements: typing.Iterable[GroupElement]) -> GroupElement:
        """Left to right product of a sequence of elements.

        Args:
            elements: the factors.

        Returns:
            The index of the product.
        """
        result = self.identity
        for x in elements:
            result = int(self.table[result, x])
        return result

    def label(self, x: GroupElement) -> str:
        """Human readable name of an element.

        Args:
            x: the element.

        Returns:
            The label, or ``#index`` for unlabeled groups.
        """
        return self.labels[x] if self.labels else f"#{x}"

    def check_element(self, x: int) -> GroupElement:
        """Validate an element index.

        Args:
            x: candidate index.

        Returns:
            The index as a Python int.

        Raises:
            InvalidGroupError: if the index is out of range.
        """
        if not 0 <= int(x) < self.order:
            raise InvalidGroupError(f"element {x} out of range for {self!r}", (int(x),))
        return int(x)


def _check_order(order: int, limits: typing.Optional[Limits], context: str) -> None:
    """Enforce the group order cap.

    Args:
        order: requested group order.
        limits: active limits.
        context: what is being built.

    Raises:
        CapExceededError: if the order is above the cap.
    """
    limits = limits or default_limits()
    if order > limits.max_group_order:
        raise CapExceededError("max_group_order", limits.max_group_order, order, context)


def _right_closure(table: np.ndarray, identity: int, gens: typing.Sequence[int]) -> np.ndarray:
    """Elements reached from the identity by right multiplication with ``gens``.

    Args:
        table: multiplication table.
        identity: identity index.
        gens: the generators.

    Returns:
        Boolean mask of reached elements.
    """
    mask = np.zeros(table.shape[0], dtype=bool)
    mask[identity] = True
    frontier = np.array([identity])
    columns = np.asarray(gens, dtype=np.int64)
    while frontier.size and columns.size:
        reached = np.unique(table[np.ix_(frontier, columns)])
        frontier = reached[~mask[reached]]
        mask[frontier] = True
    return mask


def _validate(table: np.ndarray, identity: int) -> None:
    """Check the group axioms of a raw table.

    Associativity is checked against a right-multiplication generating set: the set of ``a``
    with ``(xy)a = x(ya)`` for all ``x, y`` is closed under products, so it is everything once
    it contains such a set.

    Args:
        table: candidate multiplication table.
        identity: candidate identity.

    Raises:
        InvalidGroupError: with the offending elements when an axiom fails.
    """
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise InvalidGroupError(f"table must be a non-empty square array, got {table.shape}")
    order = table.shape[0]
    if table.min() < 0 or table.max() >= order:
        raise InvalidGroupError("table entries must be element indices")
    if not 0 <= identity < order:
        raise InvalidGroupError(f"identity {identity} out of range", (identity,))
    index = np.arange(order)
    for x in np.flatnonzero((table[identity] != index) | (table[:, identity] != index)):
        raise InvalidGroupError(f"identity law fails at {x}", (identity, int(x)))
    reference = np.sort(table, axis=1)
    for row in np.flatnonzero((reference != index).any(axis=1)):
        raise InvalidGroupError(f"row {row} is not a permutation", (int(row),))
    reference = np.sort(table, axis=0)
    for col in np.flatnonzero((reference != index[:, None]).any(axis=0)):
        raise InvalidGroupError(f"column {col} is not a permutation", (int(col),))
    gens: typing.List[int] = []
    mask = np.zeros(order, dtype=bool)
    mask[identity] = True
    for candidate in range(order):
        if mask[candidate]:
            continue
        gens.append(candidate)
        mask = _right_closure(table, identity, gens)
    for a in gens:
        lhs = table[:, a][table]
        rhs = table[:, table[:, a]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            x, y = (int(v) for v in bad[0])
            raise InvalidGroupError(
                f"associativity fails at ({x}, {y}, {a})", (x, y, int(a))
            )


def from_table(
    raw: typing.Sequence[typing.Sequence[int]],
    identity: typing.Optional[int] = None,
    labels: typing.Optional[typing.Sequence[str]] = None,
    family_tag: typing.Optional[str] = None,
    limits: typing.Optional[Limits] = None,
) -> FiniteGroup:
    """Build a group from a raw multiplication table, validating every axiom.

    Args:
        raw: the multiplication table, row major.
        identity: identity index, detected from the table when omitted.
        labels: optional element names.
        family_tag: optional constructor metadata.
        limits: active limits.

    Returns:
        The validated group.

    Raises:
        InvalidGroupError: if the table is not a group table.
    """
    try:
        table = np.asarray(raw, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise InvalidGroupError(f"table is not an integer array: {exc}") from exc
    if table.ndim == 2:
        _check_order(table.shape[0], limits, family_tag or "table group")
    if identity is None and table.ndim == 2 and table.size:
        candidates = np.flatnonzero((table == np.arange(table.shape[0])).all(axis=1))
        if not candidates.size:
            raise InvalidGroupError("table has no identity row")
        identity = int(candidates[0])
    _validate(table, identity if identity is not None else 0)
    if labels is not None and len(labels) != table.shape[0]:
        raise InvalidGroupError(f"expected {table.shape[0]} labels, got {len(labels)}")
    return FiniteGroup(
        table=table,
        identity=int(identity or 0),
        labels=tuple(labels) if labels is not None else None,
        family_tag=family_tag,
    )


def cyclic(n: int, limits: typing.Optional[Limits] = None) -> FiniteGroup:
    """Cyclic group of order n.

    Args:
        n: the order, at least 1.
        limits: active limits.

    Returns:
        The group Z_n.

    Raises:
        InvalidGroupError: if n < 1.
    """
    if n < 1:
        raise InvalidGroupError(f"cyclic(n) needs n >= 1, got {n}")
    _check_order(n, limits, f"cyclic({n})")
    index = np.arange(n)
    labels = ["e", "a"] + [f"a^{k}" for k in range(2, n)]
    return from_table(
        (index[:, None] + index[None, :]) % n,
        identity=0,
        labels=labels[:n],
        family_tag=f"cyclic({n})",
        limits=limits,
    )


def dihedral(n: int, limits: typing.Optional[Limits] = None) -> FiniteGroup:
    """Dihedral group of order 2n, presented by r^n = s^2 = e, sr = r^-1 s.

    Args:
        n: number of rotations, at least 2.
        limits: active limits.

    Returns:
        The group D_n with elements e, r, ..., r^(n-1), s, sr, ..., sr^(n-1).

    Raises:
        InvalidGroupError: if n < 2.
    """
    if n < 2:
        raise InvalidGroupError(f"dihedral(n) needs n >= 2, got {n}")
    _check_order(2 * n, limits, f"dihedral({n})")
    flip = np.arange(2 * n) // n
    rot = np.arange(2 * n) % n
    # r^a * s^f r^b: rotations pass through s with a sign change.
    sign = np.where(flip[None, :] == 1, -1, 1)
    new_rot = (sign * rot[:, None] + rot[None, :]) % n
    new_flip = (flip[:, None] + flip[None, :]) % 2
    rotations = ["e", "r"] + [f"r^{k}" for k in range(2, n)]
    reflections = ["s", "sr"] + [f"sr^{k}" for k in range(2, n)]
    return from_table(
        new_flip * n + new_rot,
        identity=0,
        labels=rotations[:n] + reflections[:n],
        family_tag=f"dihedral({n})",
        limits=limits,
    )


def dicyclic(m: int, limits: typing.Optional[Limits] = None) -> FiniteGroup:
    """Dicyclic group of order 4m, presented by a^2m = e, x^2 = a^m, xax^-1 = a^-1.

    ``dicyclic(2)`` is the quaternion group Q8.

    Args:
        m: at least 2.
        limits: active limits.

    Returns:
        The group with elements a^0..a^(2m-1), x, xa, ..., xa^(2m-1).

    Raises:
        InvalidGroupError: if m < 2.
    """
    if m < 2:
        raise InvalidGroupError(f"dicyclic(m) needs m >= 2, got {m}")
    size = 2 * m
    _check_order(2 * size, limits, f"dicyclic({m})")
    flip = np.arange(2 * size) // size
    rot = np.arange(2 * size) % size
    sign = np.where(flip[None, :] == 1, -1, 1)
    both = (flip[:, None] == 1) & (flip[None, :] == 1)
    new_rot = (sign * rot[:, None] + rot[None, :] + np.where(both, m, 0)) % size
    new_flip = (flip[:, None] + flip[None, :]) % 2
    powers = ["e", "a"] + [f"a^{k}" for k in range(2, size)]
    return from_table(
        new_flip * size + new_rot,
        identity=0,
        labels=powers + ["x" + ("" if k == 0 else p) for k, p in enumerate(powers)],
        family_tag=f"dicyclic({m})",
        limits=limits,
    )


def cycle_notation(perm: typing.Sequence[int]) -> str:
    """Cycle notation of a permutation of 0..n-1, written with letters 1..n.

    Args:
        perm: one-line notation, ``perm[i]`` is the image of ``i``.

    Returns:
        For example ``(1 2)(3 4)``, or ``e`` for the identity.
    """
    seen = [False] * len(perm)
    cycles = []
    for start, _ in enumerate(perm):
        if seen[start]:
            continue
        cycle = []
        point = start
        while not seen[point]:
            seen[point] = True
            cycle.append(point + 1)
            point = perm[point]
        if len(cycle) > 1:
            cycles.append("(" + " ".join(str(p) for p in cycle) + ")")
    return "".join(cycles) or "e"


@functools.lru_cache(maxsize=16)
def _permutations(n: int) -> np.ndarray:
    """All permutations of 0..n-1 in lexicographic order.

    Args:
        n: number of letters.

    Returns:
        Array of shape (n!, n).
    """
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    perms = perms.reshape(math.factorial(n), n)
    perms.flags.writeable = False
    return perms


def _lex_ranks(perms: np.ndarray) -> np.ndarray:
    """Lexicographic rank of every row of a permutation array (Lehmer code).

    Args:
        perms: array of shape (..., n).

    Returns:
        Integer ranks with the leading shape of ``perms``.
    """
    n = perms.shape[-1]
    ranks = np.zeros(perms.shape[:-1], dtype=np.int64)
    for i in range(n):
        smaller_after = (perms[..., i + 1 :] < perms[..., i : i + 1]).sum(axis=-1)
        ranks += smaller_after * math.factorial(n - 1 - i)
    return ranks


def symmetric(n: int, limits: typing.Optional[Limits] = None) -> FiniteGroup:
    """Symmetric group on n letters.

    Args:
        n: number of letters, at least 0.
        limits: active limits.

    Returns:
        S_n with lexicographically ordered one-line permutations and product
        ``(st)(i) = s(t(i))``.

    Raises:
        InvalidGroupError: if n < 0.
        CapExceededError: if n or n! is above the configured caps.
    """
    if n < 0:
        raise InvalidGroupError(f"symmetric(n) needs n >= 0, got {n}")
    limits = limits or default_limits()
    if n > limits.max_symmetric_degree:
        raise CapExceededError("max_symmetric_degree", limits.max_symmetric_degree, n)
    return _build_symmetric(n, limits)


def _build_symmetric(n: int, limits: Limits) -> FiniteGroup:
    """Table of S_n after the degree cap has been applied.

    Args:
        n: number of letters.
        limits: active limits.

    Returns:
        The symmetric group.
    """
    _check_order(math.factorial(n), limits, f"symmetric({n})")
    perms = _permutations(n)
    table = np.empty((len(perms), len(perms)), dtype=np.int64)
    for a, perm in enumerate(perms):
        table[a] = _lex_ranks(perm[perms]) if n else 0
    return from_table(
        table,
        identity=0,
        labels=[cycle_notation(p) for p in perms.tolist()],
        family_tag=f"symmetric({n})",
        limits=limits,
    )


def permutation_of(sn: FiniteGroup, sigma: GroupElement) -> typing.Tuple[int, ...]:
    """One-line notation of an element of a group built by :func:`symmetric`.

    Args:
        sn: a symmetric group.
        sigma: one of its elements.

    Returns:
        The images of 0..n-1.
    """
    degree = _symmetric_degree(sn)
    return tuple(int(v) for v in _permutations(degree)[sigma])


def _symmetric_degree(sn: FiniteGroup) -> int:
    """Number of letters of a symmetric group.

    Args:
        sn: a group built by :func:`symmetric`.

    Returns:
        The degree n.

    Raises:
        InvalidGroupError: if the group was not built by :func:`symmetric`.
    """
    tag = sn.family_tag or ""
    if not tag.startswith("symmetric("):
        raise InvalidGroupError(f"{sn!r} is not a symmetric group")
    return int(tag[len("symmetric(") : -1])


def product_coordinates(orders: typing.Sequence[int]) -> np.ndarray:
    """Component indices of every element of a direct product.

    Args:
        orders: factor orders, first factor most significant.

    Returns:
        Array of shape (prod(orders), len(orders)).
    """
    total = int(np.prod(orders, dtype=np.int64)) if len(orders) else 1
    if not len(orders):
        return np.zeros((1, 0), dtype=np.int64)
    return np.stack(np.unravel_index(np.arange(total), tuple(orders)), axis=1)


def direct_product(*groups: FiniteGroup, limits: typing.Optional[Limits] = None) -> FiniteGroup:
    """Direct product of a finite family of groups.

    Args:
        groups: the factors; the empty family gives the trivial group.
        limits: active limits.

    Returns:
        The product with mixed radix indices, first factor most significant.
    """
    orders = [g.order for g in groups]
    total = int(np.prod(orders, dtype=np.int64)) if orders else 1
    tag = "product(" + ",".join(g.family_tag or f"order {g.order}" for g in groups) + ")"
    _check_order(total, limits, tag)
    if not groups:
        return from_table([[0]], identity=0, labels=["e"], family_tag="product()")
    coords = product_coordinates(orders)
    components = [
        g.table[coords[:, t][:, None], coords[:, t][None, :]] for t, g in enumerate(groups)
    ]
    table = np.ravel_multi_index(tuple(components), tuple(orders))
    identity = int(np.ravel_multi_index(tuple(g.identity for g in groups), tuple(orders)))
    labels = None
    if all(g.labels for g in groups):
        labels = [
            "(" + ",".join(g.label(int(c)) for g, c in zip(groups, row)) + ")"
            for row in coords.tolist()
        ]
    return from_table(table, identity=identity, labels=labels, family_tag=tag, limits=limits)


def wreath_coordinates(n: int, base_order: int) -> typing.Tuple[np.ndarray, np.ndarray]:
    """Coordinates of the elements of ``wreath_product(n, G)``.

    Args:
        n: number of letters.
        base_order: order of G.

    Returns:
        ``(sigma, x)`` arrays: the S_n index of every element and its G components
        (shape (N, n)).
    """
    count = math.factorial(n) * base_order**n
    index = np.arange(count)
    sigma = index // (base_order**n)
    x = product_coordinates([base_order] * n)[index % (base_order**n)]
    return sigma, x


def wreath_index(n: int, base_order: int, sigma: int, x: typing.Sequence[int]) -> int:
    """Index of ``(sigma, x)`` in ``wreath_product(n, G)``.

    Args:
        n: number of letters.
        base_order: order of G.
        sigma: S_n index.
        x: the n components in G.

    Returns:
        The element index.
    """
    inner = int(np.ravel_multi_index(tuple(x), (base_order,) * n)) if n else 0
    return sigma * base_order**n + inner


def wreath_product(
    n: int, base: FiniteGroup, limits: typing.Optional[Limits] = None
) -> FiniteGroup:
    """Wreath product S_n wr G with ``(s, x)(t, y) = (st, (x|>t) y)``, ``(x|>t)_i = x_t(i)``.

    Args:
        n: number of letters, at least 1.
        base: the group G.
        limits: active limits.

    Returns:
        The wreath product group.

    Raises:
        InvalidGroupError: if n < 1.
    """
    if n < 1:
        raise InvalidGroupError(f"wreath_product needs n >= 1, got {n}")
    tag = f"wreath({n},{base.family_tag or 'order ' + str(base.order)})"
    _check_order(math.factorial(n) * base.order**n, limits, tag)
    sn = _build_symmetric(n, limits or default_limits())
    perms = _permutations(n)
    sigma, x = wreath_coordinates(n, base.order)
    count = len(sigma)
    table = np.empty((count, count), dtype=np.int64)
    for w in range(count):
        # (x|>t)_i = x_{t(i)} for every right factor t at once.
        shifted = x[w][perms[sigma]]
        components = base.table[shifted, x]
        inner = np.ravel_multi_index(tuple(components.T), (base.order,) * n)
        table[w] = sn.table[sigma[w], sigma] * base.order**n + inner
    labels = None
    if base.labels:
        labels = [
            f"({sn.label(int(s))}; " + ",".join(base.label(int(c)) for c in row) + ")"
            for s, row in zip(sigma, x)
        ]
    identity = wreath_index(n, base.order, 0, [base.identity] * n)
    return from_table(table, identity=identity, labels=labels, family_tag=tag, limits=limits)


def subgroup(
    group: FiniteGroup, elements: typing.Iterable[GroupElement], family_tag: str = ""
) -> typing.Tuple[FiniteGroup, np.ndarray]:
    """The subgroup on a set of elements, relabeled in increasing index order.

    Args:
        group: the ambient group.
        elements: elements of a subgroup.
        family_tag: optional tag for the result.

    Returns:
        The subgroup and its embedding (array of ambient indices).

    Raises:
        InvalidGroupError: if the elements are not closed under the product.
    """
    members = np.unique(np.fromiter(elements, dtype=np.int64))
    position = np.full(group.order, -1, dtype=np.int64)
    position[members] = np.arange(len(members))
    table = position[group.table[np.ix_(members, members)]]
    if (table < 0).any():
        a, b = (int(v) for v in np.argwhere(table < 0)[0])
        raise InvalidGroupError(
            "elements are not closed under the product", (int(members[a]), int(members[b]))
        )
    labels = [group.label(int(m)) for m in members] if group.labels else None
    sub = from_table(
        table,
        identity=int(position[group.identity]),
        labels=labels,
        family_tag=family_tag or None,
    )
    members.flags.writeable = False
    return sub, members


def generated_subgroup(group: FiniteGroup, gens: typing.Iterable[GroupElement]) -> np.ndarray:
    """Elements of the subgroup generated by ``gens``.

    Args:
        group: the ambient group.
        gens: generators.

    Returns:
        Sorted array of element indices.
    """
    mask = _right_closure(group.table, group.identity, list(gens))
    return np.flatnonzero(mask)


def generating_set(group: FiniteGroup) -> typing.Tuple[int, ...]:
    """Greedy generating set: scan by descending element order, keep elements that grow the span.

    Args:
        group: the group.

    Returns:
        The generators in the order they were picked.
    """
    orders = group.element_orders
    candidates = sorted(range(group.order), key=lambda x: (-int(orders[x]), x))
    gens: typing.List[int] = []
    mask = np.zeros(group.order, dtype=bool)
    mask[group.identity] = True
    for x in candidates:
        if mask.all():
            break
        if mask[x]:
            continue
        gens.append(x)
        mask = _right_closure(group.table, group.identity, gens)
    return tuple(gens)


def center(group: FiniteGroup) -> typing.List[GroupElement]:
    """Elements commuting with every element.

    Args:
        group: the group.

    Returns:
        Sorted list of central elements.
    """
    commutes = (group.table == group.table.T).all(axis=1)
    return [int(x) for x in np.flatnonzero(commutes)]


def conjugate(group: FiniteGroup, g: GroupElement, x: GroupElement) -> GroupElement:
    """Conjugate ``x`` by ``g``.

    Args:
        group: the group.
        g: the conjugating element.
        x: the conjugated element.

    Returns:
        ``g x g^-1``.
    """
    return int(group.table[group.table[g, x], group.inverse[g]])

