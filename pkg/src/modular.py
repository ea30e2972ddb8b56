# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Finite abelian groups as coordinate spaces and exact linear solving over Z/p^E."""

import dataclasses
import functools
import logging
import typing

import numpy as np
import sympy

from exceptions import InvalidGroupError
from groups import FiniteGroup

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class PrimaryDecomposition:
    """Basis of a finite abelian group as a product of cyclic groups of prime power order.

    Attributes:
        group: the abelian group.
        basis: basis elements, grouped by prime in increasing order.
        primes: the prime of every basis element.
        exponents: ``e`` such that the basis element has order ``prime^e``.
        coords: array (|A|, len(basis)), the coordinates of every element.
        decode: array indexed by coordinate tuples giving back the element.
    """

    group: FiniteGroup
    basis: typing.Tuple[int, ...]
    primes: typing.Tuple[int, ...]
    exponents: typing.Tuple[int, ...]
    coords: np.ndarray
    decode: np.ndarray

    @property
    def cyclic_orders(self) -> typing.List[typing.Tuple[int, int]]:
        """Pairs (p, e) of the cyclic factors Z/p^e."""
        return list(zip(self.primes, self.exponents))

    @property
    def moduli(self) -> np.ndarray:
        """Order of every basis element."""
        return np.array(
            [p**e for p, e in zip(self.primes, self.exponents)], dtype=np.int64
        )

    def element(self, coordinates: typing.Sequence[int]) -> int:
        """Element with the given coordinates.

        Args:
            coordinates: one integer per basis element, reduced modulo its order.

        Returns:
            The element index.
        """
        reduced = tuple(int(c) % int(m) for c, m in zip(coordinates, self.moduli))
        return int(self.decode[reduced]) if reduced else self.group.identity

    def matrix(self, automorphism: typing.Sequence[int]) -> np.ndarray:
        """Integer matrix of an endomorphism acting on coordinates.

        Args:
            automorphism: image array of an endomorphism of the group.

        Returns:
            Matrix M with coords(f(a)) = M coords(a), entry (j, j') the j-th coordinate of
            the image of basis element j'.
        """
        images = np.asarray(automorphism, dtype=np.int64)[list(self.basis)]
        return self.coords[images].T.copy()


@functools.lru_cache(maxsize=64)
def primary_decomposition(group: FiniteGroup) -> PrimaryDecomposition:
    """Decompose a finite abelian group into cyclic factors of prime power order.

    For every prime the basis is grown greedily: take the element of largest order modulo the
    current span, then move it inside its coset to an element whose cyclic group meets the span
    trivially.

    Args:
        group: an abelian group.

    Returns:
        The decomposition with coordinate tables.

    Raises:
        InvalidGroupError: if the group is not abelian.
    """
    if not group.is_abelian:
        raise InvalidGroupError(f"{group!r} is not abelian")
    orders = group.element_orders
    table = group.table
    basis: typing.List[int] = []
    primes: typing.List[int] = []
    exponents: typing.List[int] = []
    for prime in sorted(sympy.factorint(group.order)):
        sylow = np.flatnonzero(_is_power_of(orders, prime))
        span = np.array([group.identity])
        while len(span) < len(sylow):
            in_span = np.zeros(group.order, dtype=bool)
            in_span[span] = True
            best, best_order = -1, 0
            for x in sylow:
                if in_span[x]:
                    continue
                relative = _order_modulo(table, int(x), in_span)
                if relative > best_order:
                    best, best_order = int(x), relative
            coset = table[best, span]
            candidates = coset[orders[coset] == best_order]
            if not candidates.size:
                raise InvalidGroupError(f"no complement found for {best} in {group!r}")
            generator = int(candidates.min())
            basis.append(generator)
            primes.append(int(prime))
            exponents.append(int(round(np.log(best_order) / np.log(prime))))
            powers = _powers(table, generator, best_order, group.identity)
            span = table[np.ix_(span, powers)].ravel()
    coords, decode = _coordinate_tables(group, basis, [p**e for p, e in zip(primes, exponents)])
    logger.debug("Primary decomposition of %r: %s", group, list(zip(primes, exponents)))
    return PrimaryDecomposition(
        group=group,
        basis=tuple(basis),
        primes=tuple(primes),
        exponents=tuple(exponents),
        coords=coords,
        decode=decode,
    )


def _is_power_of(values: np.ndarray, prime: int) -> np.ndarray:
    """Mask of the entries that are powers of ``prime`` (including 1).

    Args:
        values: positive integers.
        prime: a prime.

    Returns:
        Boolean mask.
    """
    reduced = values.copy()
    while True:
        divisible = (reduced % prime == 0) & (reduced > 1)
        if not divisible.any():
            return reduced == 1
        reduced[divisible] //= prime


def _order_modulo(table: np.ndarray, x: int, in_span: np.ndarray) -> int:
    """Order of x modulo a subgroup.

    Args:
        table: multiplication table.
        x: the element.
        in_span: mask of the subgroup.

    Returns:
        Least k >= 1 with x^k in the subgroup.
    """
    power, step = x, 1
    while not in_span[power]:
        power = int(table[power, x])
        step += 1
    return step


def _powers(table: np.ndarray, x: int, count: int, identity: int) -> np.ndarray:
    """The powers x^0 .. x^(count-1).

    Args:
        table: multiplication table.
        x: the element.
        count: number of powers.
        identity: identity index.

    Returns:
        Array of element indices.
    """
    powers = [identity]
    for _ in range(count - 1):
        powers.append(int(table[powers[-1], x]))
    return np.array(powers, dtype=np.int64)


def _coordinate_tables(
    group: FiniteGroup, basis: typing.Sequence[int], moduli: typing.Sequence[int]
) -> typing.Tuple[np.ndarray, np.ndarray]:
    """Coordinate and decode tables for a basis.

    Args:
        group: the abelian group.
        basis: basis elements.
        moduli: their orders.

    Returns:
        ``(coords, decode)``.

    Raises:
        InvalidGroupError: if the basis does not span the group freely.
    """
    decode = np.array(group.identity, dtype=np.int64)
    for b, modulus in zip(basis, moduli):
        powers = _powers(group.table, b, modulus, group.identity)
        decode = group.table[decode[..., None], powers].astype(np.int64)
    coords = np.zeros((group.order, len(basis)), dtype=np.int64)
    flat = decode.reshape(-1)
    if len(np.unique(flat)) != group.order:
        raise InvalidGroupError(f"basis {list(basis)} does not decompose {group!r}")
    if moduli:
        coords[flat] = np.stack(np.unravel_index(np.arange(flat.size), tuple(moduli)), axis=1)
    return coords, decode


def abelian_invariants(group: FiniteGroup) -> typing.List[int]:
    """Invariant factors d1 | d2 | ... of an abelian group.

    Args:
        group: an abelian group.

    Returns:
        The invariant factors, empty for the trivial group.
    """
    exponents: typing.Dict[int, typing.List[int]] = {}
    for prime, power in primary_decomposition(group).cyclic_orders:
        exponents.setdefault(prime, []).append(power)
    length = max((len(v) for v in exponents.values()), default=0)
    factors = [1] * length
    for prime, powers in exponents.items():
        for slot, power in enumerate(sorted(powers, reverse=True)):
            factors[length - 1 - slot] *= prime**power
    return factors


def _valuations(prime: int, power: int) -> np.ndarray:
    """p-adic valuation of every residue modulo p^power (``power`` for zero).

    Args:
        prime: the prime.
        power: the exponent.

    Returns:
        Array of length p^power.
    """
    modulus = prime**power
    residues = np.arange(modulus)
    values = np.zeros(modulus, dtype=np.int64)
    for v in range(1, power):
        values[residues % prime**v == 0] = v
    values[0] = power
    return values


def solve_prime_power(
    matrix: np.ndarray, rhs: np.ndarray, prime: int, power: int
) -> typing.Optional[np.ndarray]:
    """Solve ``matrix @ x = rhs`` over Z/p^power exactly.

    Elimination uses full pivoting on the entry of least p-adic valuation, so every entry of a
    pivot row is divisible by its pivot's power of p; the system is solvable exactly when every
    pivot divides its reduced right hand side and the zero rows have zero right hand side.

    Args:
        matrix: integer matrix (rows, cols).
        rhs: integer vector (rows,).
        prime: the prime.
        power: the exponent.

    Returns:
        A solution with free variables set to zero, or None if there is none.
    """
    modulus = prime**power
    a = np.array(matrix, dtype=np.int64) % modulus
    b = np.array(rhs, dtype=np.int64) % modulus
    rows, cols = a.shape
    valuation = _valuations(prime, power)
    col_perm = np.arange(cols)
    pivot_valuations: typing.List[int] = []
    rank = 0
    while rank < min(rows, cols):
        sub = valuation[a[rank:, rank:]]
        flat = int(np.argmin(sub))
        least = int(sub.flat[flat])
        if least >= power:
            break
        r, c = np.unravel_index(flat, sub.shape)
        r, c = int(r) + rank, int(c) + rank
        a[[rank, r]] = a[[r, rank]]
        b[[rank, r]] = b[[r, rank]]
        a[:, [rank, c]] = a[:, [c, rank]]
        col_perm[[rank, c]] = col_perm[[c, rank]]
        unit = int(a[rank, rank]) // prime**least
        inverse = pow(unit, -1, modulus)
        a[rank] = a[rank] * inverse % modulus
        b[rank] = b[rank] * inverse % modulus
        factors = a[rank + 1 :, rank] // prime**least
        a[rank + 1 :] = (a[rank + 1 :] - factors[:, None] * a[rank]) % modulus
        b[rank + 1 :] = (b[rank + 1 :] - factors * b[rank]) % modulus
        pivot_valuations.append(least)
        rank += 1
    if (b[rank:] != 0).any():
        return None
    x = np.zeros(cols, dtype=np.int64)
    for i in range(rank - 1, -1, -1):
        residual = int((b[i] - a[i, i + 1 :] @ x[i + 1 :]) % modulus)
        step = prime ** pivot_valuations[i]
        if residual % step:
            return None
        x[i] = residual // step
    solution = np.zeros(cols, dtype=np.int64)
    solution[col_perm] = x
    return solution


def solve_gf2_sparse(
    row_ids: np.ndarray,
    col_ids: np.ndarray,
    rhs: np.ndarray,
    cols: int,
) -> typing.Optional[np.ndarray]:
    """Solve a sparse system over F2 with rows packed into Python integers.

    Bit 0 of a packed row is the right hand side, bit ``j + 1`` is unknown ``j``. Rows are
    reduced one at a time against the pivots collected so far.

    Args:
        row_ids: row index of every nonzero coefficient (odd entries only matter).
        col_ids: column index of every nonzero coefficient.
        rhs: right hand side bits, one per row.
        cols: number of unknowns.

    Returns:
        A solution with free variables set to zero, or None if there is none.
    """
    order = np.argsort(row_ids, kind="stable")
    row_ids, col_ids = row_ids[order], col_ids[order]
    boundaries = np.flatnonzero(np.diff(row_ids)) + 1
    starts = np.concatenate(([0], boundaries))
    stops = np.concatenate((boundaries, [len(row_ids)]))
    packed: typing.Dict[int, int] = {}
    for start, stop in zip(starts.tolist(), stops.tolist()):
        if start == stop:
            continue
        value = 0
        for col in col_ids[start:stop].tolist():
            value ^= 1 << (col + 1)
        packed[int(row_ids[start])] = value
    pivots: typing.Dict[int, int] = {}
    for row in range(len(rhs)):
        value = packed.get(row, 0) | (int(rhs[row]) & 1)
        while value > 1:
            lead = value.bit_length() - 1
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = value
                break
            value ^= pivot
        else:
            if value == 1:
                return None
    assigned = 0
    for lead in sorted(pivots):
        row = pivots[lead]
        bit = (row & 1) ^ (bin(row & assigned & ~(1 << lead)).count("1") & 1)
        if bit:
            assigned |= 1 << lead
    solution = np.zeros(cols, dtype=np.int64)
    for col in range(cols):
        solution[col] = (assigned >> (col + 1)) & 1
    return solution
