# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Automorphism groups, outer automorphisms and épinglage data.

Homomorphisms out of a group are determined by the images of its generating set. The search
walks the generators in order, assigns each one an image with a compatible fingerprint
(element order, and conjugacy class size for isomorphisms), and after every assignment extends
the partial map along breadth first words to the subgroup generated so far, rejecting the
branch as soon as a relation fails.
"""

import dataclasses
import functools
import itertools
import logging
import typing

import numpy as np

from exceptions import CapExceededError, ConsistencyError, InvalidGroupError
from groups import FiniteGroup, GroupElement, center, from_table
from state import Limits, default_limits
from types_ import FourSequenceReport

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, eq=False)
class GroupHom:
    """A homomorphism given by its image array.

    Attributes:
        domain: source group.
        codomain: target group.
        images: ``images[x]`` is the image of ``x``.
    """

    domain: FiniteGroup
    codomain: FiniteGroup
    images: np.ndarray

    def __post_init__(self) -> None:
        """Freeze the images and check the homomorphism law.

        Raises:
            InvalidGroupError: if the images do not define a homomorphism.
        """
        images = np.array(self.images, dtype=np.int64)
        if images.shape != (self.domain.order,):
            raise InvalidGroupError(f"expected {self.domain.order} images, got {images.shape}")
        if images.min() < 0 or images.max() >= self.codomain.order:
            raise InvalidGroupError("images must be codomain elements")
        if not is_homomorphism(self.domain, self.codomain, images):
            raise InvalidGroupError("image array does not respect the product")
        images.flags.writeable = False
        object.__setattr__(self, "images", images)

    def __call__(self, x: GroupElement) -> GroupElement:
        """Image of an element.

        Args:
            x: domain element.

        Returns:
            Its image.
        """
        return int(self.images[x])

    @property
    def is_bijective(self) -> bool:
        """Whether the map is a bijection."""
        return (
            self.domain.order == self.codomain.order
            and np.unique(self.images).size == self.domain.order
        )

    def compose(self, other: "GroupHom") -> "GroupHom":
        """The composite ``self o other``.

        Args:
            other: the homomorphism applied first.

        Returns:
            The composite homomorphism.
        """
        return GroupHom(other.domain, self.codomain, self.images[other.images])

    def inverse(self) -> "GroupHom":
        """Inverse of a bijective homomorphism.

        Returns:
            The inverse isomorphism.

        Raises:
            InvalidGroupError: if the map is not bijective.
        """
        if not self.is_bijective:
            raise InvalidGroupError("only isomorphisms can be inverted")
        inverse = np.empty(self.domain.order, dtype=np.int64)
        inverse[self.images] = np.arange(self.domain.order)
        return GroupHom(self.codomain, self.domain, inverse)


def is_homomorphism(domain: FiniteGroup, codomain: FiniteGroup, images: np.ndarray) -> bool:
    """Check ``images[xy] = images[x] images[y]`` for every pair.

    Args:
        domain: source group.
        codomain: target group.
        images: candidate image array.

    Returns:
        True if the law holds everywhere.
    """
    return bool(
        np.array_equal(images[domain.table], codomain.table[images[:, None], images[None, :]])
    )


class _Level(typing.NamedTuple):
    """Breadth first words of the subgroup generated by a prefix of the generators.

    Attrs:
        elements: elements of the subgroup.
        layers: per BFS layer the new elements, their parents and the generator positions.
        relations: (x, j, x * gen_j) for all x in the subgroup and generator positions j.
    """

    elements: np.ndarray
    layers: typing.List[typing.Tuple[np.ndarray, np.ndarray, np.ndarray]]
    relations: typing.Tuple[np.ndarray, np.ndarray, np.ndarray]


@functools.lru_cache(maxsize=64)
def _levels(group: FiniteGroup) -> typing.Tuple[_Level, ...]:
    """Word structure of every generator prefix.

    Args:
        group: the domain group.

    Returns:
        One level per generator.
    """
    gens = group.generators
    levels = []
    for i in range(1, len(gens) + 1):
        seen = {group.identity}
        order = [group.identity]
        frontier = [group.identity]
        layers = []
        while frontier:
            xs, ys, js = [], [], []
            for y in frontier:
                for j in range(i):
                    x = int(group.table[y, gens[j]])
                    if x not in seen:
                        seen.add(x)
                        xs.append(x)
                        ys.append(y)
                        js.append(j)
            if xs:
                layers.append((np.array(xs), np.array(ys), np.array(js)))
            order.extend(xs)
            frontier = xs
        elements = np.array(sorted(order))
        src = np.repeat(elements, i)
        pos = np.tile(np.arange(i), len(elements))
        dst = group.table[src, np.asarray(gens)[pos]]
        levels.append(_Level(elements, layers, (src, pos, dst)))
    return tuple(levels)


def _candidates(
    domain: FiniteGroup, codomain: FiniteGroup, injective: bool
) -> typing.List[np.ndarray]:
    """Fingerprint-compatible images for every generator.

    Args:
        domain: source group.
        codomain: target group.
        injective: whether only injective maps are wanted.

    Returns:
        One sorted candidate array per generator.
    """
    result = []
    for a in domain.generators:
        order_a = int(domain.element_orders[a])
        if injective:
            mask = codomain.element_orders == order_a
            if domain.order == codomain.order:
                mask &= codomain.class_sizes == domain.class_sizes[a]
        else:
            mask = order_a % codomain.element_orders == 0
        result.append(np.flatnonzero(mask))
    return result


def _search(
    domain: FiniteGroup, codomain: FiniteGroup, injective: bool
) -> typing.Iterator[np.ndarray]:
    """Enumerate homomorphisms as image arrays, lexicographically in the generator images.

    Args:
        domain: source group.
        codomain: target group.
        injective: only yield injective maps.

    Yields:
        Image arrays of homomorphisms.
    """
    gens = domain.generators
    if not gens:
        images = np.full(domain.order, codomain.identity, dtype=np.int64)
        yield images
        return
    levels = _levels(domain)
    candidates = _candidates(domain, codomain, injective)
    pair_orders = {
        (j, i): int(domain.element_orders[domain.table[gens[j], gens[i]]])
        for i in range(len(gens))
        for j in range(i)
    }
    chosen: typing.List[int] = []

    def extend(level: _Level, images_of_gens: np.ndarray) -> typing.Optional[np.ndarray]:
        """Images on the subgroup of a level, or None when a relation fails.

        Args:
            level: the word structure.
            images_of_gens: images of the generator prefix.

        Returns:
            The partial image array.
        """
        images = np.full(domain.order, -1, dtype=np.int64)
        images[domain.identity] = codomain.identity
        for xs, ys, js in level.layers:
            images[xs] = codomain.table[images[ys], images_of_gens[js]]
        src, pos, dst = level.relations
        if not np.array_equal(codomain.table[images[src], images_of_gens[pos]], images[dst]):
            return None
        if injective and np.unique(images[level.elements]).size != level.elements.size:
            return None
        return images

    def compatible(h: int, depth: int) -> bool:
        """Compare the orders of products with the earlier generators.

        Args:
            h: candidate image of the generator at ``depth``.
            depth: generator position.

        Returns:
            False when some product order rules the candidate out.
        """
        for j in range(depth):
            target = pair_orders[(j, depth)]
            actual = int(codomain.element_orders[codomain.table[chosen[j], h]])
            if actual != target if injective else target % actual:
                return False
        return True

    def descend(depth: int) -> typing.Iterator[np.ndarray]:
        """Assign the generator at ``depth`` and recurse.

        Args:
            depth: generator position.

        Yields:
            Complete image arrays.
        """
        for h in candidates[depth].tolist():
            if not compatible(h, depth):
                continue
            chosen.append(h)
            images = extend(levels[depth], np.array(chosen, dtype=np.int64))
            if images is not None:
                if depth + 1 == len(gens):
                    yield images
                else:
                    yield from descend(depth + 1)
            chosen.pop()

    yield from descend(0)


def homomorphisms(
    domain: FiniteGroup, codomain: FiniteGroup, injective: bool = False
) -> typing.Iterator[GroupHom]:
    """Enumerate every homomorphism, lexicographically in the images of the generators.

    Args:
        domain: source group.
        codomain: target group.
        injective: only yield injective homomorphisms.

    Yields:
        The homomorphisms.
    """
    for images in _search(domain, codomain, injective):
        yield GroupHom(domain, codomain, images)


def is_isomorphic(
    first: FiniteGroup, second: FiniteGroup
) -> typing.Optional[GroupHom]:
    """Find an isomorphism, the first one in canonical search order.

    Args:
        first: source group.
        second: target group.

    Returns:
        An isomorphism ``first -> second`` or None when the groups are not isomorphic.
    """
    if first.order != second.order or first.is_abelian != second.is_abelian:
        return None
    if not np.array_equal(np.sort(first.element_orders), np.sort(second.element_orders)):
        return None
    if not np.array_equal(np.sort(first.class_sizes), np.sort(second.class_sizes)):
        return None
    for images in _search(first, second, injective=True):
        return GroupHom(first, second, images)
    return None


@dataclasses.dataclass(frozen=True, eq=False)
class OuterStructure:
    """Aut(G) with Inn(G), the outer classes and the épinglage data.

    Attributes:
        base: the group G.
        aut: Aut(G) as a table group, ``aut.table[a, b]`` is the index of ``phi_a o phi_b``.
        aut_elements: array (|Aut|, |G|) of image arrays, sorted lexicographically.
        inn: sorted Aut indices of the inner automorphisms.
        out: Out(G) = Aut(G)/Inn(G), classes ordered by their least Aut index.
        projection: Aut index -> Out index.
        section: Out index -> least Aut index of the class (``section[0]`` is the identity).
        conjugator: Aut index ``a`` -> least ``g`` with ``phi_a = c_g o section[projection[a]]``.
        inner_map: element ``g`` -> Aut index of ``c_g``.
        center: sorted central elements of G.
    """

    base: FiniteGroup
    aut: FiniteGroup
    aut_elements: np.ndarray
    inn: np.ndarray
    out: FiniteGroup
    projection: np.ndarray
    section: np.ndarray
    conjugator: np.ndarray
    inner_map: np.ndarray
    center: typing.Tuple[int, ...]

    def automorphism(self, a: int) -> GroupHom:
        """The automorphism with a given Aut index.

        Args:
            a: Aut index.

        Returns:
            The automorphism as a GroupHom.
        """
        return GroupHom(self.base, self.base, self.aut_elements[a])

    def apply(self, a: int, x: GroupElement) -> GroupElement:
        """Image of an element under an automorphism.

        Args:
            a: Aut index.
            x: element of G.

        Returns:
            ``phi_a(x)``.
        """
        return int(self.aut_elements[a, x])

    def aut_index(self, images: typing.Sequence[int]) -> int:
        """Aut index of an automorphism given by its image array.

        Args:
            images: image array.

        Returns:
            The Aut index.

        Raises:
            InvalidGroupError: if the array is not an automorphism of the base group.
        """
        lookup = _image_lookup(self)
        key = tuple(int(images[g]) for g in self.base.generators)
        if key not in lookup or not np.array_equal(
            self.aut_elements[lookup[key]], np.asarray(images)
        ):
            raise InvalidGroupError("image array is not an automorphism")
        return lookup[key]

    def coset(self, o: int) -> np.ndarray:
        """Members of an outer class.

        Args:
            o: Out index.

        Returns:
            Sorted Aut indices of the class.
        """
        return np.flatnonzero(self.projection == o)


@functools.lru_cache(maxsize=64)
def _image_lookup(outer: OuterStructure) -> typing.Dict[typing.Tuple[int, ...], int]:
    """Map generator images to Aut indices.

    Args:
        outer: the outer structure.

    Returns:
        Dictionary keyed by the images of the generators.
    """
    gens = list(outer.base.generators)
    return {
        tuple(int(v) for v in row): a for a, row in enumerate(outer.aut_elements[:, gens])
    }


def _encode(rows: np.ndarray, radix: int) -> np.ndarray:
    """Mixed radix code of every row of generator images.

    Args:
        rows: array (..., k) of element indices.
        radix: the group order.

    Returns:
        Integer codes.
    """
    codes = np.zeros(rows.shape[:-1], dtype=np.int64)
    for column in range(rows.shape[-1]):
        codes = codes * radix + rows[..., column]
    return codes


def automorphism_group(
    group: FiniteGroup, limits: typing.Optional[Limits] = None
) -> OuterStructure:
    """Compute Aut(G), Inn(G), Out(G) and the canonical épinglage.

    Results are cached per group and resolved limits.

    Args:
        group: the group G.
        limits: active limits, the configured defaults when omitted.

    Returns:
        The outer structure.

    Raises:
        CapExceededError: if |Aut(G)| is above the group order cap.
    """
    return _automorphism_group(group, limits or default_limits())


@functools.lru_cache(maxsize=32)
def _automorphism_group(group: FiniteGroup, limits: Limits) -> OuterStructure:
    """Uncached body of :func:`automorphism_group` with resolved limits."""
    images_list = []
    for images in _search(group, group, injective=True):
        images_list.append(images)
        if len(images_list) > limits.max_group_order:
            raise CapExceededError(
                "max_group_order", limits.max_group_order, len(images_list), f"Aut({group!r})"
            )
    aut_elements = np.array(sorted(images_list, key=lambda row: row.tolist()), dtype=np.int64)
    aut_elements = aut_elements.reshape(len(images_list), group.order)
    for images in aut_elements:
        if not is_homomorphism(group, group, images):
            raise ConsistencyError(
                "enumerated map is not a homomorphism", {"images": images.tolist()}
            )
    count = len(aut_elements)
    gens = list(group.generators)
    codes = _encode(aut_elements[:, gens], group.order)
    sorter = np.argsort(codes)
    sorted_codes = codes[sorter]

    def lookup(rows: np.ndarray) -> np.ndarray:
        """Aut indices of automorphisms given by generator images.

        Args:
            rows: array (m, k) of generator images.

        Returns:
            Aut indices.

        Raises:
            ConsistencyError: if a map is missing from the enumeration.
        """
        wanted = _encode(rows, group.order)
        found = np.searchsorted(sorted_codes, wanted)
        found = np.minimum(found, count - 1)
        if not np.array_equal(sorted_codes[found], wanted):
            raise ConsistencyError("automorphism enumeration is not closed")
        return sorter[found]

    table = np.empty((count, count), dtype=np.int64)
    for a in range(count):
        table[a] = lookup(aut_elements[a][aut_elements[:, gens]])
    aut = from_table(
        table,
        identity=0,
        family_tag=f"Aut({group.family_tag or group.order})",
        limits=limits,
    )
    inverse = group.inverse
    conjugations = group.table[group.table, inverse[:, None]]
    inner_map = lookup(conjugations[:, gens])
    inn = np.unique(inner_map)
    projection = np.full(count, -1, dtype=np.int64)
    section = []
    for a in range(count):
        if projection[a] >= 0:
            continue
        projection[aut.table[a, inn]] = len(section)
        section.append(a)
    section_array = np.array(section, dtype=np.int64)
    out_table = projection[aut.table[np.ix_(section_array, section_array)]]
    out = from_table(
        out_table,
        identity=0,
        family_tag=f"Out({group.family_tag or group.order})",
        limits=limits,
    )
    least_preimage = np.full(count, -1, dtype=np.int64)
    for g in range(group.order - 1, -1, -1):
        least_preimage[inner_map[g]] = g
    # phi_a = c_t o s[p(a)]  <=>  c_t = phi_a o s[p(a)]^-1
    quotient = aut.table[np.arange(count), aut.inverse[section_array[projection]]]
    conjugator = least_preimage[quotient]
    outer = OuterStructure(
        base=group,
        aut=aut,
        aut_elements=aut_elements,
        inn=inn,
        out=out,
        projection=projection,
        section=section_array,
        conjugator=conjugator,
        inner_map=inner_map,
        center=tuple(center(group)),
    )
    _check_outer(outer)
    logger.info(
        "Aut(%r): |Aut|=%d |Inn|=%d |Out|=%d", group, count, len(inn), out.order
    )
    return outer


def _check_outer(outer: OuterStructure) -> None:
    """Re-check every OuterStructure invariant.

    Args:
        outer: the structure to check.

    Raises:
        ConsistencyError: with diagnostics when an invariant fails.
    """
    aut, base = outer.aut, outer.base
    if aut.order != len(outer.inn) * outer.out.order:
        raise ConsistencyError("|Aut| != |Inn| |Out|", {"aut": aut.order})
    inner_set = set(outer.inn.tolist())
    for a in range(aut.order):
        conj = aut.table[aut.table[a, outer.inn], aut.inverse[a]]
        if not set(conj.tolist()) <= inner_set:
            raise ConsistencyError("Inn is not normal", {"automorphism": a})
    if not np.array_equal(outer.projection[outer.section], np.arange(outer.out.order)):
        raise ConsistencyError("section law fails")
    normalized = (outer.conjugator[outer.section] == base.identity).all()
    if outer.section[0] != aut.identity or not normalized:
        raise ConsistencyError("épinglage is not normalized")
    recomposed = aut.table[outer.inner_map[outer.conjugator], outer.section[outer.projection]]
    if not np.array_equal(recomposed, np.arange(aut.order)):
        bad = int(np.flatnonzero(recomposed != np.arange(aut.order))[0])
        raise ConsistencyError("épinglage identity fails", {"automorphism": bad})
    kernel = np.flatnonzero(outer.inner_map == aut.identity)
    if kernel.tolist() != list(outer.center):
        raise ConsistencyError("kernel of g -> c_g differs from the center")


def inner_from(
    group: FiniteGroup, g: GroupElement, limits: typing.Optional[Limits] = None
) -> int:
    """Aut index of the inner automorphism ``c_g``.

    Args:
        group: the group.
        g: the conjugating element.
        limits: active limits.

    Returns:
        The Aut index of ``x -> g x g^-1``.
    """
    return int(automorphism_group(group, limits).inner_map[group.check_element(g)])


def exact_four_sequence(
    group: FiniteGroup, limits: typing.Optional[Limits] = None
) -> FourSequenceReport:
    """Check exactness of 0 -> Z(G) -> G -> Aut(G) -> Out(G) -> 1.

    Args:
        group: the group.
        limits: active limits.

    Returns:
        The report with every exactness check.
    """
    outer = automorphism_group(group, limits)
    kernel = np.flatnonzero(outer.inner_map == outer.aut.identity).tolist()
    image = np.unique(outer.inner_map).tolist()
    projection_kernel = np.flatnonzero(outer.projection == outer.out.identity).tolist()
    surjective = np.unique(outer.projection).size == outer.out.order
    return FourSequenceReport(
        center_order=len(outer.center),
        group_order=group.order,
        aut_order=outer.aut.order,
        inn_order=len(outer.inn),
        out_order=outer.out.order,
        exact_at_group=kernel == list(outer.center),
        exact_at_aut=image == projection_kernel,
        projection_surjective=bool(surjective),
    )


def is_complete(group: FiniteGroup, limits: typing.Optional[Limits] = None) -> bool:
    """Whether G is complete (trivial center and no outer automorphisms).

    Args:
        group: the group.
        limits: active limits.

    Returns:
        True when Sym(G) is equivalent to the trivial 2-group.
    """
    outer = automorphism_group(group, limits)
    return len(outer.center) == 1 and outer.out.order == 1


def epinglages(outer: OuterStructure) -> typing.Iterator[typing.Tuple[np.ndarray, np.ndarray]]:
    """Enumerate every normalized épinglage (section, conjugator map).

    Args:
        outer: the outer structure.

    Yields:
        ``(section, conjugator)`` arrays satisfying the OuterStructure invariants.
    """
    aut, base = outer.aut, outer.base
    classes = [outer.coset(o) for o in range(1, outer.out.order)]
    for chosen in itertools.product(*classes):
        section = np.array((aut.identity,) + tuple(int(c) for c in chosen), dtype=np.int64)
        quotient = aut.table[np.arange(aut.order), aut.inverse[section[outer.projection]]]
        options = []
        for a in range(aut.order):
            if a in section:
                options.append((base.identity,))
            else:
                options.append(tuple(np.flatnonzero(outer.inner_map == quotient[a]).tolist()))
        for conjugator in itertools.product(*options):
            yield section, np.array(conjugator, dtype=np.int64)


def dihedral_label(group: FiniteGroup, images: typing.Sequence[int]) -> typing.Tuple[int, int]:
    """Label an automorphism of dihedral(n) as phi(p, q): r -> r^q, s -> s r^p.

    Args:
        group: a group built by ``dihedral(n)``.
        images: image array of an automorphism.

    Returns:
        The pair (p, q) with 0 <= p, q < n.

    Raises:
        InvalidGroupError: if the group is not a dihedral group.
    """
    tag = group.family_tag or ""
    if not tag.startswith("dihedral("):
        raise InvalidGroupError(f"{group!r} is not a dihedral group")
    n = int(tag[len("dihedral(") : -1])
    return int(images[n]) - n, int(images[1])
