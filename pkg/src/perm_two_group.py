# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""The permutation 2-group Sym(G) of a group: invariants, cell arithmetic and splitness.

Objects of Sym(G) are the self-equivalences E(phi) of the one object groupoid G, one per
automorphism phi; a morphism tau(g; phi, phi~) exists exactly when phi~ = c_g o phi. The
invariants are pi0 = Out(G), pi1 = Z(G) with [phi].z = phi(z), and the class of the cocycle
computed from the canonical épinglage of :func:`autos.automorphism_group`.
"""

import functools
import itertools
import logging
import math
import typing

import numpy as np

from autos import OuterStructure, automorphism_group, dihedral_label, homomorphisms
from cohomology import Cochain, GModule, is_coboundary, is_cocycle
from exceptions import (
    BudgetExceededError,
    CapExceededError,
    ConsistencyError,
    DeciderDisagreementError,
    InvalidCellError,
)
from groups import FiniteGroup, _lex_ranks, _permutations, subgroup, wreath_index, wreath_product
from state import METHODS, Limits, default_limits
from two_group import TwoGroupPresentation
from types_ import NonsplitCertificate, SectionLifting, SplitnessVerdict, SymCell

logger = logging.getLogger(__name__)


def center_module(outer: OuterStructure) -> GModule:
    """Z(G) as a module over Out(G), ``[phi].z = s[phi](z)``.

    Args:
        outer: the outer structure of G.

    Returns:
        The module.

    Raises:
        ConsistencyError: if members of an outer class act differently on the center.
    """
    base = outer.base
    tag = f"Z({base.family_tag or base.order})"
    zgroup, embedding = subgroup(base, outer.center, family_tag=tag)
    position = np.full(base.order, -1, dtype=np.int64)
    position[embedding] = np.arange(len(embedding))
    on_center = outer.aut_elements[:, embedding]
    representative = on_center[outer.section[outer.projection]]
    if not np.array_equal(on_center, representative):
        bad = int(np.flatnonzero((on_center != representative).any(axis=1))[0])
        raise ConsistencyError(
            "action on the center is not constant on outer classes", {"automorphism": bad}
        )
    action = position[on_center[outer.section]]
    return GModule(outer.out, zgroup, action)


def classifying_cocycle(
    group: FiniteGroup,
    section: typing.Optional[np.ndarray] = None,
    conjugator: typing.Optional[np.ndarray] = None,
    module: typing.Optional[GModule] = None,
    limits: typing.Optional[Limits] = None,
) -> Cochain:
    """The 3-cocycle classifying Sym(G), computed from an épinglage (s, t).

    With ``u(o, o') = t(s[o] s[o'])``, so that ``s[o] s[o'] = c_u s[oo']``, the value is
    ``s[o](u(o', o'')) u(o, o'o'') u(oo', o'')^-1 u(o, o')^-1``, a central element.

    Args:
        group: the group G.
        section: normalized section, the canonical one when omitted.
        conjugator: conjugator map of the section (Aut index -> G), canonical when omitted.
        module: the center module, built when omitted.
        limits: active limits.

    Returns:
        The normalized 3-cocycle over (Out(G), Z(G)).

    Raises:
        ConsistencyError: if a value leaves the center or the result is not a cocycle.
    """
    outer = automorphism_group(group, limits)
    section = outer.section if section is None else np.asarray(section, dtype=np.int64)
    conjugator = outer.conjugator if conjugator is None else np.asarray(conjugator)
    module = module or center_module(outer)
    aut, out, table, inverse = outer.aut, outer.out, group.table, group.inverse
    u = conjugator[aut.table[section[:, None], section[None, :]]]
    o, o1, o2 = np.indices((out.order,) * 3, sparse=True)
    acted = outer.aut_elements[section[o], u[o1, o2]]
    value = table[acted, u[o, out.table[o1, o2]]]
    value = table[value, inverse[u[out.table[o, o1], o2]]]
    value = table[value, inverse[u[o, o1]]]
    position = np.full(group.order, -1, dtype=np.int64)
    position[list(outer.center)] = np.arange(len(outer.center))
    full = position[value]
    if (full < 0).any():
        bad = tuple(int(v) for v in np.argwhere(full < 0)[0])
        raise ConsistencyError("classifying cocycle leaves the center", {"triple": bad})
    z = Cochain.from_full(module, full)
    if not is_cocycle(z, limits):
        raise ConsistencyError("classifying cochain is not a cocycle")
    return z


@functools.lru_cache(maxsize=32)
def sym_invariants(
    group: FiniteGroup, limits: typing.Optional[Limits] = None
) -> TwoGroupPresentation:
    """Invariant triple of Sym(G): (Out(G), Z(G), classifying cocycle).

    Args:
        group: the group G.
        limits: active limits.

    Returns:
        The presentation.
    """
    outer = automorphism_group(group, limits)
    module = center_module(outer)
    z = classifying_cocycle(group, module=module, limits=limits)
    logger.info("Sym(%r): |pi0|=%d |pi1|=%d", group, outer.out.order, module.coeff.order)
    return TwoGroupPresentation(outer.out, module, z)


def nonsplit_witness(
    group: FiniteGroup, limits: typing.Optional[Limits] = None
) -> typing.Optional[NonsplitCertificate]:
    """Search for an outer class of order at most 2 whose members fix none of their square roots.

    A class [phi] with [phi]^2 = 1 such that no member phi fixes any g with phi^2 = c_g rules
    out a split Sym(G).

    Args:
        group: the group G.
        limits: active limits.

    Returns:
        The certificate for the first such class in canonical order, or None.
    """
    outer = automorphism_group(group, limits)
    aut, out = outer.aut, outer.out
    dihedral = (group.family_tag or "").startswith("dihedral(")
    for o in range(1, out.order):
        if out.table[o, o] != out.identity:
            continue
        members = outer.coset(o).tolist()
        squares, conjugators, fixed = [], [], []
        for a in members:
            square = int(aut.table[a, a])
            roots = np.flatnonzero(outer.inner_map == square).tolist()
            squares.append(square)
            conjugators.append(roots)
            fixed.append([g for g in roots if outer.aut_elements[a, g] == g])
        if any(fixed):
            continue
        labels = []
        if dihedral:
            labels = [dihedral_label(group, outer.aut_elements[a]) for a in members]
        logger.info("Outer class %d of %r certifies a non-split Sym", o, group)
        return NonsplitCertificate(
            outer_class=o,
            members=members,
            labels=labels,
            squares=squares,
            conjugators=conjugators,
            fixed=fixed,
        )
    return None


def homomorphic_section(
    group: FiniteGroup, limits: typing.Optional[Limits] = None
) -> typing.Optional[np.ndarray]:
    """A section of Aut(G) -> Out(G) that is a group homomorphism.

    Args:
        group: the group G.
        limits: active limits.

    Returns:
        Aut index of the image of every outer class, or None when no such section exists.

    Raises:
        BudgetExceededError: if more candidates than the section budget are examined.
    """
    limits = limits or default_limits()
    outer = automorphism_group(group, limits)
    identity = np.arange(outer.out.order)
    for tried, hom in enumerate(homomorphisms(outer.out, outer.aut, injective=True)):
        if tried >= limits.section_budget:
            raise BudgetExceededError("section_budget", "homomorphic section search")
        if np.array_equal(outer.projection[hom.images], identity):
            return hom.images.copy()
    return None


def _lifting_equations(
    out: FiniteGroup,
) -> typing.Tuple[typing.List[typing.Tuple[int, int]], typing.List[typing.List[tuple]]]:
    """Unknown pairs of a normalized lifting and the equations checkable after each one.

    Args:
        out: the group Out(G).

    Returns:
        ``(pairs, ready)`` where ``ready[i]`` lists the triples whose equation only involves
        pairs up to index ``i``.
    """
    m = out.order
    pairs = [(a, b) for a in range(1, m) for b in range(1, m)]
    index = {pair: i for i, pair in enumerate(pairs)}
    ready: typing.List[typing.List[tuple]] = [[] for _ in pairs]
    for a, b, c in itertools.product(range(1, m), repeat=3):
        involved = [(a, b), (int(out.table[a, b]), c), (b, c), (a, int(out.table[b, c]))]
        last = max(index.get(pair, -1) for pair in involved)
        ready[last].append((a, b, c))
    return pairs, ready


def _find_lifting(
    outer: OuterStructure, section: np.ndarray, limits: Limits
) -> typing.Optional[np.ndarray]:
    """Search a normalized lifting psi of s[o] s[o'] s[oo']^-1 satisfying the 2-cocycle law.

    The law is ``psi(o, o') psi(oo', o'') = s[o](psi(o', o'')) psi(o, o'o'')``.

    Args:
        outer: the outer structure.
        section: a normalized section.
        limits: active limits.

    Returns:
        The lifting as an (m, m) array, or None.

    Raises:
        BudgetExceededError: if the search visits more nodes than the lifting budget.
    """
    aut, out, base = outer.aut, outer.out, outer.base
    m = out.order
    hat = aut.table[aut.table[section[:, None], section[None, :]], aut.inverse[section[out.table]]]
    psi = np.full((m, m), base.identity, dtype=np.int64)
    if m == 1:
        return psi
    pairs, ready = _lifting_equations(out)
    candidates = [np.flatnonzero(outer.inner_map == hat[a, b]).tolist() for a, b in pairs]
    table, images = base.table, outer.aut_elements
    visited = 0

    def holds(a: int, b: int, c: int) -> bool:
        """Whether the 2-cocycle law holds on a triple.

        Args:
            a: first class.
            b: second class.
            c: third class.

        Returns:
            True when both sides agree.
        """
        left = table[psi[a, b], psi[out.table[a, b], c]]
        right = table[images[section[a], psi[b, c]], psi[a, out.table[b, c]]]
        return bool(left == right)

    def assign(i: int) -> bool:
        """Assign pair ``i`` and recurse.

        Args:
            i: pair index.

        Returns:
            True once every pair is assigned consistently.

        Raises:
            BudgetExceededError: if the node budget runs out.
        """
        nonlocal visited
        if i == len(pairs):
            return True
        a, b = pairs[i]
        for g in candidates[i]:
            visited += 1
            if visited > limits.lifting_budget:
                raise BudgetExceededError("lifting_budget", f"section {section.tolist()}")
            psi[a, b] = g
            if all(holds(*triple) for triple in ready[i]) and assign(i + 1):
                return True
        psi[a, b] = base.identity
        return False

    return psi if assign(0) else None


def section_search(
    group: FiniteGroup, limits: typing.Optional[Limits] = None
) -> typing.Optional[SectionLifting]:
    """Exhaust normalized sections and their normalized liftings.

    Sections are tried lexicographically in the chosen Aut indices, liftings in base element
    order; the first success wins.

    Args:
        group: the group G.
        limits: active limits.

    Returns:
        A section with its lifting, or None when no section admits one.

    Raises:
        BudgetExceededError: if the number of sections is above the section budget.
    """
    limits = limits or default_limits()
    outer = automorphism_group(group, limits)
    classes = [outer.coset(o).tolist() for o in range(1, outer.out.order)]
    count = math.prod(len(c) for c in classes)
    if count > limits.section_budget:
        raise BudgetExceededError("section_budget", f"{count} sections for {group!r}")
    for chosen in itertools.product(*classes):
        section = np.array((outer.aut.identity,) + chosen, dtype=np.int64)
        psi = _find_lifting(outer, section, limits)
        if psi is not None:
            return SectionLifting(section=section.tolist(), lifting=psi.tolist())
    return None


def verify_section_lifting(
    group: FiniteGroup, witness: SectionLifting, limits: typing.Optional[Limits] = None
) -> bool:
    """Re-check a section search witness against its defining equations.

    Args:
        group: the group G.
        witness: the section and lifting.
        limits: active limits.

    Returns:
        True when the section is normalized, every psi lifts s[o] s[o'] s[oo']^-1 and the
        2-cocycle law holds.
    """
    outer = automorphism_group(group, limits)
    aut, out, base = outer.aut, outer.out, outer.base
    section = np.array(witness.section, dtype=np.int64)
    psi = np.array(witness.lifting, dtype=np.int64)
    if section[0] != aut.identity or not np.array_equal(
        outer.projection[section], np.arange(out.order)
    ):
        return False
    hat = aut.table[aut.table[section[:, None], section[None, :]], aut.inverse[section[out.table]]]
    if not np.array_equal(outer.inner_map[psi], hat):
        return False
    if (psi[0] != base.identity).any() or (psi[:, 0] != base.identity).any():
        return False
    a, b, c = np.indices((out.order,) * 3, sparse=True)
    left = base.table[psi[a, b], psi[out.table[a, b], c]]
    right = base.table[outer.aut_elements[section[a], psi[b, c]], psi[a, out.table[b, c]]]
    return bool(np.array_equal(np.broadcast_to(left, right.shape), right))


def _decide(group: FiniteGroup, method: str, limits: Limits) -> SplitnessVerdict:
    """Run a single decider.

    Args:
        group: the group G.
        method: decider name.
        limits: active limits.

    Returns:
        The verdict.
    """
    if method == "coboundary":
        w = is_coboundary(sym_invariants(group, limits).z, limits)
        return SplitnessVerdict(split=w is not None, method=method, witness=w)
    if method == "section-search":
        found = section_search(group, limits)
        if found is not None and not verify_section_lifting(group, found, limits):
            raise ConsistencyError("section search witness fails verification")
        return SplitnessVerdict(split=found is not None, method=method, witness=found)
    if method == "witness":
        certificate = nonsplit_witness(group, limits)
        split = False if certificate is not None else None
        return SplitnessVerdict(split=split, method="nonsplit-witness", witness=certificate)
    section = homomorphic_section(group, limits)
    split = True if section is not None else None
    witness = section.tolist() if section is not None else None
    return SplitnessVerdict(split=split, method="homomorphic-section", witness=witness)


def is_permutationally_split(
    group: FiniteGroup, method: str = "coboundary", limits: typing.Optional[Limits] = None
) -> SplitnessVerdict:
    """Decide whether Sym(G) is split.

    Args:
        group: the group G.
        method: ``coboundary`` (exact), ``section-search`` (exact), ``witness`` and
            ``homomorphic-section`` (sufficient only, inconclusive otherwise) or ``all``.
        limits: active limits.

    Returns:
        The verdict; with ``all`` the witness maps every method to its verdict.

    Raises:
        ValueError: if the method is unknown.
        DeciderDisagreementError: if two deciders contradict each other.
    """
    limits = limits or default_limits()
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method != "all":
        return _decide(group, method, limits)
    verdicts = {}
    for name in METHODS[:-1]:
        try:
            verdicts[name] = _decide(group, name, limits)
        except BudgetExceededError as exc:
            if name == "coboundary":
                raise
            logger.warning("Decider %s skipped for %r: %s", name, group, exc.msg)
    exact = verdicts["coboundary"].split
    for name, verdict in verdicts.items():
        if verdict.split is not None and verdict.split != exact:
            raise DeciderDisagreementError(
                f"decider {name} disagrees with the coboundary test on {group!r}",
                {name: verdict.split, "coboundary": exact},
            )
    return SplitnessVerdict(split=exact, method="all", witness=verdicts)


def sym_cell(
    group: FiniteGroup,
    g: int,
    source: int,
    target: int,
    limits: typing.Optional[Limits] = None,
) -> SymCell:
    """Validated cell tau(g; phi, phi~) of Sym(G).

    Args:
        group: the group G.
        g: the component.
        source: Aut index of phi.
        target: Aut index of phi~.
        limits: active limits.

    Returns:
        The cell.

    Raises:
        InvalidCellError: if phi~ differs from c_g o phi.
    """
    outer = automorphism_group(group, limits)
    g = group.check_element(g)
    if not (0 <= source < outer.aut.order and 0 <= target < outer.aut.order):
        raise InvalidCellError("cell endpoints must be Aut indices")
    if outer.aut.table[outer.inner_map[g], source] != target:
        raise InvalidCellError(f"tau({g}; {source}, {target}) violates phi~ = c_g o phi")
    return SymCell(g, int(source), int(target))


def sym_identity(group: FiniteGroup, phi: int, limits: typing.Optional[Limits] = None) -> SymCell:
    """Identity cell of E(phi).

    Args:
        group: the group G.
        phi: Aut index.
        limits: active limits.

    Returns:
        tau(e; phi, phi).
    """
    return sym_cell(group, group.identity, phi, phi, limits)


def sym_compose(
    group: FiniteGroup,
    later: SymCell,
    earlier: SymCell,
    limits: typing.Optional[Limits] = None,
) -> SymCell:
    """Vertical composite ``later o earlier``.

    Args:
        group: the group G.
        later: tau(g~; phi~, phi~~).
        earlier: tau(g; phi, phi~).
        limits: active limits.

    Returns:
        tau(g~ g; phi, phi~~).

    Raises:
        InvalidCellError: if the cells are not composable.
    """
    if earlier.target != later.source:
        raise InvalidCellError("cells are not composable")
    g = group.multiply(later.g, earlier.g)
    return sym_cell(group, g, earlier.source, later.target, limits)


def sym_tensor(
    group: FiniteGroup,
    first: SymCell,
    second: SymCell,
    limits: typing.Optional[Limits] = None,
) -> SymCell:
    """Horizontal composite of cells.

    Args:
        group: the group G.
        first: tau(g; phi, phi~).
        second: tau(g'; phi', phi~').
        limits: active limits.

    Returns:
        tau(g phi(g'); phi phi', phi~ phi~').
    """
    outer = automorphism_group(group, limits)
    g = group.multiply(first.g, outer.apply(first.source, second.g))
    source = int(outer.aut.table[first.source, second.source])
    target = int(outer.aut.table[first.target, second.target])
    return sym_cell(group, g, source, target, limits)


class CoproductSym:
    """Cell arithmetic of Sym of the disjoint union of n copies of G.

    Objects are E(sigma, Phi) with sigma an index of ``symmetric(n)`` and Phi a tuple of Aut
    indices; morphisms tau(g; (sigma, Phi), (sigma, Phi~)) have ``Phi~_i = c_{g_i} o Phi_i``.

    Attributes:
        n: number of copies.
        group: the group G.
        outer: its outer structure.
    """

    def __init__(self, n: int, group: FiniteGroup, limits: typing.Optional[Limits] = None):
        """Set up the arithmetic.

        Args:
            n: number of copies, at least 1.
            group: the group G.
            limits: active limits.
        """
        self.n = n
        self.group = group
        self.outer = automorphism_group(group, limits)
        self._limits = limits
        self._perms = _permutations(n)

    def _shift(self, sigma: int) -> np.ndarray:
        """One-line notation of a permutation index.

        Args:
            sigma: index in ``symmetric(n)``.

        Returns:
            The permutation.
        """
        return self._perms[sigma]

    def object_tensor(
        self,
        first: typing.Tuple[int, typing.Sequence[int]],
        second: typing.Tuple[int, typing.Sequence[int]],
    ) -> typing.Tuple[int, typing.Tuple[int, ...]]:
        """E(sigma, Phi) (x) E(sigma', Phi') = E(sigma sigma', (Phi |> sigma') o Phi').

        Args:
            first: (sigma, Phi).
            second: (sigma', Phi').

        Returns:
            The tensor product object.
        """
        sigma, phi = first
        sigma2, phi2 = second
        shift = self._shift(sigma2)
        aut = self.outer.aut
        composed = tuple(int(aut.table[phi[int(shift[i])], phi2[i]]) for i in range(self.n))
        return int(_lex_ranks(self._shift(sigma)[shift])), composed

    def morphism(
        self,
        g: typing.Sequence[int],
        source: typing.Tuple[int, typing.Sequence[int]],
        target: typing.Tuple[int, typing.Sequence[int]],
    ) -> typing.Tuple[typing.Tuple[int, ...], tuple, tuple]:
        """Validated morphism tau(g; source, target).

        Args:
            g: one element of G per copy.
            source: (sigma, Phi).
            target: (sigma, Phi~).

        Returns:
            ``(g, source, target)`` as tuples.

        Raises:
            InvalidCellError: if the permutations differ or some Phi~_i is not c_{g_i} o Phi_i.
        """
        if source[0] != target[0]:
            raise InvalidCellError("morphisms only join objects with the same permutation")
        for i in range(self.n):
            sym_cell(self.group, g[i], source[1][i], target[1][i], self._limits)
        return (
            tuple(int(v) for v in g),
            (int(source[0]), tuple(source[1])),
            (int(target[0]), tuple(target[1])),
        )

    def morphism_tensor(self, first: tuple, second: tuple) -> tuple:
        """Horizontal composite: component i is ``g_{sigma'(i)} Phi_{sigma'(i)}(g'_i)``.

        Args:
            first: tau(g; (sigma, Phi), (sigma, Phi~)).
            second: tau(g'; (sigma', Phi'), (sigma', Phi~')).

        Returns:
            The tensor product morphism.
        """
        g, source, target = first
        g2, source2, target2 = second
        shift = self._shift(source2[0])
        components = []
        for i in range(self.n):
            j = int(shift[i])
            components.append(
                self.group.multiply(g[j], self.outer.apply(source[1][j], g2[i]))
            )
        return self.morphism(
            components,
            self.object_tensor(source, source2),
            self.object_tensor(target, target2),
        )

    def objects(self) -> typing.Iterator[typing.Tuple[int, typing.Tuple[int, ...]]]:
        """Every object in wreath product order.

        Yields:
            (sigma, Phi) pairs.
        """
        for sigma in range(len(self._perms)):
            for phi in itertools.product(range(self.outer.aut.order), repeat=self.n):
                yield sigma, phi

    def wreath_index(self, obj: typing.Tuple[int, typing.Sequence[int]]) -> int:
        """Index of an object in ``wreath_product(n, Aut(G))``.

        Args:
            obj: (sigma, Phi).

        Returns:
            The element index.
        """
        return wreath_index(self.n, self.outer.aut.order, obj[0], obj[1])

    def check_transport(
        self, rng: typing.Optional[np.random.Generator] = None, morphism_pairs: int = 500
    ) -> int:
        """Check that E(sigma, Phi) -> (sigma, Phi) is a strict monoidal isomorphism.

        Object tensor products are compared with ``wreath_product(n, Aut(G))`` on every pair;
        morphism tensor products are compared with the componentwise Sym(G) tensor product
        ``tau_{sigma'(i)} (x) tau'_i`` on random pairs.

        Args:
            rng: numpy random generator.
            morphism_pairs: number of random morphism pairs.

        Returns:
            The number of checks performed.

        Raises:
            ConsistencyError: on the first mismatch.
        """
        rng = rng or np.random.default_rng(0)
        wreath = wreath_product(self.n, self.outer.aut, self._limits)
        objects = list(self.objects())
        indices = np.array([self.wreath_index(obj) for obj in objects])
        if not np.array_equal(indices, np.arange(wreath.order)):
            raise ConsistencyError("objects do not enumerate the wreath product")
        checks = 0
        for a, first in enumerate(objects):
            for b, second in enumerate(objects):
                product = self.object_tensor(first, second)
                if self.wreath_index(product) != wreath.table[a, b]:
                    raise ConsistencyError("object tensor differs", {"pair": (a, b)})
                checks += 1
        for _ in range(morphism_pairs):
            first, second = self.random_morphism(rng), self.random_morphism(rng)
            product = self.morphism_tensor(first, second)
            shift = self._shift(second[1][0])
            for i in range(self.n):
                j = int(shift[i])
                expected = sym_tensor(
                    self.group,
                    SymCell(first[0][j], first[1][1][j], first[2][1][j]),
                    SymCell(second[0][i], second[1][1][i], second[2][1][i]),
                    self._limits,
                )
                if expected != SymCell(product[0][i], product[1][1][i], product[2][1][i]):
                    raise ConsistencyError("morphism tensor differs", {"component": i})
            checks += 1
        logger.info("Transport check for n=%d on %r: %d checks", self.n, self.group, checks)
        return checks

    def random_morphism(self, rng: np.random.Generator) -> tuple:
        """A uniformly random morphism.

        Args:
            rng: numpy random generator.

        Returns:
            tau(g; (sigma, Phi), (sigma, c_g o Phi)).
        """
        sigma = int(rng.integers(len(self._perms)))
        phi = tuple(int(v) for v in rng.integers(self.outer.aut.order, size=self.n))
        g = tuple(int(v) for v in rng.integers(self.group.order, size=self.n))
        target = tuple(
            int(self.outer.aut.table[self.outer.inner_map[g[i]], phi[i]]) for i in range(self.n)
        )
        return self.morphism(g, (sigma, phi), (sigma, target))


def coproduct_sym_arithmetic(
    n: int, group: FiniteGroup, limits: typing.Optional[Limits] = None
) -> CoproductSym:
    """Arithmetic of Sym of n disjoint copies of G.

    Args:
        n: number of copies.
        group: the group G.
        limits: active limits.

    Returns:
        The arithmetic helper.

    Raises:
        CapExceededError: if n! |Aut(G)|^n is above the group order cap.
    """
    limits = limits or default_limits()
    outer = automorphism_group(group, limits)
    size = math.factorial(n) * outer.aut.order**n
    if size > limits.max_group_order:
        raise CapExceededError(
            "max_group_order", limits.max_group_order, size, f"Sym of {n} copies of {group!r}"
        )
    return CoproductSym(n, group, limits)
