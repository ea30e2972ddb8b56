# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Module for commonly used internal types of the toolkit."""

from typing import Any, Dict, List, NamedTuple, Optional, Tuple


class FourSequenceReport(NamedTuple):
    """Exactness data of 0 -> Z(G) -> G -> Aut(G) -> Out(G) -> 1.

    Attrs:
        center_order: order of Z(G).
        group_order: order of G.
        aut_order: order of Aut(G).
        inn_order: order of Inn(G).
        out_order: order of Out(G).
        exact_at_group: kernel of g -> c_g equals Z(G).
        exact_at_aut: image of g -> c_g equals the kernel of Aut(G) -> Out(G).
        projection_surjective: every outer class has a member.
    """

    center_order: int
    group_order: int
    aut_order: int
    inn_order: int
    out_order: int
    exact_at_group: bool
    exact_at_aut: bool
    projection_surjective: bool


class TwoCell(NamedTuple):
    """The morphism (u, [x]): [x] -> [x] of a special 2-group.

    Attrs:
        u: element of pi1.
        x: element of pi0.
    """

    u: int
    x: int


class SymCell(NamedTuple):
    """The natural isomorphism tau(g; phi, phi~): E(phi) => E(phi~) of Sym(G).

    Attrs:
        g: element of G with phi~ = c_g o phi.
        source: Aut index of phi.
        target: Aut index of phi~.
    """

    g: int
    source: int
    target: int


class CoherenceReport(NamedTuple):
    """Outcome of the exhaustive pentagon and triangle checks.

    Attrs:
        pentagon_ok: the pentagon identity holds for every object quadruple.
        triangle_ok: the associator is the unit cell on every triple with an identity entry.
        cocycle_ok: whether dz = 0; must agree with pentagon_ok.
        violations: offending tuples, pentagon quadruples first.
    """

    pentagon_ok: bool
    triangle_ok: bool
    cocycle_ok: bool
    violations: List[Tuple[int, ...]]

    @property
    def ok(self) -> bool:
        """Whether every check passed."""
        return self.pentagon_ok and self.triangle_ok and self.cocycle_ok


class NonsplitCertificate(NamedTuple):
    """Evidence that an outer class forbids a split Sym(G).

    Attrs:
        outer_class: the class [phi] in Out(G).
        members: Aut indices of the class.
        labels: (p, q) dihedral labels of the members, empty for other families.
        squares: Aut index of phi^2 for every member.
        conjugators: for every member, the elements g with phi^2 = c_g.
        fixed: for every member, the conjugators g that phi fixes (all empty).
    """

    outer_class: int
    members: List[int]
    labels: List[Tuple[int, int]]
    squares: List[int]
    conjugators: List[List[int]]
    fixed: List[List[int]]


class SectionLifting(NamedTuple):
    """A normalized section of Aut(G) -> Out(G) with a normalized 2-cocycle lifting.

    Attrs:
        section: Aut index chosen for every outer class.
        lifting: psi[o][o'] in G with s[o] s[o'] s[oo']^-1 = c_psi.
    """

    section: List[int]
    lifting: List[List[int]]


class SplitnessVerdict(NamedTuple):
    """Verdict of one splitness decider.

    Attrs:
        split: True, False, or None when a sufficient-only method is inconclusive.
        method: the decider that produced the verdict.
        witness: method dependent payload (a 2-cochain, a SectionLifting, a
            NonsplitCertificate, or a homomorphic section).
    """

    split: Optional[bool]
    method: str
    witness: Any


class ComponentVerdict(NamedTuple):
    """Splitness of one homogeneous component (n, G).

    Attrs:
        multiplicity: n.
        group: description of G.
        verdict: the component verdict for Sym(G).
    """

    multiplicity: int
    group: str
    verdict: SplitnessVerdict


class FiniteTypeVerdict(NamedTuple):
    """Splitness of the permutation 2-group of a finite type groupoid.

    Attrs:
        split: conjunction of the component verdicts, None when one is inconclusive.
        components: per-component verdicts.
        global_split: triviality of the assembled class, asserted equal to split.
        details: extra facts for reports.
    """

    split: Optional[bool]
    components: List[ComponentVerdict]
    global_split: bool
    details: Dict[str, Any]


class SelfEquivalenceCount(NamedTuple):
    """Brute force count of the self-equivalences of a skeletal groupoid.

    Attrs:
        functors: number of self-equivalences (bijective on objects, invertible on arrows).
        classes: number of their isomorphism classes under natural isomorphisms.
    """

    functors: int
    classes: int


class CayleyReport(NamedTuple):
    """Comparison of Sym(n copies of A) with A^n[1] x| (S_n wr Aut(A))[0].

    Attrs:
        pi0_order: order of the assembled pi0.
        pi1_order: order of the assembled pi1.
        pi0_matches: pi0 has the table of S_n wr Aut(A).
        action_matches: the action agrees with permute-then-act on every pair.
        split: the assembled class vanishes.
    """

    pi0_order: int
    pi1_order: int
    pi0_matches: bool
    action_matches: bool
    split: bool

    @property
    def ok(self) -> bool:
        """Whether every comparison succeeded."""
        return self.pi0_matches and self.action_matches and self.split
