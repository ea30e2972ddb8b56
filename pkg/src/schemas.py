# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""JSON documents exchanged by the toolkit, every one versioned with ``"schema": 1``."""

import typing

import numpy as np

# pylint: disable=no-name-in-module
from pydantic import BaseModel, Field

from autos import OuterStructure
from cohomology import Cochain, GModule
from groups import FiniteGroup, from_table
from state import Limits
from two_group import TwoGroupPresentation
from types_ import (
    FourSequenceReport,
    NonsplitCertificate,
    SectionLifting,
    SplitnessVerdict,
)

SCHEMA_VERSION = 1


class _Document(BaseModel):
    """Base of every versioned document.

    Attributes:
        schema_version: document format version, serialized as ``schema``.
    """

    schema_version: int = Field(SCHEMA_VERSION, alias="schema")

    class Config:  # pylint: disable=too-few-public-methods
        """Pydantic model configuration."""

        allow_population_by_field_name = True
        extra = "forbid"

    def dumps(self) -> str:
        """Deterministic JSON text.

        Returns:
            The document with sorted keys.
        """
        return self.json(by_alias=True, sort_keys=True, indent=2, ensure_ascii=False)


def _reference(group: FiniteGroup) -> str:
    """Family tag of a group, or its order when untagged."""
    return group.family_tag or f"order {group.order}"


def _plain(value: typing.Any) -> typing.Any:
    """Convert numpy scalars, arrays and tuples into JSON friendly values.

    Args:
        value: a certificate field.

    Returns:
        Nested lists, ints and dicts.
    """
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


class GroupModel(_Document):
    """A group as a multiplication table.

    Attributes:
        order: number of elements.
        table: rows of the multiplication table.
        identity: index of the identity.
        labels: optional element names.
        family_tag: optional constructor description.
    """

    order: int
    table: typing.List[typing.List[int]]
    identity: int
    labels: typing.Optional[typing.List[str]] = None
    family_tag: typing.Optional[str] = None

    @classmethod
    def from_group(cls, group: FiniteGroup) -> "GroupModel":
        """Serialize a group.

        Args:
            group: the group.

        Returns:
            The document.
        """
        return cls(
            order=group.order,
            table=group.table.tolist(),
            identity=group.identity,
            labels=list(group.labels) if group.labels else None,
            family_tag=group.family_tag,
        )

    def to_group(self, limits: typing.Optional[Limits] = None) -> FiniteGroup:
        """Rebuild and validate the group.

        Args:
            limits: active limits.

        Returns:
            The group.

        Raises:
            ValueError: if the declared order does not match the table.
        """
        if len(self.table) != self.order:
            raise ValueError(f"declared order {self.order} but {len(self.table)} rows")
        return from_table(
            self.table,
            identity=self.identity,
            labels=self.labels,
            family_tag=self.family_tag,
            limits=limits,
        )


class OuterStructureModel(_Document):
    """Aut(G), Inn(G), Out(G) and the canonical épinglage.

    Attributes:
        aut_table: multiplication table of Aut(G).
        aut_elements: image array of every automorphism.
        inn: Aut indices of the inner automorphisms.
        out_table: multiplication table of Out(G).
        projection: outer class of every automorphism.
        section: chosen member of every outer class.
        conjugator: conjugating element of every automorphism relative to the section.
        center: central elements.
    """

    aut_table: typing.List[typing.List[int]]
    aut_elements: typing.List[typing.List[int]]
    inn: typing.List[int]
    out_table: typing.List[typing.List[int]]
    projection: typing.List[int]
    section: typing.List[int]
    conjugator: typing.List[int]
    center: typing.List[int]

    @classmethod
    def from_outer(cls, outer: OuterStructure) -> "OuterStructureModel":
        """Serialize an outer structure.

        Args:
            outer: the structure.

        Returns:
            The document.
        """
        return cls(
            aut_table=outer.aut.table.tolist(),
            aut_elements=outer.aut_elements.tolist(),
            inn=outer.inn.tolist(),
            out_table=outer.out.table.tolist(),
            projection=outer.projection.tolist(),
            section=outer.section.tolist(),
            conjugator=outer.conjugator.tolist(),
            center=list(outer.center),
        )


class ModuleModel(_Document):
    """A finite module.

    Attributes:
        acting_group: the acting group.
        coeff: the abelian coefficient group.
        action: ``action[g][a]`` is ``g.a``.
    """

    acting_group: GroupModel
    coeff: GroupModel
    action: typing.List[typing.List[int]]

    @classmethod
    def from_module(cls, module: GModule) -> "ModuleModel":
        """Serialize a module.

        Args:
            module: the module.

        Returns:
            The document.
        """
        return cls(
            acting_group=GroupModel.from_group(module.acting_group),
            coeff=GroupModel.from_group(module.coeff),
            action=module.action.tolist(),
        )

    def to_module(self, limits: typing.Optional[Limits] = None) -> GModule:
        """Rebuild and validate the module.

        Args:
            limits: active limits.

        Returns:
            The module.
        """
        return GModule(
            self.acting_group.to_group(limits), self.coeff.to_group(limits), np.array(self.action)
        )


class CochainModel(_Document):
    """A normalized cochain listed by its nonzero entries.

    Attributes:
        degree: the degree.
        acting_group_ref: description of the acting group.
        coeff_ref: description of the coefficient group.
        entries: ``[tuple, value]`` pairs with a nonzero value.
    """

    degree: int
    acting_group_ref: str
    coeff_ref: str
    entries: typing.List[typing.Tuple[typing.List[int], int]]

    @classmethod
    def from_cochain(cls, cochain: Cochain) -> "CochainModel":
        """Serialize a cochain.

        Args:
            cochain: the cochain.

        Returns:
            The document.
        """
        module = cochain.module
        return cls(
            degree=cochain.degree,
            acting_group_ref=_reference(module.acting_group),
            coeff_ref=_reference(module.coeff),
            entries=[(list(args), value) for args, value in cochain.entries()],
        )

    def to_cochain(self, module: GModule) -> Cochain:
        """Rebuild the cochain in a given module.

        Args:
            module: the coefficient module.

        Returns:
            The cochain.
        """
        return Cochain.from_entries(module, self.degree, self.entries)


class PresentationModel(_Document):
    """The invariant triple of a special 2-group.

    Attributes:
        pi1: the module, which carries pi0 as its acting group.
        z: the 3-cocycle.
    """

    pi1: ModuleModel
    z: CochainModel

    @classmethod
    def from_presentation(cls, presentation: TwoGroupPresentation) -> "PresentationModel":
        """Serialize a presentation.

        Args:
            presentation: the 2-group.

        Returns:
            The document.
        """
        return cls(
            pi1=ModuleModel.from_module(presentation.pi1),
            z=CochainModel.from_cochain(presentation.z),
        )

    def to_presentation(self, limits: typing.Optional[Limits] = None) -> TwoGroupPresentation:
        """Rebuild and validate the presentation.

        Args:
            limits: active limits.

        Returns:
            The 2-group.
        """
        module = self.pi1.to_module(limits)
        return TwoGroupPresentation(module.acting_group, module, self.z.to_cochain(module))


class VerdictModel(_Document):
    """A splitness verdict with its certificate.

    Attributes:
        split: True, False or None (inconclusive).
        method: the decider.
        witness: the certificate, tagged by ``kind``.
    """

    split: typing.Optional[bool]
    method: str
    witness: typing.Optional[typing.Dict[str, typing.Any]] = None

    @classmethod
    def from_verdict(cls, verdict: SplitnessVerdict) -> "VerdictModel":
        """Serialize a verdict, certificates included.

        Args:
            verdict: the verdict.

        Returns:
            The document.
        """
        witness = verdict.witness
        payload: typing.Optional[typing.Dict[str, typing.Any]] = None
        if isinstance(witness, Cochain):
            payload = {"kind": "cochain", **CochainModel.from_cochain(witness).dict()}
            payload.pop("schema_version")
        elif isinstance(witness, SectionLifting):
            payload = {"kind": "section-lifting", **_plain(witness._asdict())}
        elif isinstance(witness, NonsplitCertificate):
            payload = {"kind": "nonsplit-certificate", **_plain(witness._asdict())}
        elif isinstance(witness, dict):
            payload = {
                "kind": "all",
                "verdicts": {
                    name: cls.from_verdict(inner).dict(by_alias=True)
                    for name, inner in sorted(witness.items())
                },
            }
        elif witness is not None:
            payload = {"kind": "homomorphic-section", "section": _plain(witness)}
        return cls(split=verdict.split, method=verdict.method, witness=payload)


class GroupFacts(BaseModel):
    """Orders in the exact sequence 0 -> Z(G) -> G -> Aut(G) -> Out(G) -> 1.

    Attributes:
        order: |G|.
        center: |Z(G)|.
        aut: |Aut(G)|.
        inn: |Inn(G)|.
        out: |Out(G)|.
        exact: whether every exactness check passed.
    """

    order: int
    center: int
    aut: int
    inn: int
    out: int
    exact: bool

    @classmethod
    def from_report(cls, report: FourSequenceReport) -> "GroupFacts":
        """Summarize an exactness report.

        Args:
            report: the report.

        Returns:
            The facts.
        """
        return cls(
            order=report.group_order,
            center=report.center_order,
            aut=report.aut_order,
            inn=report.inn_order,
            out=report.out_order,
            exact=report.exact_at_group and report.exact_at_aut and report.projection_surjective,
        )


class InvariantsModel(BaseModel):
    """Summary of an invariant triple.

    Attributes:
        pi0: description of pi0.
        pi1: description of pi1.
        pi0_order: |pi0|.
        pi1_order: |pi1|.
        trivial_action: whether pi0 acts trivially on pi1.
        class_trivial: whether the class of z vanishes.
        description: the 2-group up to equivalence.
    """

    pi0: str
    pi1: str
    pi0_order: int
    pi1_order: int
    trivial_action: bool
    class_trivial: bool
    description: str


class ComponentModel(BaseModel):
    """One homogeneous component of a groupoid.

    Attributes:
        multiplicity: number of connected components.
        group: description of the base group.
        facts: facts about the base group.
        verdict: splitness of its permutation 2-group.
    """

    multiplicity: int
    group: str
    facts: GroupFacts
    verdict: VerdictModel


class AnalysisReport(_Document):
    """Report of the ``analyze`` and ``groupoid`` commands.

    Attributes:
        command: the command that produced the report.
        input: the expression as given.
        facts: facts about the analysed group (``analyze`` only).
        invariants: the invariant triple summary.
        verdict: the splitness verdict.
        components: per-component verdicts (``groupoid`` only).
        truncation: finite sets truncation level, if any.
        equivalent_to: description the presentation was confirmed equivalent to, if any.
        timing: wall clock seconds, only with ``--timing``.
    """

    command: str
    input: str
    facts: typing.Optional[GroupFacts] = None
    invariants: InvariantsModel
    verdict: VerdictModel
    components: typing.List[ComponentModel] = []
    truncation: typing.Optional[int] = None
    equivalent_to: typing.Optional[str] = None
    timing: typing.Optional[float] = None


class TableRow(BaseModel):
    """One row of a family table.

    Attributes:
        n: family parameter.
        facts: facts about the group.
        invariants: invariant triple summary.
        verdict: splitness verdict.
    """

    n: int
    facts: GroupFacts
    invariants: InvariantsModel
    verdict: VerdictModel


class TableReport(_Document):
    """Report of the ``table`` command.

    Attributes:
        family: the group family.
        rows: one row per parameter.
        timing: wall clock seconds, only with ``--timing``.
    """

    family: str
    rows: typing.List[TableRow]
    timing: typing.Optional[float] = None


class CheckReport(_Document):
    """Report of the ``check`` command.

    Attributes:
        seed: seed of the random suites.
        trials: instances per suite.
        suites: number of passed instances per suite.
        ok: whether every suite passed.
        failures: messages of failed suites.
    """

    seed: int
    trials: int
    suites: typing.Dict[str, int]
    ok: bool
    failures: typing.List[str] = []
