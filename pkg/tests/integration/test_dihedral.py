# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Splitness of the permutation 2-groups of the dihedral groups."""

import pytest

import perm_two_group
from cohomology import is_coboundary, xi
from groups import dihedral
from tests.integration.helper import CliRunner


@pytest.mark.parametrize(
    "n, code",
    [(4, 0), (5, 0), (6, 0), (8, 3), (16, 3)],
)
def test_dihedral_by_coboundary(n: int, code: int, run_cli: CliRunner):
    """
    arrange: a dihedral group.
    act: analyze it with the coboundary test.
    assert: D4, D5 and D6 are split while D8 and D16 are not.
    """
    exit_code, report = run_cli("analyze", f"dihedral:{n}")

    assert exit_code == code
    assert report["verdict"]["split"] is (code == 0)
    assert report["facts"]["exact"]


@pytest.mark.parametrize("n, code", [(4, 0), (5, 0), (6, 0), (8, 3)])
def test_dihedral_by_section_search(n: int, code: int, run_cli: CliRunner):
    """
    arrange: a dihedral group.
    act: analyze it with the section search.
    assert: the verdict agrees with the coboundary test.
    """
    exit_code, report = run_cli("analyze", f"dihedral:{n}", "--method", "section-search")

    assert exit_code == code
    if code == 0:
        assert report["verdict"]["witness"]["kind"] == "section-lifting"


@pytest.mark.parametrize("n", [8, 16])
def test_dihedral_certificates(n: int, run_cli: CliRunner):
    """
    arrange: D8 or D16.
    act: analyze it with the certificate search.
    assert: a certificate is found and none of its conjugators is fixed by its member.
    """
    exit_code, report = run_cli("analyze", f"dihedral:{n}", "--method", "witness")

    witness = report["verdict"]["witness"]
    assert exit_code == 3
    assert witness["kind"] == "nonsplit-certificate"
    assert all(fixed == [] for fixed in witness["fixed"])


def test_dihedral_8_certificate_members(run_cli: CliRunner):
    """
    arrange: D8.
    act: analyze it with the certificate search.
    assert: the certificate class holds the automorphisms r -> r^q, s -> s r^p with p odd and
        q in {3, 5}, each squaring to conjugation by r^2 or r^6.
    """
    _, report = run_cli("analyze", "dihedral:8", "--method", "witness")

    witness = report["verdict"]["witness"]
    assert witness["outer_class"] == 3
    assert sorted(map(tuple, witness["labels"])) == [
        (p, q) for p in (1, 3, 5, 7) for q in (3, 5)
    ]
    assert all(len(roots) == 2 for roots in witness["conjugators"])


def test_dihedral_table(run_cli: CliRunner):
    """
    arrange: the dihedral groups D4, D6, D8 and D10.
    act: tabulate them with every decider.
    assert: D8 is the only non-split row and the deciders agree.
    """
    code, report = run_cli("table", "dihedral", "4..10", "--step", "2", "--method", "all")

    assert code == 0
    assert [row["verdict"]["split"] for row in report["rows"]] == [True, True, False, True]


def test_cyclic_table(run_cli: CliRunner):
    """
    arrange: the cyclic groups Z1..Z10.
    act: tabulate them.
    assert: every row is split.
    """
    _, report = run_cli("table", "cyclic", "1..10")

    assert all(row["verdict"]["split"] for row in report["rows"])


@pytest.mark.parametrize("n, copies", [(4, 2), (4, 3), (6, 2), (8, 2)])
def test_wreath_transfer_preserves_the_class(n: int, copies: int):
    """
    arrange: the classifying cocycle of Sym(Dn).
    act: transfer it to S_copies wr Out(Dn).
    assert: the transferred cocycle is a coboundary exactly when the original one is.
    """
    z = perm_two_group.sym_invariants(dihedral(n)).z

    transferred = xi(copies, z)

    assert (is_coboundary(transferred) is None) == (is_coboundary(z) is None)
    assert (is_coboundary(z) is None) == (n == 8)


def test_two_copies_of_d8(run_cli: CliRunner):
    """
    arrange: two copies of D8.
    act: analyze the groupoid.
    assert: the wreath 2-product is not split.
    """
    code, report = run_cli("groupoid", "2×dihedral:8")

    assert code == 3
    assert report["verdict"]["split"] is False


def test_reports_are_deterministic(run_cli: CliRunner):
    """
    arrange: one command.
    act: run it twice.
    assert: the reports are identical.
    """
    first = run_cli("analyze", "dihedral:6", "--method", "all")
    second = run_cli("analyze", "dihedral:6", "--method", "all")

    assert first == second
