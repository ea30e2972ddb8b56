# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Fixtures for the end-to-end command line reproductions."""

import json
import typing

import pytest

import cli
from tests.integration.helper import CliRunner


@pytest.fixture(name="run_cli")
def run_cli_fixture(capsys: pytest.CaptureFixture, monkeypatch: pytest.MonkeyPatch) -> CliRunner:
    """Run one command with a JSON report and return the exit code and the parsed report."""
    monkeypatch.delenv("PERM2GRP_MAX_GROUP_ORDER", raising=False)

    def run(*argv: str) -> typing.Tuple[int, dict]:
        """Run the command.

        Args:
            argv: command line arguments, without --json.

        Returns:
            The exit code and the report.
        """
        capsys.readouterr()
        code = cli.main([*argv, "--json"])
        out = capsys.readouterr().out
        assert out, f"{' '.join(argv)} printed no report (exit code {code})"
        return code, json.loads(out)

    return run
