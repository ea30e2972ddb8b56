# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Helpers for the end-to-end command line reproductions."""

import typing

# Runs one command with --json and returns its exit code and parsed report.
CliRunner = typing.Callable[..., typing.Tuple[int, dict]]
