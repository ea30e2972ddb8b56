# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Toolkit configuration state unit tests."""

import pathlib

import pytest
from pydantic import ValidationError  # pylint: disable=no-name-in-module

from exceptions import ConfigInvalidError, ToolkitError
from state import ENV_PREFIX, Limits, State


@pytest.fixture(name="clean_env")
def clean_env_fixture(monkeypatch: pytest.MonkeyPatch) -> pytest.MonkeyPatch:
    """Remove every PERM2GRP_* variable from the environment."""
    for name in Limits.__fields__:
        monkeypatch.delenv(f"{ENV_PREFIX}{name.upper()}", raising=False)
    return monkeypatch


def test_repository_config_matches_builtin_defaults(clean_env: pytest.MonkeyPatch):
    """
    arrange: the repository config.yaml and a clean environment.
    act: build the state.
    assert: the limits equal the built-in defaults and the method is the coboundary test.
    """
    state = State.from_config()

    assert state.limits == Limits()
    assert state.method == "coboundary"
    assert not state.timing


def test_environment_overrides_config(clean_env: pytest.MonkeyPatch):
    """
    arrange: PERM2GRP_MAX_GROUP_ORDER set to 100.
    act: build the state with an explicit symmetric degree override.
    assert: the environment value and the explicit override both apply, unset overrides are
        ignored.
    """
    clean_env.setenv("PERM2GRP_MAX_GROUP_ORDER", "100")

    state = State.from_config(overrides={"max_symmetric_degree": 4, "section_budget": None})

    assert state.limits.max_group_order == 100
    assert state.limits.max_symmetric_degree == 4
    assert state.limits.section_budget == Limits().section_budget


def test_from_env_reads_an_explicit_mapping():
    """
    arrange: defaults and an environment mapping with an empty and a set variable.
    act: build the limits.
    assert: the set variable wins and the empty one is skipped.
    """
    environ = {"PERM2GRP_RANDOM_TRIALS": "7", "PERM2GRP_SECTION_BUDGET": ""}

    limits = Limits.from_env({"random_trials": 3, "section_budget": 9}, environ)

    assert limits.random_trials == 7
    assert limits.section_budget == 9


@pytest.mark.parametrize(
    "overrides",
    [
        pytest.param({"max_group_order": 0}, id="zero"),
        pytest.param({"max_group_order": "many"}, id="not a number"),
        pytest.param({"max_order": 10}, id="unknown option"),
    ],
)
def test_invalid_overrides(overrides: dict, clean_env: pytest.MonkeyPatch):
    """
    arrange: an invalid option value.
    act: build the state.
    assert: ConfigInvalidError is raised.
    """
    with pytest.raises(ConfigInvalidError):
        State.from_config(overrides=overrides)


def test_invalid_environment_value(clean_env: pytest.MonkeyPatch):
    """
    arrange: a negative section budget in the environment.
    act: build the state.
    assert: ConfigInvalidError is raised.
    """
    clean_env.setenv("PERM2GRP_SECTION_BUDGET", "-1")

    with pytest.raises(ConfigInvalidError):
        State.from_config()


def test_unknown_method(clean_env: pytest.MonkeyPatch):
    """
    arrange: an unknown splitness method.
    act: build the state.
    assert: ConfigInvalidError names the method.
    """
    with pytest.raises(ConfigInvalidError) as info:
        State.from_config(method="guess")

    assert "guess" in info.value.msg


def test_config_file(tmp_path: pathlib.Path, clean_env: pytest.MonkeyPatch):
    """
    arrange: a config file overriding one default.
    act: build the state from it.
    assert: the file value applies and the others keep their built-in values.
    """
    path = tmp_path / "config.yaml"
    path.write_text("options:\n  max_group_order:\n    default: 64\n", encoding="utf-8")

    state = State.from_config(path)

    assert state.limits.max_group_order == 64
    assert state.limits.random_trials == Limits().random_trials


@pytest.mark.parametrize(
    "content",
    [
        pytest.param(None, id="missing"),
        pytest.param("options: [\n", id="invalid yaml"),
        pytest.param("- 1\n- 2\n", id="not a mapping"),
        pytest.param("settings: {}\n", id="no options"),
    ],
)
def test_config_file_errors(
    content, tmp_path: pathlib.Path, clean_env: pytest.MonkeyPatch
):
    """
    arrange: a missing or malformed config file.
    act: build the state from it.
    assert: ConfigInvalidError is raised with the generic exit code.
    """
    path = tmp_path / "config.yaml"
    if content is not None:
        path.write_text(content, encoding="utf-8")

    with pytest.raises(ConfigInvalidError) as info:
        State.from_config(path)

    assert info.value.exit_code == 2


def test_limits_are_frozen():
    """
    arrange: the built-in limits.
    act: assign a field.
    assert: the assignment is rejected.
    """
    limits = Limits()

    with pytest.raises(TypeError):
        limits.max_group_order = 1  # type: ignore[misc]


def test_limits_reject_non_positive_values():
    """
    arrange: no setup.
    act: build limits with a zero cap.
    assert: ValidationError is raised.
    """
    with pytest.raises(ValidationError):
        Limits(max_cochain_entries=0)


def test_base_error_cannot_be_instantiated():
    """
    arrange: no setup.
    act: instantiate the base toolkit error.
    assert: TypeError is raised.
    """
    with pytest.raises(TypeError):
        ToolkitError("boom")
