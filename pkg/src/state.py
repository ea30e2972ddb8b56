# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Toolkit configuration state."""
import dataclasses
import functools
import logging
import os
import pathlib
import typing

import yaml

# pylint: disable=no-name-in-module
from pydantic import BaseModel, ValidationError, validator

from exceptions import ConfigInvalidError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = pathlib.Path(__file__).resolve().parent.parent / "config.yaml"
ENV_PREFIX = "PERM2GRP_"
METHODS = ("coboundary", "section-search", "witness", "homomorphic-section", "all")


class Limits(BaseModel):
    """Size caps and search budgets applied by every computation.

    Attributes:
        max_group_order: largest group order accepted.
        max_symmetric_degree: largest n accepted by symmetric(n).
        max_cochain_entries: largest number of tuples a dense cochain may hold.
        solver_max_entries: largest dense matrix for the prime power eliminator.
        solver_bitset_max_entries: largest system for the packed F2 eliminator.
        enumeration_max_unknowns: largest unknown count for the exhaustive solver.
        section_budget: largest product of coset sizes the section search iterates.
        lifting_budget: largest number of lifting nodes explored per section.
        equivalence_max_pi0: largest pi0 order for the equivalence search.
        equivalence_max_pi1: largest pi1 order for the equivalence search.
        random_trials: instances drawn by each randomized property suite.
    """

    max_group_order: int = 5040
    max_symmetric_degree: int = 8
    max_cochain_entries: int = 20_000_000
    solver_max_entries: int = 50_000_000
    solver_bitset_max_entries: int = 500_000_000
    enumeration_max_unknowns: int = 20
    section_budget: int = 1_000_000
    lifting_budget: int = 1_000_000
    equivalence_max_pi0: int = 24
    equivalence_max_pi1: int = 16
    random_trials: int = 1000

    class Config:  # pylint: disable=too-few-public-methods
        """Pydantic model configuration."""

        allow_mutation = False
        frozen = True
        extra = "forbid"

    @validator("*")
    @classmethod
    def check_positive(cls, value: int) -> int:
        """Check that every limit is a positive integer.

        Args:
            value: the candidate limit.

        Returns:
            The validated limit.

        Raises:
            ValueError: if the limit is not positive.
        """
        if value < 1:
            raise ValueError("limits must be positive integers")
        return value

    @classmethod
    def from_config(
        cls, path: typing.Optional[pathlib.Path] = None
    ) -> typing.Dict[str, typing.Any]:
        """Read the option defaults declared in a config.yaml file.

        Args:
            path: configuration file, the repository config.yaml when omitted.

        Returns:
            Mapping of option name to default value.

        Raises:
            ConfigInvalidError: if the file cannot be read or is not in the options format.
        """
        path = path or DEFAULT_CONFIG_PATH
        try:
            document = yaml.safe_load(pathlib.Path(path).read_text(encoding="utf-8"))
        except (OSError, yaml.YAMLError) as exc:
            logger.error("Unable to load configuration file %s, %s", path, exc)
            raise ConfigInvalidError(f"Unable to load configuration file {path}.") from exc
        if not isinstance(document, dict) or not isinstance(document.get("options"), dict):
            raise ConfigInvalidError(f"Configuration file {path} has no options mapping.")
        return {
            name: option.get("default")
            for name, option in document["options"].items()
            if isinstance(option, dict) and "default" in option
        }

    @classmethod
    def from_env(
        cls,
        defaults: typing.Optional[typing.Dict[str, typing.Any]] = None,
        environ: typing.Optional[typing.Mapping[str, str]] = None,
    ) -> "Limits":
        """Instantiate Limits from defaults overlaid with PERM2GRP_* environment variables.

        Args:
            defaults: option defaults, usually from :meth:`from_config`.
            environ: environment mapping, os.environ when omitted.

        Returns:
            The validated limits.
        """
        environ = os.environ if environ is None else environ
        values = dict(defaults or {})
        for name in cls.__fields__:
            raw = environ.get(f"{ENV_PREFIX}{name.upper()}")
            if raw:
                values[name] = raw
        return cls(**values)


@functools.lru_cache(maxsize=1)
def default_limits() -> Limits:
    """Limits from the repository config.yaml and the process environment.

    Returns:
        The cached default limits.

    Raises:
        ConfigInvalidError: if the defaults or environment values are invalid.
    """
    try:
        return Limits.from_env(Limits.from_config())
    except ValidationError as exc:
        logger.error("Invalid toolkit configuration, %s", exc)
        raise ConfigInvalidError("Invalid toolkit configuration.") from exc


@dataclasses.dataclass(frozen=True)
class State:
    """The toolkit state for one command.

    Attributes:
        limits: size caps and budgets.
        method: splitness decision method.
        seed: seed of the randomized property suites.
        timing: whether reports include wall clock timings.
    """

    limits: Limits
    method: str = "coboundary"
    seed: int = 0
    timing: bool = False

    @classmethod
    def from_config(
        cls,
        path: typing.Optional[pathlib.Path] = None,
        overrides: typing.Optional[typing.Dict[str, typing.Any]] = None,
        method: str = "coboundary",
        seed: int = 0,
        timing: bool = False,
    ) -> "State":
        """Initialize the state from a configuration file, the environment and overrides.

        Args:
            path: configuration file, the repository config.yaml when omitted.
            overrides: explicit option values, e.g. from command line flags.
            method: splitness decision method.
            seed: seed of the randomized property suites.
            timing: whether reports include wall clock timings.

        Returns:
            The state of the command.

        Raises:
            ConfigInvalidError: if invalid state values were encountered.
        """
        if method not in METHODS:
            raise ConfigInvalidError(f"Unknown method {method!r}, expected one of {METHODS}.")
        try:
            limits = Limits.from_env(Limits.from_config(path))
            if overrides:
                limits = Limits(
                    **{**limits.dict(), **{k: v for k, v in overrides.items() if v is not None}}
                )
        except ValidationError as exc:
            logger.error("Invalid toolkit configuration, %s", exc)
            raise ConfigInvalidError("Invalid toolkit configuration.") from exc
        return cls(limits=limits, method=method, seed=seed, timing=timing)
