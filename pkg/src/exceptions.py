# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""User-defined exceptions used by the permutation 2-group toolkit."""

import typing

__all__ = [
    "ToolkitError",
    "ConfigInvalidError",
    "CapExceededError",
    "BudgetExceededError",
    "InvalidGroupError",
    "InvalidModuleError",
    "InvalidCellError",
    "ExpressionParseError",
    "ConsistencyError",
    "DeciderDisagreementError",
]


class ToolkitError(Exception):
    """Base exception of every failure reported by the toolkit.

    ``exit_code`` is the process exit code the command line front end uses for the failure.
    Do not instantiate this class directly, use subclass instead.
    """

    _exit_code = 2

    def __init__(self, message: str):
        """Initialize the instance.

        Args:
            message: A message explaining the reason for given exception.

        Raises:
            TypeError: if same base class is used to instantiate base class.
        """
        # Using type is necessary to check types between subclasses and superclass.
        # pylint: disable=unidiomatic-typecheck
        if type(self) is ToolkitError:
            raise TypeError("Instantiating a base class: ToolkitError")
        super().__init__(message)
        self.msg = message
        self.exit_code = self._exit_code


class ConfigInvalidError(ToolkitError):
    """Raised when the toolkit configuration or an override is invalid."""


class CapExceededError(ToolkitError):
    """Raised when a computation would exceed one of the configured size caps.

    Attributes:
        cap: name of the configuration option that fired.
        limit: configured value of the cap.
        requested: size the computation asked for.
    """

    def __init__(self, cap: str, limit: int, requested: int, context: str = ""):
        """Initialize the instance.

        Args:
            cap: name of the configuration option that fired.
            limit: configured value of the cap.
            requested: size the computation asked for.
            context: what was being built when the cap fired.
        """
        where = f" while building {context}" if context else ""
        super().__init__(f"cap {cap}={limit} exceeded{where}: requested {requested}")
        self.cap = cap
        self.limit = limit
        self.requested = requested


class BudgetExceededError(ToolkitError):
    """Raised when a search or solver budget runs out before a decision.

    Attributes:
        budget: name of the exhausted budget.
    """

    def __init__(self, budget: str, message: str):
        """Initialize the instance.

        Args:
            budget: name of the exhausted budget.
            message: explanation of what was left undecided.
        """
        super().__init__(f"{budget} exhausted: {message}")
        self.budget = budget


class InvalidGroupError(ToolkitError):
    """Raised when a multiplication table violates a group axiom.

    Attributes:
        witness: the offending elements, e.g. a non-associative triple.
    """

    def __init__(self, message: str, witness: typing.Tuple[int, ...] = ()):
        """Initialize the instance.

        Args:
            message: A message explaining which axiom failed.
            witness: the offending elements.
        """
        super().__init__(message)
        self.witness = tuple(int(value) for value in witness)


class InvalidModuleError(ToolkitError):
    """Raised when a coefficient module or module map violates its laws."""


class InvalidCellError(ToolkitError):
    """Raised for ill-typed 2-group cells (mismatched objects, invalid naturality data)."""


class ExpressionParseError(ToolkitError):
    """Raised when a group or groupoid expression cannot be parsed.

    Attributes:
        position: zero based offset of the offending character.
    """

    def __init__(self, message: str, text: str, position: int):
        """Initialize the instance.

        Args:
            message: what was expected.
            text: the full expression.
            position: zero based offset of the offending character.
        """
        super().__init__(f"{message} at position {position}: {text!r}")
        self.position = position


class ConsistencyError(ToolkitError):
    """Raised when an internal invariant is found broken; carries the diagnostics.

    Attributes:
        diagnostics: structured details of the broken invariant.
    """

    def __init__(self, message: str, diagnostics: typing.Optional[dict] = None):
        """Initialize the instance.

        Args:
            message: the invariant that failed.
            diagnostics: structured details of the failure.
        """
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class DeciderDisagreementError(ConsistencyError):
    """Raised when two independent splitness deciders disagree."""
