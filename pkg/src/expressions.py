# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Parser for group expressions and groupoid specifications.

Group expressions::

    expr  := family ":" INT | "product(" expr ("," expr)* ")" | "table:@" PATH
    family := cyclic | dihedral | symmetric | dicyclic

Groupoid specifications are comma separated terms ``[INT ("×" | "x" | "*")] expr`` or the preset
``finite-sets:N`` (the components (1, S_k) for k = 0..N).
"""

import logging
import pathlib
import typing

from exceptions import ExpressionParseError, InvalidGroupError
from groups import FiniteGroup, cyclic, dicyclic, dihedral, direct_product, symmetric
from schemas import GroupModel
from state import Limits

logger = logging.getLogger(__name__)

FAMILIES: typing.Dict[str, typing.Callable[..., FiniteGroup]] = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "symmetric": symmetric,
    "dicyclic": dicyclic,
}
MULTIPLIERS = ("×", "x", "*")
FINITE_SETS = "finite-sets"

RawComponents = typing.List[typing.Tuple[int, FiniteGroup]]


class ExpressionParser:
    """Recursive descent parser keeping track of the current position.

    Attributes:
        text: the parsed text.
        position: index of the next unread character.
    """

    def __init__(
        self,
        text: str,
        limits: typing.Optional[Limits] = None,
        base_dir: typing.Optional[pathlib.Path] = None,
    ):
        """Start parsing a text.

        Args:
            text: the input.
            limits: active limits for the constructed groups.
            base_dir: directory that relative table paths are resolved against.
        """
        self.text = text
        self.position = 0
        self._limits = limits
        self._base_dir = base_dir or pathlib.Path.cwd()

    def error(self, message: str, position: typing.Optional[int] = None) -> ExpressionParseError:
        """Build a parse error at the current or a given position.

        Args:
            message: what went wrong.
            position: offending position, the current one when omitted.

        Returns:
            The error, to be raised by the caller.
        """
        where = self.position if position is None else position
        return ExpressionParseError(message, self.text, where)

    def _skip_spaces(self) -> None:
        """Advance past whitespace."""
        while self.position < len(self.text) and self.text[self.position].isspace():
            self.position += 1

    def _peek(self) -> str:
        """The next non-space character, empty at the end of the input.

        Returns:
            The character.
        """
        self._skip_spaces()
        return self.text[self.position] if self.position < len(self.text) else ""

    def _expect(self, token: str) -> None:
        """Consume a literal token.

        Args:
            token: the expected text.

        Raises:
            ExpressionParseError: if the input does not continue with the token.
        """
        self._skip_spaces()
        if not self.text.startswith(token, self.position):
            raise self.error(f"expected {token!r}")
        self.position += len(token)

    def _word(self) -> str:
        """Consume a lower case identifier (letters and dashes).

        Returns:
            The identifier.

        Raises:
            ExpressionParseError: if no identifier starts here.
        """
        self._skip_spaces()
        start = self.position
        while self.position < len(self.text) and (
            self.text[self.position].isalpha() or self.text[self.position] == "-"
        ):
            self.position += 1
        if start == self.position:
            raise self.error("expected a group family")
        return self.text[start : self.position]

    def _integer(self) -> int:
        """Consume a non-negative integer.

        Returns:
            Its value.

        Raises:
            ExpressionParseError: if no digits follow.
        """
        self._skip_spaces()
        start = self.position
        while self.position < len(self.text) and self.text[self.position].isdigit():
            self.position += 1
        if start == self.position:
            raise self.error("expected an integer")
        return int(self.text[start : self.position])

    def _path(self) -> str:
        """Consume a file path up to a separator.

        Returns:
            The path text.
        """
        start = self.position
        stops = ",) \t\n"
        while self.position < len(self.text) and self.text[self.position] not in stops:
            self.position += 1
        if start == self.position:
            raise self.error("expected a file path")
        return self.text[start : self.position]

    def group(self) -> FiniteGroup:
        """Parse one group expression.

        Returns:
            The group.

        Raises:
            ExpressionParseError: on malformed input or invalid family parameters.
        """
        self._skip_spaces()
        start = self.position
        name = self._word()
        if name == "product":
            self._expect("(")
            factors = [self.group()]
            while self._peek() == ",":
                self._expect(",")
                factors.append(self.group())
            self._expect(")")
            return direct_product(*factors, limits=self._limits)
        self._expect(":")
        if name == "table":
            self._expect("@")
            path_start = self.position
            return self._load_table(self._path(), path_start)
        if name not in FAMILIES:
            raise self.error(f"unknown group family {name!r}", start)
        argument_start = self.position
        argument = self._integer()
        try:
            return FAMILIES[name](argument, self._limits)
        except InvalidGroupError as exc:
            raise self.error(exc.msg, argument_start) from exc

    def _load_table(self, raw_path: str, position: int) -> FiniteGroup:
        """Read a group from a JSON file.

        Args:
            raw_path: path as written in the expression.
            position: position of the path for error reporting.

        Returns:
            The group.

        Raises:
            ExpressionParseError: if the file cannot be read or parsed.
        """
        path = pathlib.Path(raw_path)
        if not path.is_absolute():
            path = self._base_dir / path
        try:
            model = GroupModel.parse_raw(path.read_text(encoding="utf-8"))
        except (OSError, ValueError) as exc:
            raise self.error(f"unable to read group table {raw_path}: {exc}", position) from exc
        return model.to_group(self._limits)

    def finish(self) -> None:
        """Check that the whole input was consumed.

        Raises:
            ExpressionParseError: on trailing input.
        """
        if self._peek():
            raise self.error("unexpected trailing input")

    def components(self) -> typing.Tuple[RawComponents, typing.Optional[int]]:
        """Parse a comma separated list of groupoid terms.

        Returns:
            The raw (multiplicity, group) list and the finite sets truncation level, if any.

        Raises:
            ExpressionParseError: on malformed terms or multiplicities below 1.
        """
        raw: RawComponents = []
        truncation = None
        while True:
            self._skip_spaces()
            start = self.position
            multiplicity = 1
            if self._peek().isdigit():
                multiplicity = self._integer()
                self._skip_spaces()
                for token in MULTIPLIERS:
                    if self.text.startswith(token, self.position):
                        self.position += len(token)
                        break
                else:
                    raise self.error("expected '×' after the multiplicity")
                if multiplicity < 1:
                    raise self.error("multiplicities must be at least 1", start)
            if self.text.startswith(FINITE_SETS, self.position):
                self.position += len(FINITE_SETS)
                self._expect(":")
                truncation = self._integer()
                for k in range(truncation + 1):
                    raw.append((multiplicity, symmetric(k, self._limits)))
            else:
                raw.append((multiplicity, self.group()))
            if self._peek() != ",":
                break
            self._expect(",")
        self.finish()
        return raw, truncation


def parse_group(
    text: str,
    limits: typing.Optional[Limits] = None,
    base_dir: typing.Optional[pathlib.Path] = None,
) -> FiniteGroup:
    """Parse a complete group expression.

    Args:
        text: e.g. ``dihedral:8`` or ``product(cyclic:2, symmetric:3)``.
        limits: active limits.
        base_dir: directory for relative table paths.

    Returns:
        The group.
    """
    parser = ExpressionParser(text, limits, base_dir)
    group = parser.group()
    parser.finish()
    logger.debug("Parsed %r as %r", text, group)
    return group
