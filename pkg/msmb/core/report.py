# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.


from __future__ import annotations

from json import dumps, loads
from typing import TYPE_CHECKING

from ..exceptions import ParseError
from ..utils.conversion import to_plain

if TYPE_CHECKING:
    from typing import Any, Dict

SCHEMA_VERSION = 1


class Report:
    """The machine readable result of one command.

    Attributes
    ----------
    command: :class:`str`
        The command that produced the result, e.g. ``"graver"``.
    result: Any
        The result, converted to plain JSON data.
    schema: :class:`int`
        Version of the envelope.
    """

    def __init__(
            self,
            command: str,
            result: Any,
            schema: int = SCHEMA_VERSION
    ):
        self.command: str = command
        self.result: Any = to_plain(result)
        self.schema: int = schema

    def __str__(self) -> str:
        return dumps(
            dict(
                schema=self.schema,
                command=self.command,
                result=self.result
            ),
            sort_keys=True,
            ensure_ascii=False
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Report) and str(self) == str(other)

    @classmethod
    def from_string(cls, payload: str) -> Report:
        """Parses a report printed by ``msmb --format json``.

        Parameters
        ----------
        payload : :class:`str`
            The JSON text.

        Raises
        ------
        :class:`~msmb.exceptions.ParseError`
            The text is not a report.

        Returns
        -------
        :class:`~msmb.core.report.Report`
            The new report.
        """
        try:
            data: Dict[str, Any] = loads(payload)
        except ValueError:
            raise ParseError("Not valid JSON", payload) from None

        if not isinstance(data, dict) or "command" not in data:
            raise ParseError("Missing report envelope", payload)

        return cls(
            data["command"],
            data.get("result"),
            data.get("schema", SCHEMA_VERSION)
        )
