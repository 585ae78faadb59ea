"""Exception types shared by the data-file parsers."""

from __future__ import annotations


class LineError(ValueError):
    """A problem with one line of a data file.

    ``kind`` is a short machine-readable tag such as ``malformed-integer`` or
    ``duplicate-suffix``; ``source`` and ``line_number`` are filled in by
    whoever knows them.
    """

    def __init__(self, kind: str, detail: str, line_number: int | None = None,
                 source: str | None = None):
        self.kind = kind
        self.detail = detail
        self.line_number = line_number
        self.source = source
        super().__init__(str(self))

    def located(self, line_number: int | None = None,
                source: str | None = None) -> "LineError":
        return LineError(
            self.kind,
            self.detail,
            line_number if line_number is not None else self.line_number,
            source if source is not None else self.source,
        )

    def __str__(self) -> str:
        where = []
        if self.source is not None:
            where.append(self.source)
        if self.line_number is not None:
            where.append(str(self.line_number))
        prefix = ":".join(where)
        if prefix:
            return f"{prefix}: {self.kind}: {self.detail}"
        return f"{self.kind}: {self.detail}"


class DataFileError(ValueError):
    """One or more :class:`LineError` collected from a data file (or several)."""

    def __init__(self, errors: list[LineError]):
        self.errors = list(errors)
        super().__init__("\n".join(str(e) for e in self.errors))

    def with_source(self, source: str) -> "DataFileError":
        return DataFileError([e.located(source=source) for e in self.errors])

    @property
    def kinds(self) -> list[str]:
        return [e.kind for e in self.errors]
