# apps/reports/exceptions.py


class ReportError(Exception):
    """Base class for errors raised while reading input or emitting reports."""


class ParseError(ReportError):
    def __init__(self, position, message):
        super().__init__(f"position {position}: {message}")
        self.position = position


class TableFormatError(ReportError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


class SchemaViolation(ReportError):
    """A report does not match its published JSON schema."""
