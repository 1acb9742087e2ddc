class FiguresError(Exception):
    pass


class MissingColumn(FiguresError):
    """Input CSV lacks a required column."""


class EmptyInput(FiguresError):
    """Input CSV has a header but no data rows."""


class MissingInput(FiguresError):
    """A file the panel needs does not exist."""
