"""Exception types raised by megkit."""


class MegkitError(Exception):
    """Base class for all megkit errors."""


class IdOutOfRange(MegkitError, IndexError):
    pass


class SelfLoop(MegkitError, ValueError):
    pass


class DuplicateEdge(MegkitError, ValueError):
    pass


class NotAnEdge(MegkitError, ValueError):
    pass


class SameVertex(MegkitError, ValueError):
    pass


class InvalidParam(MegkitError, ValueError):
    pass


class NotInducedP3(MegkitError, ValueError):
    pass


class SizeCapExceeded(MegkitError):
    pass


class NotACutVertex(MegkitError, ValueError):
    pass


class InvalidComponentMegSet(MegkitError, ValueError):
    pass


class ParseError(MegkitError):
    """Input text rejected by a parser.

    ``kind`` names the failure (``Malformed``, ``IdOutOfRange``, ``SelfLoop``,
    ``DuplicateEdge``, ``EdgeCountMismatch``, ``MissingHeader``) and ``line``
    is the 1-based line number the rejection refers to.
    """

    def __init__(self, kind: str, line: int, message: str):
        super().__init__(f"line {line}: {kind}: {message}")
        self.kind = kind
        self.line = line
