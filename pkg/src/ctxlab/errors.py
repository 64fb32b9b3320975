"""Exception hierarchy shared by all ctxlab modules."""


class CtxlabError(Exception):
    """Base class for every error raised by ctxlab."""


# structure


class HypergraphError(CtxlabError):
    pass


class EmptyContext(HypergraphError):
    pass


class DuplicateVertexInContext(HypergraphError):
    pass


class DuplicateContext(HypergraphError):
    pass


class InvalidName(HypergraphError):
    pass


class NonUniform(HypergraphError):
    def __init__(self, message, offending=()):
        super().__init__(message)
        self.offending = list(offending)


class UnknownCatalogName(CtxlabError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class DomainMismatch(CtxlabError):
    pass


class UnknownVertex(CtxlabError):
    pass


# search


class SearchBudgetExceeded(CtxlabError):
    pass


class ExceedsKMax(CtxlabError):
    pass


class NoAdmissibleColoring(CtxlabError):
    pass


class NotAdmissible(CtxlabError):
    pass


class ValueMapNotNormalized(CtxlabError):
    pass


# geometry


class ZeroVector(CtxlabError, ValueError):
    pass


class CollinearInput(CtxlabError, ValueError):
    pass


class WrongDimension(CtxlabError, ValueError):
    pass


class ScaleBudgetExceeded(CtxlabError):
    pass


# text format


class ParseError(CtxlabError):
    """Error in a logic document; carries a 1-based line and column."""

    def __init__(self, message, line=0, column=0):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class LogicSyntaxError(ParseError):
    pass


class DuplicateDeclaration(ParseError):
    pass


class DimensionMismatch(ParseError):
    pass


class UnknownDirective(ParseError):
    pass
