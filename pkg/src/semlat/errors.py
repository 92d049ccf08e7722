"""Exception types shared across the toolkit."""


class SemlatError(Exception):
    """Base class for every error raised by semlat."""


class ParseError(SemlatError):
    """An input document could not be parsed."""


class FieldError(SemlatError):
    """A semantic field definition is invalid."""


class EmptyContextError(SemlatError):
    """No message matches any keyword of the semantic field."""


class UnknownObjectError(SemlatError):
    """An object id was queried that is not part of the context."""


class UnknownAttributeError(SemlatError):
    """An attribute was queried that is not part of the context."""


class LatticeSizeError(SemlatError):
    """Concept enumeration exceeded the configured concept cap."""


class MiningError(SemlatError):
    """Invalid arguments to a rule-mining operation."""
