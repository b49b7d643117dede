"""Exception hierarchy shared by every module of the package."""


class WLCError(Exception):
    """Base class for all errors raised by :mod:`wlc`."""


class GameError(WLCError, ValueError):
    """An invalid game or an invalid reference into a game."""


class EmptyChoiceSet(GameError):
    pass


class DuplicateChoiceName(GameError):
    pass


class InvalidProfile(GameError):
    pass


class UnknownChoice(GameError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class SamePlayerViolation(GameError):
    pass


class EmptyRestriction(GameError):
    pass


class SemanticError(WLCError, ValueError):
    """A well-formed game expression that denotes no valid game."""


class AllZero(SemanticError):
    pass


class BadSize(SemanticError):
    pass


class PlayerCountMismatch(SemanticError):
    pass


class ParseError(WLCError, ValueError):
    """Syntax error with the offending position and the tokens that would have been accepted."""

    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class SizeLimitExceeded(WLCError):
    pass


class MalformedRenaming(WLCError, ValueError):
    pass


class Indeterminate(WLCError):
    """Raised when the canonical structural protocol is asked to play an unsolvable game."""


class SchemaError(WLCError, ValueError):
    def __init__(self, message, pointer=""):
        self.pointer = pointer
        super().__init__(f"{pointer or '/'}: {message}")
