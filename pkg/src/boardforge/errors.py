"""Exception hierarchy shared by the engine, games, AI, and server."""


class BoardForgeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgument(BoardForgeError):
    """A caller supplied an out-of-domain argument (engine bug or misuse)."""


class UnknownGame(BoardForgeError):
    """game_id is not registered."""


class BadSeatCount(BoardForgeError):
    """Seat count outside the game's supported range."""


class MatchFinished(BoardForgeError):
    """Move submitted to a finished match."""


class NotYourTurn(BoardForgeError):
    """Move submitted by a seat that is not to move."""


class BadToken(BoardForgeError):
    """Move token does not parse under the game's grammar."""


class IllegalMove(BoardForgeError):
    """Move token parses but violates the game rules."""


class ReplayFailure(BoardForgeError):
    """A recorded move was illegal during replay (corrupt or edited record)."""


class RecordError(BoardForgeError):
    """Match record document is malformed (bad JSON, keys, or field types)."""


class DataError(BoardForgeError):
    """Bundled catalogue data is malformed."""


class InconsistentHistory(BoardForgeError):
    """Deduction history admits no candidate (lying feedback or caller bug)."""
