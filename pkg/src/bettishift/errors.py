"""Exception hierarchy shared across the engines.

Exit-code mapping used by the CLI:
  InputError       -> 1
  EngineBugError   -> 2
  CapExceededError -> 3
"""


class BettiShiftError(Exception):
    pass


class InputError(BettiShiftError):
    """Bad user input: syntax errors, zero/unit ideals, malformed fixtures."""


class ParseError(InputError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class CapExceededError(BettiShiftError):
    """A configured size cap was exceeded; refuse cleanly instead of OOM."""


class EngineBugError(BettiShiftError):
    """A proved statement failed or two independent engines disagreed.

    Carries a diagnostics dict sufficient to reproduce the failure.
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}
