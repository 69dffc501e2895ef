"""Exception types raised across the package."""


class SaptakError(Exception):
    """Base class for domain errors."""


class NotOnKeyboard(SaptakError, ValueError):
    """A frequency is not a pitch of the 12-ET lattice anchored at A4 = 440 Hz."""


class UnknownRaga(SaptakError, KeyError):
    def __str__(self):
        return f"unknown raga name: {self.args[0]!r}"


class RejectedShift(SaptakError, ValueError):
    """A murchhana that would displace the invariant pa."""

    def __init__(self, shift, displaced):
        self.shift = shift
        self.displaced = displaced
        super().__init__(
            f"murchhana shift {shift} rejected: pa is displaced by {displaced}"
        )


class DomainError(SaptakError, ValueError):
    pass


class ParseError(SaptakError, ValueError):
    """Malformed sargam text. ``index`` is the 1-based token position."""

    def __init__(self, index, token, reason="unrecognised token"):
        self.index = index
        self.token = token
        self.reason = reason
        super().__init__(f"token {index} ({token!r}): {reason}")


class AliasError(SaptakError, ValueError):
    pass
