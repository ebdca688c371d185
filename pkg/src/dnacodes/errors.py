"""Exception types shared by every codec."""
from __future__ import annotations


class ParameterError(ValueError):
    """A parameter bundle violates a constraint of its scheme."""


class DecodeError(Exception):
    """The received word is not within the correctable ball of any codeword."""


class NoCandidate(DecodeError):
    pass


class Ambiguous(DecodeError):
    def __init__(self, message: str, candidates=()):
        super().__init__(message)
        self.candidates = tuple(candidates)


class EncodeError(RuntimeError):
    """An encoder hit an internal bound it cannot get past."""
