"""Shared exception types."""


class InternalVerificationError(RuntimeError):
    """A step the theory guarantees to succeed has failed.

    Raised when a verification made on already-validated input does not
    hold; this indicates a bug in the library (or corrupted input that
    slipped past validation), never a condition callers should handle.
    """


def ensure(condition: bool, message: str) -> None:
    """Raise InternalVerificationError unless ``condition`` holds."""
    if not condition:
        raise InternalVerificationError(message)
