"""Typed errors shared by every engine module."""


class ScoringGamesError(Exception):
    """Base class for all engine errors."""


class ResourceBoundError(ScoringGamesError):
    """Raised when a search would exceed a configured bound."""

    def __init__(self, bound_name: str, limit: int, requested: int) -> None:
        """Initialize ResourceBoundError.

        Args:
            bound_name: Configuration name of the violated bound.
            limit: Configured limit.
            requested: Size the operation would have needed.
        """
        self.bound_name = bound_name
        self.limit = limit
        self.requested = requested
        super().__init__(f"{bound_name} exceeded: needs {requested}, limit is {limit}")


class ContractError(ScoringGamesError):
    """Raised when an operation is called outside its hypotheses."""

    def __init__(self, operation: str, message: str) -> None:
        """Initialize ContractError.

        Args:
            operation: Name of the rejecting operation.
            message: Which hypothesis failed.
        """
        self.operation = operation
        super().__init__(f"[{operation}] {message}")


class NotationError(ScoringGamesError):
    """Raised when game notation cannot be parsed."""

    def __init__(self, text: str, position: int, message: str) -> None:
        """Initialize NotationError.

        Args:
            text: The offending input.
            position: Zero-based character offset of the problem.
            message: Error description.
        """
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class WitnessVerificationError(ScoringGamesError):
    """Raised when a constructed distinguishing game fails its own recomputation."""
