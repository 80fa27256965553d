class DensityError(ValueError):
    """Base class for rejected inputs anywhere in the library."""


class NotInGError(DensityError):
    """The base g is -1, 0, 1 or a perfect square, so P_g is finite."""

    def __init__(self, g: int, reason: str):
        self.g = g
        super().__init__(f"g={g} is not in G ({reason})")


class InvalidArgumentError(DensityError):
    """A precondition of an arithmetic operation does not hold."""
