class GammaUndefined(ValueError):
    """The forest has an isolated vertex (or no vertices), so γ_t is undefined."""


class CapExceeded(ValueError):
    """Input or output larger than the configured cap.

    ``count`` carries the size that exceeded the cap when it is known.
    """

    def __init__(self, message: str, count: int | None = None) -> None:
        super().__init__(message)
        self.count = count
