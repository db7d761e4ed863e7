class ConfigError(ValueError):
    """Raised when a problem/grid/scheme combination is invalid before any stepping."""


class MissingDerivativeError(ConfigError):
    """A scheme needs an analytic derivative the caller did not supply."""

    def __init__(self, owner: str, name: str):
        self.owner = owner
        self.name = name
        super().__init__(f"{owner} is missing required derivative '{name}'")
