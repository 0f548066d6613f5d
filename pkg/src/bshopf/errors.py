"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or invalid input (bad generator, unknown name, ...)."""


class GuardError(ValueError):
    """A size limit guarding an exponential algorithm was exceeded."""

    def __init__(self, what: str, value: int, limit: int):
        self.what = what
        self.value = value
        self.limit = limit
        super().__init__(f"{what} = {value} exceeds the limit {limit}")


class CrossCheckError(RuntimeError):
    """Two independent routes to the same quantity disagreed."""


def guard(what: str, value: int, limit: int) -> None:
    if value > limit:
        raise GuardError(what, value, limit)
