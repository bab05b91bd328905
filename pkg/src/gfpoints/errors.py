"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain of an operation (off-curve, off-conic...)."""


class ParameterError(DomainError):
    """Family parameters violate abc != 0 or a case condition."""


class DegenerateParametersError(DomainError):
    """The family curve is singular for these parameters."""

    def __init__(self, case: str, message: str | None = None):
        self.case = case
        super().__init__(message or f"degenerate parameters ({case}); use the degenerate-case operations")


class ExceptionalPointError(DomainError):
    """A birational map or parameterization has a vanishing denominator here."""

    def __init__(self, message: str, which: str = ""):
        self.which = which
        super().__init__(message)


class StreamExhausted(DomainError):
    """A solution stream hit the identity: its base point has finite order."""


class PolyParseError(ValueError):
    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} at byte offset {offset}")
