class DomainError(ValueError):
    """An input violates a documented precondition."""


class DegenerateConvergentError(DomainError):
    """A closed form needs a partial convergent that vanishes."""
