"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConvergenceError(RuntimeError):
    """An iterative computation exhausted its budget before converging."""


class DegenerateEquilibriumError(RuntimeError):
    """The balance-function derivative is below resolution at a root.

    Raised when a stability classification is requested exactly at the
    peak of the adiabatic equilibrium function, where the derivative
    criterion cannot distinguish stable from unstable.
    """
