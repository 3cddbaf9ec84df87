"""Exception types raised across the package."""


class CuboidalError(Exception):
    """Base class for all package errors."""


class DomainError(CuboidalError, ValueError):
    pass


class PoleError(CuboidalError, ZeroDivisionError):
    """Evaluation requested at (or within the guard width of) a pole."""


class PoleAtNonpositiveInteger(PoleError):
    pass


class PoleAtOne(PoleError):
    pass


class PoleAtThreeHalves(PoleError):
    pass


class PoleGuard(PoleError):
    pass


class RemovableSingularity(CuboidalError, ZeroDivisionError):
    """The formula has cancelling singular terms here; use the dual formula."""


class RegionError(CuboidalError, ValueError):
    pass


class UnsupportedModulus(CuboidalError, ValueError):
    pass


class CostGuardExceeded(CuboidalError, ValueError):
    pass


class NonConvergent(CuboidalError, ValueError):
    pass


class StepTooSmall(CuboidalError, ValueError):
    pass
