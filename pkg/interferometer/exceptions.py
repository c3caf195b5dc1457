class InvalidParameter(Exception):
    def __init__(self, field: str, value: object, *args: object) -> None:
        super().__init__(*args)
        self.field = field
        self.value = value

    def __str__(self) -> str:
        return f"Invalid value for parameter '{self.field}': {self.value!r}"


class InvalidConfig(Exception):
    def __init__(self, key: str, reason: str, *args: object) -> None:
        super().__init__(*args)
        self.key = key
        self.reason = reason

    def __str__(self) -> str:
        return f"Invalid configuration key '{self.key}': {self.reason}"


class SeriesNotConverged(Exception):
    def __init__(self, function: str, terms: int, *args: object) -> None:
        super().__init__(*args)
        self.function = function
        self.terms = terms

    def __str__(self) -> str:
        return f"Series '{self.function}' did not converge within {self.terms} terms"


class SingularPhase(Exception):
    def __init__(self, phase: float, offset: float, *args: object) -> None:
        super().__init__(*args)
        self.phase = phase
        self.offset = offset

    def __str__(self) -> str:
        return f"Fringe slope vanishes at phase {self.phase} with offset {self.offset}"


class ZeroSignal(Exception):
    def __str__(self) -> str:
        return "Squeezing parameter is zero: the interferometer produces no phase signal"


class NoCrossing(Exception):
    def __init__(self, nu: float, mu: float, upper: float, *args: object) -> None:
        super().__init__(*args)
        self.nu = nu
        self.mu = mu
        self.upper = upper

    def __str__(self) -> str:
        return f"rho stays above 1 for xi up to {self.upper} (nu={self.nu}, mu={self.mu})"


class GridMismatch(Exception):
    def __str__(self) -> str:
        return "Operands are defined on different grids"


class InvalidGrid(Exception):
    def __init__(self, reason: str, *args: object) -> None:
        super().__init__(*args)
        self.reason = reason

    def __str__(self) -> str:
        return f"Invalid grid: {self.reason}"


class IllConditionedKernel(Exception):
    def __init__(self, condition: float, *args: object) -> None:
        super().__init__(*args)
        self.condition = condition

    def __str__(self) -> str:
        return f"Kernel is too ill-conditioned to invert (condition estimate {self.condition:.3e})"


class UnsupportedOrder(Exception):
    def __init__(self, order: int, *args: object) -> None:
        super().__init__(*args)
        self.order = order

    def __str__(self) -> str:
        return f"Quadrature order {self.order} is not supported, use an order of at least 2"


class OracleToleranceFailure(Exception):
    def __init__(self, failed: list[str], *args: object) -> None:
        super().__init__(*args)
        self.failed = failed

    def __str__(self) -> str:
        return f"Oracle checks failed: {', '.join(self.failed)}"


class NumericOverflow(Exception):
    def __init__(self, function: str, xi: float, *args: object) -> None:
        super().__init__(*args)
        self.function = function
        self.xi = xi

    def __str__(self) -> str:
        return f"'{self.function}' overflows at xi={self.xi}"


class SweepPointFailed(Exception):
    def __init__(self, xi: float, nu: float, mu: float, error: Exception, *args: object) -> None:
        super().__init__(*args)
        self.xi = xi
        self.nu = nu
        self.mu = mu
        self.error = error

    def __str__(self) -> str:
        return f"Sweep point xi={self.xi}, nu={self.nu}, mu={self.mu} failed: {self.error}"
