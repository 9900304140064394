"""Exception hierarchy shared by every module of the package."""


class AvoidabilityError(Exception):
    """Base class for all errors raised by golodavoid."""


class PatternError(AvoidabilityError, ValueError):
    pass


class EmptyPattern(PatternError):
    def __init__(self):
        super().__init__("pattern must be non-empty")


class BadSymbol(PatternError):
    def __init__(self, position, char):
        self.position = position
        self.char = char
        super().__init__(f"bad pattern symbol {char!r} at position {position}")


class InvalidArgument(AvoidabilityError, ValueError):
    pass


class OutOfRange(AvoidabilityError, IndexError):
    pass


class NotInvertible(AvoidabilityError, ZeroDivisionError):
    pass


class BadCountSeries(AvoidabilityError, ValueError):
    pass


class NotApplicable(AvoidabilityError, ValueError):
    pass


class BudgetExceeded(AvoidabilityError, RuntimeError):
    def __init__(self, budget, what="search"):
        self.budget = budget
        super().__init__(f"{what} exceeded the work budget of {budget} nodes")


class InvalidTarget(AvoidabilityError, ValueError):
    def __init__(self, target):
        self.target = target
        super().__init__(f"target alphabet size must be 2, 3 or 4, got {target!r}")


class BoundViolation(AvoidabilityError, AssertionError):
    """The brute-force count fell below a Golod lower bound that should hold."""
