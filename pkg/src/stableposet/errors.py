"""Exception types shared across the package."""


class ParseError(ValueError):
    """Instance text is structurally malformed (bad token, wrong count)."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(ValueError):
    """Instance text parsed but violates an invariant (non-permutation list)."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidSize(ValueError):
    """A generator was asked for a size outside its domain."""


class SizeTooLarge(ValueError):
    """A brute-force oracle was asked to exceed its enumeration guard."""


class NotStable(ValueError):
    """An operation requiring a stable matching received an unstable one."""


class NotExposed(ValueError):
    """The rotation is not exposed in the given matching."""


class NotADownset(ValueError):
    """The element set is not closed downward under the poset order."""


class BudgetExceeded(RuntimeError):
    """Lattice traversal exceeded the configured node budget."""


class ComparabilityViolation(RuntimeError):
    """Two rotations sharing an agent are incomparable: the order is broken."""


class CoverageError(ValueError):
    """A chain cover misses some poset element."""


class EmptyPoset(ValueError):
    """Operation needs at least one live element."""
