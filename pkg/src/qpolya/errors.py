"""Exception hierarchy.

Every error carries a stable ``code`` string used by the CLI's JSON mode,
and an ``exit_code`` (1 for domain errors, 2 for syntax/usage errors).
"""


class QPolyaError(Exception):
    code = "error"
    exit_code = 1


class CyclotomicZeroDivisionError(QPolyaError, ZeroDivisionError):
    code = "division_by_zero"

    def __init__(self, msg="division by zero in cyclotomic field"):
        super().__init__(msg)


class InadmissibleSpecError(QPolyaError, ValueError):
    code = "inadmissible_spec"

    def __init__(self, condition, msg=None):
        self.condition = condition
        super().__init__(msg or f"inadmissible line spec: violates {condition}")


class NotRootOfUnityError(QPolyaError, ValueError):
    code = "not_root_of_unity"


class DomainError(QPolyaError, ValueError):
    """Out-of-range argument (negative n, k > n, zero q, ...)."""

    code = "domain_error"


class CapExceededError(QPolyaError, ValueError):
    code = "cap_exceeded"

    def __init__(self, name, cap, value):
        self.cap = cap
        super().__init__(f"{name} cap exceeded: {value} > {cap}")


class PrefixTooShortError(QPolyaError, ValueError):
    code = "prefix_too_short"

    def __init__(self, required, got):
        self.required = required
        super().__init__(f"need at least {required} terms, got {got}")


class PreconditionError(QPolyaError, ValueError):
    code = "precondition"


class UndecidedError(QPolyaError, ArithmeticError):
    """Numeric escalation ran out of precision budget."""

    code = "undecided"


class InconsistencyError(QPolyaError, AssertionError):
    """A mathematical claim that must hold was observed to fail."""

    code = "inconsistency"


class FormatError(QPolyaError, ValueError):
    code = "format_error"


class ParseError(QPolyaError, ValueError):
    code = "syntax_error"
    exit_code = 2

    def __init__(self, msg, pos):
        self.pos = pos
        super().__init__(f"{msg} at position {pos}")
