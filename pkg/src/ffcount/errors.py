"""Exception hierarchy for ffcount."""

from typing import Optional


class FFCountError(Exception):
    """Base exception for ffcount errors."""
    pass


class FieldError(FFCountError):
    """Raised when a field cannot be built or an element does not belong to it."""
    pass


class NotInvertibleError(FieldError):
    """Raised for inv(0), division by zero and dlog(0)."""
    pass


class PreconditionError(FFCountError):
    """Raised when a closed-form operation's hypotheses do not hold.
    
    ``reason`` is a short machine-readable code (``not_diagonal``,
    ``unequal_character_classes``, ...); ``detail`` is free text.
    """
    
    def __init__(self, message: str, reason: str, detail: Optional[str] = None) -> None:
        super().__init__(message)
        self.reason = reason
        self.detail = detail


class AdmissibilityError(PreconditionError):
    """Raised when an exponent is outside the domain of the admissibility test."""
    
    def __init__(self, message: str, d: int) -> None:
        super().__init__(message, reason="exponent_too_small")
        self.d = d


class EquivalenceError(PreconditionError):
    """Raised when two polynomials cannot be compared for *-equivalence."""
    pass


class BudgetExceededError(FFCountError):
    """Raised when an enumeration would exceed its configured budget."""
    
    def __init__(self, message: str, required: int, budget: int) -> None:
        super().__init__(message)
        self.required = required
        self.budget = budget
        self.reason = "budget_exceeded"


class ResidualError(FFCountError):
    """Raised when a floating-point count is too far from an integer."""
    
    def __init__(self, message: str, value: complex, residual: float) -> None:
        super().__init__(message)
        self.value = value
        self.residual = residual
        self.reason = "residual_exceeded"


class ConfigError(FFCountError):
    """Raised when a configuration value from the environment is unusable."""
    pass


class ParseError(FFCountError):
    """Raised when a polynomial expression does not match the grammar."""
    
    def __init__(self, message: str, text: str, position: int) -> None:
        super().__init__(message)
        self.text = text
        self.position = position
    
    def caret(self) -> str:
        """Render the source with a caret under the offending position."""
        return f"{self.text}\n{' ' * self.position}^ {self.args[0]}"


class DegenerateCharacterWarning(UserWarning):
    """Issued when a Gauss sum is requested for the trivial character."""
    pass
