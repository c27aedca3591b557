# Engine/utils/errors.py
"""
Exception hierarchy for the engine.

Every error carries a human readable ``detail`` and the process exit code the
CLI maps it to. Precondition failures also derive from ``ValueError`` so plain
library callers can catch them without importing this module.
"""
from __future__ import annotations

from typing import Any, Dict, Optional


class MagmaForgeError(Exception):
    exit_code: int = 5

    def __init__(self, detail: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(detail)
        self.detail = detail
        self.context: Dict[str, Any] = dict(context or {})


# -----------------------------------------------------------
# Parsing (exit 2)
# -----------------------------------------------------------
class ParseError(MagmaForgeError, ValueError):
    exit_code = 2

    def __init__(self, detail: str, position: int, text: str = ""):
        super().__init__(f"{detail} at position {position}", {"position": position, "text": text})
        self.reason = detail
        self.position = position


class UnknownSymbolError(ParseError):
    def __init__(self, symbol: str, position: int = 0, text: str = ""):
        super().__init__(f"unknown symbol {symbol!r}", position, text)
        self.symbol = symbol


# -----------------------------------------------------------
# Resource limits (exit 3)
# -----------------------------------------------------------
class BudgetExceededError(MagmaForgeError):
    exit_code = 3

    def __init__(self, what: str, size: int, budget: int):
        super().__init__(
            f"{what} would hold {size} monomials, over the budget of {budget}",
            {"size": size, "budget": budget},
        )
        self.size = size
        self.budget = budget


# -----------------------------------------------------------
# Hypothesis / precondition violations (exit 4)
# -----------------------------------------------------------
class HypothesisViolationError(MagmaForgeError, ValueError):
    exit_code = 4


class AlphabetMismatchError(HypothesisViolationError):
    pass


class DegreeMismatchError(HypothesisViolationError):
    pass


class ArityError(HypothesisViolationError):
    pass


class ZeroPolynomialError(HypothesisViolationError):
    pass


class InhomogeneousInputError(HypothesisViolationError):
    pass


class DuplicateInputError(HypothesisViolationError):
    pass


class BoundTooSmallError(HypothesisViolationError):
    pass


class UncoveredIndeterminateError(HypothesisViolationError):
    pass


# -----------------------------------------------------------
# Internal invariants (exit 5)
# -----------------------------------------------------------
class InvariantFailure(MagmaForgeError):
    exit_code = 5
