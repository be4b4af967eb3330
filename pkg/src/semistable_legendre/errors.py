"""Exception taxonomy shared across the package.

CLI exit codes: UsageError -> 1, VerificationFailure -> 2, precision-class
errors -> 3.  Everything else is a plain bug and escapes as-is.
"""


class UsageError(ValueError):
    """Malformed input (bad lambda, unknown symbol, forbidden value)."""


class NotSquarefree(ValueError):
    """Modulus passed to adjoin() has a repeated factor; take squarefree_part first."""


class ZeroDivisorSplit(ArithmeticError):
    """A tower inversion exposed a factorization of a level modulus.

    Carries both factors; the caller restarts the computation in the branch
    selected by the numeric embedding (or a deterministic fallback).
    """

    def __init__(self, level_index, factor1, factor2):
        self.level_index = level_index
        self.factor1 = factor1
        self.factor2 = factor2
        super().__init__(
            f"modulus at tower level {level_index} split into "
            f"({factor1}) * ({factor2})"
        )


class AmbiguousValuation(ArithmeticError):
    """Newton polygon impure and numeric precision insufficient to decide."""


class NoCandidateMatch(ArithmeticError):
    """Residue of a unit lies outside the configured candidate lift set."""


class PrecisionExhausted(ArithmeticError):
    """2-adic working precision too small for the requested operation."""


class BelowPrecisionFloor(PrecisionExhausted):
    """Valuation of a numeric element is indistinguishable from 'dead'."""


class NoConvergence(ArithmeticError):
    """Newton iteration criterion violated for the given starting point."""


class NotASquare(ArithmeticError):
    """Element is not a square in the ambient 2-adic field.

    ``obstruction`` describes why ('odd-valuation', 'ramified-unit',
    'unramified'), which sqrt_adjoin uses to decide how the field must grow.
    """

    def __init__(self, message, obstruction=None):
        super().__init__(message)
        self.obstruction = obstruction


class EmbeddingUnavailable(ArithmeticError):
    """The numeric layer cannot present a field containing the tower.

    Raised loudly instead of silently mis-embedding; symbolic results are
    unaffected, only the numeric cross-check is skipped or fails.
    """


class DeltaValuationTooSmall(ValueError):
    """v(delta) below the admissibility bound 4m/3 + 8/3."""


class NonIntegralLambda(ValueError):
    """v(lambda) < 0 is rejected (out of scope)."""


class InvalidAlphaChoice(ValueError):
    """v(alpha) outside [2, m-2] in the large-valuation construction."""


class InvalidBetaChoice(ValueError):
    """beta override fails its valuation / squareness requirement."""


class PostconditionViolation(AssertionError):
    """A theorem-guaranteed valuation bound failed on a constructed model."""


class CuspDetected(ArithmeticError):
    """Both v(a1) > 0 and v(a3) > 0: reduced curve has a cusp (caller misuse)."""


class DegenerateSquareRoot(ZeroDivisionError):
    """Completing the square with F(0) = a6 (division by zero)."""


class VerificationFailure(AssertionError):
    """verify_model found discrepancies; carries the itemized list."""

    def __init__(self, failures):
        self.failures = list(failures)
        super().__init__("; ".join(str(f) for f in self.failures))
