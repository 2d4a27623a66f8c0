"""Exception hierarchy shared by all diffalg modules."""


class DiffalgError(Exception):
    """Base class for all errors raised by diffalg."""


# --- field towers ---

class NonConstantAlpha(DiffalgError):
    """An inseparable layer's p-th power target is not a constant."""


class ConstantFieldTooLarge(DiffalgError):
    """ker(delta) has dimension > 1 over the declared constant field."""


class UnsupportedCombination(DiffalgError):
    """Tower description mixes features that cannot coexist."""


class InfiniteDimension(DiffalgError):
    """Operation requires K to be finite dimensional over its constants."""


# --- Ore arithmetic ---

class ContextMismatch(DiffalgError):
    """Operands live over different field towers."""


class DivisionByZero(DiffalgError):
    """Division (or remainder) by the zero polynomial."""


# --- Petit algebras ---

class ZeroModulus(DiffalgError):
    """Attempt to build S_f with f = 0."""


class AlgebraMismatch(DiffalgError):
    """Elements belong to different Petit algebras."""


# --- nucleus computations ---

class AnsatzRequired(DiffalgError):
    """Infinite-dimensional case needs an explicit ansatz configuration."""


class InconsistentAnsatz(DiffalgError):
    """Ansatz configuration is unusable (e.g. zero denominator)."""


class InternalInconsistency(DiffalgError):
    """A structural identity that must hold was violated; implementation bug."""


class NotClosed(DiffalgError):
    """Subspace is not closed under the algebra product."""


# --- characteristic p ---

class WrongCharacteristic(DiffalgError):
    """Operation only defined in positive (or zero) characteristic."""


class NonConstantD0(DiffalgError):
    """The shift d0 of a differential extension must be a constant."""


class ZeroPolynomial(DiffalgError):
    """Operation undefined for the zero polynomial."""


class UnsatisfiedHypothesis(DiffalgError):
    """Scenario parameters violate a required inequality."""


# --- pseudo-linear transformations ---

class NotMonic(DiffalgError):
    """A monic polynomial was required."""


class NoCyclicVectorFound(DiffalgError):
    """Cyclic-vector sweep exhausted without success."""


class DegreeMismatch(DiffalgError):
    """Similarity requires both polynomials to have the same degree."""


# --- session / CLI ---

class SessionSyntaxError(DiffalgError):
    """Parse error in the session language, with source location."""

    def __init__(self, line, col, expected):
        self.line = line
        self.col = col
        self.expected = expected
        super().__init__(f"line {line}, col {col}: expected {expected}")


class SessionTypeError(DiffalgError):
    """Well-formed session text with an ill-typed construct."""
