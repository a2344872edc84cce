"""Exception hierarchy shared by all quartic modules.

Every domain failure raises a subclass of QuarticError so callers (and the
CLI) can distinguish usage mistakes from domain errors by type alone.
"""


class QuarticError(Exception):
    """Base class for all domain errors raised by this package."""


# --- numtheory ---

class InvalidModulus(QuarticError):
    """Modulus must be >= 2."""


class UndefinedGcd(QuarticError):
    """gcd(0, 0) is undefined."""


class NotInvertible(QuarticError):
    """Element shares a factor with the modulus."""


class ModuliNotCoprime(QuarticError):
    """CRT moduli must be coprime."""


class NotPrime(QuarticError):
    """A prime-only operation was handed a composite (probabilistic check)."""


class GenerationFailed(QuarticError):
    """Prime search exhausted its attempt budget."""


class NotAUnit(QuarticError):
    """Element is not invertible mod n, so it has no multiplicative order."""


class OrderNotFound(QuarticError):
    """Multiplicative order exceeds the requested cap."""


# --- quartic_core ---

class NoQuarticStructure(QuarticError):
    """p != 1 (mod 4): only +-1 solve x^4 = 1, no quartic kernel."""


class PrimesNotDistinct(QuarticError):
    """Composite modulus needs two distinct primes."""


class NoGenerator(QuarticError):
    """No element of multiplicative order exactly 4 was found."""


class ExponentUnavailable(QuarticError):
    """No integer a makes (a*totient + 4)/16 an integer."""


class MessageNotUnit(QuarticError):
    """Message is 0 or shares a factor with the modulus (refused; the
    factor is deliberately not reported)."""


class NotAQuarticResidue(QuarticError):
    """Extracted candidate does not fourth-power back to the cipher."""


class RankOutOfRange(QuarticError):
    """Envelope rank outside 1..|unity_roots|."""


# --- group_events ---

class NotSixteenRoots(QuarticError):
    """Group partition requires exactly sixteen roots of unity."""


# --- protocol ---

class SessionStateError(QuarticError):
    """Session method called in the wrong state."""


class FormatSyntaxError(QuarticError):
    """Malformed line or field in a serialized artifact."""


class InvariantViolation(QuarticError):
    """Well-formed text whose values break a type invariant."""


# --- oracle ---

class OracleBound(QuarticError):
    """Input too large for an exhaustive-scan oracle."""
