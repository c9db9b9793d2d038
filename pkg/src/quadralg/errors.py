"""Exception hierarchy shared by all quadralg modules."""


class QuadralgError(Exception):
    """Base class for all library errors."""


class DivisionByZero(QuadralgError, ZeroDivisionError):
    pass


class PoleAtPoint(QuadralgError):
    pass


class ZeroInput(QuadralgError):
    pass


class ParseError(QuadralgError):
    pass


class CtxMismatch(QuadralgError):
    pass


class DimensionMismatch(QuadralgError):
    pass


class ZeroSlot(QuadralgError):
    pass


class IsotropicVector(QuadralgError):
    pass


class DegenerateForm(QuadralgError):
    pass


class SquareParameter(QuadralgError):
    pass


class ProductConstraintViolated(QuadralgError):
    pass


class NotAnisotropic(QuadralgError):
    pass


class AlgebraMismatch(QuadralgError):
    pass


class NormZero(QuadralgError):
    pass


class IsotropicSkew(QuadralgError):
    pass


class ResultNotSkew(QuadralgError):
    pass


class NotIdempotent(QuadralgError):
    pass


class NotConnecting(QuadralgError):
    pass


class DecompositionFailed(QuadralgError):
    pass


class IdentityFailed(QuadralgError):
    """An identity check failed; carries the identity name and a witness."""

    def __init__(self, name, witness=None):
        super().__init__(f"identity {name!r} failed" + ("" if witness is None else f" at {witness!r}"))
        self.name = name
        self.witness = witness


class AxiomFailed(IdentityFailed):
    pass


class Hypothesis1Failed(QuadralgError):
    pass


class Hypothesis2Witness(QuadralgError):
    pass


class D2Witness(QuadralgError):
    pass


class NotQuadraticPair(QuadralgError):
    pass


class AnisotropyWitness(QuadralgError):
    pass


class MismatchAgainstExample(QuadralgError):
    pass


class ConfigParseError(QuadralgError):
    pass


class ConstructionError(QuadralgError):
    pass


class VerificationFailure(QuadralgError):
    pass
