"""Exception hierarchy shared across the toolkit."""


class BringError(Exception):
    """Base class for all toolkit errors."""


class ReducibleDefiningPolynomial(BringError):
    """The proposed defining polynomial factors over the base field."""


class DivisionByZero(BringError):
    pass


class IncompatibleFields(BringError):
    """Operands live in fields with no coercion path between them."""


class PrecisionUnachievable(BringError):
    """Numeric refinement failed to reach the requested precision."""


class DimensionMismatch(BringError):
    pass


class IndeterminatePoint(BringError):
    """A rational map was evaluated on its base locus without branch data."""


class OffCurve(BringError):
    pass


class NotOnQuadric(BringError):
    pass


class TruncationTooShort(BringError):
    """A local series is too short to certify the requested valuation."""


class UnknownIdentity(BringError):
    pass


class UnknownCase(BringError):
    pass


class UnknownSuite(BringError):
    pass


class ClosureOverflow(BringError):
    """Group closure exceeded the expected size; a realization is broken."""


class NonIntegerGenus(BringError):
    """Riemann-Hurwitz bookkeeping produced a non-integer genus."""


class BadIndices(BringError):
    pass


class DegenerateIntersection(BringError):
    pass


class ContactOrderUnexpected(BringError):
    """An osculating plane did not meet the curve with the expected order."""


class UnmatchedRoot(BringError):
    pass


class SheetCollision(BringError):
    """Analytic continuation lost track of sheet separation."""


class InconsistentMonodromy(BringError):
    pass


class RankDeficient(BringError):
    pass


class IntegrationNotConverged(BringError):
    pass


class NotEquivalent(BringError):
    """No symplectic transformation was found within the search bound."""


class RoundingNotIntegral(BringError):
    """A matrix expected to be integral failed the rounding tolerance."""


class PathThroughBranchPoint(BringError):
    pass


class AmbiguousCandidate(BringError):
    pass


class NoCandidate(BringError):
    pass


class NotSymplectic(BringError):
    pass


class NotUnique(BringError):
    pass


class NotHalfCanonical(BringError):
    pass


class RoundingAmbiguous(BringError):
    pass


class SingularModel(BringError):
    pass


class NoRootInBracket(BringError):
    pass


class QuadratureNotConverged(BringError):
    pass


class RiemannRelationsFail(BringError):
    """Riemann bilinear relations failed for a candidate period matrix."""


class NetworkUnavailable(BringError):
    pass


class NoMatch(BringError):
    pass


class InconsistentCatalog(BringError):
    pass


class CheckFailed(BringError):
    pass


class CacheCorrupt(BringError):
    pass


class PrecisionRegression(BringError):
    """Refused to overwrite cached data computed at higher precision."""
