"""
Exception hierarchy shared by the core modules, the ``fan`` management
command and the HTTP views.

Input errors map to CLI exit code 2 / HTTP 400, precondition violations
to exit code 3 / HTTP 422. Any other domain error, such as a failed
internal identity, maps to exit code 4 / HTTP 500.
"""

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_PRECONDITION = 3
EXIT_INTERNAL = 4


class TropicalError(Exception):
    exit_code = EXIT_INTERNAL
    status_code = 500
    default_detail = "Computation failed."

    def __init__(self, detail=None):
        self.detail = detail or self.default_detail
        super().__init__(self.detail)


class InputError(TropicalError):
    exit_code = EXIT_INPUT_ERROR
    status_code = 400
    default_detail = "Invalid input."


class PreconditionError(TropicalError):
    exit_code = EXIT_PRECONDITION
    status_code = 422
    default_detail = "Precondition violated."


class AccountingMismatch(TropicalError):
    default_detail = "Internal intersection bookkeeping does not balance."


# input errors

class ZeroVector(InputError):
    default_detail = "The zero vector has no primitive direction."


class DegenerateSimplex(InputError):
    default_detail = "Simplex vertices are affinely dependent."


class DuplicateLine(InputError):
    default_detail = "The arrangement contains the same line twice."


class AllConcurrent(InputError):
    default_detail = "All lines of the arrangement pass through one point."


class InconsistentIncidence(InputError):
    default_detail = "Point sets do not form the intersection lattice of a line arrangement."


class DimensionMismatch(InputError):
    default_detail = "Dimensions of the inputs do not agree."


class BadParameters(InputError):
    default_detail = "Parameters violate the pathological simplex constraints."


class NonGenericLifts(InputError):
    default_detail = "Lifts do not induce a triangulation."


class EmptySupport(InputError):
    default_detail = "No lattice point of the simplex carries a lift."


class TooManyRays(InputError):
    default_detail = "Curve has too many rays for the irreducibility search."


class WeightTooLarge(InputError):
    default_detail = "Curve is too heavy for the irreducibility search."


class NotTrivalent(InputError):
    default_detail = "Curve must have two or three rays."


class MalformedRegion(InputError):
    default_detail = "Polygon pair does not describe a corner region."


class SchemaError(InputError):
    default_detail = "Document does not match its schema."


class UnbalancedCurve(InputError):
    default_detail = "Weighted ray directions do not sum to zero."


# precondition violations

class CurveNotInFan(PreconditionError):
    default_detail = "Curve is not contained in the plane fan."


class NonIntegralDegree(PreconditionError):
    default_detail = "Degree evaluates to a non-integer."


class OrderingDoesNotCover(PreconditionError):
    default_detail = "A ray converging to the corner lies outside the chosen faces."


class NotAtCorner(PreconditionError):
    default_detail = "Ordering indices are not lines through the corner."


class CombinatorialModeOnly(PreconditionError):
    default_detail = "Operation needs line coordinates, arrangement is combinatorial."


class DegreeTooSmall(PreconditionError):
    default_detail = "Hessian bound needs a curve of degree at least 2."


class ReducibleImage(PreconditionError):
    default_detail = "Image of the morphism is reducible."


class ReducibleCurve(PreconditionError):
    default_detail = "Curve is reducible."


class DegreeNotOne(PreconditionError):
    default_detail = "Curve does not have degree 1."


class NotRHShape(PreconditionError):
    default_detail = "Plane is not a union of half-planes glued along one line."
