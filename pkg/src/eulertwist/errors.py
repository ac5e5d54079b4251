"""Exception hierarchy shared by all modules."""


class EulerTwistError(Exception):
    """Base class for every error raised by the library."""


# scalars
class InversionOfNoninvertible(EulerTwistError, ZeroDivisionError):
    pass


class FieldMismatch(EulerTwistError, ValueError):
    pass


class SingularMatrix(EulerTwistError, ValueError):
    pass


# freealg
class AmbientMismatch(EulerTwistError, ValueError):
    pass


class ShapeMismatch(EulerTwistError, ValueError):
    pass


class UnspecializedParameter(EulerTwistError, ValueError):
    pass


# bilinear
class NotAnSOD(EulerTwistError, ValueError):
    pass


class DegenerateSubspace(EulerTwistError, ValueError):
    pass


class Inapplicable(EulerTwistError, ValueError):
    """The requested check falls outside the hypotheses it is stated under."""


# quiverk0
class UnsupportedQuiver(EulerTwistError, ValueError):
    pass


# functorcat
class IndexSetMismatch(EulerTwistError, ValueError):
    pass


class NonCommutingCube(EulerTwistError, ValueError):
    pass


class CriterionUnavailable(EulerTwistError, ValueError):
    pass


class NotAChainMap(EulerTwistError, ValueError):
    pass


# cli
class SchemaError(EulerTwistError, ValueError):
    pass
