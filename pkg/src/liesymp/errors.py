"""Exception hierarchy.

Every rejection of bad input raises a subclass of ValidationError carrying
enough context (basis triple, minor index, ...) to locate the offending
entry without re-running the check by hand.
"""


class LiesympError(Exception):
    """Base class for everything raised on purpose by this package."""


class ValidationError(LiesympError):
    """Input data fails one of the structural axioms."""


class DimensionMismatch(ValidationError):
    pass


class JacobiViolation(ValidationError):
    """Jacobi identity fails; args carry the basis triple (i, j, k)."""

    def __init__(self, i, j, k, residual=None, names=None):
        self.triple = (i, j, k)
        self.residual = residual
        if names is not None:
            shown = f"({names[i]}, {names[j]}, {names[k]})"
        else:
            shown = f"({i}, {j}, {k})"
        msg = f"Jacobi identity fails on basis triple {shown}"
        if residual is not None:
            msg += f": residual {residual}"
        super().__init__(msg)


class NotSkewSymmetric(ValidationError):
    pass


class DegenerateForm(ValidationError):
    pass


class CocycleViolation(ValidationError):
    """d(omega) != 0; args carry the basis triple (i, j, k)."""

    def __init__(self, i, j, k, value=None, names=None):
        self.triple = (i, j, k)
        self.value = value
        if names is not None:
            shown = f"({names[i]}, {names[j]}, {names[k]})"
        else:
            shown = f"({i}, {j}, {k})"
        msg = f"2-cocycle condition fails on basis triple {shown}"
        if value is not None:
            msg += f": d-omega value {value}"
        super().__init__(msg)


class NotAlmostComplex(ValidationError):
    """J*J != -Id."""


class NotCompatible(ValidationError):
    """omega(J., J.) != omega(., .)."""


class NotPositive(ValidationError):
    """The induced symmetric form is not positive definite.

    `minor_index` is the size k of the first leading principal minor that
    fails Sylvester's criterion, `minor_value` its exact determinant.
    """

    def __init__(self, minor_index, minor_value):
        self.minor_index = minor_index
        self.minor_value = minor_value
        super().__init__(
            f"induced metric not positive definite: leading {minor_index}x"
            f"{minor_index} minor = {minor_value}"
        )


class SingularGram(ValidationError):
    """Gram matrix handed to `complement` is singular on the subspace."""


class PerfectAlgebra(ValidationError):
    """Algebra has no nonzero characters ([g,g] = g)."""


class ZeroCharacter(ValidationError):
    pass


class NotACharacter(ValidationError):
    """Functional does not vanish on the derived subalgebra."""


class Unsatisfiable(ValidationError):
    """No model with the requested invariants exists."""


class SerializationError(LiesympError):
    """Malformed JSON payloads, including any float contamination."""


class InternalInvariantViolation(LiesympError):
    """A cross-check between two independent computations disagreed.

    This is never a user error: it means one of the implementations is
    wrong and the result cannot be trusted.
    """
