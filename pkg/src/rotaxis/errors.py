"""Exception taxonomy shared across the package.

Every deliberate failure raises a subclass of RotaxisError, named after the
condition it reports, so callers can catch the whole family at once.
"""


class RotaxisError(Exception):
    """Base class for every error this package raises deliberately."""


class NotOrthogonal(RotaxisError):
    """Matrix failed orthogonality validation; carries the residual."""

    def __init__(self, residual, tol):
        self.residual = float(residual)
        self.tol = float(tol)
        super().__init__(
            f"max-norm of m^T m - I is {self.residual:.6e}, "
            f"exceeds tolerance {self.tol:.6e}"
        )


class WrongDeterminant(RotaxisError):
    """Operation requires the other determinant sign."""


class IdentityInput(RotaxisError):
    """Input is (plus or minus) the identity; the axis is not unique."""


class MethodInapplicable(RotaxisError):
    """A forced extraction method cannot produce an answer for this input."""


class DegenerateDenominator(RotaxisError):
    """Some off-diagonal pair sum a_ij + a_ji vanishes, so the reciprocal
    vector is undefined.  ``pairs`` lists the offending 1-based (i, j)."""

    def __init__(self, pairs):
        self.pairs = tuple(pairs)
        super().__init__(f"pair sums vanish for (i, j) in {self.pairs}")


class NotDegenerate(RotaxisError):
    """No off-diagonal pair sum is within the degeneracy tolerance."""


class InfeasibleParameters(RotaxisError):
    """Family parameters give a negative square or sit on an excluded
    boundary."""


class RankDeficient(RotaxisError):
    """All cofactor-matrix rows vanish: the eigenspace has dimension >= 2."""


class NotUnit(RotaxisError):
    """Quaternion is not unit length."""


class MinusOneEigenvalue(RotaxisError):
    """-1 is (nearly) an eigenvalue, so the skew-parameter transform has no
    finite representation."""


class ParallelReflections(RotaxisError):
    """Reflection directions are parallel; the product is the identity and
    carries no axis information."""


class EigenvalueTooClose(RotaxisError):
    """The complex eigenvalue pair sits too close to 1 for a contour to
    separate them."""


class NotUnitary(RotaxisError):
    """Complex matrix failed the unitarity / unit-determinant validation."""

    def __init__(self, residual, tol):
        self.residual = float(residual)
        self.tol = float(tol)
        super().__init__(
            f"unitarity residual {self.residual:.6e} exceeds {self.tol:.6e}"
        )


class NotAnEigenvalue(RotaxisError):
    """Supplied scalar is not within tolerance of an eigenvalue."""


class ZeroVector(RotaxisError):
    """Requested construction produced the zero vector (eigenvalue not
    simple)."""


class ZeroDivisor(RotaxisError):
    """Attempted to invert 0 in a prime field."""


class NotSpecialOrthogonalFp(RotaxisError):
    """Mod-p matrix does not satisfy m^T m = I and det m = 1."""


class DegenerateDenominatorFp(RotaxisError):
    """Some off-diagonal pair sum vanishes mod p."""

    def __init__(self, pairs):
        self.pairs = tuple(pairs)
        super().__init__(f"pair sums are 0 mod p for (i, j) in {self.pairs}")


class ModulusTooLarge(RotaxisError):
    """Modulus exceeds the enumeration bound for this operation."""


class NotOnCircle(RotaxisError):
    """a^2 + b^2 != 1 mod p."""
