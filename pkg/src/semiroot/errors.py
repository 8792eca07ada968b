"""Exception types shared across the package."""


class SemirootError(ValueError):
    """Base class for all validation and domain errors."""


class DimensionMismatchError(SemirootError):
    """Vectors of different ambient dimensions were mixed."""


class EmptyGeneratorsError(SemirootError):
    """A semigroup needs at least one generator."""


class NegativeEntryError(SemirootError):
    """Generators must lie in the nonnegative orthant."""


class ZeroGeneratorError(SemirootError):
    """The zero vector is a member by definition, never a generator."""


class NotSimplicialError(SemirootError):
    """No element on some coordinate axis, so axis data does not exist."""

    def __init__(self, axis: int):
        self.axis = axis
        super().__init__(f"no generator on coordinate axis {axis}")


class NotStandardError(SemirootError):
    """Operation requires standard simplicial position; input fails the checks."""


class NotNumericalError(SemirootError):
    """Operation requires a rank-1 semigroup with finite complement in N."""


class NotRealizableError(SemirootError):
    """No Gorenstein numerical semigroup has the given stabilizer monoid."""


class BoundMismatchError(SemirootError):
    """Fingerprints taken at different windows cannot be compared."""


class NoRootsError(SemirootError):
    """The root table is trivial at the requested degree."""
