"""Exception hierarchy shared across the package."""


class TbhError(Exception):
    """Base class for all package errors."""


class NegativeRadicand(TbhError):
    """Square root of a negative rational was requested.

    The seminormal construction guarantees nonnegative radicands, so this
    always indicates an upstream bug rather than bad user input.
    """


class DimensionMismatch(TbhError):
    """Matrix operands have incompatible dimensions."""


class NotInP(TbhError):
    """Partition is not in the rectangle-pair set P."""


class NotInP1(TbhError):
    """Partition is not in P_1 (one box added to a member of P)."""


class NotInPk(TbhError):
    """Partition is not in P_k for the given strand count."""


class IndexOutOfRange(TbhError):
    """Tableau position index outside 0..k."""


class VertexNotFound(TbhError):
    """Requested vertex is absent from the Bratteli diagram."""


class UnassignedGenerator(TbhError):
    """A word mentions a generator with no matrix assignment or definition."""


class CriterionFailure(TbhError):
    """One of the six seminormal entry criteria failed."""

    def __init__(self, item, message):
        super().__init__(f"criterion ({item}): {message}")
        self.item = item


class RelationFailure(TbhError):
    """A defining relation failed on concrete matrices."""

    def __init__(self, name, deviation):
        super().__init__(f"relation {name} failed (max deviation {deviation})")
        self.name = name
        self.deviation = deviation


class DistinctnessFailure(TbhError):
    """Two basis tableaux share a shifted-content list."""


class ConnectivityFailure(TbhError):
    """The move word connecting a tableau to the distinguished one broke down."""


class CapExceeded(TbhError):
    """A desk-scale cap of the tensor oracle was exceeded."""


class HeightExceeded(TbhError):
    """Partition height exceeds the number of matrix rows n."""


class FactorOutOfRange(TbhError):
    """Tensor-factor index outside the carrier layout."""


class CommutantFailure(TbhError):
    """An operator failed to commute with the gl_n action."""


class SpectrumMismatch(TbhError):
    """Observed spectrum disagrees with the combinatorial prediction."""
