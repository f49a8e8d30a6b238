"""Exception types shared across the package."""


class MalformedInputError(ValueError):
    """Input violates a structural contract (lengths, counts, integrality)."""


class EmptyPolyhedronError(ValueError):
    """An operation needs a point of a polyhedron that has none."""


class GenericityError(RuntimeError):
    """A perturbation vector failed verification, or retries ran out."""


class NotPureError(ValueError):
    """A complex has cells of different dimensions."""
