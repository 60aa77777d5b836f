"""Exception classes shared across the package."""


class FormatError(ValueError):
    """A file could not be parsed (malformed row, bad token, missing header)."""


class DimensionError(ValueError):
    """Inputs have inconsistent or unsupported dimensions."""


class NumericalError(RuntimeError):
    """A numerical routine failed to converge or hit its iteration budget."""
