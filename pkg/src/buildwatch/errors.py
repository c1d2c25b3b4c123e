"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: usage/configuration problems exit 2,
data problems exit 3, numerical failures exit 4.
"""


class ShapeError(ValueError):
    """Operand shapes or element kinds violate an operation's contract."""


class ConfigError(ValueError):
    """A configuration value is invalid or inconsistent with the data."""


class DataError(ValueError):
    """An on-disk sample, mask, or manifest record is malformed."""


class NumericsError(ArithmeticError):
    """A computation produced NaN/Inf or failed a numerical check."""
