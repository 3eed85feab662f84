"""Exception types shared across the package.

The CLI maps ConfigError to exit code 1 and everything else to exit code 2.
"""


class ConfigError(ValueError):
    """Invalid configuration: bad values, unknown keys, shape mismatches."""


class UsageError(RuntimeError):
    """API misuse, e.g. stepping a terminated environment without reset."""


class TrainingError(RuntimeError):
    """Training-time failure: empty data sets, non-finite numbers."""


class PersistError(RuntimeError):
    """Unreadable, corrupt, or version-incompatible artifact files."""
