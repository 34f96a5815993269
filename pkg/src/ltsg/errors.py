"""Exception hierarchy shared across the package.

Two broad families matter to callers: ``UsageError`` for bad parameters or
invalid requests (CLI exit code 1) and ``DataError`` for unreadable, malformed
or inconsistent data (CLI exit code 2).
"""


class LtsgError(Exception):
    """Base class for all package errors."""


class UsageError(LtsgError):
    """Invalid parameter combination or request."""


class DataError(LtsgError):
    """Input data is missing, unreadable, malformed or inconsistent."""


class EmptyVocabularyError(DataError):
    """No word survived frequency filtering."""


class BundleFormatError(DataError):
    """A model bundle file is missing, truncated or unparsable."""


class BundleVersionError(DataError):
    """The bundle was written by an incompatible format version."""


class DimensionMismatchError(DataError):
    """Bundle components disagree on W, K, M or d."""
