"""Exception hierarchy for sbmtest."""


class SbmTestError(Exception):
    """Base class for all sbmtest errors."""


class ConfigurationError(SbmTestError):
    """Invalid parameters or mismatched dimensions."""


class DegenerateCommunityError(SbmTestError):
    """A community is empty or too small for the requested estimate."""


class ClusteringError(SbmTestError):
    """Spectral clustering could not produce the requested number of
    nonempty clusters after all restarts."""


class DegenerateBootstrapError(SbmTestError):
    """Bootstrap replicate eigenvalues have zero spread."""


class NumericalError(SbmTestError):
    """An eigensolver or root finder failed to converge."""


class EdgeListParseError(SbmTestError):
    """Malformed edge-list input."""


class AlignmentError(SbmTestError):
    """The two networks cannot be aligned on a common node set."""
