"""Exception taxonomy shared by all modules.

The command-line layer maps these onto process exit codes; library callers
can catch them individually.
"""

from __future__ import annotations


class InputError(ValueError):
    """Caller-supplied data is invalid (bad generators, wrong parent, ...)."""


class ResourceError(RuntimeError):
    """A configured size or search bound was exceeded."""


class HypothesisNotMet(Exception):
    """A check's mathematical hypotheses do not hold for the given group."""


class TheoremViolation(Exception):
    """A verified claim failed on a concrete group.

    Carries the computed evidence so reports can show exactly what broke.
    """

    def __init__(self, message: str, evidence=None):
        super().__init__(message)
        self.evidence = evidence


class ConsistencyError(RuntimeError):
    """Two provably-equivalent computations disagreed: an internal bug."""


class NotNilpotent(InputError):
    """The lower central series stabilised above the trivial subgroup."""
