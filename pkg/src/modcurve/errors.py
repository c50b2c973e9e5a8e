"""Shared exception types for the verification pipelines."""


class VerificationError(Exception):
    """A machine-checked claim failed; the pipeline must report FAIL."""


class InconclusiveError(Exception):
    """A check could not be decided by the implemented method; the report
    must flag this loudly instead of asserting either way."""


class EnvelopeError(NotImplementedError):
    """A computation left the envelope the pipelines are specified for
    (e.g. factorization over Q beyond the bounded degrees needed here)."""
