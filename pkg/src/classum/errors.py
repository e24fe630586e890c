"""Error types shared across the package."""


class PreconditionError(ValueError):
    """An operation was invoked outside its stated domain."""


class InternalInconsistencyError(RuntimeError):
    """Two independent computation routes disagreed.

    This signals a bug in the package, never a failed congruence: verifiers
    report a false congruence through their ``holds`` field instead.
    """
