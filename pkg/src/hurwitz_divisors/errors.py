"""Exception hierarchy shared by all modules."""


class DomainError(ValueError):
    """Input lies outside the numerical domain an operation is defined on."""


class ExclusionError(DomainError):
    """A case excluded by the theorem's hypotheses was requested."""


class PreconditionError(ValueError):
    pass


class EmptySearchError(DomainError):
    pass


class TieError(RuntimeError):
    """The weighted-sum argmax is not unique."""

    def __init__(self, message, candidates=()):
        super().__init__(message)
        self.candidates = tuple(candidates)


class MissingChainDataError(KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "missing chain data"
