"""Exception types raised across the package."""


class RlabError(Exception):
    """Base class for all library errors."""


class SystemSpecError(RlabError, ValueError):
    """A Coxeter system specification is not finite crystallographic."""


class NotComparableError(RlabError, ValueError):
    """A precondition of the form ``u <= w`` (Bruhat or P-Bruhat) failed."""


class ModelSearchError(RlabError):
    """Richardson-model search did not reach a P-Bruhat pair."""


class ReflectionOrderError(RlabError, ValueError):
    """A reflection order has the wrong placement or is not valid."""


class ComplexError(RlabError, ValueError):
    """A simplicial-complex operation received an unsuitable complex or face."""


class DegreeBoundExceeded(RlabError):
    """A Groebner computation needed S-pairs beyond the working degree bound."""
