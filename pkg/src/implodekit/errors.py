"""Exception hierarchy.  Everything derives from ``ValueError`` so callers that
only care about bad input can catch one thing."""


class ImplodeKitError(ValueError):
    pass


class InvalidRootDatum(ImplodeKitError):
    pass


class NotDominant(ImplodeKitError):
    pass


class NotInChamber(NotDominant):
    pass


class WeylGroupCapExceeded(ImplodeKitError):
    pass


class InvalidGroupElement(ImplodeKitError):
    pass


class InvalidSample(ImplodeKitError):
    pass
