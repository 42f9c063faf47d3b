"""Exception hierarchy shared by every module of the package."""


class HallError(Exception):
    """Base class for all errors raised by hallmatch."""


class DuplicateIndex(HallError, ValueError):
    def __init__(self, index):
        super().__init__(f"duplicate index {index!r}")
        self.index = index


class UnknownIndex(HallError, LookupError):
    def __init__(self, index):
        super().__init__(f"unknown index {index!r}")
        self.index = index


class UnknownElement(HallError, ValueError):
    def __init__(self, element, index=None):
        where = "" if index is None else f" (in set of index {index!r})"
        super().__init__(f"element {element!r} is outside the declared universe{where}")
        self.element = element
        self.index = index


class CapExceeded(HallError, ValueError):
    """An exhaustive routine was asked to work above its size cap."""

    def __init__(self, what, size, cap, hint=""):
        msg = f"{what}: size {size} exceeds cap {cap}"
        if hint:
            msg += f"; {hint}"
        super().__init__(msg)
        self.size = size
        self.cap = cap


class PreconditionViolated(HallError, ValueError):
    pass


class SelfLoop(HallError, ValueError):
    def __init__(self, vertex):
        super().__init__(f"self-loop at vertex {vertex!r}")
        self.vertex = vertex


class UnknownVertex(HallError, LookupError):
    def __init__(self, vertex):
        super().__init__(f"unknown vertex {vertex!r}")
        self.vertex = vertex


class InvalidColoring(HallError, ValueError):
    def __init__(self, reason, at=None):
        super().__init__(reason)
        self.at = at


class FpropViolation(HallError, ValueError):
    """Some x in level n+1 is not sent into level n by the step map."""

    def __init__(self, level, element):
        super().__init__(
            f"level compatibility fails: element {element!r} of level {level + 1} "
            f"does not step into level {level}"
        )
        self.level = level
        self.element = element


class HorizonExceeded(HallError, ValueError):
    def __init__(self, level, lookahead, horizon):
        super().__init__(
            f"level {level} with lookahead {lookahead} reaches past horizon {horizon}"
        )
        self.level = level
        self.lookahead = lookahead
        self.horizon = horizon
