"""Exception types raised across the package."""


class ShellabError(ValueError):
    pass


class CycleDetected(ShellabError):
    pass


class RedundantCover(ShellabError):
    pass


class NotBounded(ShellabError):
    pass


class NotComparable(ShellabError):
    pass


class UnknownElement(ShellabError):
    pass


class NotRanked(ShellabError):
    pass


class LabelingError(ShellabError):
    pass


class MissingLabel(LabelingError):
    pass


class NotADescent(ShellabError):
    pass


class NotANonCover(ShellabError):
    pass


class NotALattice(ShellabError):
    pass


class NotALinearExtension(ShellabError):
    pass


class ShapeMismatch(ShellabError):
    pass


class NotFromBottom(ShellabError):
    pass


class UnknownFixture(ShellabError):
    pass
