__package__ = 'chamberkit'

from typing import List, Optional, Tuple, Union


Hints = Union[str, List[str], Tuple[str, ...], None]


class ChamberkitError(Exception):
    """base class for every domain error, exits with code 2 at the cli"""

    exit_code = 2

    def __init__(self, message: str, hints: Hints=None):
        super().__init__(message)
        self.message = message
        self.hints = hints


class ParseError(ChamberkitError):
    exit_code = 1


class BasisMismatch(ChamberkitError):
    pass


class WrongBasis(ChamberkitError):
    pass


class NotARoot(ChamberkitError):
    pass


class NotReducible(ChamberkitError):
    pass


class DegenerateForm(NotReducible):
    """the descent ended on a boundary facet (some exceptional class has zero area)"""

    def __init__(self, message: str, form=None, trace=None, blow_downs=(), hints: Hints=None):
        super().__init__(message, hints=hints)
        self.form = form
        self.trace = trace
        self.blow_downs = tuple(blow_downs)


class NotReduced(ChamberkitError):
    pass


class NotNormalized(ChamberkitError):
    pass


class WrongK(ChamberkitError):
    pass


class OutOfRange(ChamberkitError):
    pass


class UnrecognizedDiagram(ChamberkitError):
    pass


class NotSimpleSystem(ChamberkitError):
    pass


class NotAdmissible(ChamberkitError):
    pass


class NotBalanced(ChamberkitError):
    pass


class TraceMismatch(ChamberkitError):
    pass


def hints_of(err: Exception) -> Optional[List[str]]:
    hints = getattr(err, 'hints', None)
    if not hints:
        return None
    if isinstance(hints, str):
        return [hints]
    return list(hints)
