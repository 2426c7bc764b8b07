"""Exception hierarchy shared by every module of the package."""


class PadicPairsError(Exception):
    """Base class for all errors raised by :mod:`padicpairs`."""


class DomainError(PadicPairsError, ValueError):
    """An operation was applied outside its mathematical domain."""


class IndeterminateError(PadicPairsError):
    """A result could not be certified at the available precision or bound.

    ``reached`` records how far the computation went (a precision exponent
    or a search bound), ``knob`` names the setting to raise.
    """

    def __init__(self, message, reached=None, knob="precision"):
        super().__init__(message)
        self.reached = reached
        self.knob = knob


class ConfigError(PadicPairsError, ValueError):
    """Ambient parameters violate a normalization invariant."""


class DependenceError(ConfigError):
    """The two generators are multiplicatively dependent."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class FormulaSyntaxError(PadicPairsError, ValueError):
    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnsupportedFragmentError(PadicPairsError):
    """The input lies outside the fragment handled by the procedure."""


class BudgetError(PadicPairsError):
    """An enumeration would exceed its configured work ceiling.

    ``hint`` says which setting to change.
    """

    def __init__(self, message, hint=None):
        super().__init__(message)
        self.hint = hint
