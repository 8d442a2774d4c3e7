"""Exception hierarchy shared by all modules.

The CLI maps these onto its stable exit codes: parse errors exit 2,
precision exhaustion exits 3, domain errors exit 4, I/O errors exit 5.
"""


class OstroError(Exception):
    """Base class for all library errors."""


class DomainError(OstroError):
    """Input is outside an operation's mathematical domain."""


class RationalInputError(DomainError):
    """A continued-fraction source turned out to describe a rational number."""


class PrecisionError(OstroError):
    """A certified answer cannot be produced at the available precision.

    Also raised when a partial-quotient request exceeds a source's horizon.
    """


class FactorBudgetError(DomainError):
    """Factoring stopped with a composite cofactor beyond the trial budget."""


class IllegalExpansionError(DomainError):
    """A digit string violates the Ostrowski legality constraints."""


class SearchCapError(OstroError):
    """A bounded search exhausted its cap without finding a witness."""


class CheckFailedError(OstroError):
    """A certified runtime bound check did not hold."""


class SpecParseError(OstroError, ValueError):
    """An alpha/gamma specification string failed to parse."""
