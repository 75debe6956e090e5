"""Exception types shared across the toolkit.

Everything raised on a mathematical or usage precondition derives from
SympairError so the CLI can map failures to structured error reports.
"""


class SympairError(Exception):
    pass


class NonRationalSpectrum(SympairError):
    """A characteristic polynomial has roots outside the rationals."""


class NotSemisimple(SympairError):
    """Jordan-part extraction failed; the input is outside the supported class."""


class NotASubalgebra(SympairError):
    """A subspace used where bracket closure is required is not closed."""


class RadicalVerificationFailed(SympairError):
    """The computed radical candidate failed its solvability certificate."""


class NilradicalVerificationFailed(SympairError):
    """The computed nilradical candidate failed nilpotency or ideal checks."""


class FormNotInvariant(SympairError):
    """A bilinear form is not invariant under the bracket."""


class FormDegenerate(SympairError):
    """A bilinear form required to be nondegenerate has a kernel."""


class ValidationError(SympairError):
    """Structural invariants of an algebra or pair do not hold."""


class AdjointNotInK(SympairError):
    """The semisimple part of an adjoint operator is not realized inside k."""


class BaseCaseUnsupported(SympairError):
    """The polarization recursion bottomed out in an unhandled configuration."""


class NotInvariant(SympairError):
    """An operation restricted to invariant elements got a non-invariant one."""


class VariableCountMismatch(SympairError):
    """Two polynomial objects over different variable counts were combined."""


class ParseError(SympairError):
    """Input document or command argument could not be parsed."""


class UsageError(SympairError):
    """Command invoked with an unusable flag combination."""
