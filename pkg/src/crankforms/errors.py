"""Exception hierarchy.

Everything raised deliberately by the package derives from ``CrankformsError``
so the command line can map failures onto exit codes.
"""


class CrankformsError(Exception):
    pass


class RingMismatch(CrankformsError, ValueError):
    """Binary operation between values living in different coefficient rings."""


class ConductorMismatch(RingMismatch):
    pass


class ModulusMismatch(RingMismatch):
    pass


class NonUnitError(CrankformsError, ArithmeticError):
    pass


class InexactDivision(CrankformsError, ArithmeticError):
    pass


class NonIntegerError(CrankformsError, ValueError):
    """A cyclotomic integer was expected to be a rational integer and is not."""


class IntegralityError(CrankformsError, ArithmeticError):
    """An internal consistency check on integrality failed (upstream bug)."""


class LatticeError(CrankformsError, ValueError):
    """Exponent lattices of the operands are incompatible."""


class PrecisionError(CrankformsError, ValueError):
    """A coefficient outside the known truncation window was requested."""


class OracleBoundExceeded(CrankformsError, ValueError):
    pass


class NoAdmissibleExponent(CrankformsError, ValueError):
    """No exponent v up to the cap satisfies ell**v == -1 (mod 24 r)."""
