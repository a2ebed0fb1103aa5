"""Exception types raised by the kernels."""


class CycloCertError(Exception):
    """Base class for every error raised by this package."""


class NotDivisible(CycloCertError, ArithmeticError):
    """Exact division left a nonzero remainder."""


class NotSquarefree(CycloCertError, ValueError):
    """A Sturm sequence was requested for a polynomial with repeated roots."""


class NoRealRoot(CycloCertError, ValueError):
    pass


class ClosedFormMismatch(CycloCertError, AssertionError):
    """Two independent constructions of the same polynomial disagree."""


class IdentityFailure(CycloCertError, AssertionError):
    """A family identity failed while building a record."""

    def __init__(self, j, failures):
        self.j = j
        self.failures = list(failures)
        super().__init__(f"j={j}: identities failed: {', '.join(self.failures)}")


class ZeroModP(CycloCertError, ValueError):
    """The polynomial vanishes identically modulo p."""


class NotPrime(CycloCertError, ValueError):
    pass


class NotApplicable(CycloCertError, ValueError):
    """A check was requested outside the range where it is defined."""


class CertificateFailure(CycloCertError, AssertionError):
    def __init__(self, check, detail=""):
        self.check = check
        self.detail = detail
        super().__init__(f"{check}: {detail}" if detail else check)
