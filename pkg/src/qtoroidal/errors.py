"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` so the CLI can
report it as JSON without string matching.
"""


class ToroidalError(Exception):
    code = "error"

    def __init__(self, message="", code=None):
        super().__init__(message)
        if code is not None:
            self.code = code

    def to_json(self):
        return {"error": self.code, "message": str(self)}


class InvalidInput(ToroidalError, ValueError):
    code = "invalid-input"


class DivisionByZero(ToroidalError, ZeroDivisionError):
    code = "division-by-zero"


class NotRootOfUnity(ToroidalError, ValueError):
    code = "not-a-root-of-unity"


class VerificationFailure(ToroidalError):
    """An identity that must hold on the instance did not."""

    code = "verification-failure"
