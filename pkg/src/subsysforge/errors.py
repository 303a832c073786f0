"""Exception types shared across the package.

The CLI maps these onto its exit codes, so raising the right class
matters more than the message text.
"""


class ParseError(ValueError):
    """Malformed code file, Pauli string, or parameter-tuple literal."""


class PreconditionError(ValueError):
    """An operation's stated precondition does not hold for the input."""


class CapExceededError(RuntimeError):
    """An enumeration would exceed the configured vector cap."""

    def __init__(self, required: int, cap: int):
        super().__init__(
            f"enumeration needs {required} vectors but the cap is {cap}; "
            f"raise it with --cap or SUBSYSFORGE_CAP"
        )
        self.required = required
        self.cap = cap


class VerificationError(RuntimeError):
    """A recomputed result contradicts the parameters a rule promised."""


class NoAdmissibleVectorError(RuntimeError):
    """No candidate vector (or pair) admissible for a constructive rule.

    Distinct from PreconditionError: the stated preconditions held, but
    the scan over candidates found none that verifies.
    """
