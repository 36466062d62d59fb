"""Exception types raised on domain errors."""


class DomainError(Exception):
    """Base class for mathematical precondition failures (CLI exit code 2)."""

    kind = "DomainError"

    def payload(self):
        return {"type": self.kind, "message": str(self)}


class NotNilpotent(DomainError):
    kind = "NotNilpotent"


class NotInCentralizer(DomainError):
    kind = "NotInCentralizer"


class NotInMPhi(DomainError):
    kind = "NotInMPhi"


class NotSplit(DomainError):
    """The characteristic polynomial has a factor without roots in the field."""

    kind = "NotSplit"

    def __init__(self, irreducible_factor, message=None):
        self.irreducible_factor = irreducible_factor
        super().__init__(
            message or f"characteristic polynomial has irreducible factor {irreducible_factor}"
        )

    def payload(self):
        out = super().payload()
        out["irreducible_factor"] = self.irreducible_factor.to_json()
        return out


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagreed."""
