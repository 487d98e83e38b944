"""Error hierarchy with stable machine-readable codes."""


class LvmbError(Exception):
    """Base class for every error raised by the toolkit."""

    code = "LvmbError"
    exit_code = 1

    def __init__(self, message="", **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_json(self):
        out = {"code": self.code, "message": self.message}
        if self.details:
            out["details"] = self.details
        return out


class MalformedInput(LvmbError):
    code = "MalformedInput"
    exit_code = 2


class NotRegular(LvmbError):
    code = "NotRegular"


class NotComplete(LvmbError):
    code = "NotComplete"


class NotOddBalanced(LvmbError):
    code = "NotOddBalanced"


class NotSplit(LvmbError):
    code = "NotSplit"


class NotSaturated(LvmbError):
    code = "NotSaturated"


class ShapeMismatch(LvmbError):
    code = "ShapeMismatch"


class NotGaleDatum(LvmbError):
    code = "NotGaleDatum"


class NotGaleEquivalent(LvmbError):
    code = "NotGaleEquivalent"


class NotSameLattice(LvmbError):
    code = "NotSameLattice"


class InvalidPeriod(LvmbError):
    code = "InvalidPeriod"


class FormulaMismatch(LvmbError):
    """Internal consistency failure; signals a bug rather than bad input."""

    code = "FormulaMismatch"
