# isecode/Utils/errors.py

from typing import Any, Optional


class IsecodeError(Exception):
    """Base error. `exit_code` plays the role an HTTP status plays for a route."""

    exit_code: int = 1

    def __init__(self, detail: str, *, extra: Optional[dict[str, Any]] = None):
        super().__init__(detail)
        self.detail = detail
        self.extra = extra or {}

    def to_dict(self) -> dict[str, Any]:
        payload = {"error": self.detail, "code": self.exit_code}
        if self.extra:
            payload["details"] = self.extra
        return payload


class ParameterError(IsecodeError):
    exit_code = 2


class CapacityError(ParameterError):
    """A size cap or the product-construction capacity condition was exceeded."""


class PreconditionError(ParameterError):
    """An operation's precondition does not hold on the given data."""


class SearchTimeout(IsecodeError):
    exit_code = 3


class FamilyFormatError(IsecodeError):
    exit_code = 4

    def __init__(self, detail: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {detail}" if line is not None else detail,
                         extra={"line": line} if line is not None else None)
        self.line = line
