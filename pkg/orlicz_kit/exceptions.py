from __future__ import annotations

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from orlicz_kit.types import YoungClass


class OrliczKitError(Exception):
    pass


class InvalidValueError(OrliczKitError, ValueError):
    pass


class InvalidDescriptorError(OrliczKitError, ValueError):

    def __init__(
        self, field: str, message: str
    ) -> None:
        self.field: str = field
        self.message: str = message
        super().__init__(f"{field}: {message}")


class ZeroFunctionError(OrliczKitError, ValueError):

    def __init__(self) -> None:
        super().__init__("zero function")


class YoungClassError(OrliczKitError, ValueError):

    def __init__(
        self,
        actual: YoungClass,
        expected: str,
        hint: Optional[str] = None,
    ) -> None:
        self.actual: YoungClass = actual
        message: str = (
            f"Young function of class {actual.value} "
            f"where {expected} is required"
        )
        if hint:
            message += f"; {hint}"
        super().__init__(message)


class UnboundedOnGridError(OrliczKitError):

    def __init__(self, direction: str) -> None:
        self.direction: str = direction
        super().__init__(
            f"unbounded on grid ({direction} constant)"
        )


class NoChecksSelectedError(OrliczKitError, ValueError):

    def __init__(self) -> None:
        super().__init__("no checks selected")
