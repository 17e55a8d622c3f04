from enum import Enum


class SignPolicy(str, Enum):
    """Which characteristic surface a distance weight is measured from.

    NEAREST takes the smaller of the two distances, PLUS and MINUS pin the
    sign (``|lambda + |k|^p|`` and ``|lambda - |k|^p|`` respectively).
    """
    NEAREST = "nearest"
    PLUS = "plus"
    MINUS = "minus"

    def __str__(self) -> str:
        return self.value
