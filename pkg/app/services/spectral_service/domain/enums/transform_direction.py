from enum import Enum


class TransformDirection(str, Enum):
    FORWARD = "forward"
    INVERSE = "inverse"

    def __str__(self) -> str:
        return self.value
