from __future__ import annotations

from enum import IntEnum


class Color(IntEnum):
    RED = 0
    BLUE = 1
    GREEN = 2
    UNCOLORED = 3

    @property
    def label(self) -> str:
        return self.name.lower()

    @classmethod
    def from_name(cls, name: str) -> "Color":
        try:
            color = cls[name.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown color {name!r}") from None
        if color is cls.UNCOLORED:
            raise ValueError("'uncolored' is not a color name")
        return color


RED, BLUE, GREEN, UNCOLORED = Color.RED, Color.BLUE, Color.GREEN, Color.UNCOLORED
PAINTS = (RED, BLUE, GREEN)


def uncolored(m: int) -> list[Color]:
    """A fresh coloring of ``m`` edges with nothing colored yet."""
    return [UNCOLORED] * m
