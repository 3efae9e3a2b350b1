"""Basic pyCoring datatypes."""


from __future__ import annotations

from typing import Tuple
from typing_extensions import Literal


__all__ = ["Key", "Side", "Variant", "SIDES", "VARIANTS", "check_side"]


Key = Tuple[int, ...]
Side = Literal["left", "right"]
Variant = Literal["left", "right", "two-sided"]

SIDES: Tuple[Side, ...] = ("left", "right")
VARIANTS: Tuple[Variant, ...] = ("left", "right", "two-sided")


def check_side(side: str, allowed: Tuple[str, ...] = SIDES) -> None:
    if side not in allowed:
        raise ValueError(f"Expected one of {allowed}, got '{side}'")
