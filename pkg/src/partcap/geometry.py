"""Axis-aligned bounding box arithmetic for part assignment.

Boxes are corner-form (x_min, y_min, x_max, y_max) with real-valued pixel
coordinates. All functions are pure; values are immutable and safe to share
across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence


class DegenerateBoxError(ValueError):
    """Raised when a zero-area box is used where positive area is required."""


@dataclass(frozen=True)
class BoundingBox:
    """Corner-form box. Invariant: x_min <= x_max and y_min <= y_max."""

    x_min: float
    y_min: float
    x_max: float
    y_max: float

    def __post_init__(self) -> None:
        if self.x_min > self.x_max or self.y_min > self.y_max:
            raise ValueError(
                f"box corners out of order: ({self.x_min}, {self.y_min}, "
                f"{self.x_max}, {self.y_max})"
            )


@dataclass(frozen=True)
class Detection:
    """One detector region: a box plus its object label, optional attribute
    label (the detector's most confident one), and a confidence in [0, 1].
    """

    box: BoundingBox
    object_label: str
    attribute_label: Optional[str] = None
    confidence: float = 1.0

    def __post_init__(self) -> None:
        if not self.object_label:
            raise ValueError("detection requires a non-empty object label")
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f"confidence {self.confidence} outside [0, 1]")


def area(box: BoundingBox) -> float:
    """Area of a box; 0 for degenerate (zero width or height) boxes."""
    return (box.x_max - box.x_min) * (box.y_max - box.y_min)


def intersection_area(a: BoundingBox, b: BoundingBox) -> float:
    """Area of the axis-aligned overlap of two boxes; 0 when disjoint."""
    w = min(a.x_max, b.x_max) - max(a.x_min, b.x_min)
    if w <= 0:
        return 0.0
    h = min(a.y_max, b.y_max) - max(a.y_min, b.y_min)
    if h <= 0:
        return 0.0
    return w * h


def overlap_ratio(part_box: BoundingBox, key_box: BoundingBox) -> float:
    """Fraction of ``part_box`` covered by ``key_box``, in [0, 1].

    Not symmetric: the denominator is always the part's own area, so a part
    fully inside the key scores 1.0 regardless of the key's size.

    Raises:
        DegenerateBoxError: if ``part_box`` has zero area. Callers should
            skip such detections rather than score them 0.
    """
    part_area = area(part_box)
    if part_area <= 0:
        raise DegenerateBoxError(f"part box has zero area: {part_box}")
    return intersection_area(key_box, part_box) / part_area


def enclosing_box(boxes: Sequence[BoundingBox]) -> BoundingBox:
    """Smallest box containing every input box. Requires a non-empty list."""
    if not boxes:
        raise ValueError("enclosing_box requires at least one box")
    return BoundingBox(
        min(b.x_min for b in boxes),
        min(b.y_min for b in boxes),
        max(b.x_max for b in boxes),
        max(b.y_max for b in boxes),
    )
