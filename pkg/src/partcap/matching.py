"""Resolve caption noun mentions to detector regions (key objects)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .geometry import BoundingBox, Detection, area, enclosing_box
from .inflection import singularize
from .text import NounMention


@dataclass(frozen=True)
class KeyObject:
    """A noun mention resolved to an image region.

    Singular mentions keep the single best detection's box; plural mentions
    get the smallest box enclosing every same-label detection.
    """

    mention: NounMention
    box: BoundingBox
    matched_detections: tuple[Detection, ...]


def label_lemma(label: str) -> str:
    """Detector labels normalized for matching: lowercased and singular."""
    return singularize(label.lower())


def match_key_objects(
    mentions: Sequence[NounMention], detections: Sequence[Detection]
) -> list[KeyObject]:
    """Match each mention against detections by singular lemma equality.

    Singular mentions take the highest-confidence match (ties: earliest in
    the detection list, then larger area). Plural mentions enclose all
    matches. Mentions with no match produce no key object.
    """
    keys: list[KeyObject] = []
    for mention in mentions:
        matches = [
            (i, d)
            for i, d in enumerate(detections)
            if label_lemma(d.object_label) == mention.lemma_singular
        ]
        if not matches:
            continue
        if mention.is_plural and len(matches) > 1:
            boxes = [d.box for _, d in matches]
            keys.append(
                KeyObject(mention, enclosing_box(boxes), tuple(d for _, d in matches))
            )
        else:
            best = min(matches, key=lambda m: (-m[1].confidence, m[0], -area(m[1].box)))
            keys.append(KeyObject(mention, best[1].box, (best[1],)))
    return keys


def part_candidates(
    detections: Sequence[Detection], key_objects: Sequence[KeyObject]
) -> list[Detection]:
    """Detections still eligible as parts.

    A detection matched as a key object's sole match is consumed; the
    constituents of a multi-detection plural key object stay available,
    since only the synthesized enclosing region is reserved.
    """
    consumed = {
        id(k.matched_detections[0])
        for k in key_objects
        if len(k.matched_detections) == 1
    }
    return [d for d in detections if id(d) not in consumed]
