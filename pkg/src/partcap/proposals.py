"""Part assignment, duplicate merging, rendering, and ranking of proposals."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .geometry import Detection, area, overlap_ratio
from .inflection import pluralize
from .matching import KeyObject, label_lemma

RANK_CRITERIA = ("score", "overlap", "score+overlap")
COMPONENT_MODES = ("both", "descriptor", "part")

_VOWELS = "aeiou"


@dataclass(frozen=True)
class EnhancementConfig:
    """Knobs for one enhancement run.

    ``parts_per_object`` caps proposals per key object; ``overlap_threshold``
    is the strict lower bound a part's covered fraction must exceed.
    """

    parts_per_object: int = 1
    overlap_threshold: float = 0.5
    rank_criterion: str = "score+overlap"
    component_mode: str = "both"
    dedupe: bool = False
    oxford_comma: bool = False
    skip_compounds: bool = False

    def __post_init__(self) -> None:
        if self.parts_per_object < 0:
            raise ValueError("parts_per_object must be >= 0")
        if not 0.0 < self.overlap_threshold <= 1.0:
            raise ValueError("overlap_threshold must be in (0, 1]")
        if self.rank_criterion not in RANK_CRITERIA:
            raise ValueError(f"rank_criterion must be one of {RANK_CRITERIA}")
        if self.component_mode not in COMPONENT_MODES:
            raise ValueError(f"component_mode must be one of {COMPONENT_MODES}")


@dataclass(frozen=True)
class PartProposal:
    """A candidate part phrase for one key object.

    ``part_label`` is the singular lemma; rendering pluralizes it when
    ``is_plural``. ``article`` is present exactly when singular. ``overlap``
    and ``confidence`` are maxima over merged duplicates.
    """

    part_label: str
    attribute: Optional[str]
    is_plural: bool
    article: Optional[str]
    rank_score: float
    overlap: float
    confidence: float
    merged_count: int


def indefinite_article(word: str) -> str:
    return "an" if word[:1] in _VOWELS else "a"


def assign_parts(
    key_objects: Sequence[KeyObject],
    detections: Sequence[Detection],
    threshold: float,
) -> list[list[tuple[Detection, float]]]:
    """Assign each candidate detection to at most one key object.

    Key objects are tried smallest-area first so parts bind to the most
    specific object instead of a large background region; a candidate goes
    to the first key object whose overlap ratio strictly exceeds the
    threshold. Zero-area candidates are skipped. The result is parallel to
    ``key_objects``.
    """
    order = sorted(range(len(key_objects)), key=lambda i: (area(key_objects[i].box), i))
    assigned: list[list[tuple[Detection, float]]] = [[] for _ in key_objects]
    for det in detections:
        if area(det.box) <= 0:
            continue
        for i in order:
            ratio = overlap_ratio(det.box, key_objects[i].box)
            if ratio > threshold:
                assigned[i].append((det, ratio))
                break
    return assigned


def merge_duplicate_parts(
    candidates: Sequence[tuple[Detection, float]],
) -> list[PartProposal]:
    """Collapse same-(label, attribute) candidates into pluralized proposals.

    Groups of two or more become one plural proposal whose overlap and
    confidence are the maxima over the group; singletons stay singular and
    carry an indefinite article.
    """
    groups: dict[tuple[str, Optional[str]], list[tuple[Detection, float]]] = {}
    for det, ratio in candidates:
        key = (label_lemma(det.object_label), det.attribute_label)
        groups.setdefault(key, []).append((det, ratio))
    proposals = []
    for (label, attribute), members in groups.items():
        count = len(members)
        plural = count > 1
        proposals.append(
            PartProposal(
                part_label=label,
                attribute=attribute,
                is_plural=plural,
                article=None if plural else indefinite_article(attribute or label),
                rank_score=0.0,
                overlap=max(r for _, r in members),
                confidence=max(d.confidence for d, _ in members),
                merged_count=count,
            )
        )
    return proposals


def rank_proposals(
    proposals: Sequence[PartProposal], criterion: str = "score+overlap"
) -> list[PartProposal]:
    """Order proposals by the chosen criterion, best first.

    score: detector confidence; overlap: covered fraction; score+overlap:
    their plain sum. Ties break by higher confidence, then label order.
    """
    if criterion not in RANK_CRITERIA:
        raise ValueError(f"unknown rank criterion {criterion!r}")

    def score(p: PartProposal) -> float:
        if criterion == "score":
            return p.confidence
        if criterion == "overlap":
            return p.overlap
        return p.confidence + p.overlap

    scored = [replace(p, rank_score=score(p)) for p in proposals]
    return sorted(scored, key=lambda p: (-p.rank_score, -p.confidence, p.part_label))


def render_proposal(proposal: PartProposal, mode: str = "both") -> str:
    """Render one proposal as text for the chosen component mode.

    "both" gives "[article] [attribute] label", "descriptor" the attribute
    alone (empty when absent, so the proposal is skipped), "part" the
    labeled phrase without the attribute. The article is "an" before a
    vowel-initial next word.
    """
    if mode not in COMPONENT_MODES:
        raise ValueError(f"unknown component mode {mode!r}")
    if mode == "descriptor":
        return proposal.attribute or ""
    label = pluralize(proposal.part_label) if proposal.is_plural else proposal.part_label
    if mode == "part":
        words = [label]
    else:
        words = [proposal.attribute, label] if proposal.attribute else [label]
    if not proposal.is_plural:
        words.insert(0, indefinite_article(words[0]))
    return " ".join(words)
