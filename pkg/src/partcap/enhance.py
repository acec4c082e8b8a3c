"""Aggregate ranked proposals and splice them into the base caption."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .geometry import Detection
from .matching import KeyObject, label_lemma, match_key_objects, part_candidates
from .proposals import (
    EnhancementConfig,
    PartProposal,
    assign_parts,
    indefinite_article,
    merge_duplicate_parts,
    rank_proposals,
)
from .inflection import pluralize
from .text import (
    Lexicon,
    TaggedToken,
    align_pretagged,
    extract_noun_mentions,
    pos_tag,
    tokenize,
)


@dataclass(frozen=True)
class Insertion:
    """Provenance for one splice: which lemma, after which token, what text
    (connective included), and the (label, attribute) pairs it rendered."""

    lemma: str
    token_index: int
    text: str
    parts: tuple[tuple[str, Optional[str]], ...]


@dataclass(frozen=True)
class EnhancementRecord:
    image_id: str
    base_caption: str
    enhanced_caption: str
    insertions: tuple[Insertion, ...]
    config_used: EnhancementConfig = field(default_factory=EnhancementConfig)


def _join_with_and(items: Sequence[str], oxford_comma: bool) -> str:
    if len(items) == 1:
        return items[0]
    if len(items) == 2:
        return f"{items[0]} and {items[1]}"
    head = ", ".join(items[:-1])
    comma = "," if oxford_comma else ""
    return f"{head}{comma} and {items[-1]}"


def aggregate(
    proposals: Sequence[PartProposal],
    n: int,
    mode: str = "both",
    oxford_comma: bool = False,
) -> str:
    """Turn the top ``n`` ranked proposals into one phrase.

    Proposals sharing a part label merge into a single pluralized phrase
    with their attributes coordinated ("white and pink petals"); distinct
    labels are then coordinated the same way. Returns "" when nothing
    renders (n = 0, no proposals, or descriptor mode without attributes).
    """
    if n <= 0 or not proposals:
        return ""
    groups: dict[str, list[PartProposal]] = {}
    for p in proposals[:n]:
        groups.setdefault(p.part_label, []).append(p)
    phrases = []
    for label, members in groups.items():
        phrase = _render_group(label, members, mode, oxford_comma)
        if phrase:
            phrases.append(phrase)
    if not phrases:
        return ""
    return _join_with_and(phrases, oxford_comma)


def _render_group(
    label: str, members: Sequence[PartProposal], mode: str, oxford_comma: bool
) -> str:
    attributes: list[str] = []
    for p in members:
        if p.attribute and p.attribute not in attributes:
            attributes.append(p.attribute)
    plural = len(members) > 1 or any(p.is_plural for p in members)
    if mode == "descriptor":
        return _join_with_and(attributes, oxford_comma) if attributes else ""
    text = pluralize(label) if plural else label
    if mode == "both" and attributes:
        text = f"{_join_with_and(attributes, oxford_comma)} {text}"
    if not plural:
        text = f"{indefinite_article(text.split(' ', 1)[0])} {text}"
    return text


def choose_connective(tokens: Sequence[TaggedToken], key: KeyObject) -> str:
    """Pick the connective for a splice after ``key``.

    "with" introduces a first description; if the object's existing
    description span already contains "with", "in addition to" is used; if
    both are present, the splice falls back to ", and".
    """
    span = tokens[
        key.mention.head_token_index + 1 : key.mention.insertion_token_index + 1
    ]
    lowers = [t.lower for t in span]
    has_with = "with" in lowers
    has_in_addition = any(
        lowers[i : i + 3] == ["in", "addition", "to"] for i in range(len(lowers) - 2)
    )
    if has_with and has_in_addition:
        return ", and "
    if has_with:
        return " in addition to "
    return " with "


def insert(
    caption: str,
    key: KeyObject,
    aggregated: str,
    tokens: Optional[Sequence[TaggedToken]] = None,
) -> str:
    """Splice ``aggregated`` after the key object's insertion token.

    An empty aggregate leaves the caption unchanged. Punctuation right
    after the insertion point reattaches after the spliced tail.
    """
    if not aggregated:
        return caption
    if tokens is None:
        tokens = tokenize(caption)
    idx = key.mention.insertion_token_index
    if not 0 <= idx < len(tokens):
        raise ValueError(
            f"insertion index {idx} outside caption tokens: pipeline bug"
        )
    offset = tokens[idx].char_span[1]
    connective = choose_connective(tokens, key)
    return caption[:offset] + connective + aggregated + caption[offset:]


def enhance_caption(
    base: str,
    detections: Sequence[Detection],
    config: Optional[EnhancementConfig] = None,
    *,
    image_id: str = "",
    pretagged: Optional[Sequence[tuple[str, str]]] = None,
    lexicon: Optional[Lexicon] = None,
) -> EnhancementRecord:
    """Run the whole pipeline on one caption.

    Extracts key nouns, matches them to detections, assigns and ranks part
    proposals, and splices the aggregated text in reverse index order so
    earlier insertion offsets stay valid. Any stage producing nothing
    yields the base caption unchanged.
    """
    cfg = config if config is not None else EnhancementConfig()
    if pretagged is not None:
        tokens = align_pretagged(base, pretagged)
    else:
        tokens = pos_tag(tokenize(base), lexicon=lexicon)
    mentions = extract_noun_mentions(tokens, skip_compounds=cfg.skip_compounds)
    keys = match_key_objects(mentions, detections)
    candidates = part_candidates(detections, keys)
    assigned = assign_parts(keys, candidates, cfg.overlap_threshold)

    enhanced = base
    insertions: list[Insertion] = []
    order = sorted(
        range(len(keys)), key=lambda i: -keys[i].mention.insertion_token_index
    )
    for i in order:
        key = keys[i]
        cands = assigned[i]
        if cfg.dedupe:
            cands = [
                (d, r)
                for d, r in cands
                if label_lemma(d.object_label) != key.mention.lemma_singular
            ]
        proposals = rank_proposals(merge_duplicate_parts(cands), cfg.rank_criterion)
        text = aggregate(
            proposals, cfg.parts_per_object, cfg.component_mode, cfg.oxford_comma
        )
        if not text:
            continue
        top = proposals[: cfg.parts_per_object]
        if cfg.component_mode == "descriptor":
            top = [p for p in top if p.attribute]
        connective = choose_connective(tokens, key)
        enhanced = insert(enhanced, key, text, tokens)
        insertions.append(
            Insertion(
                lemma=key.mention.lemma_singular,
                token_index=key.mention.insertion_token_index,
                text=connective + text,
                parts=tuple((p.part_label, p.attribute) for p in top),
            )
        )
    insertions.reverse()
    return EnhancementRecord(
        image_id=image_id,
        base_caption=base,
        enhanced_caption=enhanced,
        insertions=tuple(insertions),
        config_used=cfg,
    )
