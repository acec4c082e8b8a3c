"""partcap: insert detector-derived object-part descriptions into captions."""

from .geometry import (
    BoundingBox,
    DegenerateBoxError,
    Detection,
    area,
    enclosing_box,
    intersection_area,
    overlap_ratio,
)
from .inflection import is_plural, pluralize, singularize
from .text import (
    NounMention,
    TaggedToken,
    align_pretagged,
    extract_noun_mentions,
    pos_tag,
    tokenize,
)
from .matching import KeyObject, match_key_objects, part_candidates
from .proposals import (
    EnhancementConfig,
    PartProposal,
    assign_parts,
    merge_duplicate_parts,
    rank_proposals,
    render_proposal,
)
from .enhance import (
    EnhancementRecord,
    Insertion,
    aggregate,
    enhance_caption,
    insert,
)
from .corpus import (
    DEFAULT_INDICATORS,
    FrequencyReport,
    semantic_indicator_frequencies,
    term_frequencies,
)
from .evaluate import PRPoint, pr_sweep, token_precision_recall

__version__ = "0.1.0"

__all__ = [
    "BoundingBox",
    "DegenerateBoxError",
    "Detection",
    "area",
    "enclosing_box",
    "intersection_area",
    "overlap_ratio",
    "is_plural",
    "pluralize",
    "singularize",
    "NounMention",
    "TaggedToken",
    "align_pretagged",
    "extract_noun_mentions",
    "pos_tag",
    "tokenize",
    "KeyObject",
    "match_key_objects",
    "part_candidates",
    "EnhancementConfig",
    "PartProposal",
    "assign_parts",
    "merge_duplicate_parts",
    "rank_proposals",
    "render_proposal",
    "EnhancementRecord",
    "Insertion",
    "aggregate",
    "enhance_caption",
    "insert",
    "DEFAULT_INDICATORS",
    "FrequencyReport",
    "semantic_indicator_frequencies",
    "term_frequencies",
    "PRPoint",
    "pr_sweep",
    "token_precision_recall",
]
