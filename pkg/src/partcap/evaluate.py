"""Token-level precision/recall proxy and the parts-per-object sweep.

This is a transparent proxy metric, not a model-based caption score: it
compares lowercased, singularized content tokens (bundled stopword list
excluded) as multisets. Outputs embed the stopword-list hash so numbers are
reproducible against a known list.
"""

from __future__ import annotations

import hashlib
import logging
from collections import Counter
from dataclasses import dataclass, replace
from functools import lru_cache
from importlib import resources
from typing import Optional, Sequence

from .enhance import enhance_caption
from .geometry import Detection
from .inflection import singularize
from .proposals import EnhancementConfig
from .text import tokenize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PRPoint:
    parts_per_object: int
    precision: float
    recall: float
    num_samples: int


@lru_cache(maxsize=1)
def _stopword_bytes() -> bytes:
    return resources.files("partcap.data").joinpath("stopwords.txt").read_bytes()


@lru_cache(maxsize=1)
def stopwords() -> frozenset[str]:
    return frozenset(
        line.strip() for line in _stopword_bytes().decode().splitlines() if line.strip()
    )


def stoplist_hash() -> str:
    """sha256 of the bundled stopword file, for embedding in outputs."""
    return hashlib.sha256(_stopword_bytes()).hexdigest()


def content_tokens(text: str) -> list[str]:
    """Lowercased, singularized tokens minus punctuation and stopwords."""
    stop = stopwords()
    out = []
    for t in tokenize(text):
        if not any(c.isalnum() for c in t.surface):
            continue
        if t.lower in stop:
            continue
        out.append(singularize(t.lower))
    return out


def _multiset_overlap(a: Counter, b: Counter) -> int:
    return sum((a & b).values())


def token_precision_recall(
    candidate: str, references: Sequence[str]
) -> tuple[float, float]:
    """Multiset content-token precision and recall.

    Precision is overlap with the multiset union of all references over the
    candidate's size; recall is the best per-reference coverage. A candidate
    with no content tokens scores precision 0 (logged as a warning).
    """
    if not references:
        raise ValueError("at least one reference is required")
    cand = Counter(content_tokens(candidate))
    cand_total = sum(cand.values())
    union: Counter = Counter()
    ref_counters = []
    for ref in references:
        rc = Counter(content_tokens(ref))
        ref_counters.append(rc)
        union |= rc
    if cand_total == 0:
        logger.warning(
            "candidate %r has no content tokens; precision defined as 0", candidate
        )
        precision = 0.0
    else:
        precision = _multiset_overlap(cand, union) / cand_total
    recall = 0.0
    for rc in ref_counters:
        total = sum(rc.values())
        if total:
            recall = max(recall, _multiset_overlap(cand, rc) / total)
    return precision, recall


def pr_sweep(
    dataset: Sequence[tuple[str, Sequence[Detection], Sequence[str]]],
    n_max: int,
    config: Optional[EnhancementConfig] = None,
) -> list[PRPoint]:
    """Average precision/recall for parts-per-object 0..n_max.

    Each dataset item is (base caption, detections, references). The N = 0
    point is the untouched base caption, the horizontal reference line.
    """
    if not dataset:
        raise ValueError("dataset must be non-empty")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    base_config = config if config is not None else EnhancementConfig()
    points = []
    for n in range(n_max + 1):
        cfg = replace(base_config, parts_per_object=n)
        p_sum = 0.0
        r_sum = 0.0
        for caption, detections, references in dataset:
            record = enhance_caption(caption, detections, cfg)
            p, r = token_precision_recall(record.enhanced_caption, references)
            p_sum += p
            r_sum += r
        points.append(
            PRPoint(n, p_sum / len(dataset), r_sum / len(dataset), len(dataset))
        )
    return points
