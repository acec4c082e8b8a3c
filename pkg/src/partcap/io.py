"""File schemas: detection documents, caption records, and output writers.

Captions and outputs are line-delimited JSON so large sets stream; each
detection file is a single JSON document, one record per image.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional, Sequence, Union

from .corpus import FrequencyReport
from .enhance import EnhancementRecord, Insertion
from .evaluate import PRPoint
from .geometry import BoundingBox, Detection
from .proposals import EnhancementConfig

PathLike = Union[str, Path]

logger = logging.getLogger(__name__)


class InputFormatError(ValueError):
    """Malformed input file; message carries the path and line number."""


@dataclass(frozen=True)
class CaptionRecord:
    image_id: str
    caption: str
    pretagged: Optional[tuple[tuple[str, str], ...]] = None


def _to_float(value, context: str) -> float:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise InputFormatError(f"{context}: expected a number, got {value!r}")
    return float(value)


def _region_to_detection(region: dict, box_format: str, context: str) -> Detection:
    if not isinstance(region, dict):
        raise InputFormatError(f"{context}: region must be an object")
    box = region.get("box")
    if not isinstance(box, list) or len(box) != 4:
        raise InputFormatError(f"{context}: box must be a list of 4 numbers")
    x0, y0, a, b = (_to_float(v, context) for v in box)
    if box_format == "xywh":
        corners = (x0, y0, x0 + a, y0 + b)
    else:
        corners = (x0, y0, a, b)
    label = region.get("label")
    if not isinstance(label, str) or not label.strip():
        raise InputFormatError(f"{context}: label must be a non-empty string")
    attribute = region.get("attribute")
    if attribute is not None and not isinstance(attribute, str):
        raise InputFormatError(f"{context}: attribute must be a string or null")
    confidence = _to_float(region.get("confidence", 1.0), context)
    if not 0.0 <= confidence <= 1.0:
        raise InputFormatError(f"{context}: confidence {confidence} outside [0, 1]")
    try:
        bb = BoundingBox(*corners)
    except ValueError as exc:
        raise InputFormatError(f"{context}: {exc}") from exc
    attr = attribute.strip().lower() if attribute and attribute.strip() else None
    return Detection(bb, label.strip().lower(), attr, confidence)


def load_detections(path: PathLike) -> dict[str, list[Detection]]:
    """Load a detection file into image_id -> detections.

    The document is either a list of per-image records or an object with
    "images" plus an optional "box_format" of "xyxy" (default) or "xywh";
    width/height boxes are converted to corners at ingest.
    """
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path}: not valid JSON ({exc})") from exc
    if isinstance(doc, dict):
        box_format = doc.get("box_format", "xyxy")
        records = doc.get("images")
    else:
        box_format = "xyxy"
        records = doc
    if box_format not in ("xyxy", "xywh"):
        raise InputFormatError(f"{path}: unknown box_format {box_format!r}")
    if not isinstance(records, list):
        raise InputFormatError(f"{path}: expected a list of per-image records")
    out: dict[str, list[Detection]] = {}
    for idx, rec in enumerate(records):
        context = f"{path}: image record {idx}"
        if not isinstance(rec, dict) or not isinstance(rec.get("image_id"), str):
            raise InputFormatError(f"{context}: image_id must be a string")
        image_id = rec["image_id"]
        if image_id in out:
            raise InputFormatError(f"{context}: duplicate image_id {image_id!r}")
        regions = rec.get("regions", [])
        if not isinstance(regions, list):
            raise InputFormatError(f"{context}: regions must be a list")
        out[image_id] = [
            _region_to_detection(r, box_format, f"{context} region {j}")
            for j, r in enumerate(regions)
        ]
    return out


def _parse_caption_line(line: str, context: str) -> CaptionRecord:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{context}: not valid JSON ({exc})") from exc
    if not isinstance(obj, dict):
        raise InputFormatError(f"{context}: expected a JSON object")
    image_id = obj.get("image_id")
    caption = obj.get("caption")
    if not isinstance(image_id, str):
        raise InputFormatError(f"{context}: image_id must be a string")
    if not isinstance(caption, str):
        raise InputFormatError(f"{context}: caption must be a string")
    pretagged = None
    if "tokens" in obj and obj["tokens"] is not None:
        raw = obj["tokens"]
        if not isinstance(raw, list):
            raise InputFormatError(f"{context}: tokens must be a list of pairs")
        pairs = []
        for pair in raw:
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(p, str) for p in pair)
            ):
                raise InputFormatError(
                    f"{context}: each token must be a [surface, tag] pair"
                )
            pairs.append((pair[0], pair[1]))
        pretagged = tuple(pairs)
    return CaptionRecord(image_id, caption, pretagged)


def iter_caption_records(
    path: PathLike, skip_bad: bool = False
) -> Iterator[CaptionRecord]:
    """Yield caption records from a JSONL file in input order.

    Malformed lines raise InputFormatError with the line number; with
    ``skip_bad`` they are skipped instead (callers may log).
    """
    path = Path(path)
    with path.open() as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                yield _parse_caption_line(line, f"{path}:{lineno}")
            except InputFormatError as exc:
                if not skip_bad:
                    raise
                logger.warning("skipping bad record: %s", exc)


def load_references(path: PathLike) -> dict[str, list[str]]:
    """Load JSONL records of {"image_id", "references": [...]}."""
    path = Path(path)
    out: dict[str, list[str]] = {}
    with path.open() as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            context = f"{path}:{lineno}"
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise InputFormatError(f"{context}: not valid JSON ({exc})") from exc
            if not isinstance(obj, dict) or not isinstance(obj.get("image_id"), str):
                raise InputFormatError(f"{context}: image_id must be a string")
            refs = obj.get("references")
            if (
                not isinstance(refs, list)
                or not refs
                or not all(isinstance(r, str) for r in refs)
            ):
                raise InputFormatError(
                    f"{context}: references must be a non-empty list of strings"
                )
            out[obj["image_id"]] = list(refs)
    return out


def config_to_dict(config: EnhancementConfig) -> dict:
    return {
        "parts": config.parts_per_object,
        "threshold": config.overlap_threshold,
        "rank": config.rank_criterion,
        "components": config.component_mode,
        "dedupe": config.dedupe,
        "oxford_comma": config.oxford_comma,
        "skip_compounds": config.skip_compounds,
    }


def config_from_dict(obj: dict) -> EnhancementConfig:
    return EnhancementConfig(
        parts_per_object=obj["parts"],
        overlap_threshold=obj["threshold"],
        rank_criterion=obj["rank"],
        component_mode=obj["components"],
        dedupe=obj.get("dedupe", False),
        oxford_comma=obj.get("oxford_comma", False),
        skip_compounds=obj.get("skip_compounds", False),
    )


def enhancement_to_dict(record: EnhancementRecord) -> dict:
    return {
        "image_id": record.image_id,
        "base_caption": record.base_caption,
        "enhanced_caption": record.enhanced_caption,
        "insertions": [
            {
                "lemma": ins.lemma,
                "token_index": ins.token_index,
                "text": ins.text,
                "parts": [[label, attribute] for label, attribute in ins.parts],
            }
            for ins in record.insertions
        ],
        "config": config_to_dict(record.config_used),
    }


def enhancement_from_dict(obj: dict) -> EnhancementRecord:
    return EnhancementRecord(
        image_id=obj["image_id"],
        base_caption=obj["base_caption"],
        enhanced_caption=obj["enhanced_caption"],
        insertions=tuple(
            Insertion(
                lemma=ins["lemma"],
                token_index=ins["token_index"],
                text=ins["text"],
                parts=tuple((p[0], p[1]) for p in ins["parts"]),
            )
            for ins in obj["insertions"]
        ),
        config_used=config_from_dict(obj["config"]),
    )


def write_enhancements(records: Sequence[EnhancementRecord], path: PathLike) -> None:
    with Path(path).open("w") as fh:
        for record in records:
            fh.write(json.dumps(enhancement_to_dict(record), sort_keys=True))
            fh.write("\n")


def write_frequency_report(
    report: FrequencyReport, jsonl_path: PathLike, tsv_path: PathLike
) -> None:
    """Emit the report as JSONL plus a flat table for plotting."""
    with Path(jsonl_path).open("w") as fh:
        fh.write(
            json.dumps(
                {
                    "kind": "summary",
                    "corpus_id": report.corpus_id,
                    "total_tokens": report.total_tokens,
                },
                sort_keys=True,
            )
            + "\n"
        )
        for term, count, freq in report.term_counts:
            fh.write(
                json.dumps(
                    {
                        "kind": "term",
                        "corpus_id": report.corpus_id,
                        "term": term,
                        "count": count,
                        "relative_frequency": freq,
                    },
                    sort_keys=True,
                )
                + "\n"
            )
        for indicator, freq in report.indicator_frequencies.items():
            fh.write(
                json.dumps(
                    {
                        "kind": "indicator",
                        "corpus_id": report.corpus_id,
                        "indicator": indicator,
                        "relative_frequency": freq,
                    },
                    sort_keys=True,
                )
                + "\n"
            )
    with Path(tsv_path).open("w") as fh:
        fh.write("corpus_id\tkind\tterm\tcount\trelative_frequency\n")
        for term, count, freq in report.term_counts:
            fh.write(f"{report.corpus_id}\tterm\t{term}\t{count}\t{freq:.8f}\n")
        for indicator, freq in report.indicator_frequencies.items():
            fh.write(f"{report.corpus_id}\tindicator\t{indicator}\t\t{freq:.8f}\n")


def write_pr_curve(
    points: Sequence[PRPoint], path: PathLike, stoplist_digest: str
) -> None:
    """Tabular curve output with the stoplist hash pinned in a comment."""
    with Path(path).open("w") as fh:
        fh.write(f"# token-proxy precision/recall; stoplist sha256={stoplist_digest}\n")
        fh.write("N\tprecision\trecall\tnum_samples\n")
        for pt in points:
            fh.write(
                f"{pt.parts_per_object}\t{pt.precision:.8f}\t{pt.recall:.8f}"
                f"\t{pt.num_samples}\n"
            )
