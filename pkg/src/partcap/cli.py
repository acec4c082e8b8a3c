"""Command line entry points: enhance, freq, and pr-sweep."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import io
from .corpus import DEFAULT_INDICATORS, build_report
from .enhance import EnhancementRecord, enhance_caption
from .evaluate import pr_sweep, stoplist_hash
from .proposals import COMPONENT_MODES, RANK_CRITERIA, EnhancementConfig

logger = logging.getLogger("partcap")


def _config_from_args(args: argparse.Namespace) -> EnhancementConfig:
    return EnhancementConfig(
        parts_per_object=args.parts,
        overlap_threshold=args.threshold,
        rank_criterion=args.rank,
        component_mode=args.components,
        dedupe=args.dedupe,
        oxford_comma=args.oxford_comma,
        skip_compounds=args.skip_compounds,
    )


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--parts", type=int, default=1, help="proposals inserted per key object"
    )
    parser.add_argument(
        "--threshold",
        type=float,
        default=0.5,
        help="overlap a part must strictly exceed to attach to a key object",
    )
    parser.add_argument("--rank", choices=RANK_CRITERIA, default="score+overlap")
    parser.add_argument("--components", choices=COMPONENT_MODES, default="both")
    parser.add_argument(
        "--dedupe",
        action="store_true",
        help="drop parts whose label equals their key object's lemma",
    )
    parser.add_argument("--oxford-comma", action="store_true")
    parser.add_argument(
        "--skip-compounds",
        action="store_true",
        help="skip adjacent-noun runs instead of treating each as a mention",
    )


def cmd_enhance(args: argparse.Namespace) -> int:
    detections = io.load_detections(args.detections)
    config = _config_from_args(args)
    records = []
    for rec in io.iter_caption_records(args.captions, skip_bad=args.skip_bad):
        if rec.image_id not in detections:
            logger.warning(
                "image_id %r has no detections; emitting base caption unchanged",
                rec.image_id,
            )
            records.append(
                EnhancementRecord(
                    image_id=rec.image_id,
                    base_caption=rec.caption,
                    enhanced_caption=rec.caption,
                    insertions=(),
                    config_used=config,
                )
            )
            continue
        records.append(
            enhance_caption(
                rec.caption,
                detections[rec.image_id],
                config,
                image_id=rec.image_id,
                pretagged=rec.pretagged,
            )
        )
    io.write_enhancements(records, args.out)
    logger.info("wrote %d records to %s", len(records), args.out)
    return 0


def cmd_freq(args: argparse.Namespace) -> int:
    captions = [rec.caption for rec in io.iter_caption_records(args.captions)]
    if not captions:
        logger.warning("empty corpus: emitting a zero report")
    indicators = (
        tuple(w.strip().lower() for w in args.indicators.split(",") if w.strip())
        if args.indicators
        else DEFAULT_INDICATORS
    )
    corpus_id = Path(args.captions).stem
    report = build_report(captions, args.top_k, indicators, corpus_id)
    tsv_path = args.table if args.table else Path(args.out).with_suffix(".tsv")
    io.write_frequency_report(report, args.out, tsv_path)
    logger.info("wrote report to %s and %s", args.out, tsv_path)
    return 0


def cmd_pr_sweep(args: argparse.Namespace) -> int:
    detections = io.load_detections(args.detections)
    references = io.load_references(args.references)
    dataset = []
    for rec in io.iter_caption_records(args.captions, skip_bad=args.skip_bad):
        if rec.image_id not in references:
            raise io.InputFormatError(
                f"no references for image_id {rec.image_id!r}"
            )
        dets = detections.get(rec.image_id)
        if dets is None:
            logger.warning(
                "image_id %r has no detections; caption passes through", rec.image_id
            )
            dets = []
        dataset.append((rec.caption, dets, references[rec.image_id]))
    points = pr_sweep(dataset, args.max_parts, _config_from_args(args))
    io.write_pr_curve(points, args.out, stoplist_hash())
    logger.info("wrote %d sweep points to %s", len(points), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partcap",
        description=(
            "Insert ranked object-part descriptions from detector annotations "
            "into base image captions, and analyze caption corpora."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enh = sub.add_parser("enhance", help="enhance a captions file")
    p_enh.add_argument("--detections", required=True, help="detection JSON document")
    p_enh.add_argument("--captions", required=True, help="captions JSONL")
    p_enh.add_argument("--out", required=True, help="output JSONL")
    p_enh.add_argument(
        "--skip-bad", action="store_true", help="skip malformed caption lines"
    )
    _add_config_flags(p_enh)
    p_enh.set_defaults(func=cmd_enhance)

    p_freq = sub.add_parser("freq", help="word-frequency report for a corpus")
    p_freq.add_argument("--captions", required=True, help="captions JSONL")
    p_freq.add_argument("--out", required=True, help="output JSONL report")
    p_freq.add_argument(
        "--table", default=None, help="TSV table path (default: out with .tsv)"
    )
    p_freq.add_argument("--top-k", type=int, default=5)
    p_freq.add_argument(
        "--indicators",
        default=None,
        help="comma-separated indicator words (default: with,has,have,on,in)",
    )
    p_freq.set_defaults(func=cmd_freq)

    p_sweep = sub.add_parser(
        "pr-sweep", help="token-proxy precision/recall vs parts-per-object"
    )
    p_sweep.add_argument("--detections", required=True)
    p_sweep.add_argument("--captions", required=True)
    p_sweep.add_argument("--references", required=True, help="references JSONL")
    p_sweep.add_argument("--out", required=True, help="output TSV curve")
    p_sweep.add_argument("--max-parts", type=int, default=10)
    p_sweep.add_argument("--skip-bad", action="store_true")
    _add_config_flags(p_sweep)
    p_sweep.set_defaults(func=cmd_pr_sweep)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(
        level=logging.INFO, format="%(levelname)s %(message)s", stream=sys.stderr
    )
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (io.InputFormatError, FileNotFoundError, ValueError) as exc:
        logger.error("%s", exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
