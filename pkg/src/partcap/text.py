"""Caption tokenization, part-of-speech tagging, and key-noun extraction.

The tagger is deliberately rule-based: a bundled lexicon plus suffix
heuristics, so identical input always yields identical tags with no model
downloads. Externally tagged tokens can be supplied instead via
``align_pretagged``.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, replace
from functools import lru_cache
from importlib import resources
from typing import Optional, Sequence

from .inflection import is_plural, singularize

NOUN = "NOUN"
VERB = "VERB"
ADJ = "ADJ"
DET = "DET"
ADP = "ADP"
PART_POSSESSIVE = "PART_POSSESSIVE"
PUNCT = "PUNCT"
OTHER = "OTHER"

VALID_TAGS = frozenset({NOUN, VERB, ADJ, DET, ADP, PART_POSSESSIVE, PUNCT, OTHER})

_PUNCT_CHARS = frozenset(string.punctuation)
_NP_CONJUNCTIONS = frozenset({"and", "or"})


@dataclass(frozen=True)
class TaggedToken:
    """One caption token. ``char_span`` indexes into the original caption;
    ``tag`` is None until ``pos_tag`` runs."""

    surface: str
    lower: str
    tag: Optional[str]
    char_span: tuple[int, int]
    token_index: int


@dataclass(frozen=True)
class NounMention:
    """A caption noun plus where proposal text may be spliced in.

    ``insertion_token_index`` is the token after which text is inserted; it
    sits at the end of the noun's description phrase, which may be several
    tokens past the noun itself. ``head_token_index`` is the possessing noun
    that supplied the lemma.
    """

    lemma_singular: str
    is_plural: bool
    insertion_token_index: int
    source_token_indices: tuple[int, ...]
    head_token_index: int


class Lexicon:
    """Word-to-tag lookup backing the tagger."""

    def __init__(self, word_tags: dict[str, str]):
        self.word_tags = dict(word_tags)
        self.nouns = frozenset(w for w, t in self.word_tags.items() if t == NOUN)

    @classmethod
    def from_tsv(cls, text: str) -> "Lexicon":
        """Parse ``word<TAB>tag`` lines; blank lines and ``#`` comments skipped."""
        word_tags = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                word, tag = line.split("\t")
            except ValueError:
                raise ValueError(f"lexicon line {lineno}: expected word<TAB>tag")
            if tag not in VALID_TAGS:
                raise ValueError(f"lexicon line {lineno}: unknown tag {tag!r}")
            word_tags[word] = tag
        return cls(word_tags)


@lru_cache(maxsize=1)
def default_lexicon() -> Lexicon:
    text = resources.files("partcap.data").joinpath("lexicon.tsv").read_text()
    return Lexicon.from_tsv(text)


def tokenize(caption: str) -> list[TaggedToken]:
    """Split a caption into tokens with tags unset.

    Whitespace separates chunks; leading and trailing punctuation become
    their own tokens, as does the possessive clitic "'s". Surfaces plus the
    original separators reconstruct the caption exactly.
    """
    spans: list[tuple[int, int]] = []
    i, n = 0, len(caption)
    while i < n:
        if caption[i].isspace():
            i += 1
            continue
        j = i
        while j < n and not caption[j].isspace():
            j += 1
        _split_chunk(caption, i, j, spans)
        i = j
    return [
        TaggedToken(
            surface=caption[a:b],
            lower=caption[a:b].lower(),
            tag=None,
            char_span=(a, b),
            token_index=k,
        )
        for k, (a, b) in enumerate(spans)
    ]


def _split_chunk(caption: str, start: int, end: int, out: list) -> None:
    while start < end and caption[start] in _PUNCT_CHARS:
        out.append((start, start + 1))
        start += 1
    core_end = end
    while core_end > start and caption[core_end - 1] in _PUNCT_CHARS:
        core_end -= 1
    if core_end > start:
        core = caption[start:core_end]
        if core.lower().endswith("'s") and len(core) > 2:
            out.append((start, core_end - 2))
            out.append((core_end - 2, core_end))
        else:
            out.append((start, core_end))
    for k in range(core_end, end):
        out.append((k, k + 1))


def pos_tag(
    tokens: Sequence[TaggedToken], lexicon: Optional[Lexicon] = None
) -> list[TaggedToken]:
    """Assign one tag per token; deterministic for identical input.

    Priority: punctuation by form, lexicon lookup, plural of a known noun,
    verb/adjective suffixes, then NOUN for unknown content words.
    """
    lex = lexicon if lexicon is not None else default_lexicon()
    return [replace(t, tag=_tag_word(t.lower, lex)) for t in tokens]


def _tag_word(lower: str, lex: Lexicon) -> str:
    if all(not c.isalnum() for c in lower):
        return PUNCT
    tag = lex.word_tags.get(lower)
    if tag is not None:
        return tag
    stem = singularize(lower)
    if stem != lower and stem in lex.nouns:
        return NOUN
    if lower.endswith(("ing", "ed")):
        return VERB
    if lower.endswith(("y", "ful", "ous")):
        return ADJ
    if "-" in lower or any(c.isdigit() for c in lower):
        return OTHER
    return NOUN


def align_pretagged(
    caption: str, pairs: Sequence[tuple[str, str]]
) -> list[TaggedToken]:
    """Build tokens from externally produced (surface, tag) pairs.

    Surfaces must appear in the caption in order, separated only by
    whitespace; tags must come from the supported tag set.
    """
    tokens: list[TaggedToken] = []
    pos = 0
    for index, (surface, tag) in enumerate(pairs):
        if tag not in VALID_TAGS:
            raise ValueError(f"unknown tag {tag!r} for token {surface!r}")
        if not surface:
            raise ValueError(f"empty surface at pre-tagged position {index}")
        start = caption.find(surface, pos)
        if start < 0 or caption[pos:start].strip():
            raise ValueError(
                f"pre-tagged token {surface!r} does not align with caption text"
            )
        end = start + len(surface)
        tokens.append(TaggedToken(surface, surface.lower(), tag, (start, end), index))
        pos = end
    if caption[pos:].strip():
        raise ValueError("caption text remains after the last pre-tagged token")
    return tokens


def extract_noun_mentions(
    tokens: Sequence[TaggedToken], skip_compounds: bool = False
) -> list[NounMention]:
    """Extract one mention per noun, folding description phrases.

    Possessive and part-description constructions attach to the possessing
    noun: in "X's Y" and "X with Y" the mention is X, in "Y of X" it is X,
    and in all three the insertion index moves to the last token of the
    phrase, so inserted text lands after the existing description. Nouns
    consumed inside such a phrase do not become mentions of their own.

    Adjacent nouns are independent unigram mentions by default;
    ``skip_compounds`` drops every noun in an adjacent-noun run instead.
    """
    compound = _compound_indices(tokens) if skip_compounds else frozenset()
    mentions: list[NounMention] = []
    i, n = 0, len(tokens)
    while i < n:
        if tokens[i].tag != NOUN or i in compound:
            i += 1
            continue
        head = i
        end = i
        sources = [i]
        j = i + 1
        # "Y of X": the noun phrase right after "of" supplies the possessor
        while j < n and tokens[j].tag == ADP and tokens[j].lower == "of":
            last_noun, nouns = _scan_noun_phrase(tokens, j + 1)
            if last_noun is None:
                break
            sources.extend(nouns)
            head = last_noun
            end = last_noun
            j = last_noun + 1
        # description phrases extend the span but keep the possessor
        while j < n:
            t = tokens[j]
            is_marker = t.tag == PART_POSSESSIVE or (
                t.tag == ADP and t.lower in ("with", "of")
            )
            if not is_marker:
                break
            last_noun, nouns = _scan_noun_phrase(tokens, j + 1)
            if last_noun is None:
                break
            sources.extend(nouns)
            end = last_noun
            j = last_noun + 1
        head_word = tokens[head].lower
        mentions.append(
            NounMention(
                lemma_singular=singularize(head_word),
                is_plural=is_plural(head_word),
                insertion_token_index=end,
                source_token_indices=tuple(sorted(set(sources))),
                head_token_index=head,
            )
        )
        i = end + 1
    return mentions


def _scan_noun_phrase(
    tokens: Sequence[TaggedToken], start: int
) -> tuple[Optional[int], list[int]]:
    """Consume a flat noun phrase (determiners, adjectives, nouns, and/or
    commas between conjuncts). Returns (index of last noun, noun indices);
    (None, []) when no noun follows."""
    last_noun = None
    nouns: list[int] = []
    j = start
    while j < len(tokens):
        t = tokens[j]
        if t.tag in (DET, ADJ):
            pass
        elif t.tag == NOUN:
            last_noun = j
            nouns.append(j)
        elif t.lower in _NP_CONJUNCTIONS or (t.tag == PUNCT and t.surface == ","):
            pass
        else:
            break
        j += 1
    return last_noun, nouns


def _compound_indices(tokens: Sequence[TaggedToken]) -> frozenset[int]:
    out: set[int] = set()
    i = 0
    while i < len(tokens):
        if tokens[i].tag == NOUN:
            j = i
            while j + 1 < len(tokens) and tokens[j + 1].tag == NOUN:
                j += 1
            if j > i:
                out.update(range(i, j + 1))
            i = j + 1
        else:
            i += 1
    return frozenset(out)
