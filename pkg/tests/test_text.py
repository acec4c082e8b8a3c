import pytest
from hypothesis import given
from hypothesis import strategies as st

from partcap.text import (
    ADJ,
    ADP,
    DET,
    NOUN,
    PART_POSSESSIVE,
    PUNCT,
    VERB,
    align_pretagged,
    extract_noun_mentions,
    pos_tag,
    tokenize,
)


def tag(caption):
    return pos_tag(tokenize(caption))


def surfaces(tokens):
    return [t.surface for t in tokens]


class TestTokenize:
    def test_possessive_clitic_split(self):
        assert surfaces(tokenize("a bird's red beak")) == ["a", "bird", "'s", "red", "beak"]

    def test_empty(self):
        assert tokenize("") == []

    def test_punctuation_separated(self):
        assert surfaces(tokenize("petals, leaves")) == ["petals", ",", "leaves"]

    def test_leading_and_multiple_trailing_punctuation(self):
        assert surfaces(tokenize('(a bird).')) == ["(", "a", "bird", ")", "."]

    def test_hyphenated_stays_single(self):
        assert surfaces(tokenize("a red-winged bird")) == ["a", "red-winged", "bird"]

    def test_internal_apostrophe_not_split(self):
        assert surfaces(tokenize("don't stop")) == ["don't", "stop"]

    def test_spans_and_indices(self):
        toks = tokenize("a  bird.")
        assert [(t.char_span, t.token_index) for t in toks] == [
            ((0, 1), 0),
            ((3, 7), 1),
            ((7, 8), 2),
        ]

    @given(st.text(max_size=60))
    def test_lossless_reconstruction(self, caption):
        toks = tokenize(caption)
        rebuilt = []
        prev = 0
        for t in toks:
            start, end = t.char_span
            gap = caption[prev:start]
            assert gap.strip() == ""
            rebuilt.append(gap)
            rebuilt.append(t.surface)
            assert caption[start:end] == t.surface
            prev = end
        rebuilt.append(caption[prev:])
        assert "".join(rebuilt) == caption


class TestPosTag:
    def test_lexicon_lookup(self):
        assert [t.tag for t in tag("a bird with a red beak")] == [
            DET,
            NOUN,
            ADP,
            DET,
            ADJ,
            NOUN,
        ]

    def test_empty(self):
        assert pos_tag([]) == []

    def test_plural_of_known_stem(self):
        assert tag("flowers")[0].tag == NOUN

    def test_irregular_plural(self):
        assert tag("geese")[0].tag == NOUN

    def test_possessive_clitic(self):
        assert [t.tag for t in tag("the bird's beak")] == [
            DET,
            NOUN,
            PART_POSSESSIVE,
            NOUN,
        ]

    def test_punctuation(self):
        toks = tag("petals, leaves")
        assert toks[1].tag == PUNCT

    def test_suffix_heuristics(self):
        toks = tag("a glimmering zorb sparkously frobbed")
        assert toks[1].tag == VERB  # -ing
        assert toks[2].tag == NOUN  # unknown content word
        assert toks[3].tag == ADJ  # -ous
        assert toks[4].tag == VERB  # -ed

    def test_hyphenated_never_noun_by_default(self):
        assert tag("a zorb-blik here")[1].tag not in (NOUN,)

    def test_deterministic(self):
        a = [t.tag for t in tag("two birds on branches")]
        b = [t.tag for t in tag("two birds on branches")]
        assert a == b


class TestExtractNounMentions:
    def test_of_phrase_keeps_possessor(self):
        toks = tag("the wing of the bird")
        mentions = extract_noun_mentions(toks)
        assert len(mentions) == 1
        m = mentions[0]
        assert m.lemma_singular == "bird"
        assert not m.is_plural
        assert toks[m.insertion_token_index].surface == "bird"

    def test_single_noun_passthrough(self):
        mentions = extract_noun_mentions(tag("a red circle"))
        assert [m.lemma_singular for m in mentions] == ["circle"]

    def test_plural_mentions(self):
        mentions = extract_noun_mentions(tag("two birds on branches"))
        assert [(m.lemma_singular, m.is_plural) for m in mentions] == [
            ("bird", True),
            ("branch", True),
        ]

    def test_with_phrase_extends_insertion(self):
        toks = tag("a flower with white and pink petals")
        mentions = extract_noun_mentions(toks)
        assert len(mentions) == 1
        m = mentions[0]
        assert m.lemma_singular == "flower"
        assert toks[m.insertion_token_index].surface == "petals"
        assert toks[m.head_token_index].surface == "flower"

    def test_possessive_clitic_extends_insertion(self):
        toks = tag("a bird's red beak")
        mentions = extract_noun_mentions(toks)
        assert len(mentions) == 1
        m = mentions[0]
        assert m.lemma_singular == "bird"
        assert toks[m.insertion_token_index].surface == "beak"

    def test_of_after_description_does_not_reassign(self):
        toks = tag("a bird with a crown of feathers")
        mentions = extract_noun_mentions(toks)
        assert len(mentions) == 1
        assert mentions[0].lemma_singular == "bird"
        assert toks[mentions[0].insertion_token_index].surface == "feathers"

    def test_non_marker_preposition_does_not_extend(self):
        toks = tag("a flower on a branch")
        mentions = extract_noun_mentions(toks)
        assert [m.lemma_singular for m in mentions] == ["flower", "branch"]
        assert toks[mentions[0].insertion_token_index].surface == "flower"

    def test_no_nouns(self):
        assert extract_noun_mentions(tag("very quietly moving")) == []

    def test_duplicate_nouns_are_independent(self):
        mentions = extract_noun_mentions(tag("a bird and a bird"))
        assert [m.lemma_singular for m in mentions] == ["bird", "bird"]
        assert len({m.insertion_token_index for m in mentions}) == 2

    def test_insertion_indices_strictly_increasing(self):
        captions = [
            "a bird with a beak and a dog near a tree",
            "the wing of the bird above flowers with petals",
            "two birds on branches with leaves",
        ]
        for caption in captions:
            mentions = extract_noun_mentions(tag(caption))
            idxs = [m.insertion_token_index for m in mentions]
            assert idxs == sorted(idxs)
            assert len(idxs) == len(set(idxs))

    def test_skip_compounds_drops_adjacent_noun_runs(self):
        toks = tag("a fire truck near a tree")
        default = extract_noun_mentions(toks)
        assert [m.lemma_singular for m in default] == ["fire", "truck", "tree"]
        skipped = extract_noun_mentions(toks, skip_compounds=True)
        assert [m.lemma_singular for m in skipped] == ["tree"]


class TestAlignPretagged:
    def test_round_trip_with_builtin_tagger(self):
        caption = "a bird with a red beak"
        pairs = [(t.surface, t.tag) for t in tag(caption)]
        aligned = align_pretagged(caption, pairs)
        assert [t.char_span for t in aligned] == [t.char_span for t in tag(caption)]

    def test_custom_tokenization_respected(self):
        caption = "a fire truck"
        aligned = align_pretagged(caption, [("a", DET), ("fire truck", NOUN)])
        assert [t.surface for t in aligned] == ["a", "fire truck"]
        assert aligned[1].tag == NOUN

    def test_misaligned_rejected(self):
        with pytest.raises(ValueError):
            align_pretagged("a bird", [("a", DET), ("dog", NOUN)])

    def test_unknown_tag_rejected(self):
        with pytest.raises(ValueError):
            align_pretagged("a bird", [("a", "DETERMINER"), ("bird", NOUN)])

    def test_leftover_text_rejected(self):
        with pytest.raises(ValueError):
            align_pretagged("a bird flies", [("a", DET), ("bird", NOUN)])
