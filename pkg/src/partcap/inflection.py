"""Rule-based English noun inflection.

An irregular table (``data/irregular_plurals.tsv``, one ``plural<TAB>singular``
pair per line) is consulted first, then suffix rules. ``singularize`` is a
fixed point on singular nouns, which is what plurality detection relies on.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

# s-final singulars the regular strip-s rule would mangle.
_SINGULAR_S_FINAL = frozenset(
    {"lens", "gas", "atlas", "canvas", "alias", "bias", "chaos", "cosmos"}
)

_VOWELS = "aeiou"


def _load_irregulars() -> tuple[dict, dict]:
    plural_to_singular = {}
    singular_to_plural = {}
    text = resources.files("partcap.data").joinpath("irregular_plurals.tsv").read_text()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        plural, singular = line.split("\t")
        plural_to_singular[plural] = singular
        singular_to_plural.setdefault(singular, plural)
    return plural_to_singular, singular_to_plural


@lru_cache(maxsize=1)
def _irregulars() -> tuple[dict, dict]:
    return _load_irregulars()


def singularize(word: str) -> str:
    """Return the singular form of a lowercase noun.

    Singular inputs come back unchanged; applying the function twice is the
    same as applying it once.
    """
    plural_to_singular, singular_to_plural = _irregulars()
    if word in plural_to_singular:
        return plural_to_singular[word]
    if word in singular_to_plural or word in _SINGULAR_S_FINAL:
        return word
    if word.endswith("ss") or len(word) <= 2:
        return word
    if word.endswith("ies"):
        # short forms like "ties"/"pies" are stem+s, not -y inflections
        return word[:-3] + "y" if len(word) > 4 else word[:-1]
    if word.endswith("es") and len(word) > 3:
        stem = word[:-2]
        # bare-s and bare-o stems (house+s, shoe+s, radio+s) fall through to
        # the strip-s rule; bus/tomato style -es plurals are in the table
        if stem.endswith(("ss", "x", "z", "ch", "sh")):
            return stem
    if word.endswith("s") and not word.endswith(("us", "is")):
        return word[:-1]
    return word


def pluralize(word: str) -> str:
    """Return the plural form of a lowercase singular noun."""
    plural_to_singular, singular_to_plural = _irregulars()
    if word in singular_to_plural:
        return singular_to_plural[word]
    if word in plural_to_singular:
        return word
    if word.endswith(("s", "x", "z", "ch", "sh")):
        return word + "es"
    if word.endswith("y") and len(word) > 1 and word[-2] not in _VOWELS:
        return word[:-1] + "ies"
    return word + "s"


def is_plural(word: str) -> bool:
    """True when a lowercase noun is in plural form.

    Invariant nouns (sheep, species) count as singular; deterministic by
    construction.
    """
    return singularize(word) != word
