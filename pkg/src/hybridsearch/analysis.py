"""Query/document text analysis: tokenization, stopword removal, n-grams.

Both repositories (data sources and visualizations) and incoming queries are
encoded with the same analyzer so that scoring stays symmetric. Documents may
additionally receive index-time synonym expansion; expanded tokens never count
toward document length.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources

__all__ = ["AnalyzerSettings", "TokenSet", "encode", "word_tokens", "stopword_set"]

_TOKEN_RE = re.compile(r"\d+\.\d+|[a-z0-9]+")

_STOPWORDS: frozenset[str] | None = None


def stopword_set() -> frozenset[str]:
    """The bundled stopword list (lowercase), loaded once."""
    global _STOPWORDS
    if _STOPWORDS is None:
        text = resources.files("hybridsearch.data").joinpath("stopwords.txt").read_text()
        words = [ln.strip() for ln in text.splitlines()
                 if ln.strip() and not ln.startswith("#")]
        _STOPWORDS = frozenset(words)
    return _STOPWORDS


@dataclass(frozen=True)
class AnalyzerSettings:
    """Analyzer configuration, serialized alongside persisted indices."""

    max_ngram: int = 3
    expand_synonyms: bool = False

    def to_dict(self) -> dict:
        return {"max_ngram": self.max_ngram, "expand_synonyms": self.expand_synonyms}

    @classmethod
    def from_dict(cls, data: dict) -> "AnalyzerSettings":
        return cls(max_ngram=int(data["max_ngram"]),
                   expand_synonyms=bool(data["expand_synonyms"]))


@dataclass
class TokenSet:
    """Multiset of lowercase tokens (unigrams through trigrams).

    ``length`` is the count of original word tokens after stopword removal;
    higher-order n-grams and expanded synonyms do not contribute to it.
    """

    counts: Counter = field(default_factory=Counter)
    length: int = 0

    def distinct(self) -> list[str]:
        return sorted(self.counts)

    def __contains__(self, token: str) -> bool:
        return token in self.counts

    def __len__(self) -> int:
        return sum(self.counts.values())

    def merge(self, other: "TokenSet") -> None:
        self.counts.update(other.counts)
        self.length += other.length


def word_tokens(text: str) -> list[str]:
    """Lowercase word sequence with stopwords and conjunctions removed."""
    stop = stopword_set()
    return [t for t in _TOKEN_RE.findall(text.lower()) if t not in stop]


def encode(text: str, settings: AnalyzerSettings | None = None,
           synonyms: dict[str, list[str]] | None = None) -> TokenSet:
    """Encode text into its n-gram token multiset.

    When ``settings.expand_synonyms`` is set and a synonym table is given,
    each unigram also contributes its listed synonyms (index-time expansion).
    """
    settings = settings or AnalyzerSettings()
    words = word_tokens(text)
    counts: Counter = Counter()
    for order in range(1, settings.max_ngram + 1):
        for i in range(len(words) - order + 1):
            counts[" ".join(words[i:i + order])] += 1
    if settings.expand_synonyms and synonyms:
        for word in list(words):
            for syn in synonyms.get(word, ()):
                counts[syn.lower()] += 1
    return TokenSet(counts=counts, length=len(words))
