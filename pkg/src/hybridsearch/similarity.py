"""String and concept similarity primitives used for fuzzy and semantic matching."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .corpus import Taxonomy

__all__ = ["levenshtein", "normalized_levenshtein", "within_distance", "wu_palmer"]


def levenshtein(a: str, b: str) -> int:
    """Edit distance (insert/delete/substitute, unit costs)."""
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    if len(a) < len(b):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        current = [i]
        for j, cb in enumerate(b, start=1):
            cost = 0 if ca == cb else 1
            current.append(min(previous[j] + 1, current[j - 1] + 1,
                               previous[j - 1] + cost))
        previous = current
    return previous[-1]


def normalized_levenshtein(a: str, b: str) -> float:
    """Edit distance divided by the longer length; 0.0 for two empty strings."""
    if not a and not b:
        return 0.0
    return levenshtein(a, b) / max(len(a), len(b))


def within_distance(a: str, b: str, max_norm: float) -> bool:
    """True when normalized_levenshtein(a, b) <= max_norm.

    Cheap length pre-check, then a banded computation that abandons rows whose
    minimum already exceeds the absolute budget — the hot path for fuzzy
    vocabulary scans.
    """
    longest = max(len(a), len(b))
    if longest == 0:
        return True
    budget = int(max_norm * longest + 1e-9)
    if abs(len(a) - len(b)) > budget:
        return False
    if budget == 0:
        return a == b
    if len(a) < len(b):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        current = [i]
        row_min = i
        for j, cb in enumerate(b, start=1):
            cost = 0 if ca == cb else 1
            value = min(previous[j] + 1, current[j - 1] + 1, previous[j - 1] + cost)
            current.append(value)
            if value < row_min:
                row_min = value
        if row_min > budget:
            return False
        previous = current
    return previous[-1] <= budget


def wu_palmer(a: str, b: str, taxonomy: "Taxonomy") -> float:
    """Concept similarity 2*depth(LCS) / (depth(a) + depth(b)).

    The least common subsumer is the deepest shared ancestor; a node counts as
    its own ancestor, so wu_palmer(x, x) == 1.0.
    """
    depth_a = taxonomy.depth(a)
    depth_b = taxonomy.depth(b)
    ancestors_a = taxonomy.ancestor_chain(a)
    ancestors_b = set(taxonomy.ancestor_chain(b))
    lcs_depth = 0
    for node in ancestors_a:
        if node in ancestors_b:
            lcs_depth = taxonomy.depth(node)
            break
    return 2.0 * lcs_depth / (depth_a + depth_b)
