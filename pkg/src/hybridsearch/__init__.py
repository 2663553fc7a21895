"""Hybrid search over data repositories: analytical Q&A chart generation plus
ranked, facetable pre-authored visualization results."""

__version__ = "0.1.0"
