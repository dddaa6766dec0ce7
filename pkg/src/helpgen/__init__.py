"""Monotonicity-driven generation of natural language inference pairs."""
from .deriv import Sentence, parse_category, read_corpus
from .genpairs import GenConfig, InferencePair, generate, generate_corpus
from .oracle import check_entailment, to_logical_form, verify_dataset
from .polarity import OperatorLexicon, Polarity, compose, find_sites, mark
from .taxonomy import Direction, Taxonomy, lesk, replacements_for

__all__ = [
    "Direction", "GenConfig", "InferencePair", "OperatorLexicon", "Polarity", "Sentence",
    "Taxonomy", "check_entailment", "compose", "find_sites", "generate", "generate_corpus",
    "lesk", "mark", "parse_category", "read_corpus", "replacements_for", "to_logical_form",
    "verify_dataset",
]
__version__ = "0.1.0"
