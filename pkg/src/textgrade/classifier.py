"""End-to-end grade assignment.

A query is tokenized and first checked for vocabulary containment: the
lowest grade whose vocabulary includes every query term wins outright
with score 1. Otherwise all four grades are scored by TF-IDF cosine
over the collection of the four class documents plus the query (N = 5)
and the best-scoring grade is chosen, lowest grade winning ties. Cosine
scores for the remaining grades are computed on both paths so reports
always carry all four.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import GRADES, GradedCorpus, Vocabulary
from .errors import EmptyQueryError
from .similarity import pair_similarity
from .tokenizer import tokenize
from .weighting import DocumentCollection

CONTAINMENT = "containment"
COSINE_ARGMAX = "cosine-argmax"


@dataclass(frozen=True)
class ClassificationResult:
    """Per-grade scores and the chosen grade with its decision path."""

    chosen_grade: int
    scores: dict[int, float]
    decision: str
    shared_unique: dict[int, int]


def containment_class(query_vocab: Vocabulary, corpus: GradedCorpus) -> int | None:
    """Smallest grade whose vocabulary contains every query term, if any."""
    for grade in GRADES:
        if query_vocab.term_set <= corpus.classes[grade].tokens.types:
            return grade
    return None


def classify(raw_text: str, corpus: GradedCorpus) -> ClassificationResult:
    """Assign the query text to the most similar grade."""
    query = tokenize(raw_text)
    if not query:
        raise EmptyQueryError("input text contains no tokens")

    coll = DocumentCollection(tuple(corpus.classes[g].tokens for g in GRADES) + (query,))
    pairs = {g: pair_similarity(query, corpus.classes[g], coll) for g in GRADES}
    scores = {g: pairs[g].score for g in GRADES}
    shared = {g: pairs[g].shared_unique for g in GRADES}

    contained = containment_class(Vocabulary.from_tokens(query), corpus)
    if contained is not None:
        scores[contained] = 1.0
        return ClassificationResult(contained, scores, CONTAINMENT, shared)

    chosen = GRADES[0]
    for grade in GRADES[1:]:
        if scores[grade] > scores[chosen]:
            chosen = grade
    return ClassificationResult(chosen, scores, COSINE_ARGMAX, shared)
