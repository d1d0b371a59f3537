"""Cosine similarity between weighted vectors and the 4x4 class matrix."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .corpus import GRADES, ClassDocument, GradedCorpus
from .errors import VocabularyMismatchError, ZeroVectorError
from .tokenizer import TokenSequence
from .weighting import DocumentCollection, WeightedVector, pair_vocabulary, weighted_vector


@dataclass(frozen=True)
class PairSimilarity:
    """Similarity of one (query, class) pair."""

    score: float
    shared_unique: int
    pair_vocab_size: int


@dataclass(frozen=True)
class ClassSimilarityMatrix:
    """4x4 grid of pairwise class similarities, indexed by grade."""

    cells: tuple[tuple[PairSimilarity, ...], ...]

    def cell(self, row_grade: int, col_grade: int) -> PairSimilarity:
        return self.cells[row_grade - 1][col_grade - 1]


def cosine(v: WeightedVector, w: WeightedVector) -> float:
    """Normalized dot product of two vectors over the same vocabulary.

    Nonnegative coordinates keep the result in [0, 1]; it is clamped at
    1.0 against float rounding on identical vectors.
    """
    if v.vocab is not w.vocab and v.vocab.terms != w.vocab.terms:
        raise VocabularyMismatchError("vectors are aligned to different vocabularies")
    dot = norm_v = norm_w = 0.0
    for a, b in zip(v.coords, w.coords):
        dot += a * b
        norm_v += a * a
        norm_w += b * b
    if norm_v == 0.0 or norm_w == 0.0:
        raise ZeroVectorError("cosine is undefined for an all-zero vector")
    return min(1.0, dot / (math.sqrt(norm_v) * math.sqrt(norm_w)))


def pair_similarity(
    query: TokenSequence, class_doc: ClassDocument, coll: DocumentCollection
) -> PairSimilarity:
    """Score one query against one class over their pair vocabulary."""
    vocab = pair_vocabulary(query, class_doc.tokens)
    v = weighted_vector(query, vocab, coll)
    w = weighted_vector(class_doc.tokens, vocab, coll)
    shared = len(query.types & class_doc.tokens.types)
    return PairSimilarity(cosine(v, w), shared, len(vocab))


def class_similarity_matrix(corpus: GradedCorpus) -> ClassSimilarityMatrix:
    """Pairwise similarities of the four class documents (N = 4).

    Cell (i, j) scores class j's text against class i; the collection is
    the four class documents, with no query involved. The result is
    symmetric and its diagonal is 1 within float rounding.
    """
    coll = DocumentCollection(tuple(corpus.classes[g].tokens for g in GRADES))
    rows = tuple(
        tuple(pair_similarity(corpus.classes[j].tokens, corpus.classes[i], coll) for j in GRADES)
        for i in GRADES
    )
    return ClassSimilarityMatrix(rows)
