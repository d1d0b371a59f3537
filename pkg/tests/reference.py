"""Independent brute-force reference for cross-checking the library.

Everything here recomputes vocabularies, document frequencies, TF, IDF,
and cosine from scratch with naive loops over plain lists of strings.
It deliberately imports nothing from the textgrade package.
"""

import math

GRADES = (1, 2, 3, 4)


def ref_vocab(tokens):
    out = []
    for t in sorted(tokens):
        if t not in out:
            out.append(t)
    return out


def ref_union_vocab(a, b):
    return ref_vocab(list(a) + list(b))


def ref_tf(term, doc):
    n = 0
    for t in doc:
        if t == term:
            n += 1
    return n / len(doc)


def ref_df(term, docs):
    n = 0
    for d in docs:
        if term in d:
            n += 1
    return n


def ref_idf(term, docs):
    return math.log((1 + len(docs)) / (1 + ref_df(term, docs))) + 1.0


def ref_vector(doc, vocab, docs):
    v = []
    for term in vocab:
        if term in doc:
            v.append(ref_tf(term, doc) * ref_idf(term, docs))
        else:
            v.append(0.0)
    return v


def ref_cosine(v, w):
    dot = p = q = 0.0
    for j in range(len(v)):
        dot += v[j] * w[j]
        p += v[j] * v[j]
        q += w[j] * w[j]
    c = dot / (math.sqrt(p) * math.sqrt(q))
    if c > 1.0:
        c = 1.0
    return c


def ref_pair_similarity(query, class_doc, docs):
    vocab = ref_union_vocab(query, class_doc)
    v = ref_vector(query, vocab, docs)
    w = ref_vector(class_doc, vocab, docs)
    shared = 0
    for term in ref_vocab(query):
        if term in class_doc:
            shared += 1
    return ref_cosine(v, w), shared


def ref_classify(query, classes):
    """Full algorithm over token lists: containment first, else argmax.

    `classes` maps grade 1-4 to that grade's token list. Returns a dict
    with chosen, scores, decision, and shared keys.
    """
    docs = [classes[g] for g in GRADES] + [query]
    scores = {}
    shared = {}
    for g in GRADES:
        scores[g], shared[g] = ref_pair_similarity(query, classes[g], docs)

    contained = None
    for g in GRADES:
        if all(term in classes[g] for term in set(query)):
            contained = g
            break
    if contained is not None:
        scores[contained] = 1.0
        return {"chosen": contained, "scores": scores, "decision": "containment", "shared": shared}

    chosen = 1
    for g in (2, 3, 4):
        if scores[g] > scores[chosen]:
            chosen = g
    return {"chosen": chosen, "scores": scores, "decision": "cosine-argmax", "shared": shared}
