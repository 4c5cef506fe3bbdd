#ifndef KPCLUSTER_VECTORIZER_HPP
#define KPCLUSTER_VECTORIZER_HPP

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kpcluster/text_pipeline.hpp"

namespace kpcluster {

// The corpus term set in lexicographic (byte) order, with a dense id per term.
struct Vocabulary {
    std::vector<std::string> terms;
    std::unordered_map<std::string, int> index;

    // Throws std::invalid_argument on an empty corpus.
    static Vocabulary build(const std::vector<TokenSequence>& docs);
    int size() const { return static_cast<int>(terms.size()); }
};

// Sparse tf-idf vector over the vocabulary: strictly positive weights only,
// sorted by term id.
struct TermVector {
    std::string doc_id;
    int dim = 0;
    std::vector<std::pair<int, double>> weights;
};

// w(t, a) = (count(t, a) / len(a)) * ln(N / df(t) + 1), with N the number of
// documents (empty ones included) and df over documents containing t. Empty
// documents yield zero vectors. Throws std::invalid_argument if every
// document is empty.
std::vector<TermVector> tfidf_vectors(const std::vector<TokenSequence>& docs,
                                      const Vocabulary& vocab);
std::vector<TermVector> tfidf_vectors(const std::vector<TokenSequence>& docs);

// Sparse triplet dump, one `doc_id term_id weight` per line, weights at 9
// significant digits.
std::string dump_vectors(const std::vector<TermVector>& vectors);

}  // namespace kpcluster

#endif  // KPCLUSTER_VECTORIZER_HPP
