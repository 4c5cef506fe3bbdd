#include "kpcluster/vectorizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

namespace kpcluster {

Vocabulary Vocabulary::build(const std::vector<TokenSequence>& docs) {
    if (docs.empty()) throw std::invalid_argument("empty corpus");
    std::set<std::string> distinct;
    for (const TokenSequence& doc : docs) {
        distinct.insert(doc.tokens.begin(), doc.tokens.end());
    }
    Vocabulary vocab;
    vocab.terms.assign(distinct.begin(), distinct.end());
    vocab.index.reserve(vocab.terms.size());
    for (std::size_t i = 0; i < vocab.terms.size(); ++i) {
        vocab.index.emplace(vocab.terms[i], static_cast<int>(i));
    }
    return vocab;
}

std::vector<TermVector> tfidf_vectors(const std::vector<TokenSequence>& docs,
                                      const Vocabulary& vocab) {
    if (docs.empty()) throw std::invalid_argument("empty corpus");
    const bool all_empty =
        std::all_of(docs.begin(), docs.end(),
                    [](const TokenSequence& d) { return d.tokens.empty(); });
    if (all_empty) throw std::invalid_argument("all documents empty");

    const double n_docs = static_cast<double>(docs.size());
    std::vector<int> doc_freq(static_cast<std::size_t>(vocab.size()), 0);
    std::vector<std::map<int, int>> counts(docs.size());
    for (std::size_t a = 0; a < docs.size(); ++a) {
        for (const std::string& token : docs[a].tokens) {
            ++counts[a][vocab.index.at(token)];
        }
        for (const auto& [term_id, count] : counts[a]) {
            ++doc_freq[static_cast<std::size_t>(term_id)];
        }
    }

    std::vector<TermVector> vectors(docs.size());
    for (std::size_t a = 0; a < docs.size(); ++a) {
        TermVector& vec = vectors[a];
        vec.doc_id = docs[a].source_id;
        vec.dim = vocab.size();
        const double len = static_cast<double>(docs[a].tokens.size());
        vec.weights.reserve(counts[a].size());
        for (const auto& [term_id, count] : counts[a]) {
            const double idf =
                std::log(n_docs / doc_freq[static_cast<std::size_t>(term_id)] + 1.0);
            vec.weights.emplace_back(term_id, count / len * idf);
        }
    }
    return vectors;
}

std::vector<TermVector> tfidf_vectors(const std::vector<TokenSequence>& docs) {
    return tfidf_vectors(docs, Vocabulary::build(docs));
}

std::string dump_vectors(const std::vector<TermVector>& vectors) {
    std::string out;
    char buffer[64];
    for (const TermVector& vec : vectors) {
        for (const auto& [term_id, weight] : vec.weights) {
            std::snprintf(buffer, sizeof(buffer), " %d %.9g", term_id, weight);
            out += vec.doc_id;
            out += buffer;
            out += '\n';
        }
    }
    return out;
}

}  // namespace kpcluster
