#include "kpcluster/keyphrase.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kpcluster/suffix_tree.hpp"

namespace kpcluster {

UnitStats UnitStats::from_sequences(const std::vector<TokenSequence>& units) {
    UnitStats stats;
    stats.n_units = static_cast<int>(units.size());
    for (std::size_t k = 0; k < units.size(); ++k) {
        const int unit = static_cast<int>(k) + 1;
        stats.unit_lengths[unit] = static_cast<int>(units[k].tokens.size());
        for (const std::string& token : units[k].tokens) {
            ++stats.term_counts[token][unit];
        }
    }
    for (const auto& [term, counts] : stats.term_counts) {
        stats.doc_freq[term] = static_cast<int>(counts.size());
    }
    return stats;
}

double tfidf_word(const std::string& w, const UnitStats& stats) {
    auto it = stats.term_counts.find(w);
    if (it == stats.term_counts.end()) {
        throw std::invalid_argument("term not in stats: " + w);
    }
    double tf = 0.0;
    for (const auto& [unit, count] : it->second) {
        tf += static_cast<double>(count) / stats.unit_lengths.at(unit);
    }
    const double df = stats.doc_freq.at(w);
    return tf * std::log(stats.n_units / df + 1.0);
}

int length_factor(int p_len) { return (p_len >= 1 && p_len <= 3) ? p_len : 0; }

double score_node(const std::vector<std::string>& phrase, int unit_count,
                  const UnitStats& stats) {
    double sum = 0.0;
    for (const std::string& w : phrase) sum += tfidf_word(w, stats);
    return unit_count * length_factor(static_cast<int>(phrase.size())) * sum;
}

std::vector<Keyphrase> rank_phrases(const std::vector<TokenSequence>& units,
                                    const ExtractionConfig& config) {
    if (config.top_k < 1) throw std::invalid_argument("top_k must be >= 1");
    if (units.empty()) return {};

    const GeneralizedSuffixTree tree = GeneralizedSuffixTree::build(units);
    const UnitStats stats = UnitStats::from_sequences(units);

    std::vector<Keyphrase> ranked;
    for (const auto& info : tree.phrases_up_to(3)) {
        ranked.push_back(Keyphrase{info.words,
                                   score_node(info.words, info.unit_count, stats),
                                   info.unit_count});
    }
    std::sort(ranked.begin(), ranked.end(),
              [](const Keyphrase& a, const Keyphrase& b) {
                  if (a.score != b.score) return a.score > b.score;
                  if (a.words.size() != b.words.size()) {
                      return a.words.size() < b.words.size();
                  }
                  return a.words < b.words;
              });
    if (static_cast<int>(ranked.size()) > config.top_k) {
        ranked.resize(static_cast<std::size_t>(config.top_k));
    }
    return ranked;
}

std::vector<Keyphrase> extract_keyphrases(std::string_view doc_text,
                                          const CleaningConfig& cleaning,
                                          const ExtractionConfig& extraction,
                                          const std::string& source_id) {
    return rank_phrases(clean_document(doc_text, cleaning, source_id), extraction);
}

TokenSequence keyphrase_representation(std::string_view doc_text,
                                       const CleaningConfig& cleaning,
                                       const ExtractionConfig& extraction,
                                       const std::string& source_id) {
    TokenSequence seq;
    seq.source_id = source_id;
    for (const Keyphrase& phrase :
         extract_keyphrases(doc_text, cleaning, extraction, source_id)) {
        seq.tokens.insert(seq.tokens.end(), phrase.words.begin(),
                          phrase.words.end());
    }
    return seq;
}

}  // namespace kpcluster
