#ifndef KPCLUSTER_KEYPHRASE_HPP
#define KPCLUSTER_KEYPHRASE_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kpcluster/text_pipeline.hpp"

namespace kpcluster {

// Term statistics over a document's units (its cleaned sentences), backing the
// tf-idf weights used to score phrases. Units are 1-based.
struct UnitStats {
    int n_units = 0;
    std::map<int, int> unit_lengths;                        // unit -> word count
    std::map<std::string, std::map<int, int>> term_counts;  // term -> unit -> count
    std::map<std::string, int> doc_freq;                    // term -> #units with it

    static UnitStats from_sequences(const std::vector<TokenSequence>& units);
    bool contains(const std::string& term) const {
        return term_counts.find(term) != term_counts.end();
    }
};

// tfidf(w) = [sum over units u containing w of count(w,u)/len(u)] * ln(N/df(w) + 1).
// Throws std::invalid_argument("term not in stats") for an unknown term.
double tfidf_word(const std::string& w, const UnitStats& stats);

// F(P): the phrase length for 1..3 words, 0 otherwise.
int length_factor(int p_len);

// S = unit_count * F(|phrase|) * sum of tfidf over the phrase's words.
double score_node(const std::vector<std::string>& phrase, int unit_count,
                  const UnitStats& stats);

struct Keyphrase {
    std::vector<std::string> words;  // 1..3 words
    double score = 0.0;
    int unit_count = 0;  // number of units containing the phrase
};

struct ExtractionConfig {
    int top_k = 10;
};

// Scores every distinct contiguous 1-3 word phrase of the given units and
// returns the top_k by descending score; ties broken by shorter phrase first,
// then lexicographically. Empty input yields an empty list.
std::vector<Keyphrase> rank_phrases(const std::vector<TokenSequence>& units,
                                    const ExtractionConfig& config);

// clean_document + rank_phrases. A document that cleans to zero sentences
// yields an empty list.
std::vector<Keyphrase> extract_keyphrases(std::string_view doc_text,
                                          const CleaningConfig& cleaning,
                                          const ExtractionConfig& extraction,
                                          const std::string& source_id = {});

// The words of the top keyphrases concatenated in rank order; this is the
// token sequence the vectorizer consumes for the keyphrase condition.
TokenSequence keyphrase_representation(std::string_view doc_text,
                                       const CleaningConfig& cleaning,
                                       const ExtractionConfig& extraction,
                                       const std::string& source_id = {});

}  // namespace kpcluster

#endif  // KPCLUSTER_KEYPHRASE_HPP
