#ifndef KPCLUSTER_TEXT_PIPELINE_HPP
#define KPCLUSTER_TEXT_PIPELINE_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace kpcluster {

enum class StemmerKind { identity, light };

// Accepts "identity", "none" and "light". Throws std::invalid_argument otherwise.
StemmerKind stemmer_from_name(std::string_view name);
std::string_view stemmer_name(StemmerKind kind);

std::set<char32_t> default_sentence_delimiters();

struct CleaningConfig {
    std::set<std::string> stopword_list;
    bool remove_latin = false;
    StemmerKind stemmer = StemmerKind::identity;
    std::set<char32_t> sentence_delimiters = default_sentence_delimiters();
};

// One cleaned sentence: an ordered list of word tokens, free of whitespace,
// punctuation and special characters.
struct TokenSequence {
    std::vector<std::string> tokens;
    std::string source_id;
    int unit_index = 0;
};

// Splits text on the configured delimiter characters; pieces are trimmed and
// empty pieces dropped.
std::vector<std::string> segment_sentences(std::string_view text,
                                           const CleaningConfig& config);

// Splits a sentence on whitespace and strips punctuation/special characters
// from every chunk. With remove_latin set, all-Latin tokens are dropped and
// Latin letters are stripped out of mixed-script tokens.
std::vector<std::string> tokenize(std::string_view sentence,
                                  const CleaningConfig& config);

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const CleaningConfig& config);

// Light stemming strips at most one single-letter prefix (و ف ب ك ل), then the
// article ال, then one longest-match suffix (ات ون ين ها ة); a strip is applied
// only if at least two code points remain.
std::string stem(const std::string& token, StemmerKind stemmer);

// normalize -> segment_sentences -> tokenize -> remove_stopwords -> stem,
// one TokenSequence per sentence that still has tokens.
std::vector<TokenSequence> clean_document(std::string_view text,
                                          const CleaningConfig& config,
                                          const std::string& source_id = {});

// Stop-word list file: UTF-8, one token per line, '#' lines and blank lines
// ignored. Entries are normalized the same way document text is.
std::set<std::string> load_stopwords(const std::string& path);

}  // namespace kpcluster

#endif  // KPCLUSTER_TEXT_PIPELINE_HPP
