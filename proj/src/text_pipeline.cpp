#include "kpcluster/text_pipeline.hpp"

#include <fstream>
#include <stdexcept>

#include "kpcluster/unicode.hpp"

namespace kpcluster {

StemmerKind stemmer_from_name(std::string_view name) {
    if (name == "identity" || name == "none") return StemmerKind::identity;
    if (name == "light") return StemmerKind::light;
    throw std::invalid_argument("unknown stemmer: " + std::string(name));
}

std::string_view stemmer_name(StemmerKind kind) {
    return kind == StemmerKind::light ? "light" : "none";
}

std::set<char32_t> default_sentence_delimiters() {
    return {U'.', U'!', U'?', 0x061F /* ؟ */, 0x061B /* ؛ */, U'\n'};
}

std::vector<std::string> segment_sentences(std::string_view text,
                                           const CleaningConfig& config) {
    const std::u32string cps = utf8_decode(text);
    std::vector<std::string> sentences;
    std::u32string current;
    auto flush = [&] {
        std::size_t begin = 0;
        std::size_t end = current.size();
        while (begin < end && is_space(current[begin])) ++begin;
        while (end > begin && is_space(current[end - 1])) --end;
        if (end > begin) {
            sentences.push_back(
                utf8_encode(std::u32string_view(current).substr(begin, end - begin)));
        }
        current.clear();
    };
    for (char32_t cp : cps) {
        if (config.sentence_delimiters.count(cp)) {
            flush();
        } else {
            current.push_back(cp);
        }
    }
    flush();
    return sentences;
}

std::vector<std::string> tokenize(std::string_view sentence,
                                  const CleaningConfig& config) {
    const std::u32string cps = utf8_decode(sentence);
    std::vector<std::string> tokens;
    std::u32string chunk;
    auto flush = [&] {
        if (chunk.empty()) return;
        std::u32string kept;
        bool all_latin = true;
        for (char32_t cp : chunk) {
            if (is_special_char(cp)) continue;
            kept.push_back(cp);
            if (!is_latin_letter(cp)) all_latin = false;
        }
        chunk.clear();
        if (kept.empty()) return;
        if (config.remove_latin) {
            if (all_latin) return;
            std::u32string mixed;
            for (char32_t cp : kept) {
                if (!is_latin_letter(cp)) mixed.push_back(cp);
            }
            kept = std::move(mixed);
            if (kept.empty()) return;
        }
        tokens.push_back(utf8_encode(kept));
    };
    for (char32_t cp : cps) {
        if (is_space(cp)) {
            flush();
        } else {
            chunk.push_back(cp);
        }
    }
    flush();
    return tokens;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const CleaningConfig& config) {
    std::vector<std::string> kept;
    kept.reserve(tokens.size());
    for (const std::string& token : tokens) {
        if (!config.stopword_list.count(token)) kept.push_back(token);
    }
    return kept;
}

namespace {

constexpr char32_t kWaw = 0x0648;
constexpr char32_t kFeh = 0x0641;
constexpr char32_t kBeh = 0x0628;
constexpr char32_t kKaf = 0x0643;
constexpr char32_t kLam = 0x0644;
constexpr char32_t kAlef = 0x0627;
constexpr char32_t kTehMarbuta = 0x0629;
constexpr char32_t kTeh = 0x062A;
constexpr char32_t kNoon = 0x0646;
constexpr char32_t kYeh = 0x064A;
constexpr char32_t kHeh = 0x0647;

bool is_single_prefix(char32_t cp) {
    return cp == kWaw || cp == kFeh || cp == kBeh || cp == kKaf || cp == kLam;
}

std::u32string light_stem(std::u32string word) {
    if (!word.empty() && is_single_prefix(word[0]) && word.size() - 1 >= 2) {
        word.erase(0, 1);
    }
    if (word.size() >= 4 && word[0] == kAlef && word[1] == kLam) {
        word.erase(0, 2);
    }
    static const std::u32string suffixes[] = {
        {kAlef, kTeh},   // ات
        {kWaw, kNoon},   // ون
        {kYeh, kNoon},   // ين
        {kHeh, kAlef},   // ها
        {kTehMarbuta},   // ة
    };
    for (const std::u32string& suffix : suffixes) {
        if (word.size() >= suffix.size() + 2 &&
            word.compare(word.size() - suffix.size(), suffix.size(), suffix) == 0) {
            word.erase(word.size() - suffix.size());
            break;
        }
    }
    return word;
}

}  // namespace

std::string stem(const std::string& token, StemmerKind stemmer) {
    if (stemmer == StemmerKind::identity) return token;
    return utf8_encode(light_stem(utf8_decode(token)));
}

std::vector<TokenSequence> clean_document(std::string_view text,
                                          const CleaningConfig& config,
                                          const std::string& source_id) {
    const std::string normalized = normalize(text);
    std::vector<TokenSequence> units;
    int unit_index = 0;
    for (const std::string& sentence : segment_sentences(normalized, config)) {
        std::vector<std::string> tokens =
            remove_stopwords(tokenize(sentence, config), config);
        if (config.stemmer != StemmerKind::identity) {
            for (std::string& token : tokens) token = stem(token, config.stemmer);
        }
        if (tokens.empty()) continue;
        units.push_back(TokenSequence{std::move(tokens), source_id, unit_index++});
    }
    return units;
}

std::set<std::string> load_stopwords(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open stop-word file: " + path);
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        std::u32string cps = utf8_decode(line);
        std::size_t begin = 0;
        std::size_t end = cps.size();
        while (begin < end && is_space(cps[begin])) ++begin;
        while (end > begin && is_space(cps[end - 1])) --end;
        if (begin == end || cps[begin] == U'#') continue;
        words.insert(utf8_encode(
            normalize(std::u32string_view(cps).substr(begin, end - begin))));
    }
    return words;
}

}  // namespace kpcluster
