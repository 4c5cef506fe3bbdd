#ifndef KPCLUSTER_UNICODE_HPP
#define KPCLUSTER_UNICODE_HPP

#include <string>
#include <string_view>

namespace kpcluster {

// Decodes UTF-8 into code points. Throws std::invalid_argument naming the
// offending byte offset on malformed input (overlong forms, bad continuation
// bytes, surrogates, out-of-range values).
std::u32string utf8_decode(std::string_view text);

std::string utf8_encode(std::u32string_view code_points);

bool is_space(char32_t cp);
bool is_latin_letter(char32_t cp);

// The character set stripped out of tokens: ASCII punctuation plus the Arabic
// comma, semicolon and question mark.
bool is_special_char(char32_t cp);

// Orthographic normalization applied ahead of segmentation: removes tatweel
// and the Arabic diacritic marks, folds the alef variants to bare alef and
// alef maqsura to yeh. Idempotent.
std::u32string normalize(std::u32string_view code_points);
std::string normalize(std::string_view text);

}  // namespace kpcluster

#endif  // KPCLUSTER_UNICODE_HPP
