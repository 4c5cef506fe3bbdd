#include "kpcluster/text_pipeline.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kpcluster/unicode.hpp"

namespace kpcluster {
namespace {

// Arabic fixtures, spelled out code point by code point so the file carries
// no invisible encoding surprises.
const std::string kCat = "القط";            // القط
const std::string kAteHamza = "يأكل";       // يأكل
const std::string kAte = "ياكل";            // ياكل
const std::string kCheese = "الجبن";   // الجبن
const std::string kMouse = "الفار";    // الفار
const std::string kToo = "ايضا";            // ايضا
const std::string kFainnahu = "فانه";       // فانه
const std::string kWahatha = "وهذا";        // وهذا

TEST(Utf8, RoundTripMixedScripts) {
    const std::string text = "cat " + kCat + " \xE2\x82\xAC \xF0\x9D\x84\x9E";
    const std::u32string decoded = utf8_decode(text);
    EXPECT_EQ(utf8_encode(decoded), text);
    EXPECT_EQ(decoded[4], U'\x0627');
    EXPECT_EQ(decoded[decoded.size() - 3], U'\x20AC');
    EXPECT_EQ(decoded.back(), U'\x1D11E');
}

TEST(Utf8, DecodeAscii) {
    const std::u32string decoded = utf8_decode("abc");
    ASSERT_EQ(decoded.size(), 3u);
    EXPECT_EQ(decoded[0], U'a');
    EXPECT_EQ(decoded[2], U'c');
}

TEST(Utf8, InvalidLeadByteThrows) {
    try {
        utf8_decode("\xFF");
        FAIL() << "expected invalid_argument";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("offset 0"), std::string::npos);
    }
}

TEST(Utf8, TruncatedSequenceThrows) {
    EXPECT_THROW(utf8_decode("\xD8"), std::invalid_argument);
    try {
        utf8_decode("a\xE0\xA0");
        FAIL() << "expected invalid_argument";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("offset 1"), std::string::npos);
    }
}

TEST(Utf8, OverlongFormThrows) {
    EXPECT_THROW(utf8_decode("\xC0\xAF"), std::invalid_argument);
    EXPECT_THROW(utf8_decode("\xE0\x80\x80"), std::invalid_argument);
}

TEST(Utf8, SurrogateThrows) {
    EXPECT_THROW(utf8_decode("\xED\xA0\x80"), std::invalid_argument);
}

TEST(Utf8, OutOfRangeThrows) {
    EXPECT_THROW(utf8_decode("\xF4\x90\x80\x80"), std::invalid_argument);
}

TEST(Classifiers, Space) {
    EXPECT_TRUE(is_space(U' '));
    EXPECT_TRUE(is_space(U'\t'));
    EXPECT_TRUE(is_space(U'\n'));
    EXPECT_TRUE(is_space(U'\r'));
    EXPECT_TRUE(is_space(U'\x00A0'));
    EXPECT_FALSE(is_space(U'a'));
    EXPECT_FALSE(is_space(U'\x0642'));
}

TEST(Classifiers, LatinLetter) {
    EXPECT_TRUE(is_latin_letter(U'a'));
    EXPECT_TRUE(is_latin_letter(U'Z'));
    EXPECT_FALSE(is_latin_letter(U'1'));
    EXPECT_FALSE(is_latin_letter(U'\x0642'));
    EXPECT_FALSE(is_latin_letter(U'\x00E9'));  // é is outside Basic Latin
}

TEST(Classifiers, SpecialChar) {
    for (char32_t cp : {U'$', U'#', U'/', U'.', U',', U';', U'?', U'!', U'(',
                        U'~', U'`', U'@'}) {
        EXPECT_TRUE(is_special_char(cp)) << static_cast<uint32_t>(cp);
    }
    EXPECT_TRUE(is_special_char(U'\x060C'));  // ،
    EXPECT_TRUE(is_special_char(U'\x061B'));  // ؛
    EXPECT_TRUE(is_special_char(U'\x061F'));  // ؟
    EXPECT_FALSE(is_special_char(U'a'));
    EXPECT_FALSE(is_special_char(U'1'));
    EXPECT_FALSE(is_special_char(U'\x0642'));
}

TEST(Normalize, FoldsAlefVariantsAndMaqsura) {
    EXPECT_EQ(normalize(kAteHamza), kAte);
    EXPECT_EQ(normalize(std::u32string{U'\x0622'}), std::u32string{U'\x0627'});
    EXPECT_EQ(normalize(std::u32string{U'\x0625'}), std::u32string{U'\x0627'});
    EXPECT_EQ(normalize(std::u32string{U'\x0671'}), std::u32string{U'\x0627'});
    EXPECT_EQ(normalize(std::u32string{U'\x0649'}), std::u32string{U'\x064A'});
}

TEST(Normalize, DropsTatweelAndHarakat) {
    // قـــط with tatweel runs collapses to قط.
    EXPECT_EQ(normalize(std::u32string{U'\x0642', U'\x0640', U'\x0640',
                                       U'\x0637'}),
              (std::u32string{U'\x0642', U'\x0637'}));
    // مَدْرَسَة with short vowels reduces to مدرسة.
    const std::u32string voweled{U'\x0645', U'\x064E', U'\x062F', U'\x0652',
                                 U'\x0631', U'\x064E', U'\x0633', U'\x064E',
                                 U'\x0629'};
    const std::u32string bare{U'\x0645', U'\x062F', U'\x0631', U'\x0633',
                              U'\x0629'};
    EXPECT_EQ(normalize(voweled), bare);
    // Superscript alef is dropped too.
    EXPECT_EQ(normalize(std::u32string{U'\x0644', U'\x0670'}),
              std::u32string{U'\x0644'});
}

TEST(Normalize, DecomposedHamzaMatchesPrecomposed) {
    // ا + combining hamza above lands on the same bytes as أ.
    const std::u32string decomposed{U'\x0627', U'\x0654'};
    const std::u32string precomposed{U'\x0623'};
    EXPECT_EQ(normalize(decomposed), normalize(precomposed));
}

TEST(Normalize, IdempotentAndAsciiStable) {
    const std::string sample = "cat " + kAteHamza + " x123";
    EXPECT_EQ(normalize(normalize(sample)), normalize(sample));
    EXPECT_EQ(normalize(std::string("cat ate")), "cat ate");
}

TEST(Segment, ArabicTwoSentences) {
    const std::string d1 = kCat + " " + kAteHamza + " " + kCheese;
    const std::string d2 = kMouse + " " + kAte + " " + kCheese;
    const CleaningConfig config;
    const std::vector<std::string> got = segment_sentences(d1 + ". " + d2, config);
    ASSERT_EQ(got.size(), 2u);
    EXPECT_EQ(got[0], d1);
    EXPECT_EQ(got[1], d2);
}

TEST(Segment, EmptyInput) {
    EXPECT_TRUE(segment_sentences("", CleaningConfig{}).empty());
}

TEST(Segment, MixedDelimiters) {
    const std::vector<std::string> got =
        segment_sentences("cat ate cheese? yes! ok", CleaningConfig{});
    ASSERT_EQ(got.size(), 3u);
    EXPECT_EQ(got[0], "cat ate cheese");
    EXPECT_EQ(got[1], "yes");
    EXPECT_EQ(got[2], "ok");
}

TEST(Segment, NewlineAndTrailingDelimiter) {
    const std::vector<std::string> got =
        segment_sentences("a\nb.", CleaningConfig{});
    ASSERT_EQ(got.size(), 2u);
    EXPECT_EQ(got[0], "a");
    EXPECT_EQ(got[1], "b");
    EXPECT_TRUE(segment_sentences("...", CleaningConfig{}).empty());
    EXPECT_TRUE(segment_sentences("  . \n ", CleaningConfig{}).empty());
}

TEST(Tokenize, StripsSpecialCharacters) {
    const std::vector<std::string> got =
        tokenize("cat ate $cheese#", CleaningConfig{});
    EXPECT_EQ(got, (std::vector<std::string>{"cat", "ate", "cheese"}));
}

TEST(Tokenize, RemovesLatinTokensWhenAsked) {
    CleaningConfig config;
    config.remove_latin = true;
    const std::string sentence = kCat + " " + kAteHamza + " hello " + kCheese;
    const std::vector<std::string> got = tokenize(sentence, config);
    EXPECT_EQ(got, (std::vector<std::string>{kCat, kAteHamza, kCheese}));
}

TEST(Tokenize, KeepsLatinByDefault) {
    const std::vector<std::string> got =
        tokenize("hello " + kCat, CleaningConfig{});
    EXPECT_EQ(got, (std::vector<std::string>{"hello", kCat}));
}

TEST(Tokenize, WhitespaceOnly) {
    EXPECT_TRUE(tokenize("   ", CleaningConfig{}).empty());
    EXPECT_TRUE(tokenize("", CleaningConfig{}).empty());
}

TEST(Tokenize, MixedScriptKeptWithLatinStripped) {
    CleaningConfig config;
    config.remove_latin = true;
    const std::vector<std::string> got = tokenize("ab" + kCat + " xyz", config);
    EXPECT_EQ(got, (std::vector<std::string>{kCat}));
}

TEST(Tokenize, PunctuationOnlyTokenDropped) {
    EXPECT_TRUE(tokenize("?!. ,,", CleaningConfig{}).empty());
}

TEST(Stopwords, ArabicMembership) {
    CleaningConfig config;
    config.stopword_list = {kFainnahu, kWahatha};
    const std::vector<std::string> got =
        remove_stopwords({kFainnahu, kCat, kWahatha}, config);
    EXPECT_EQ(got, (std::vector<std::string>{kCat}));
}

TEST(Stopwords, EnglishAndEmpty) {
    CleaningConfig config;
    config.stopword_list = {"the"};
    EXPECT_EQ(remove_stopwords({"cat", "the", "ate"}, config),
              (std::vector<std::string>{"cat", "ate"}));
    EXPECT_TRUE(remove_stopwords({}, config).empty());
}

TEST(Stem, IdentityIsNoOp) {
    EXPECT_EQ(stem(kCat, StemmerKind::identity), kCat);
    EXPECT_EQ(stem("cats", StemmerKind::identity), "cats");
}

TEST(Stem, LightStripsDefiniteArticle) {
    EXPECT_EQ(stem(kCat, StemmerKind::light), "قط");  // قط
}

TEST(Stem, LightMinimumLengthGuard) {
    const std::string alefTeh = "ات";  // ات
    EXPECT_EQ(stem(alefTeh, StemmerKind::light), alefTeh);
    EXPECT_EQ(stem("قط", StemmerKind::light), "قط");
}

TEST(Stem, LightConjunctionThenArticle) {
    // والكتاب -> كتاب: strip و, then ال.
    const std::string word =
        "والكتاب";
    EXPECT_EQ(stem(word, StemmerKind::light),
              "كتاب");
}

TEST(Stem, LightSuffixes) {
    // المدرسة -> مدرس (article plus feminine ة).
    EXPECT_EQ(stem("المدرسة",
                   StemmerKind::light),
              "مدرس");
    // معلمون -> معلم (masculine plural ون).
    EXPECT_EQ(stem("معلمون",
                   StemmerKind::light),
              "معلم");
}

TEST(Stem, LightLeavesUnaffixedWordsAlone) {
    EXPECT_EQ(stem("cat", StemmerKind::light), "cat");
    EXPECT_EQ(stem(kCheese, StemmerKind::light), "جبن");
}

TEST(Stem, NamesRoundTrip) {
    EXPECT_EQ(stemmer_from_name("none"), StemmerKind::identity);
    EXPECT_EQ(stemmer_from_name("identity"), StemmerKind::identity);
    EXPECT_EQ(stemmer_from_name("light"), StemmerKind::light);
    EXPECT_THROW(stemmer_from_name("khoja"), std::invalid_argument);
    EXPECT_EQ(stemmer_name(StemmerKind::identity), "none");
    EXPECT_EQ(stemmer_name(StemmerKind::light), "light");
}

TEST(CleanDocument, PlainAsciiSingleSentence) {
    const std::vector<TokenSequence> got =
        clean_document("cat ate cheese", CleaningConfig{}, "doc1");
    ASSERT_EQ(got.size(), 1u);
    EXPECT_EQ(got[0].tokens, (std::vector<std::string>{"cat", "ate", "cheese"}));
    EXPECT_EQ(got[0].source_id, "doc1");
    EXPECT_EQ(got[0].unit_index, 0);
}

TEST(CleanDocument, StopwordOnlyDocumentIsEmpty) {
    CleaningConfig config;
    config.stopword_list = {"the"};
    EXPECT_TRUE(clean_document("the. the the.", config).empty());
    EXPECT_TRUE(clean_document("", config).empty());
}

TEST(CleanDocument, TwoSentencesGetIncreasingUnits) {
    const std::vector<TokenSequence> got =
        clean_document("cat ate. mouse too", CleaningConfig{}, "d");
    ASSERT_EQ(got.size(), 2u);
    EXPECT_EQ(got[0].unit_index, 0);
    EXPECT_EQ(got[1].unit_index, 1);
    EXPECT_EQ(got[0].tokens, (std::vector<std::string>{"cat", "ate"}));
    EXPECT_EQ(got[1].tokens, (std::vector<std::string>{"mouse", "too"}));
}

TEST(CleanDocument, EmptySentencesDoNotConsumeUnitIndexes) {
    CleaningConfig config;
    config.stopword_list = {"the"};
    const std::vector<TokenSequence> got =
        clean_document("cat. the. mouse", config);
    ASSERT_EQ(got.size(), 2u);
    EXPECT_EQ(got[0].unit_index, 0);
    EXPECT_EQ(got[1].unit_index, 1);
}

TEST(CleanDocument, NormalizesBeforeTokenizing) {
    const std::vector<TokenSequence> got =
        clean_document(kCat + " " + kAteHamza, CleaningConfig{});
    ASSERT_EQ(got.size(), 1u);
    EXPECT_EQ(got[0].tokens, (std::vector<std::string>{kCat, kAte}));
}

TEST(CleanDocument, CleaningIsIdempotent) {
    CleaningConfig config;
    config.stopword_list = {"the", kFainnahu};
    const std::string text = "the cat ate; cheese! " + kFainnahu + " " + kCat +
                             " " + kAteHamza + ".";
    const std::vector<TokenSequence> once = clean_document(text, config);
    std::string rejoined;
    for (const TokenSequence& seq : once) {
        for (const std::string& token : seq.tokens) rejoined += token + " ";
        rejoined += ". ";
    }
    const std::vector<TokenSequence> twice = clean_document(rejoined, config);
    std::vector<std::string> flat_once, flat_twice;
    for (const TokenSequence& seq : once)
        flat_once.insert(flat_once.end(), seq.tokens.begin(), seq.tokens.end());
    for (const TokenSequence& seq : twice)
        flat_twice.insert(flat_twice.end(), seq.tokens.begin(),
                          seq.tokens.end());
    EXPECT_EQ(flat_once, flat_twice);
}

TEST(CleanDocument, NoStopwordSurvivesAndOrderIsPreserved) {
    CleaningConfig config;
    config.stopword_list = {"b", "d"};
    const std::vector<TokenSequence> got =
        clean_document("a b c d e. d c b a", config);
    ASSERT_EQ(got.size(), 2u);
    EXPECT_EQ(got[0].tokens, (std::vector<std::string>{"a", "c", "e"}));
    EXPECT_EQ(got[1].tokens, (std::vector<std::string>{"c", "a"}));
    for (const TokenSequence& seq : got) {
        for (const std::string& token : seq.tokens) {
            EXPECT_EQ(config.stopword_list.count(token), 0u);
        }
    }
}

TEST(LoadStopwords, ParsesCommentsBlanksAndNormalizes) {
    const std::string path = testing::TempDir() + "stopwords_test.txt";
    {
        std::ofstream out(path, std::ios::binary);
        out << "# a comment\n\nthe\n  " << kFainnahu << "  \n" << kAteHamza
            << "\n";
    }
    const std::set<std::string> words = load_stopwords(path);
    EXPECT_EQ(words.size(), 3u);
    EXPECT_EQ(words.count("the"), 1u);
    EXPECT_EQ(words.count(kFainnahu), 1u);
    EXPECT_EQ(words.count(kAte), 1u) << "entries must be normalized";
    std::remove(path.c_str());
}

TEST(LoadStopwords, MissingFileThrows) {
    EXPECT_THROW(load_stopwords("/nonexistent/stopwords.txt"),
                 std::runtime_error);
}

}  // namespace
}  // namespace kpcluster
