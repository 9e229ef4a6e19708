#include <doctest.h>

#include <fstream>
#include <random>

#include "respeval/textstat.hpp"
#include "respeval/utf8.hpp"

using namespace respeval;
using namespace respeval::textstat;

namespace {
std::vector<char32_t> jamo_of(std::string_view text) {
    std::vector<char32_t> out;
    for (const auto& u : decompose_jamo(text).units) out.push_back(u.cp);
    return out;
}
}  // namespace

TEST_CASE("normalize_english keeps lowercase letters and single spaces") {
    CHECK(normalize_english("Hello, World! 123").normalized == "hello world");
    CHECK(normalize_english("").normalized.empty());
    CHECK(normalize_english("ASDF!!").normalized == "asdf");
    CHECK(normalize_english("  two\t\n  spaces  ").normalized == "two spaces");
    CHECK(normalize_english("don't").normalized == "dont");
    CHECK(normalize_english("café 한국").normalized == "caf");
}

TEST_CASE("decompose_jamo splits syllables arithmetically") {
    CHECK(jamo_of("한") == std::vector<char32_t>{U'ㅎ', U'ㅏ', U'ㄴ'});
    CHECK(jamo_of("가") == std::vector<char32_t>{U'ㄱ', U'ㅏ'});
    CHECK(jamo_of("ㅋㅋㅋ") == std::vector<char32_t>{U'ㅋ', U'ㅋ', U'ㅋ'});

    const auto seq = decompose_jamo("a한");
    REQUIRE(seq.units.size() == 4);
    CHECK_FALSE(seq.units[0].is_jamo());
    CHECK(seq.units[1].role == JamoRole::initial);
    CHECK(seq.units[3].role == JamoRole::final_consonant);
    CHECK(seq.source_syllable_count == 1);
    CHECK(seq.jamo_stream() == U"ㅎㅏㄴ");
}

TEST_CASE("recompose_jamo inverts decompose_jamo on random syllables") {
    std::mt19937 gen(7);
    std::uniform_int_distribution<std::uint32_t> syl(hangul_syllable_first, hangul_syllable_last);
    for (int trial = 0; trial < 200; ++trial) {
        std::u32string text;
        for (int i = 0; i < 20; ++i) text.push_back(syl(gen));
        const std::string utf = utf8::encode(text);
        CHECK(recompose_jamo(decompose_jamo(utf)) == utf);
    }
    // Mixed content, including adjacent isolated jamo that must not fuse.
    for (std::string s : {"ㄱㅏ", "안녕 hello ㅋㅋ!", "각ㄱ", ""}) CHECK(recompose_jamo(decompose_jamo(s)) == s);
}

TEST_CASE("longest_class_run") {
    CHECK(longest_class_run(normalize_english("aaaaaa")) == 6);
    CHECK(longest_class_run(normalize_english("strengths")) == 5);
    CHECK(longest_class_run(normalize_english("a b c")) == 1);
    CHECK(longest_class_run(normalize_english("")) == 0);
    CHECK(longest_class_run(normalize_english("queue")) == 4);
}

TEST_CASE("valid_word_ratio") {
    const Lexicon lex{"the", "cat", "dog"};
    CHECK(valid_word_ratio(normalize_english("the asdf cat"), lex) == doctest::Approx(2.0 / 3.0));
    CHECK(valid_word_ratio(normalize_english("the cat"), Lexicon{"the", "cat"}) == 1.0);
    CHECK(valid_word_ratio(normalize_english(""), lex) == 0.0);
}

TEST_CASE("hangul_syllable_ratio and jamo_diversity") {
    CHECK(hangul_syllable_ratio("ㅋㅋ안녕") == doctest::Approx(0.5));
    CHECK(hangul_syllable_ratio("안녕하세요") == 1.0);
    CHECK(hangul_syllable_ratio("ㅁㄴㅇㄹ") == 0.0);
    CHECK(hangul_syllable_ratio("no hangul") == 1.0);
    CHECK(jamo_diversity("ㅋㅋㅋ") == 1);
    CHECK(jamo_diversity("한") == 3);
    CHECK(jamo_diversity("abc") == 0);
}

TEST_CASE("Lexicon::load skips comments and rejects empty files") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = dir / "respeval-lexicon-test.txt";
    {
        std::ofstream out(path);
        out << "# comment\nalpha\n\nBeta\n";
    }
    const auto lex = Lexicon::load(path);
    CHECK(lex.contains("alpha"));
    CHECK(lex.contains("beta"));
    CHECK_FALSE(lex.contains("# comment"));
    {
        std::ofstream out(path);
        out << "# only a comment\n";
    }
    CHECK_THROWS_AS(Lexicon::load(path), IoFailure);
    std::filesystem::remove(path);
}
