#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "respeval/types.hpp"

/// Language-specific text statistics used by the gibberish filters.
namespace respeval::textstat {

struct NormalizedText {
    std::string original;
    std::string normalized;
    Language language = Language::english;
};

/// Lowercases, keeps only a-z, collapses whitespace runs to one space and trims.
/// Digits, punctuation and non-Latin letters are dropped without leaving a gap.
NormalizedText normalize_english(std::string_view text);

// Hangul ----------------------------------------------------------------------

enum class JamoRole : std::uint8_t {
    initial,          ///< leading consonant of a decomposed syllable
    medial,           ///< vowel of a decomposed syllable
    final_consonant,  ///< trailing consonant of a decomposed syllable
    isolated,         ///< standalone jamo present in the input (e.g. "ㅋ")
    other,            ///< non-Hangul character, opaque to jamo statistics
};

struct JamoUnit {
    char32_t cp = 0;  ///< compatibility-jamo code point for jamo roles, the raw code point otherwise
    JamoRole role = JamoRole::other;

    [[nodiscard]] bool is_jamo() const { return role != JamoRole::other; }
    friend bool operator==(const JamoUnit&, const JamoUnit&) = default;
};

struct JamoSequence {
    std::vector<JamoUnit> units;
    std::size_t source_syllable_count = 0;

    /// Code points of the jamo units only, in order; non-Hangul units are skipped.
    [[nodiscard]] std::u32string jamo_stream() const;
};

inline constexpr char32_t hangul_syllable_first = 0xAC00;
inline constexpr char32_t hangul_syllable_last = 0xD7A3;

bool is_hangul_syllable(char32_t cp);
/// Compatibility jamo (U+3131..U+318E, excluding the filler) or conjoining jamo (U+1100..U+11FF).
bool is_standalone_jamo(char32_t cp);
bool is_hangul(char32_t cp);

/// Splits every precomposed syllable into initial/medial/(final) compatibility jamo.
JamoSequence decompose_jamo(std::string_view text);
/// Inverse of decompose_jamo; role tags decide syllable boundaries.
std::string recompose_jamo(const JamoSequence& seq);

// Statistics -------------------------------------------------------------------

/// Longest run of same-class letters (vowels aeiou vs consonants). Spaces end a run.
std::size_t longest_class_run(const NormalizedText& text);

/// Word list used for the valid-word ratio. File format: one word per line (ASCII case is folded),
/// lines starting with '#' are comments.
class Lexicon {
public:
    Lexicon() = default;
    Lexicon(std::initializer_list<std::string> words) : words_(words.begin(), words.end()) {}
    template <typename It>
    Lexicon(It first, It last) : words_(first, last) {}

    static Lexicon load(const std::filesystem::path& path);

    [[nodiscard]] bool contains(std::string_view word) const { return words_.find(word) != words_.end(); }
    [[nodiscard]] std::size_t size() const { return words_.size(); }
    [[nodiscard]] bool empty() const { return words_.empty(); }

private:
    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
    };
    std::unordered_set<std::string, Hash, std::equal_to<>> words_;
};

/// Share of whitespace tokens found in the lexicon; 0 when there are no tokens.
double valid_word_ratio(const NormalizedText& text, const Lexicon& lexicon);

/// Complete syllables over all Hangul characters; 1 when the text has no Hangul at all.
double hangul_syllable_ratio(std::string_view text);

/// Number of distinct jamo after decomposition.
std::size_t jamo_diversity(std::string_view text);

}  // namespace respeval::textstat
