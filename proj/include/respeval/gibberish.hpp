#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "respeval/markov.hpp"
#include "respeval/textstat.hpp"
#include "respeval/types.hpp"

/// Stage-1 screening: Markov likelihood plus language-specific filters.
namespace respeval::gibberish {

enum class Rule {
    likelihood,        ///< average log-likelihood below threshold, or no transition at all
    class_run,         ///< same-class letter run longer than run_threshold (English)
    valid_word_ratio,  ///< lexicon coverage below valid_word_threshold (English)
    syllable_ratio,    ///< complete-syllable share below syllable_ratio_threshold (Korean)
    jamo_diversity,    ///< fewer distinct jamo than jamo_diversity_threshold (Korean)
    morpheme,          ///< configured morpheme oracle found nothing (Korean)
};

std::string_view to_string(Rule rule);

class LanguageModelMismatch : public Error {
public:
    using Error::Error;
};

/// Conversational responses that must never be filtered. Entries are compared after
/// canonicalization (ASCII lowercase, ASCII punctuation removed, whitespace collapsed).
class Whitelist {
public:
    Whitelist() = default;
    Whitelist(std::initializer_list<std::string_view> entries);

    /// One entry per line; '#' starts a comment line.
    static Whitelist load(const std::filesystem::path& path);

    void add(std::string_view entry);
    /// Exact match, whole-entry repetition ("ha" -> "hahaha") or final-character
    /// elongation ("so" -> "soooo").
    [[nodiscard]] bool matches(std::string_view text) const;
    [[nodiscard]] std::size_t size() const { return entries_.size(); }

private:
    std::vector<std::u32string> entries_;
};

bool is_whitelisted(std::string_view text, const Whitelist& whitelist);

/// Returns the number of morphemes an analyzer recognises in the text.
using MorphemeOracle = std::function<std::size_t(std::string_view)>;

/// Fallback oracle: counts whitespace tokens whose Hangul content starts with a listed word.
MorphemeOracle lexicon_morpheme_oracle(std::shared_ptr<const textstat::Lexicon> korean_words);

struct GibberishConfig {
    Language language = Language::english;
    double ll_threshold = -4.0;
    std::size_t run_threshold = 10;
    double valid_word_threshold = 0.4;
    double syllable_ratio_threshold = 0.6;
    std::size_t jamo_diversity_threshold = 4;
    Whitelist whitelist;
    std::shared_ptr<const textstat::Lexicon> lexicon;  ///< required for English
    MorphemeOracle morpheme_oracle;                    ///< optional; rule skipped when empty

    /// Thresholds only, empty whitelist and no lexicon.
    static GibberishConfig thresholds_for(Language lang);
    /// Thresholds plus the bundled whitelist and (for English) lexicon from data_dir.
    static GibberishConfig defaults(Language lang, const std::filesystem::path& data_dir);

    /// Throws std::invalid_argument on out-of-range thresholds or a missing English lexicon.
    void validate() const;
};

struct GibberishVerdict {
    bool is_gibberish = false;
    std::optional<double> avg_ll;
    std::vector<Rule> triggered_rules;
    bool whitelisted = false;
    /// English only: the valid-word rule fired alone while the likelihood was plausible.
    bool retained_by_exception = false;
};

GibberishVerdict detect(const SurveyItem& item, const markov::BigramModel& model, const GibberishConfig& config);

/// A model and configuration per language, ready for batch screening.
class Screener {
public:
    void add(markov::BigramModel model, GibberishConfig config);
    [[nodiscard]] bool supports(Language lang) const;
    /// Throws LanguageModelMismatch when no model is registered for the item's language.
    [[nodiscard]] GibberishVerdict screen(const SurveyItem& item) const;

private:
    struct Entry {
        markov::BigramModel model;
        GibberishConfig config;
    };
    std::vector<Entry> entries_;
};

}  // namespace respeval::gibberish
