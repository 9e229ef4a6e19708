#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "respeval/types.hpp"

/// Character / jamo bigram models scored by average transition log-likelihood.
namespace respeval::markov {

enum class Unit { character, jamo };

std::string_view to_string(Unit unit);
Unit parse_unit(std::string_view name);
Unit unit_for(Language lang);

/// Symbol that every unseen unit maps to. Serialized as "<unk>".
inline constexpr char32_t unknown_symbol = 0;
inline constexpr int format_version = 1;

class EmptyCorpus : public Error {
public:
    EmptyCorpus() : Error("empty corpus: no line yields an adjacent unit pair") {}
};

class FormatVersionMismatch : public Error {
public:
    explicit FormatVersionMismatch(int found)
        : Error("model format version " + std::to_string(found) + " is not supported (expected " +
                std::to_string(format_version) + ")"),
          found_version(found) {}
    int found_version;
};

class CorruptCounts : public Error {
public:
    using Error::Error;
};

/// Turns raw text into the unit stream the model is defined over: normalized English
/// characters (a-z and space) or the jamo of the Hangul content.
std::u32string preprocess(std::string_view text, Unit unit);

class BigramModel {
public:
    using Metadata = std::map<std::string, std::string>;

    /// Builds a model from explicit counts. The vocabulary always gains the unknown symbol.
    /// Throws CorruptCounts if a count refers to a symbol outside the vocabulary.
    BigramModel(Unit unit, std::vector<char32_t> vocabulary,
                const std::map<std::pair<char32_t, char32_t>, std::uint64_t>& counts, double smoothing_alpha,
                Metadata metadata = {});

    [[nodiscard]] Unit unit() const { return unit_; }
    [[nodiscard]] double smoothing_alpha() const { return alpha_; }
    [[nodiscard]] const std::vector<char32_t>& vocabulary() const { return vocabulary_; }
    [[nodiscard]] std::size_t vocabulary_size() const { return vocabulary_.size(); }
    [[nodiscard]] const Metadata& metadata() const { return metadata_; }

    [[nodiscard]] std::uint64_t count(char32_t from, char32_t to) const;
    [[nodiscard]] std::uint64_t context_total(char32_t from) const;
    /// Sparse view of all nonzero transition counts.
    [[nodiscard]] std::map<std::pair<char32_t, char32_t>, std::uint64_t> transition_counts() const;
    [[nodiscard]] std::map<char32_t, std::uint64_t> context_totals() const;

    /// Add-alpha smoothed P(to | from); unseen symbols are mapped to the unknown symbol.
    [[nodiscard]] double probability(char32_t from, char32_t to) const;
    [[nodiscard]] double log_probability(char32_t from, char32_t to) const;

    /// Mean natural-log transition probability over the n-1 transitions of an already
    /// preprocessed unit stream; nullopt when there is no transition.
    [[nodiscard]] std::optional<double> avg_log_likelihood_units(std::u32string_view units) const;

    friend bool operator==(const BigramModel& a, const BigramModel& b);

private:
    [[nodiscard]] std::size_t index_of(char32_t symbol) const;

    Unit unit_;
    double alpha_;
    std::vector<char32_t> vocabulary_;  // sorted, unique, contains unknown_symbol
    std::unordered_map<char32_t, std::size_t> index_;
    std::vector<std::uint64_t> counts_;  // row-major |V| x |V|
    std::vector<std::uint64_t> totals_;
    Metadata metadata_;
};

/// Counts adjacent unit pairs line by line; pairs never cross line boundaries.
BigramModel train(std::span<const std::string> corpus, Unit unit, double smoothing_alpha = 1.0,
                  BigramModel::Metadata metadata = {});

/// Reads a UTF-8 corpus with one utterance per line.
std::vector<std::string> read_corpus(const std::filesystem::path& path);

/// Average log-likelihood of raw text under the model, or nullopt for fewer than two units.
std::optional<double> avg_log_likelihood(const BigramModel& model, std::string_view text);

void save(const BigramModel& model, const std::filesystem::path& path);
BigramModel load(const std::filesystem::path& path);

std::string to_json(const BigramModel& model);
BigramModel from_json(std::string_view document);

}  // namespace respeval::markov
