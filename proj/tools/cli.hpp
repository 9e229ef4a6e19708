#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "respeval/aggregate.hpp"
#include "respeval/gibberish.hpp"
#include "respeval/judge.hpp"
#include "respeval/metrics.hpp"

namespace respeval::cli {

enum ExitCode : int { ok = 0, failure = 1, excessive_failures = 2 };

class JoinMismatch : public Error {
public:
    JoinMismatch(const std::string& what, std::vector<std::string> missing)
        : Error(what), missing_ids(std::move(missing)) {}
    std::vector<std::string> missing_ids;
};

struct LanguageSettings {
    std::optional<double> ll_threshold;
    std::optional<std::size_t> run_threshold;
    std::optional<double> valid_word_threshold;
    std::optional<double> syllable_ratio_threshold;
    std::optional<std::size_t> jamo_diversity_threshold;
    std::optional<std::filesystem::path> whitelist;
    std::optional<std::filesystem::path> lexicon;           ///< English word list
    std::optional<std::filesystem::path> morpheme_lexicon;  ///< Korean word list for the morpheme rule
    std::optional<std::filesystem::path> model;
};

/// Settings file (JSON). Relative paths resolve against the file's directory.
struct AppConfig {
    std::filesystem::path data_dir;
    LanguageSettings english;
    LanguageSettings korean;
    judge::JudgeConfig judge;
    std::filesystem::path cache_dir = ".respeval-cache";
    double threshold = aggregate::default_threshold;
    aggregate::Method aggregation = aggregate::Method::sum;
    std::optional<std::filesystem::path> weights;
    std::size_t workers = 4;
    double failure_tolerance = 0.10;

    /// Defaults with data_dir = default_data_dir().
    static AppConfig defaults();
    /// Throws ConfigError on malformed files or unknown keys.
    static AppConfig load(const std::filesystem::path& path);
    static AppConfig parse(std::string_view document, const std::filesystem::path& base_dir);

    [[nodiscard]] gibberish::GibberishConfig gibberish_config(Language lang) const;
    [[nodiscard]] std::filesystem::path model_path(Language lang) const;
};

/// Screener for every language whose model is given (or, when none is, both bundled models).
gibberish::Screener build_screener(const AppConfig& config, const std::vector<std::filesystem::path>& model_paths);

struct TrainArgs {
    std::filesystem::path corpus;
    std::string unit = "char";
    double alpha = 1.0;
    std::filesystem::path out;
};

struct ScreenArgs {
    std::filesystem::path input;
    std::vector<std::filesystem::path> models;
    std::optional<std::filesystem::path> config;
    std::optional<std::filesystem::path> output;  ///< stdout when absent
};

struct EvaluateArgs {
    std::filesystem::path input;
    std::vector<std::filesystem::path> models;
    std::optional<std::filesystem::path> config;
    std::optional<std::string> aggregation;
    std::optional<std::filesystem::path> weights;
    std::optional<std::filesystem::path> cache_dir;
    std::optional<double> threshold;
    std::optional<std::string> judge_language;
    std::optional<std::size_t> workers;
    std::optional<double> failure_tolerance;
    bool offline = false;
    bool timing = false;
    std::optional<std::filesystem::path> output;
};

struct FitArgs {
    std::filesystem::path annotations;
    std::filesystem::path scores;
    double lambda = aggregate::default_lambda;
    std::filesystem::path out;
};

struct ReportArgs {
    std::filesystem::path scores;
    std::filesystem::path annotations;
    std::optional<std::filesystem::path> compare_with;  ///< second scores file for "other:" columns
    std::vector<std::string> compare;                   ///< two column specs, e.g. overall other:overall
    std::string reference = "overall";                  ///< human column the compared scores are correlated with
    metrics::Statistic statistic = metrics::Statistic::spearman;
    std::size_t resamples = 10000;
    double level = 0.95;
    std::uint64_t seed = 0;
    bool include_gibberish = false;
    std::optional<std::filesystem::path> output;
};

int cmd_train_markov(const TrainArgs& args, std::ostream& out, std::ostream& err);
int cmd_screen(const ScreenArgs& args, std::ostream& out, std::ostream& err);
/// `client` replaces the HTTP client (the cache still wraps it); used by tests.
int cmd_evaluate(const EvaluateArgs& args, std::ostream& out, std::ostream& err,
                 judge::ChatClient* client = nullptr);
int cmd_fit(const FitArgs& args, std::ostream& out, std::ostream& err);
int cmd_report(const ReportArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; returns the exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace respeval::cli
