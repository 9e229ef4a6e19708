#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "respeval/aggregate.hpp"
#include "respeval/gibberish.hpp"
#include "respeval/judge.hpp"
#include "respeval/records.hpp"

/// Two-stage batch processing: gibberish screening, then rubric judging and aggregation.
namespace respeval::pipeline {

struct ScreenOutcome {
    std::optional<gibberish::GibberishVerdict> verdict;
    std::string error;  ///< set when verdict is absent
};

/// Screens items in parallel (OpenMP); outcome i belongs to items[i].
std::vector<ScreenOutcome> screen_batch(const gibberish::Screener& screener, std::span<const SurveyItem> items);
/// Single-threaded reference for screen_batch.
std::vector<ScreenOutcome> screen_batch_serial(const gibberish::Screener& screener,
                                               std::span<const SurveyItem> items);

struct EvaluateOptions {
    aggregate::Method method = aggregate::Method::sum;
    double threshold = aggregate::default_threshold;
    std::optional<aggregate::RidgeWeights> weights;  ///< required for regression
    judge::JudgeConfig judge;
    std::size_t workers = 4;            ///< items judged concurrently
    std::size_t judge_parallelism = 3;  ///< dimension calls in flight per item
    bool record_timing = false;

    /// Throws ConfigError for regression without weights or an out-of-range threshold.
    void validate() const;
};

/// Evaluates one item. Never throws for per-item failures; they are recorded.
records::EvaluationRecord evaluate_item(const gibberish::Screener& screener, judge::ChatClient& client,
                                        const SurveyItem& item, const EvaluateOptions& options);

/// Record i belongs to inputs[i]; malformed inputs become error records without any calls.
std::vector<records::EvaluationRecord> evaluate_batch(const gibberish::Screener& screener,
                                                      judge::ChatClient& client,
                                                      std::span<const records::InputRecord> inputs,
                                                      const EvaluateOptions& options);

/// True when failed records exceed `tolerance` as a fraction of the batch.
bool excessive_failures(std::span<const records::EvaluationRecord> batch, double tolerance = 0.10);

}  // namespace respeval::pipeline
