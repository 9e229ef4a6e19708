#include "respeval/pipeline.hpp"

#include <chrono>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "bounded_pool.hpp"

namespace respeval::pipeline {

namespace {

ScreenOutcome screen_one(const gibberish::Screener& screener, const SurveyItem& item) {
    try {
        return {screener.screen(item), {}};
    } catch (const std::exception& e) {
        return {std::nullopt, e.what()};
    }
}

std::string failure_summary(const std::map<judge::Dimension, std::string>& failures) {
    std::string out = "judging failed:";
    for (const auto& [d, msg] : failures) out += fmt::format(" [{}] {}", judge::to_string(d), msg);
    return out;
}

}  // namespace

std::vector<ScreenOutcome> screen_batch(const gibberish::Screener& screener, std::span<const SurveyItem> items) {
    std::vector<ScreenOutcome> out(items.size());
    const auto n = static_cast<long long>(items.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = screen_one(screener, items[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::vector<ScreenOutcome> screen_batch_serial(const gibberish::Screener& screener,
                                               std::span<const SurveyItem> items) {
    std::vector<ScreenOutcome> out;
    out.reserve(items.size());
    for (const auto& item : items) out.push_back(screen_one(screener, item));
    return out;
}

void EvaluateOptions::validate() const {
    if (!(threshold >= 0.0 && threshold <= 1.0)) throw ConfigError("acceptance threshold must lie in [0, 1]");
    if (method == aggregate::Method::regression && !weights) {
        throw ConfigError("regression aggregation needs a weights file");
    }
    if (workers == 0) throw ConfigError("workers must be positive");
    try {
        judge.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

records::EvaluationRecord evaluate_item(const gibberish::Screener& screener, judge::ChatClient& client,
                                        const SurveyItem& item, const EvaluateOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    records::EvaluationRecord rec;
    rec.id = item.id;
    rec.language = item.language;

    auto finish = [&]() -> records::EvaluationRecord {
        if (options.record_timing) {
            rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
        return std::move(rec);
    };

    try {
        rec.gibberish = screener.screen(item);
    } catch (const std::exception& e) {
        rec.error = fmt::format("screening failed: {}", e.what());
        return finish();
    }
    if (rec.gibberish->is_gibberish) {
        rec.overall = aggregate::gibberish_report(options.method, options.threshold);
        return finish();
    }

    rec.judge_model = options.judge.model_identifier;
    judge::DimensionScores scores = judge::score_all(client, item, options.judge, options.judge_parallelism);
    if (!scores.complete()) {
        rec.judge_failures = scores.failures;
        rec.error = failure_summary(scores.failures);
        return finish();
    }

    const aggregate::NormalizedScores n = aggregate::normalize(scores);
    double overall = 0.0;
    switch (options.method) {
        case aggregate::Method::sum:
            overall = aggregate::aggregate_sum(n);
            break;
        case aggregate::Method::regression:
            overall = aggregate::aggregate_regression(*options.weights, n);
            break;
        case aggregate::Method::llm:
            try {
                rec.llm_overall = judge::llm_overall_quality(client, item, scores, options.judge);
            } catch (const std::exception& e) {
                rec.judge_failures.emplace(judge::Dimension::overall_quality, e.what());
                rec.error = failure_summary(rec.judge_failures);
                return finish();
            }
            overall = static_cast<double>(rec.llm_overall->score) /
                      judge::max_score(judge::Dimension::overall_quality);
            break;
    }
    rec.scores = std::move(scores);
    rec.overall = aggregate::make_report(overall, options.method, options.threshold, n);
    return finish();
}

std::vector<records::EvaluationRecord> evaluate_batch(const gibberish::Screener& screener,
                                                      judge::ChatClient& client,
                                                      std::span<const records::InputRecord> inputs,
                                                      const EvaluateOptions& options) {
    options.validate();
    std::vector<records::EvaluationRecord> out(inputs.size());
    detail::bounded_for_each(inputs.size(), options.workers, [&](std::size_t i) {
        const auto& in = inputs[i];
        if (!in.item) {
            out[i].id = in.id;
            out[i].error = in.error;
            return;
        }
        try {
            out[i] = evaluate_item(screener, client, *in.item, options);
        } catch (const std::exception& e) {
            out[i] = {};
            out[i].id = in.id;
            out[i].language = in.item->language;
            out[i].error = e.what();
        }
    });
    return out;
}

bool excessive_failures(std::span<const records::EvaluationRecord> batch, double tolerance) {
    if (batch.empty()) return false;
    std::size_t failed = 0;
    for (const auto& r : batch) failed += r.failed();
    return static_cast<double>(failed) > tolerance * static_cast<double>(batch.size());
}

}  // namespace respeval::pipeline
