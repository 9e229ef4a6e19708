#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "respeval/types.hpp"

/// Agreement statistics between automatic and human ratings.
namespace respeval::metrics {

class SingleClass : public Error {
public:
    SingleClass() : Error("ROC analysis needs both positive and negative labels") {}
};

class TooSmallSample : public Error {
public:
    using Error::Error;
};

class NonConvergentResampling : public Error {
public:
    using Error::Error;
};

/// Average ranks (1-based); tied values share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> v);

/// Pearson correlation; nullopt when either vector is constant.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

/// Pearson correlation of average ranks; nullopt when either vector is constant.
/// Throws std::invalid_argument for unequal lengths or fewer than 2 pairs.
std::optional<double> spearman_rho(std::span<const double> x, std::span<const double> y);

/// Kendall tau-b; nullopt when either vector is constant.
std::optional<double> kendall_tau(std::span<const double> x, std::span<const double> y);

/// Quadratic-weighted Cohen's kappa over categories [lo, hi]. When the chance-expected
/// disagreement is zero (both raters constant on one category) the raters agree
/// perfectly and 1 is returned. Throws std::invalid_argument on out-of-range values.
double quadratic_weighted_kappa(std::span<const int> a, std::span<const int> b, int lo, int hi);

struct RocResult {
    std::vector<std::pair<double, double>> points;  ///< (fpr, tpr), from (0,0) to (1,1)
    double auc = 0.0;
};

/// Labels are 0/1. AUC is the Mann-Whitney statistic with half credit for ties.
RocResult roc_auc(std::span<const double> scores, std::span<const int> labels);

enum class Statistic { spearman, kendall };
std::string_view to_string(Statistic s);
Statistic parse_statistic(std::string_view name);

struct ConfidenceInterval {
    double lower = 0.0;
    double upper = 0.0;
    double level = 0.95;
    std::size_t resamples = 0;
    std::uint64_t seed = 0;
    double point_estimate = 0.0;      ///< full-sample corr(human, a) - corr(human, b)
    std::size_t degenerate_draws = 0;  ///< redrawn resamples
};

struct BootstrapOptions {
    Statistic statistic = Statistic::spearman;
    std::size_t resamples = 10000;
    double level = 0.95;
    std::uint64_t seed = 0;
};

/// Paired percentile bootstrap of corr(human, a) - corr(human, b) over item indices.
/// Resample r draws from its own stream derived from (seed, r), so the result does not
/// depend on the thread count. Throws TooSmallSample for n < 5, NonConvergentResampling
/// when more than half of all draws are degenerate.
ConfidenceInterval bootstrap_ci_diff(std::span<const double> human, std::span<const double> a,
                                     std::span<const double> b, const BootstrapOptions& options = {});
/// Single-threaded reference; bit-identical to bootstrap_ci_diff.
ConfidenceInterval bootstrap_ci_diff_serial(std::span<const double> human, std::span<const double> a,
                                            std::span<const double> b, const BootstrapOptions& options = {});

/// Type-7 (linear interpolation) sample quantile of sorted data.
double quantile_sorted(std::span<const double> sorted, double p);

/// SplitMix64 stream; portable and seedable.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform in [0, bound) without modulo bias.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

}  // namespace respeval::metrics
