#include "respeval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

namespace respeval::metrics {

namespace {

void check_paired(std::size_t nx, std::size_t ny) {
    if (nx != ny) throw std::invalid_argument(fmt::format("paired vectors differ in length ({} vs {})", nx, ny));
    if (nx < 2) throw std::invalid_argument("correlation needs at least 2 pairs");
}

int sign(double v) { return (v > 0) - (v < 0); }

}  // namespace

std::vector<double> average_ranks(std::span<const double> v) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
    std::vector<double> ranks(v.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
    check_paired(x.size(), y.size());
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0) return std::nullopt;
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::optional<double> spearman_rho(std::span<const double> x, std::span<const double> y) {
    check_paired(x.size(), y.size());
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    return pearson(rx, ry);
}

std::optional<double> kendall_tau(std::span<const double> x, std::span<const double> y) {
    check_paired(x.size(), y.size());
    // n0 - n1 and n0 - n2 are the pairs untied in x and in y respectively.
    long long concordance = 0, untied_x = 0, untied_y = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            const int sx = sign(x[i] - x[j]);
            const int sy = sign(y[i] - y[j]);
            concordance += sx * sy;
            untied_x += sx != 0;
            untied_y += sy != 0;
        }
    }
    if (untied_x == 0 || untied_y == 0) return std::nullopt;
    return std::clamp(static_cast<double>(concordance) /
                          std::sqrt(static_cast<double>(untied_x) * static_cast<double>(untied_y)),
                      -1.0, 1.0);
}

double quadratic_weighted_kappa(std::span<const int> a, std::span<const int> b, int lo, int hi) {
    if (a.size() != b.size()) throw std::invalid_argument("rating vectors differ in length");
    if (a.empty()) throw std::invalid_argument("kappa needs at least one rating pair");
    if (hi < lo) throw std::invalid_argument("empty category range");
    const auto k = static_cast<std::size_t>(hi - lo + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < lo || a[i] > hi || b[i] < lo || b[i] > hi) {
            throw std::invalid_argument(fmt::format("rating outside [{}, {}]", lo, hi));
        }
    }
    if (k == 1) return 1.0;

    std::vector<double> observed(k * k, 0.0), row(k, 0.0), col(k, 0.0);
    const double n = static_cast<double>(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto ia = static_cast<std::size_t>(a[i] - lo);
        const auto ib = static_cast<std::size_t>(b[i] - lo);
        observed[ia * k + ib] += 1.0 / n;
        row[ia] += 1.0 / n;
        col[ib] += 1.0 / n;
    }
    const double denom = static_cast<double>((k - 1) * (k - 1));
    double wo = 0, we = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const double d = static_cast<double>(i) - static_cast<double>(j);
            const double w = d * d / denom;
            wo += w * observed[i * k + j];
            we += w * row[i] * col[j];
        }
    }
    if (we == 0.0) return 1.0;
    return 1.0 - wo / we;
}

RocResult roc_auc(std::span<const double> scores, std::span<const int> labels) {
    if (scores.size() != labels.size()) throw std::invalid_argument("scores and labels differ in length");
    std::size_t pos = 0;
    for (int l : labels) {
        if (l != 0 && l != 1) throw std::invalid_argument("labels must be 0 or 1");
        pos += static_cast<std::size_t>(l);
    }
    const std::size_t neg = labels.size() - pos;
    if (pos == 0 || neg == 0) throw SingleClass();

    const auto ranks = average_ranks(scores);
    double rank_sum = 0;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (labels[i] == 1) rank_sum += ranks[i];
    }
    const double p = static_cast<double>(pos);
    const double q = static_cast<double>(neg);
    RocResult out;
    out.auc = (rank_sum - p * (p + 1) / 2.0) / (p * q);

    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return scores[i] > scores[j]; });
    out.points.emplace_back(0.0, 0.0);
    std::size_t tp = 0, fp = 0;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        // One threshold per distinct score.
        for (; j < order.size() && scores[order[j]] == scores[order[i]]; ++j) {
            labels[order[j]] == 1 ? ++tp : ++fp;
        }
        out.points.emplace_back(static_cast<double>(fp) / q, static_cast<double>(tp) / p);
        i = j;
    }
    return out;
}

std::string_view to_string(Statistic s) { return s == Statistic::spearman ? "spearman" : "kendall"; }

Statistic parse_statistic(std::string_view name) {
    if (name == "spearman") return Statistic::spearman;
    if (name == "kendall") return Statistic::kendall;
    throw std::invalid_argument("unknown statistic: " + std::string(name));
}

double quantile_sorted(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("quantile of empty data");
    const double h = (static_cast<double>(sorted.size()) - 1.0) * std::clamp(p, 0.0, 1.0);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = next();
        if (r >= limit) return r % bound;
    }
}

}  // namespace respeval::metrics
