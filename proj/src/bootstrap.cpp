#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "respeval/metrics.hpp"

namespace respeval::metrics {

namespace {

// A resample that keeps drawing degenerate index sets this often is hopeless.
constexpr std::size_t max_redraws_per_resample = 64;

struct Draw {
    double diff = 0.0;
    std::size_t degenerate = 0;
    bool converged = true;
};

struct Inputs {
    std::span<const double> human, a, b;
    Statistic statistic;
};

std::optional<double> correlate(Statistic s, std::span<const double> x, std::span<const double> y) {
    return s == Statistic::spearman ? spearman_rho(x, y) : kendall_tau(x, y);
}

std::optional<double> difference(const Inputs& in, std::span<const double> h, std::span<const double> a,
                                 std::span<const double> b) {
    const auto ca = correlate(in.statistic, h, a);
    const auto cb = correlate(in.statistic, h, b);
    if (!ca || !cb) return std::nullopt;
    return *ca - *cb;
}

Draw draw_resample(const Inputs& in, std::uint64_t seed, std::size_t r) {
    SplitMix64 init(seed ^ (0xD1B54A32D192ED03ULL * (static_cast<std::uint64_t>(r) + 1)));
    SplitMix64 rng(init.next());
    const std::size_t n = in.human.size();
    std::vector<double> h(n), a(n), b(n);
    Draw out;
    for (std::size_t attempt = 0; attempt <= max_redraws_per_resample; ++attempt) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto k = static_cast<std::size_t>(rng.below(n));
            h[i] = in.human[k];
            a[i] = in.a[k];
            b[i] = in.b[k];
        }
        if (auto d = difference(in, h, a, b)) {
            out.diff = *d;
            return out;
        }
        ++out.degenerate;
    }
    out.converged = false;
    return out;
}

Inputs validate(std::span<const double> human, std::span<const double> a, std::span<const double> b,
                const BootstrapOptions& opt) {
    if (human.size() != a.size() || human.size() != b.size()) {
        throw std::invalid_argument("bootstrap inputs differ in length");
    }
    if (human.size() < 5) throw TooSmallSample(fmt::format("bootstrap needs n >= 5, got {}", human.size()));
    if (opt.resamples < 1000) throw std::invalid_argument("bootstrap needs at least 1000 resamples");
    if (!(opt.level > 0.0 && opt.level < 1.0)) throw std::invalid_argument("confidence level must lie in (0, 1)");
    return {human, a, b, opt.statistic};
}

ConfidenceInterval finish(const Inputs& in, const BootstrapOptions& opt, std::vector<Draw>& draws) {
    std::size_t degenerate = 0;
    bool converged = true;
    for (const auto& d : draws) {
        degenerate += d.degenerate;
        converged = converged && d.converged;
    }
    const std::size_t total = draws.size() + degenerate;
    if (!converged || 2 * degenerate > total) {
        throw NonConvergentResampling(
            fmt::format("{} of {} bootstrap draws had a constant vector", degenerate, total));
    }
    if (degenerate > 0) spdlog::info("bootstrap redrew {} degenerate resample(s)", degenerate);

    std::vector<double> diffs(draws.size());
    std::transform(draws.begin(), draws.end(), diffs.begin(), [](const Draw& d) { return d.diff; });
    std::sort(diffs.begin(), diffs.end());
    const double tail = (1.0 - opt.level) / 2.0;

    ConfidenceInterval ci;
    ci.lower = quantile_sorted(diffs, tail);
    ci.upper = quantile_sorted(diffs, 1.0 - tail);
    ci.level = opt.level;
    ci.resamples = opt.resamples;
    ci.seed = opt.seed;
    ci.degenerate_draws = degenerate;
    ci.point_estimate = difference(in, in.human, in.a, in.b).value_or(std::nan(""));
    return ci;
}

}  // namespace

ConfidenceInterval bootstrap_ci_diff(std::span<const double> human, std::span<const double> a,
                                     std::span<const double> b, const BootstrapOptions& options) {
    const Inputs in = validate(human, a, b, options);
    std::vector<Draw> draws(options.resamples);
    const auto count = static_cast<long long>(options.resamples);
#pragma omp parallel for schedule(static)
    for (long long r = 0; r < count; ++r) {
        draws[static_cast<std::size_t>(r)] = draw_resample(in, options.seed, static_cast<std::size_t>(r));
    }
    return finish(in, options, draws);
}

ConfidenceInterval bootstrap_ci_diff_serial(std::span<const double> human, std::span<const double> a,
                                            std::span<const double> b, const BootstrapOptions& options) {
    const Inputs in = validate(human, a, b, options);
    std::vector<Draw> draws(options.resamples);
    for (std::size_t r = 0; r < options.resamples; ++r) draws[r] = draw_resample(in, options.seed, r);
    return finish(in, options, draws);
}

}  // namespace respeval::metrics
