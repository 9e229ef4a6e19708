#include <doctest.h>

#include <algorithm>
#include <cstring>
#include <random>

#include "respeval/metrics.hpp"

using namespace respeval;
using namespace respeval::metrics;

namespace {

struct Synthetic {
    std::vector<double> human, a, b;
};

// A equals the human ratings; B is an unrelated permutation.
Synthetic informative_vs_noise(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> score(0, 4);
    Synthetic s;
    for (std::size_t i = 0; i < n; ++i) s.human.push_back(score(rng));
    s.a = s.human;
    s.b = s.human;
    std::shuffle(s.b.begin(), s.b.end(), rng);
    return s;
}

bool same_bits(double x, double y) { return std::memcmp(&x, &y, sizeof x) == 0; }

}  // namespace

TEST_CASE("identical methods give a zero interval") {
    const auto s = informative_vs_noise(30, 1);
    for (auto stat : {Statistic::spearman, Statistic::kendall}) {
        const auto ci = bootstrap_ci_diff(s.human, s.b, s.b, {stat, 2000, 0.95, 3});
        CHECK(ci.lower == 0.0);
        CHECK(ci.upper == 0.0);
        CHECK(ci.point_estimate == 0.0);
    }
}

TEST_CASE("informative method beats permuted noise") {
    const auto s = informative_vs_noise(100, 99);
    const auto ci = bootstrap_ci_diff(s.human, s.a, s.b, {Statistic::spearman, 10000, 0.95, 2024});
    CHECK(ci.point_estimate > 0.0);
    CHECK(ci.lower > 0.0);
    CHECK(ci.lower <= ci.upper);
    CHECK(ci.seed == 2024);
    CHECK(ci.resamples == 10000);
    CHECK(ci.level == 0.95);
}

TEST_CASE("fixed seed is bit-reproducible and thread-count independent") {
    const auto s = informative_vs_noise(60, 5);
    const BootstrapOptions o{Statistic::kendall, 3000, 0.9, 77};
    const auto p1 = bootstrap_ci_diff(s.human, s.a, s.b, o);
    const auto p2 = bootstrap_ci_diff(s.human, s.a, s.b, o);
    const auto serial = bootstrap_ci_diff_serial(s.human, s.a, s.b, o);
    CHECK(same_bits(p1.lower, p2.lower));
    CHECK(same_bits(p1.upper, p2.upper));
    CHECK(same_bits(p1.lower, serial.lower));
    CHECK(same_bits(p1.upper, serial.upper));
    CHECK(p1.degenerate_draws == serial.degenerate_draws);

    const auto other = bootstrap_ci_diff(s.human, s.a, s.b, {Statistic::kendall, 3000, 0.9, 78});
    CHECK_FALSE((same_bits(other.lower, p1.lower) && same_bits(other.upper, p1.upper)));
}

TEST_CASE("wider level nests the narrower interval") {
    std::mt19937_64 rng(8);
    std::normal_distribution<double> z(0, 1);
    std::vector<double> h, a, b;
    for (int i = 0; i < 40; ++i) {
        h.push_back(z(rng));
        a.push_back(h.back() + z(rng));
        b.push_back(h.back() + 2 * z(rng));
    }
    const auto c80 = bootstrap_ci_diff(h, a, b, {Statistic::spearman, 4000, 0.80, 1});
    const auto c95 = bootstrap_ci_diff(h, a, b, {Statistic::spearman, 4000, 0.95, 1});
    const auto c99 = bootstrap_ci_diff(h, a, b, {Statistic::spearman, 4000, 0.99, 1});
    CHECK(c95.lower <= c80.lower);
    CHECK(c95.upper >= c80.upper);
    CHECK(c99.lower <= c95.lower);
    CHECK(c99.upper >= c95.upper);
}

TEST_CASE("degenerate resamples are redrawn") {
    // Mostly-constant human ratings make many resamples constant.
    std::vector<double> h{0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3};
    std::vector<double> a{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    std::vector<double> b{12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1};
    const auto ci = bootstrap_ci_diff(h, a, b, {Statistic::spearman, 1000, 0.95, 4});
    CHECK(ci.degenerate_draws > 0);
    CHECK(ci.lower <= ci.upper);
    const auto serial = bootstrap_ci_diff_serial(h, a, b, {Statistic::spearman, 1000, 0.95, 4});
    CHECK(ci.degenerate_draws == serial.degenerate_draws);
    CHECK(same_bits(ci.lower, serial.lower));
}

TEST_CASE("non-convergent and invalid inputs") {
    // Each vector varies at a single, different position, so most resamples miss one.
    std::vector<double> h(20, 0.0), a(20, 0.0), b(20, 0.0);
    h[19] = 1;
    a[0] = 1;
    b[10] = 1;
    CHECK_THROWS_AS(bootstrap_ci_diff(h, a, b, {Statistic::spearman, 1000, 0.95, 1}), NonConvergentResampling);

    const std::vector<double> three{1, 2, 3};
    CHECK_THROWS_AS(bootstrap_ci_diff(three, three, three), TooSmallSample);
    const auto s = informative_vs_noise(10, 2);
    CHECK_THROWS_AS(bootstrap_ci_diff(s.human, s.a, s.b, {Statistic::spearman, 999, 0.95, 0}), std::invalid_argument);
    CHECK_THROWS_AS(bootstrap_ci_diff(s.human, s.a, s.b, {Statistic::spearman, 1000, 1.0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(bootstrap_ci_diff(s.human, s.a, three), std::invalid_argument);
}
