#include <doctest.h>

#include <algorithm>
#include <random>

#include "../support/oracles.hpp"
#include "../support/paths.hpp"
#include "respeval/aggregate.hpp"

using namespace respeval;
using namespace respeval::aggregate;

TEST_CASE("normalize") {
    CHECK(normalize(7, 4, 4) == NormalizedScores{1.0, 1.0, 1.0});
    CHECK(normalize(0, 0, 0) == NormalizedScores{0.0, 0.0, 0.0});
    const auto n = normalize(2, 3, 2);
    CHECK(n.effort_n == doctest::Approx(2.0 / 7.0).epsilon(1e-15));
    CHECK(n.relevance_n == 0.75);
    CHECK(n.completeness_n == 0.5);

    judge::DimensionScores s;
    s.effort = judge::DimensionScore{judge::Dimension::effort, 2, "r", "", 1};
    s.relevance = judge::DimensionScore{judge::Dimension::relevance, 3, "r", "", 1};
    CHECK_THROWS_AS(normalize(s), std::invalid_argument);
    s.completeness = judge::DimensionScore{judge::Dimension::completeness, 2, "r", "", 1};
    CHECK(normalize(s) == n);
}

TEST_CASE("aggregate_sum") {
    CHECK(aggregate_sum({1, 1, 1}) == 1.0);
    CHECK(aggregate_sum({0, 0, 0}) == 0.0);
    // Case-study scores 2/3/2 on scales 7/4/4.
    const double expected = (2.0 / 7.0 + 3.0 / 4.0 + 2.0 / 4.0) / 3.0;
    CHECK(std::fabs(aggregate_sum(normalize(2, 3, 2)) - expected) < 1e-15);
    CHECK(std::fabs(aggregate_sum(normalize(2, 3, 2)) - 0.5119) < 1e-4);
}

TEST_CASE("aggregate_sum is monotone in every raw score") {
    for (int e = 0; e <= 7; ++e) {
        for (int r = 0; r <= 4; ++r) {
            for (int c = 0; c <= 4; ++c) {
                const double base = aggregate_sum(normalize(e, r, c));
                CHECK(base >= 0.0);
                CHECK(base <= 1.0);
                if (e < 7) CHECK(aggregate_sum(normalize(e + 1, r, c)) >= base);
                if (r < 4) CHECK(aggregate_sum(normalize(e, r + 1, c)) >= base);
                if (c < 4) CHECK(aggregate_sum(normalize(e, r, c + 1)) >= base);
            }
        }
    }
}

TEST_CASE("uniform regression weights reproduce the sum") {
    const RidgeWeights uniform{1.0 / 3, 1.0 / 3, 1.0 / 3, 0.0, 0.0, 0};
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const NormalizedScores n{u(rng), u(rng), u(rng)};
        CHECK(std::fabs(aggregate_regression(uniform, n) - aggregate_sum(n)) <= 1e-12);
    }
}

TEST_CASE("aggregate_regression examples and clamp") {
    CHECK(aggregate_regression({1.0 / 3, 1.0 / 3, 1.0 / 3, 0, 0, 0}, {1, 1, 1}) == doctest::Approx(1.0));
    CHECK(aggregate_regression({0, 0, 0, 0.4, 0, 0}, {0.3, 0.9, 0.1}) == 0.4);
    CHECK(aggregate_regression({2, 0, 0, 0, 0, 0}, {0.9, 0, 0}) == 1.0);
    CHECK(aggregate_regression({-2, 0, 0, 0, 0, 0}, {0.9, 0, 0}) == 0.0);
}

TEST_CASE("ridge_solve single feature by hand") {
    Eigen::MatrixXd x(3, 1);
    x << 0.0, 0.5, 1.0;
    Eigen::VectorXd y(3);
    y << 0.0, 0.5, 1.0;
    const auto fit = ridge_solve(x, y, 0.0);
    CHECK(std::fabs(fit.weights(0) - 1.0) < 1e-12);
    CHECK(std::fabs(fit.intercept) < 1e-12);
}

TEST_CASE("fit_ridge recovers exact linear weights with lambda 0") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<NormalizedScores> x;
    std::vector<double> y;
    for (int i = 0; i < 40; ++i) {
        const NormalizedScores n{u(rng), u(rng), u(rng)};
        x.push_back(n);
        y.push_back(0.2 * n.effort_n + 0.5 * n.relevance_n + 0.25 * n.completeness_n + 0.05);
    }
    const auto w = fit_ridge(x, y, 0.0);
    CHECK(std::fabs(w.w_effort - 0.2) < 1e-8);
    CHECK(std::fabs(w.w_relevance - 0.5) < 1e-8);
    CHECK(std::fabs(w.w_completeness - 0.25) < 1e-8);
    CHECK(std::fabs(w.intercept - 0.05) < 1e-8);
    CHECK(w.fitted_on == 40);
    CHECK(w.lambda == 0.0);
}

TEST_CASE("fit_ridge matches an independent normal-equation solver") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 4 + rng() % 20;
        const double lambda = trial % 3 == 0 ? 0.0 : u(rng) * 5;
        std::vector<NormalizedScores> x;
        std::vector<std::vector<double>> xo;
        std::vector<double> y;
        for (std::size_t i = 0; i < rows; ++i) {
            const NormalizedScores n{u(rng), u(rng), u(rng)};
            x.push_back(n);
            xo.push_back({n.effort_n, n.relevance_n, n.completeness_n});
            y.push_back(u(rng));
        }
        const auto w = fit_ridge(x, y, lambda);
        const auto ref = oracle::ridge_normal_equations(xo, y, lambda);
        CHECK(std::fabs(w.w_effort - ref[0]) < 1e-7);
        CHECK(std::fabs(w.w_relevance - ref[1]) < 1e-7);
        CHECK(std::fabs(w.w_completeness - ref[2]) < 1e-7);
        CHECK(std::fabs(w.intercept - ref[3]) < 1e-7);
    }
}

TEST_CASE("fit_ridge penalty limit, row order and preconditions") {
    std::vector<NormalizedScores> x{{0.1, 0.2, 0.9}, {0.5, 0.5, 0.5}, {0.9, 0.1, 0.3}, {0.3, 0.8, 0.6}, {0.7, 0.4, 0.2}};
    std::vector<double> y{0.1, 0.5, 0.75, 0.25, 1.0};
    const auto big = fit_ridge(x, y, 1e9);
    CHECK(std::fabs(big.w_effort) < 1e-6);
    CHECK(std::fabs(big.w_relevance) < 1e-6);
    CHECK(std::fabs(big.w_completeness) < 1e-6);
    CHECK(std::fabs(big.intercept - 0.52) < 1e-6);

    const auto w = fit_ridge(x, y, 1.0);
    auto xr = x;
    auto yr = y;
    std::reverse(xr.begin(), xr.end());
    std::reverse(yr.begin(), yr.end());
    const auto wr = fit_ridge(xr, yr, 1.0);
    for (const auto& n : x) CHECK(std::fabs(aggregate_regression(w, n) - aggregate_regression(wr, n)) < 1e-12);

    CHECK_THROWS_AS(fit_ridge({x.begin(), x.begin() + 3}, {y.begin(), y.begin() + 3}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(fit_ridge(x, {0.1, 0.2}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(fit_ridge(x, y, -1.0), std::invalid_argument);

    // Identical rows and no penalty leave the slopes unidentified.
    std::vector<NormalizedScores> same(6, NormalizedScores{0.5, 0.5, 0.5});
    CHECK_THROWS_AS(fit_ridge(same, {0, 1, 0, 1, 0, 1}, 0.0), DegenerateDesign);
}

TEST_CASE("decide_acceptance and labels") {
    CHECK(decide_acceptance(0.9, 0.5) == Acceptance::accept);
    CHECK(decide_acceptance(0.5, 0.5) == Acceptance::accept);
    CHECK(decide_acceptance(0.49, 0.5) == Acceptance::reject);
    for (double o = 0; o <= 1.0; o += 0.05) {
        for (double t = 0; t <= 1.0; t += 0.05) {
            if (decide_acceptance(o, t) == Acceptance::accept) {
                CHECK(decide_acceptance(std::min(1.0, o + 0.1), t) == Acceptance::accept);
                CHECK(decide_acceptance(o, std::max(0.0, t - 0.1)) == Acceptance::accept);
            }
        }
    }
    CHECK(positive_class(parse_label("accept")) == 1);
    CHECK(positive_class(parse_label("hold")) == 0);
    CHECK(positive_class(parse_label("reject")) == 0);
    CHECK_THROWS_AS(parse_label("maybe"), std::invalid_argument);
    CHECK(parse_method("regression") == Method::regression);

    const auto g = gibberish_report(Method::sum, 0.0);
    CHECK(g.gibberish_short_circuit);
    CHECK(g.overall == 0.0);
    CHECK(g.acceptance == Acceptance::reject);
    const auto r = make_report(0.6, Method::sum, 0.6, normalize(2, 3, 2));
    CHECK(r.acceptance == Acceptance::accept);
    CHECK_FALSE(r.gibberish_short_circuit);
}

TEST_CASE("weights round-trip through JSON") {
    const RidgeWeights w{0.125, -0.5, 0.3, 0.07, 1.0, 12};
    const auto back = weights_from_json(weights_to_json(w));
    CHECK(back.w_effort == w.w_effort);
    CHECK(back.w_relevance == w.w_relevance);
    CHECK(back.w_completeness == w.w_completeness);
    CHECK(back.intercept == w.intercept);
    CHECK(back.lambda == w.lambda);
    CHECK(back.fitted_on == 12);
    CHECK_THROWS(weights_from_json(R"({"w_effort": 1})"));

    testing::TempDir dir;
    save_weights(w, dir.path() / "w.json");
    CHECK(load_weights(dir.path() / "w.json").w_relevance == -0.5);
    CHECK_THROWS_AS(load_weights(dir.path() / "missing.json"), IoFailure);
}
