#include "respeval/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace respeval::aggregate {

using json = nlohmann::json;

namespace {

constexpr double condition_bound = 1e12;

}  // namespace

std::string_view to_string(Method m) {
    switch (m) {
        case Method::sum: return "sum";
        case Method::regression: return "regression";
        case Method::llm: return "llm";
    }
    return "unknown";
}

Method parse_method(std::string_view name) {
    if (name == "sum") return Method::sum;
    if (name == "regression") return Method::regression;
    if (name == "llm") return Method::llm;
    throw std::invalid_argument("unknown aggregation method: " + std::string(name));
}

std::string_view to_string(Acceptance a) { return a == Acceptance::accept ? "accept" : "reject"; }

std::string_view to_string(HumanLabel l) {
    switch (l) {
        case HumanLabel::accept: return "accept";
        case HumanLabel::hold: return "hold";
        case HumanLabel::reject: return "reject";
    }
    return "unknown";
}

HumanLabel parse_label(std::string_view name) {
    if (name == "accept") return HumanLabel::accept;
    if (name == "hold") return HumanLabel::hold;
    if (name == "reject") return HumanLabel::reject;
    throw std::invalid_argument("unknown acceptance label: " + std::string(name));
}

int positive_class(HumanLabel l) { return l == HumanLabel::accept ? 1 : 0; }

NormalizedScores normalize(int effort, int relevance, int completeness) {
    using judge::Dimension;
    return {static_cast<double>(effort) / judge::max_score(Dimension::effort),
            static_cast<double>(relevance) / judge::max_score(Dimension::relevance),
            static_cast<double>(completeness) / judge::max_score(Dimension::completeness)};
}

NormalizedScores normalize(const judge::DimensionScores& scores) {
    if (!scores.complete()) throw std::invalid_argument("normalize needs all three dimension scores");
    return normalize(scores.effort->score, scores.relevance->score, scores.completeness->score);
}

double aggregate_sum(const NormalizedScores& n) { return (n.effort_n + n.relevance_n + n.completeness_n) / 3.0; }

LinearFit ridge_solve(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double lambda) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be finite and >= 0");
    if (x.rows() != y.size()) throw std::invalid_argument("feature rows and targets differ in length");
    if (x.rows() < x.cols() + 1) {
        throw std::invalid_argument(fmt::format("ridge fit needs at least {} rows, got {}", x.cols() + 1, x.rows()));
    }
    const Eigen::RowVectorXd x_mean = x.colwise().mean();
    const double y_mean = y.mean();
    const Eigen::MatrixXd xc = x.rowwise() - x_mean;
    const Eigen::VectorXd yc = y.array() - y_mean;

    Eigen::MatrixXd normal = xc.transpose() * xc;
    normal.diagonal().array() += lambda;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(normal, Eigen::EigenvaluesOnly);
    const double hi = eig.eigenvalues().maxCoeff();
    const double lo = eig.eigenvalues().minCoeff();
    if (!(lo > 0.0) || hi / lo > condition_bound) {
        throw DegenerateDesign(fmt::format("normal matrix is singular or ill-conditioned (eigenvalues {:.3g}..{:.3g})",
                                           lo, hi));
    }
    LinearFit fit;
    fit.weights = normal.ldlt().solve(xc.transpose() * yc);
    fit.intercept = y_mean - x_mean.dot(fit.weights);
    return fit;
}

RidgeWeights fit_ridge(const std::vector<NormalizedScores>& features, const std::vector<double>& targets,
                       double lambda) {
    if (features.size() < 4) throw std::invalid_argument("ridge fit needs at least 4 rows");
    if (features.size() != targets.size()) throw std::invalid_argument("feature rows and targets differ in length");
    const auto n = static_cast<Eigen::Index>(features.size());
    Eigen::MatrixXd x(n, 3);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& f = features[static_cast<std::size_t>(i)];
        x.row(i) << f.effort_n, f.relevance_n, f.completeness_n;
        y(i) = targets[static_cast<std::size_t>(i)];
    }
    const LinearFit fit = ridge_solve(x, y, lambda);
    return {fit.weights(0), fit.weights(1), fit.weights(2), fit.intercept, lambda, features.size()};
}

double aggregate_regression(const RidgeWeights& w, const NormalizedScores& n) {
    const double raw =
        w.w_effort * n.effort_n + w.w_relevance * n.relevance_n + w.w_completeness * n.completeness_n + w.intercept;
    if (!std::isfinite(raw)) throw std::invalid_argument("regression weights are not finite");
    return std::clamp(raw, 0.0, 1.0);
}

Acceptance decide_acceptance(double overall, double threshold) {
    return overall >= threshold ? Acceptance::accept : Acceptance::reject;
}

QualityReport make_report(double overall, Method method, double threshold, const NormalizedScores& components) {
    return {overall, method, decide_acceptance(overall, threshold), threshold, components, false};
}

QualityReport gibberish_report(Method method, double threshold) {
    return {0.0, method, Acceptance::reject, threshold, {}, true};
}

std::string weights_to_json(const RidgeWeights& w) {
    json j = {{"w_effort", w.w_effort},   {"w_relevance", w.w_relevance}, {"w_completeness", w.w_completeness},
              {"intercept", w.intercept}, {"lambda", w.lambda},           {"fitted_on", w.fitted_on}};
    return j.dump(2);
}

RidgeWeights weights_from_json(std::string_view document) {
    try {
        const json j = json::parse(document);
        RidgeWeights w{j.at("w_effort").get<double>(),  j.at("w_relevance").get<double>(),
                       j.at("w_completeness").get<double>(), j.at("intercept").get<double>(),
                       j.at("lambda").get<double>(),    j.value("fitted_on", std::size_t{0})};
        for (double v : {w.w_effort, w.w_relevance, w.w_completeness, w.intercept, w.lambda}) {
            if (!std::isfinite(v)) throw ConfigError("weights file holds a non-finite value");
        }
        if (w.lambda < 0) throw ConfigError("weights file holds a negative lambda");
        return w;
    } catch (const json::exception& e) {
        throw ConfigError(fmt::format("invalid weights file: {}", e.what()));
    }
}

void save_weights(const RidgeWeights& w, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot write " + path.string());
    out << weights_to_json(w) << '\n';
    if (!out) throw IoFailure("write failed for " + path.string());
}

RidgeWeights load_weights(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return weights_from_json(ss.str());
}

}  // namespace respeval::aggregate
