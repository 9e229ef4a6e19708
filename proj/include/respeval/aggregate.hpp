#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "respeval/judge.hpp"

/// Turns dimension scores into one overall quality and an accept/reject decision.
namespace respeval::aggregate {

struct NormalizedScores {
    double effort_n = 0.0;
    double relevance_n = 0.0;
    double completeness_n = 0.0;

    bool operator==(const NormalizedScores&) const = default;
};

struct RidgeWeights {
    double w_effort = 0.0;
    double w_relevance = 0.0;
    double w_completeness = 0.0;
    double intercept = 0.0;
    double lambda = 0.0;
    std::size_t fitted_on = 0;  ///< training rows
};

enum class Method { sum, regression, llm };
enum class Acceptance { accept, reject };
/// Human acceptance annotations; hold counts as rejection.
enum class HumanLabel { accept, hold, reject };

std::string_view to_string(Method m);
Method parse_method(std::string_view name);
std::string_view to_string(Acceptance a);
std::string_view to_string(HumanLabel l);
HumanLabel parse_label(std::string_view name);
/// accept -> 1, hold and reject -> 0.
int positive_class(HumanLabel l);

inline constexpr double default_threshold = 0.5;
inline constexpr double default_lambda = 1.0;

struct QualityReport {
    double overall = 0.0;
    Method method = Method::sum;
    Acceptance acceptance = Acceptance::reject;
    double threshold = default_threshold;
    NormalizedScores components;
    bool gibberish_short_circuit = false;
};

class DegenerateDesign : public Error {
public:
    using Error::Error;
};

/// Divides by the scale maxima (7, 4, 4). Throws std::invalid_argument if a score is missing.
NormalizedScores normalize(const judge::DimensionScores& scores);
NormalizedScores normalize(int effort, int relevance, int completeness);

/// Mean of the three normalized scores, in [0, 1].
double aggregate_sum(const NormalizedScores& n);

struct LinearFit {
    Eigen::VectorXd weights;
    double intercept = 0.0;
};

/// Ridge regression with an unpenalized intercept, solved on the centered normal
/// equations. Needs rows >= features + 1. Throws DegenerateDesign when the regularized
/// normal matrix has condition number above 1e12.
LinearFit ridge_solve(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double lambda);

/// Three-feature fit on normalized scores vs targets in [0, 1]; needs at least 4 rows.
RidgeWeights fit_ridge(const std::vector<NormalizedScores>& features, const std::vector<double>& targets,
                       double lambda = default_lambda);

/// w . n + intercept, clamped to [0, 1].
double aggregate_regression(const RidgeWeights& weights, const NormalizedScores& n);

/// accept iff overall >= threshold.
Acceptance decide_acceptance(double overall, double threshold = default_threshold);

QualityReport make_report(double overall, Method method, double threshold, const NormalizedScores& components);
/// overall 0, reject.
QualityReport gibberish_report(Method method, double threshold);

std::string weights_to_json(const RidgeWeights& w);
RidgeWeights weights_from_json(std::string_view document);
void save_weights(const RidgeWeights& w, const std::filesystem::path& path);
RidgeWeights load_weights(const std::filesystem::path& path);

}  // namespace respeval::aggregate
