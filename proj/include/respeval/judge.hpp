#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "respeval/types.hpp"

/// Stage-2 rubric evaluation through a chat-completion model.
namespace respeval::judge {

enum class Dimension { effort, relevance, completeness, overall_quality };

inline constexpr Dimension scored_dimensions[] = {Dimension::effort, Dimension::relevance, Dimension::completeness};

/// JSON field name of the dimension ("effort", ..., "overall_quality").
std::string_view to_string(Dimension d);
Dimension parse_dimension(std::string_view name);
inline constexpr int min_score(Dimension) { return 0; }
inline constexpr int max_score(Dimension d) { return d == Dimension::effort ? 7 : 4; }

struct DimensionScore {
    Dimension dimension = Dimension::effort;
    int score = 0;
    std::string reason;
    std::string raw_response;  ///< model output the score was parsed from
    int attempts = 1;          ///< calls spent, including failed ones
};

/// Effort, relevance and completeness for one item. A dimension whose judging failed is
/// absent and its failure message is recorded instead.
struct DimensionScores {
    std::optional<DimensionScore> effort;
    std::optional<DimensionScore> relevance;
    std::optional<DimensionScore> completeness;
    std::map<Dimension, std::string> failures;

    [[nodiscard]] bool complete() const { return effort && relevance && completeness; }
    [[nodiscard]] const std::optional<DimensionScore>& get(Dimension d) const;
    std::optional<DimensionScore>& get(Dimension d);
};

struct JudgeConfig {
    std::string endpoint_url = "https://api.openai.com/v1/chat/completions";
    std::string model_identifier = "gpt-4o-mini-2024-07-18";
    double temperature = 0.0;
    int max_tokens = 300;
    int max_retries = 3;  ///< total attempts per judgment
    Language language = Language::english;  ///< prompt template language
    std::chrono::seconds timeout{60};

    void validate() const;
};

class TransportError : public Error {
public:
    using Error::Error;
};

class MissingScoresContext : public Error {
public:
    MissingScoresContext() : Error("overall_quality prompt needs the three dimension scores") {}
};

class MalformedJudgment : public Error {
public:
    using Error::Error;
};

class ScoreOutOfRange : public Error {
public:
    ScoreOutOfRange(Dimension d, long long value);
    Dimension dimension;
    long long value;
};

class JudgeUnavailable : public Error {
public:
    JudgeUnavailable(Dimension d, std::vector<std::string> attempt_errors);
    Dimension dimension;
    std::vector<std::string> attempt_errors;
};

/// Anything that can answer a system+user message pair. Implementations used by
/// score_all must tolerate concurrent calls.
class ChatClient {
public:
    virtual ~ChatClient() = default;
    /// Throws TransportError (or any respeval::Error) on failure.
    virtual std::string complete(std::string_view system_text, std::string_view user_text,
                                 const JudgeConfig& config) = 0;
};

struct Prompt {
    std::string system_text;
    std::string user_text;
};

/// Renders the rubric prompt for a dimension. overall_quality needs scores_context with
/// all three dimensions, otherwise MissingScoresContext is thrown.
Prompt build_prompt(Dimension dimension, const SurveyItem& item,
                    const std::optional<DimensionScores>& scores_context = std::nullopt,
                    Language template_language = Language::english);

/// Extracts the JSON verdict from a model reply, tolerating code fences and prose.
DimensionScore parse_judgment(std::string_view raw, Dimension dimension);

/// One rubric judgment with retries on transport, format and range failures.
DimensionScore score_dimension(ChatClient& client, const SurveyItem& item, Dimension dimension,
                               const JudgeConfig& config);

/// Effort, relevance and completeness, judged independently with at most
/// `parallelism` calls in flight.
DimensionScores score_all(ChatClient& client, const SurveyItem& item, const JudgeConfig& config,
                          std::size_t parallelism = 3);

/// LLM synthesis of the three scores into a 0-4 overall quality.
DimensionScore llm_overall_quality(ChatClient& client, const SurveyItem& item, const DimensionScores& scores,
                                   const JudgeConfig& config);

/// Baseline detector: asks whether the sentence is meaningful. Returns true for gibberish.
bool llm_detect_gibberish(ChatClient& client, std::string_view text, const JudgeConfig& config);

/// Reads a true/false answer (case-insensitive, punctuation tolerated). Throws MalformedJudgment.
bool parse_meaningful_answer(std::string_view raw);

}  // namespace respeval::judge
