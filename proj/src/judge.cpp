#include "respeval/judge.hpp"

#include <cctype>
#include <cmath>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "bounded_pool.hpp"
#include "respeval/prompts.hpp"
#include "respeval/utf8.hpp"

namespace respeval::judge {

using json = nlohmann::json;

namespace {

// Finds the '}' closing the object that opens at `open`, skipping braces inside strings.
std::size_t matching_brace(std::string_view s, std::size_t open) {
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (std::size_t i = open; i < s.size(); ++i) {
        const char c = s[i];
        if (in_string) {
            if (escaped) {
                escaped = false;
            } else if (c == '\\') {
                escaped = true;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        if (c == '"') {
            in_string = true;
        } else if (c == '{') {
            ++depth;
        } else if (c == '}') {
            if (--depth == 0) return i;
        }
    }
    return std::string_view::npos;
}

std::string format_normalized(const std::optional<DimensionScore>& s) {
    return fmt::format("{:.4g}", static_cast<double>(s->score) / max_score(s->dimension));
}

DimensionScore judge_with_retries(ChatClient& client, const Prompt& prompt, Dimension dimension,
                                  const JudgeConfig& config) {
    std::vector<std::string> errors;
    for (int attempt = 1; attempt <= config.max_retries; ++attempt) {
        try {
            std::string raw = client.complete(prompt.system_text, prompt.user_text, config);
            DimensionScore score = parse_judgment(raw, dimension);
            score.attempts = attempt;
            return score;
        } catch (const Error& e) {
            spdlog::debug("{} judgment attempt {} failed: {}", to_string(dimension), attempt, e.what());
            errors.emplace_back(e.what());
        }
    }
    throw JudgeUnavailable(dimension, std::move(errors));
}

}  // namespace

std::string_view to_string(Dimension d) {
    switch (d) {
        case Dimension::effort: return "effort";
        case Dimension::relevance: return "relevance";
        case Dimension::completeness: return "completeness";
        case Dimension::overall_quality: return "overall_quality";
    }
    return "unknown";
}

Dimension parse_dimension(std::string_view name) {
    for (auto d : {Dimension::effort, Dimension::relevance, Dimension::completeness, Dimension::overall_quality}) {
        if (to_string(d) == name) return d;
    }
    throw std::invalid_argument("unknown dimension: " + std::string(name));
}

const std::optional<DimensionScore>& DimensionScores::get(Dimension d) const {
    switch (d) {
        case Dimension::effort: return effort;
        case Dimension::relevance: return relevance;
        case Dimension::completeness: return completeness;
        default: throw std::invalid_argument("DimensionScores holds effort, relevance and completeness only");
    }
}

std::optional<DimensionScore>& DimensionScores::get(Dimension d) {
    return const_cast<std::optional<DimensionScore>&>(std::as_const(*this).get(d));
}

void JudgeConfig::validate() const {
    if (!(temperature >= 0.0)) throw std::invalid_argument("temperature must be >= 0");
    if (max_tokens <= 0) throw std::invalid_argument("max_tokens must be > 0");
    if (max_retries < 1) throw std::invalid_argument("max_retries must be >= 1");
}

ScoreOutOfRange::ScoreOutOfRange(Dimension d, long long v)
    : Error(fmt::format("{} score {} outside [{}, {}]", to_string(d), v, min_score(d), max_score(d))),
      dimension(d),
      value(v) {}

JudgeUnavailable::JudgeUnavailable(Dimension d, std::vector<std::string> errs)
    : Error(fmt::format("{} judgment failed after {} attempt(s){}{}", to_string(d), errs.size(),
                        errs.empty() ? "" : ": ", errs.empty() ? "" : errs.back())),
      dimension(d),
      attempt_errors(std::move(errs)) {}

Prompt build_prompt(Dimension dimension, const SurveyItem& item, const std::optional<DimensionScores>& scores_context,
                    Language template_language) {
    std::map<std::string, std::string, std::less<>> slots{{"conversation", prompts::format_conversation(item)}};
    if (dimension == Dimension::overall_quality) {
        if (!scores_context || !scores_context->complete()) throw MissingScoresContext();
        for (Dimension d : scored_dimensions) {
            const auto& s = scores_context->get(d);
            slots.emplace(fmt::format("{}_score", to_string(d)), format_normalized(s));
            slots.emplace(fmt::format("{}_reason", to_string(d)), s->reason);
        }
    }
    return Prompt{std::string(prompts::system_prompt(template_language)),
                  prompts::render(prompts::user_template(dimension, template_language), slots)};
}

DimensionScore parse_judgment(std::string_view raw, Dimension dimension) {
    const std::string key(to_string(dimension));
    bool saw_object = false;
    for (std::size_t open = raw.find('{'); open != std::string_view::npos; open = raw.find('{', open + 1)) {
        const std::size_t close = matching_brace(raw, open);
        if (close == std::string_view::npos) break;
        const json obj = json::parse(raw.substr(open, close - open + 1), nullptr, false);
        if (obj.is_discarded() || !obj.is_object()) continue;
        saw_object = true;
        if (!obj.contains(key)) continue;

        const json& value = obj.at(key);
        long long score = 0;
        if (value.is_number_integer()) {
            score = value.get<long long>();
        } else if (value.is_number_float()) {
            const double d = value.get<double>();
            if (!std::isfinite(d) || std::floor(d) != d || std::fabs(d) > 1e15) {
                throw MalformedJudgment(fmt::format("{} score {} is not an integer", key, d));
            }
            score = static_cast<long long>(d);
        } else {
            throw MalformedJudgment(fmt::format("{} field is not a number", key));
        }
        if (score < min_score(dimension) || score > max_score(dimension)) throw ScoreOutOfRange(dimension, score);

        if (!obj.contains("reason") || !obj.at("reason").is_string() ||
            utf8::trim(obj.at("reason").get<std::string>()).empty()) {
            throw MalformedJudgment("judgment lacks a non-empty \"reason\"");
        }
        return DimensionScore{dimension, static_cast<int>(score), obj.at("reason").get<std::string>(), std::string(raw),
                              1};
    }
    throw MalformedJudgment(saw_object ? fmt::format("no JSON object carries the \"{}\" field", key)
                                       : std::string("no JSON object found in judge output"));
}

DimensionScore score_dimension(ChatClient& client, const SurveyItem& item, Dimension dimension,
                               const JudgeConfig& config) {
    if (dimension == Dimension::overall_quality) {
        throw std::invalid_argument("score_dimension handles effort, relevance and completeness");
    }
    config.validate();
    return judge_with_retries(client, build_prompt(dimension, item, std::nullopt, config.language), dimension, config);
}

DimensionScores score_all(ChatClient& client, const SurveyItem& item, const JudgeConfig& config,
                          std::size_t parallelism) {
    config.validate();
    std::array<std::optional<DimensionScore>, 3> results;
    std::array<std::string, 3> failures;
    detail::bounded_for_each(3, parallelism, [&](std::size_t i) {
        try {
            results[i] = score_dimension(client, item, scored_dimensions[i], config);
        } catch (const std::exception& e) {
            failures[i] = e.what();
        }
    });
    DimensionScores out;
    for (std::size_t i = 0; i < 3; ++i) {
        out.get(scored_dimensions[i]) = std::move(results[i]);
        if (!failures[i].empty()) out.failures.emplace(scored_dimensions[i], std::move(failures[i]));
    }
    return out;
}

DimensionScore llm_overall_quality(ChatClient& client, const SurveyItem& item, const DimensionScores& scores,
                                   const JudgeConfig& config) {
    if (!scores.complete()) throw std::invalid_argument("overall quality needs effort, relevance and completeness");
    config.validate();
    return judge_with_retries(client, build_prompt(Dimension::overall_quality, item, scores, config.language),
                              Dimension::overall_quality, config);
}

bool parse_meaningful_answer(std::string_view raw) {
    std::string word;
    auto decide = [&word]() -> std::optional<bool> {
        if (word == "true") return true;
        if (word == "false") return false;
        return std::nullopt;
    };
    for (char c : raw) {
        if (std::isalpha(static_cast<unsigned char>(c))) {
            word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
            continue;
        }
        if (auto v = decide()) return *v;
        word.clear();
    }
    if (auto v = decide()) return *v;
    throw MalformedJudgment("answer contains neither \"true\" nor \"false\"");
}

bool llm_detect_gibberish(ChatClient& client, std::string_view text, const JudgeConfig& config) {
    config.validate();
    const std::string user = prompts::render(prompts::gibberish_template(config.language),
                                             {{"sentence", utf8::trim(text)}});
    const std::string raw = client.complete(prompts::gibberish_system_prompt(config.language), user, config);
    // The model answers "is this meaningful?", so gibberish is the negative answer.
    return !parse_meaningful_answer(raw);
}

}  // namespace respeval::judge
