#pragma once

#include <map>
#include <string>
#include <string_view>

#include "respeval/judge.hpp"
#include "respeval/types.hpp"

namespace respeval::prompts {

std::string_view system_prompt(Language lang);
/// Rubric text with {conversation} (and, for overall_quality, six score/reason slots).
std::string_view user_template(judge::Dimension dimension, Language lang);
/// Template for the true/false gibberish baseline; single slot {sentence}.
std::string_view gibberish_template(Language lang);
std::string_view gibberish_system_prompt(Language lang);

/// Single-pass substitution of {name} slots. Braces that do not name a known slot are
/// copied through, and substituted values are never re-scanned.
std::string render(std::string_view tmpl, const std::map<std::string, std::string, std::less<>>& slots);

/// "Q: <question>\nA: <response>"
std::string format_conversation(const SurveyItem& item);

}  // namespace respeval::prompts
