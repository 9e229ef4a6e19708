#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace respeval {

enum class Language { english, korean };

std::string_view to_string(Language lang);
/// Accepts "english"/"en" and "korean"/"ko" (case-sensitive). Throws std::invalid_argument otherwise.
Language parse_language(std::string_view name);

/// One question/response pair flowing through the pipeline.
struct SurveyItem {
    std::string id;
    std::string question;
    std::string response;
    Language language = Language::english;
};

// Error hierarchy. Precondition violations use std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoFailure : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace respeval
