#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "respeval/aggregate.hpp"
#include "respeval/gibberish.hpp"
#include "respeval/judge.hpp"

/// Batch file formats: JSONL items in, JSONL records out, CSV or JSONL annotations.
namespace respeval::records {

/// One input line; either a parsed item or the reason it was rejected.
struct InputRecord {
    std::size_t line_no = 0;
    std::string id;  ///< best effort when the line is malformed
    std::optional<SurveyItem> item;
    std::string error;
};

/// Parses one {"id","question","response","language"} object. Throws std::invalid_argument.
SurveyItem parse_item(std::string_view line);
/// Blank lines are skipped; malformed lines and duplicate ids become error entries.
std::vector<InputRecord> read_items(std::istream& in);
std::vector<InputRecord> read_items(const std::filesystem::path& path);

struct EvaluationRecord {
    std::string id;
    std::optional<Language> language;
    std::optional<std::string> error;  ///< input, screening or judging failure
    std::optional<gibberish::GibberishVerdict> gibberish;
    std::optional<judge::DimensionScores> scores;  ///< absent for gibberish or failed judging
    std::map<judge::Dimension, std::string> judge_failures;
    std::optional<judge::DimensionScore> llm_overall;
    std::optional<aggregate::QualityReport> overall;
    std::string judge_model;
    std::optional<double> elapsed_ms;  ///< only when timing was requested

    [[nodiscard]] bool failed() const { return error.has_value(); }
};

std::string verdict_to_json(const gibberish::GibberishVerdict& v);
/// Screening output line: {"id","language","gibberish"} or {"id","error"}.
std::string screen_line(const std::string& id, const std::optional<Language>& language,
                        const std::optional<gibberish::GibberishVerdict>& verdict, const std::string& error);
std::string to_json_line(const EvaluationRecord& record);

/// The parts of an evaluation record that reports and fits read back.
struct ScoreRow {
    std::string id;
    bool is_gibberish = false;
    std::optional<int> effort, relevance, completeness;
    std::optional<double> overall;
};

ScoreRow parse_score_row(std::string_view line);
/// Error records are skipped.
std::vector<ScoreRow> read_score_rows(const std::filesystem::path& path);

struct Annotation {
    std::string id;
    std::optional<double> effort, relevance, completeness, overall;
    std::optional<aggregate::HumanLabel> acceptance;
};

/// .csv files need a header row; anything else is read as JSONL.
std::vector<Annotation> read_annotations(const std::filesystem::path& path);
std::vector<Annotation> read_annotations_csv(std::istream& in);
std::vector<Annotation> read_annotations_jsonl(std::istream& in);

/// Splits one CSV line (RFC 4180 quoting, no embedded newlines).
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace respeval::records
