#include "respeval/records.hpp"

#include <fstream>
#include <istream>
#include <unordered_set>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "respeval/utf8.hpp"

namespace respeval::records {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

std::string required_string(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_string()) {
        throw std::invalid_argument(fmt::format("field \"{}\" missing or not a string", field));
    }
    return j[field].get<std::string>();
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot read " + path.string());
    return in;
}

ojson score_json(const judge::DimensionScore& s) {
    return ojson{{"score", s.score}, {"reason", s.reason}, {"attempts", s.attempts}};
}

ojson components_json(const aggregate::NormalizedScores& n) {
    return ojson{{"effort_n", n.effort_n}, {"relevance_n", n.relevance_n}, {"completeness_n", n.completeness_n}};
}

std::optional<double> optional_number(const json& j, const char* field) {
    if (!j.contains(field) || j[field].is_null()) return std::nullopt;
    if (j[field].is_number()) return j[field].get<double>();
    if (j[field].is_string()) {
        const std::string s = utf8::trim(j[field].get<std::string>());
        if (s.empty()) return std::nullopt;
        return std::stod(s);
    }
    throw std::invalid_argument(fmt::format("field \"{}\" is not a number", field));
}

std::optional<double> parse_cell(const std::string& cell) {
    const std::string s = utf8::trim(cell);
    if (s.empty()) return std::nullopt;
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("not a number: " + s);
    return v;
}

}  // namespace

SurveyItem parse_item(std::string_view line) {
    const json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw std::invalid_argument("line is not a JSON object");
    SurveyItem item;
    item.id = required_string(j, "id");
    if (item.id.empty()) throw std::invalid_argument("empty id");
    item.question = required_string(j, "question");
    item.response = required_string(j, "response");
    item.language = parse_language(required_string(j, "language"));
    return item;
}

std::vector<InputRecord> read_items(std::istream& in) {
    std::vector<InputRecord> out;
    std::unordered_set<std::string> seen;
    std::string line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
        if (utf8::trim(line).empty()) continue;
        InputRecord rec;
        rec.line_no = line_no;
        try {
            rec.item = parse_item(line);
            rec.id = rec.item->id;
            if (!seen.insert(rec.id).second) {
                rec.item.reset();
                rec.error = "duplicate id " + rec.id;
            }
        } catch (const std::exception& e) {
            const json j = json::parse(line, nullptr, false);
            if (!j.is_discarded() && j.is_object() && j.contains("id") && j["id"].is_string()) {
                rec.id = j["id"].get<std::string>();
            }
            rec.error = fmt::format("line {}: {}", line_no, e.what());
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<InputRecord> read_items(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    return read_items(in);
}

std::string verdict_to_json(const gibberish::GibberishVerdict& v) {
    ojson rules = ojson::array();
    for (auto r : v.triggered_rules) rules.push_back(std::string(gibberish::to_string(r)));
    ojson j{{"is_gibberish", v.is_gibberish},
            {"avg_ll", v.avg_ll ? ojson(*v.avg_ll) : ojson(nullptr)},
            {"triggered_rules", std::move(rules)},
            {"whitelisted", v.whitelisted},
            {"retained_by_exception", v.retained_by_exception}};
    return j.dump();
}

std::string screen_line(const std::string& id, const std::optional<Language>& language,
                        const std::optional<gibberish::GibberishVerdict>& verdict, const std::string& error) {
    ojson j{{"id", id}};
    if (language) j["language"] = std::string(to_string(*language));
    if (verdict) {
        j["gibberish"] = ojson::parse(verdict_to_json(*verdict));
    } else {
        j["error"] = error;
    }
    return j.dump();
}

std::string to_json_line(const EvaluationRecord& r) {
    ojson j{{"id", r.id}};
    if (r.language) j["language"] = std::string(to_string(*r.language));
    if (r.error) j["error"] = *r.error;
    if (r.gibberish) j["gibberish"] = ojson::parse(verdict_to_json(*r.gibberish));
    if (r.scores) {
        ojson s = ojson::object();
        for (auto d : judge::scored_dimensions) {
            if (const auto& v = r.scores->get(d)) s[std::string(judge::to_string(d))] = score_json(*v);
        }
        j["scores"] = std::move(s);
    }
    if (!r.judge_failures.empty()) {
        ojson f = ojson::object();
        for (const auto& [d, msg] : r.judge_failures) f[std::string(judge::to_string(d))] = msg;
        j["judge_failures"] = std::move(f);
    }
    if (r.llm_overall) j["llm_overall_quality"] = score_json(*r.llm_overall);
    if (r.overall) {
        const auto& q = *r.overall;
        j["overall"] = ojson{{"overall", q.overall},
                             {"method", std::string(aggregate::to_string(q.method))},
                             {"acceptance", std::string(aggregate::to_string(q.acceptance))},
                             {"threshold", q.threshold},
                             {"components", components_json(q.components)},
                             {"gibberish_short_circuit", q.gibberish_short_circuit}};
    }
    if (!r.judge_model.empty()) j["judge_model"] = r.judge_model;
    if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
    return j.dump();
}

ScoreRow parse_score_row(std::string_view line) {
    const json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw std::invalid_argument("score line is not a JSON object");
    ScoreRow row;
    row.id = required_string(j, "id");
    if (j.contains("gibberish") && j["gibberish"].is_object()) {
        row.is_gibberish = j["gibberish"].value("is_gibberish", false);
    }
    if (j.contains("scores") && j["scores"].is_object()) {
        const json& s = j["scores"];
        auto read = [&s](const char* key) -> std::optional<int> {
            if (!s.contains(key)) return std::nullopt;
            const json& v = s[key];
            if (v.is_object() && v.contains("score")) return v["score"].get<int>();
            if (v.is_number_integer()) return v.get<int>();
            throw std::invalid_argument(fmt::format("scores.{} is malformed", key));
        };
        row.effort = read("effort");
        row.relevance = read("relevance");
        row.completeness = read("completeness");
    }
    if (j.contains("overall") && j["overall"].is_object()) {
        row.overall = j["overall"].at("overall").get<double>();
    } else if (j.contains("overall") && j["overall"].is_number()) {
        row.overall = j["overall"].get<double>();
    }
    return row;
}

std::vector<ScoreRow> read_score_rows(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    std::vector<ScoreRow> rows;
    std::string line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
        if (utf8::trim(line).empty()) continue;
        const json j = json::parse(line, nullptr, false);
        if (!j.is_discarded() && j.is_object() && j.contains("error")) continue;
        try {
            rows.push_back(parse_score_row(line));
        } catch (const std::exception& e) {
            throw ConfigError(fmt::format("{}:{}: {}", path.string(), line_no, e.what()));
        }
    }
    return rows;
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> cells(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cells.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cells.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.emplace_back();
        } else if (c != '\r') {
            cells.back() += c;
        }
    }
    if (quoted) throw std::invalid_argument("unterminated quote in CSV line");
    return cells;
}

std::vector<Annotation> read_annotations_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) return {};
    const auto header = split_csv_line(line);
    std::map<std::string, std::size_t, std::less<>> col;
    for (std::size_t i = 0; i < header.size(); ++i) col[utf8::trim(header[i])] = i;
    if (!col.contains("id")) throw ConfigError("annotation CSV lacks an id column");

    std::vector<Annotation> out;
    for (std::size_t line_no = 2; std::getline(in, line); ++line_no) {
        if (utf8::trim(line).empty()) continue;
        try {
            const auto cells = split_csv_line(line);
            auto cell = [&](std::string_view name) -> std::string {
                auto it = col.find(name);
                return it != col.end() && it->second < cells.size() ? cells[it->second] : std::string();
            };
            Annotation a;
            a.id = utf8::trim(cell("id"));
            a.effort = parse_cell(cell("effort"));
            a.relevance = parse_cell(cell("relevance"));
            a.completeness = parse_cell(cell("completeness"));
            a.overall = parse_cell(cell("overall"));
            if (const auto label = utf8::trim(cell("acceptance")); !label.empty()) {
                a.acceptance = aggregate::parse_label(label);
            }
            out.push_back(std::move(a));
        } catch (const std::exception& e) {
            throw ConfigError(fmt::format("annotation line {}: {}", line_no, e.what()));
        }
    }
    return out;
}

std::vector<Annotation> read_annotations_jsonl(std::istream& in) {
    std::vector<Annotation> out;
    std::string line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
        if (utf8::trim(line).empty()) continue;
        try {
            const json j = json::parse(line);
            Annotation a;
            a.id = required_string(j, "id");
            a.effort = optional_number(j, "effort");
            a.relevance = optional_number(j, "relevance");
            a.completeness = optional_number(j, "completeness");
            a.overall = optional_number(j, "overall");
            if (j.contains("acceptance") && j["acceptance"].is_string()) {
                a.acceptance = aggregate::parse_label(j["acceptance"].get<std::string>());
            }
            out.push_back(std::move(a));
        } catch (const std::exception& e) {
            throw ConfigError(fmt::format("annotation line {}: {}", line_no, e.what()));
        }
    }
    return out;
}

std::vector<Annotation> read_annotations(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    return path.extension() == ".csv" ? read_annotations_csv(in) : read_annotations_jsonl(in);
}

}  // namespace respeval::records
