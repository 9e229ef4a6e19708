#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sstream>
#include <thread>

#include "../support/paths.hpp"
#include "../support/scripted_client.hpp"
#include "respeval/records.hpp"
#include "respeval/response_cache.hpp"

using namespace respeval;
using namespace respeval::judge;
using respeval::testing::ScriptedClient;
using json = nlohmann::json;

TEST_CASE("cache keys") {
    JudgeConfig c;
    const auto k = cache_key("s", "u", c);
    CHECK(k.size() == 64);
    CHECK(k == cache_key("s", "u", c));
    CHECK(k != cache_key("s", "u2", c));
    // Length framing keeps field boundaries apart.
    CHECK(cache_key("ab", "c", c) != cache_key("a", "bc", c));
    auto warm = c;
    warm.temperature = 0.2;
    CHECK(k != cache_key("s", "u", warm));
    auto other = c;
    other.model_identifier = "another-model";
    CHECK(k != cache_key("s", "u", other));
    auto longer = c;
    longer.max_tokens = 301;
    CHECK(k != cache_key("s", "u", longer));
    auto retries = c;
    retries.max_retries = 9;
    CHECK(k == cache_key("s", "u", retries));
}

TEST_CASE("cache insert is no-overwrite") {
    testing::TempDir dir;
    ResponseCache cache(dir.path() / "nested" / "cache");
    CHECK_FALSE(cache.lookup("abc").has_value());
    CHECK(cache.insert("abc", "first", "m"));
    CHECK_FALSE(cache.insert("abc", "second", "m"));
    CHECK(cache.lookup("abc") == "first");
    const auto entry = json::parse(testing::slurp(cache.directory() / "abc.json"));
    CHECK(entry["response"] == "first");
    CHECK(entry["model"] == "m");

    // Racing writers: exactly one wins and every reader sees a complete entry.
    std::atomic<int> wins{0};
    std::vector<std::thread> ts;
    for (int i = 0; i < 8; ++i) {
        ts.emplace_back([&, i] { wins += cache.insert("race", "writer " + std::to_string(i), "m"); });
    }
    for (auto& t : ts) t.join();
    CHECK(wins == 1);
    CHECK(cache.lookup("race")->rfind("writer ", 0) == 0);
    std::size_t files = 0;
    for (const auto& e : std::filesystem::directory_iterator(cache.directory())) files += e.is_regular_file();
    CHECK(files == 2);
}

TEST_CASE("caching client") {
    testing::TempDir dir;
    ScriptedClient inner([](auto, std::string_view user, int) { return "echo " + std::string(user); });
    JudgeConfig c;
    CachingChatClient cold(inner, ResponseCache(dir.path()));
    CHECK(cold.complete("s", "one", c) == "echo one");
    CHECK(cold.complete("s", "one", c) == "echo one");
    CHECK(inner.calls() == 1);
    CHECK(cold.hits() == 1);
    CHECK(cold.misses() == 1);

    CachingChatClient offline(inner, ResponseCache(dir.path()), true);
    CHECK(offline.complete("s", "one", c) == "echo one");
    CHECK_THROWS_AS(offline.complete("s", "two", c), TransportError);
    CHECK(inner.calls() == 1);
}

TEST_CASE("reading items") {
    std::istringstream in(
        R"({"id": "a", "question": "Q?", "response": "yes", "language": "english"})"
        "\n\n"
        R"({"id": "b", "question": "Q?", "response": "네", "language": "korean"})"
        "\n"
        "not json\n"
        R"({"id": "a", "question": "Q?", "response": "dup", "language": "english"})"
        "\n"
        R"({"id": "c", "question": "Q?", "response": "x", "language": "klingon"})"
        "\n"
        R"({"id": "d", "question": "Q?", "language": "english"})"
        "\n");
    const auto rows = records::read_items(in);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].item->id == "a");
    CHECK(rows[0].line_no == 1);
    CHECK(rows[1].item->language == Language::korean);
    CHECK(rows[1].line_no == 3);
    CHECK_FALSE(rows[2].item.has_value());
    CHECK_FALSE(rows[2].error.empty());
    CHECK_FALSE(rows[3].item.has_value());
    CHECK(rows[3].error.find("duplicate") != std::string::npos);
    CHECK_FALSE(rows[4].item.has_value());
    CHECK(rows[4].id == "c");
    CHECK_FALSE(rows[5].item.has_value());
    CHECK_THROWS_AS(records::read_items(std::filesystem::path("/nonexistent/items.jsonl")), IoFailure);
}

TEST_CASE("evaluation record JSON") {
    records::EvaluationRecord r;
    r.id = "x";
    r.language = Language::english;
    r.gibberish = gibberish::GibberishVerdict{};
    r.gibberish->avg_ll = -2.5;
    DimensionScores s;
    s.effort = DimensionScore{Dimension::effort, 2, "e", "", 1};
    s.relevance = DimensionScore{Dimension::relevance, 3, "r", "", 2};
    s.completeness = DimensionScore{Dimension::completeness, 2, "c", "", 1};
    r.scores = s;
    r.overall = aggregate::make_report(0.5119, aggregate::Method::sum, 0.5, aggregate::normalize(2, 3, 2));
    r.judge_model = "m";
    const auto line = records::to_json_line(r);
    CHECK(line.find('\n') == std::string::npos);
    const auto j = json::parse(line);
    CHECK(j["id"] == "x");
    CHECK(j["language"] == "english");
    CHECK(j["scores"]["relevance"]["attempts"] == 2);
    CHECK(j["overall"]["acceptance"] == "accept");
    CHECK_FALSE(j.contains("elapsed_ms"));

    const auto row = records::parse_score_row(line);
    CHECK(row.id == "x");
    CHECK(row.effort == 2);
    CHECK(row.relevance == 3);
    CHECK(row.completeness == 2);
    CHECK(*row.overall == doctest::Approx(0.5119));
    CHECK_FALSE(row.is_gibberish);
}

TEST_CASE("annotations") {
    CHECK(records::split_csv_line(R"(a,"b,c","say ""hi""",)") ==
          std::vector<std::string>{"a", "b,c", "say \"hi\"", ""});

    std::istringstream csv("id,effort,relevance,completeness,overall,acceptance\n"
                           "a,5,3,2,3.5,accept\n"
                           "\"b\",1,,0,0.5,hold\n");
    const auto rows = records::read_annotations_csv(csv);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].effort == 5.0);
    CHECK(rows[0].overall == 3.5);
    CHECK(rows[0].acceptance == aggregate::HumanLabel::accept);
    CHECK_FALSE(rows[1].relevance.has_value());
    CHECK(rows[1].acceptance == aggregate::HumanLabel::hold);

    std::istringstream jl(R"({"id": "a", "overall": 4, "acceptance": "reject"})" "\n");
    const auto j = records::read_annotations_jsonl(jl);
    REQUIRE(j.size() == 1);
    CHECK(j[0].overall == 4.0);
    CHECK(j[0].acceptance == aggregate::HumanLabel::reject);

    std::istringstream bad("id,effort\na,lots\n");
    CHECK_THROWS(records::read_annotations_csv(bad));
}
