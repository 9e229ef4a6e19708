#include <doctest.h>

#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

#include "../support/paths.hpp"
#include "respeval/markov.hpp"

using namespace respeval;
using namespace respeval::markov;

TEST_CASE("train counts adjacent pairs within lines") {
    const std::vector<std::string> corpus{"abab"};
    const auto m = train(corpus, Unit::character);
    CHECK(m.count(U'a', U'b') == 2);
    CHECK(m.count(U'b', U'a') == 1);
    CHECK(m.transition_counts().size() == 2);
    CHECK(m.vocabulary_size() == 3);

    const std::vector<std::string> ko{"가나"};
    const auto k = train(ko, Unit::jamo);
    const std::map<std::pair<char32_t, char32_t>, std::uint64_t> expected{
        {{U'ㄱ', U'ㅏ'}, 1}, {{U'ㅏ', U'ㄴ'}, 1}, {{U'ㄴ', U'ㅏ'}, 1}};
    CHECK(k.transition_counts() == expected);

    const std::vector<std::string> two{"ab", "cd"};
    CHECK(train(two, Unit::character).count(U'b', U'c') == 0);
}

TEST_CASE("train rejects corpora without a pair") {
    const std::vector<std::string> empty{""};
    CHECK_THROWS_AS(train(empty, Unit::character), EmptyCorpus);
    const std::vector<std::string> singles{"a", "!", "7"};
    CHECK_THROWS_AS(train(singles, Unit::character), EmptyCorpus);
    const std::vector<std::string> ok{"abab"};
    CHECK_THROWS_AS(train(ok, Unit::character, 0.0), std::invalid_argument);
}

TEST_CASE("avg_log_likelihood follows add-alpha smoothing") {
    const std::vector<std::string> corpus{"abab"};
    const auto m = train(corpus, Unit::character);
    CHECK(std::fabs(*avg_log_likelihood(m, "ab") - std::log(0.6)) < 1e-12);
    CHECK_FALSE(avg_log_likelihood(m, "x").has_value());
    CHECK_FALSE(avg_log_likelihood(m, "").has_value());
    // Unseen symbols fall back to the unknown row: (0 + 1) / (0 + 3).
    CHECK(std::fabs(*avg_log_likelihood(m, "zz") - std::log(1.0 / 3.0)) < 1e-12);
    CHECK(*avg_log_likelihood(m, "the quick brown fox") <= 0.0);
}

TEST_CASE("smoothed rows sum to one on random models") {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::string> corpus;
        std::uniform_int_distribution<int> len(2, 30), letter(0, 6);
        for (int i = 0; i < 10; ++i) {
            std::string line;
            for (int j = len(gen); j > 0; --j) line.push_back(static_cast<char>('a' + letter(gen)));
            corpus.push_back(line);
        }
        const double alpha = std::uniform_real_distribution<double>(0.05, 3.0)(gen);
        const auto m = train(corpus, Unit::character, alpha);
        for (char32_t from : m.vocabulary()) {
            double sum = 0;
            for (char32_t to : m.vocabulary()) sum += m.probability(from, to);
            CHECK(std::fabs(sum - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("save/load round-trips and validates") {
    testing::TempDir dir;
    const std::vector<std::string> corpus{"abab", "한국어 문장"};
    const auto m = train(corpus, Unit::jamo, 0.5, {{"note", "x"}});
    save(m, dir / "m.json");
    CHECK(load(dir / "m.json") == m);

    auto doc = nlohmann::json::parse(to_json(m));
    doc["version"] = 999;
    CHECK_THROWS_AS(from_json(doc.dump()), FormatVersionMismatch);

    doc = nlohmann::json::parse(to_json(m));
    doc["context_totals"][1] = doc["context_totals"][1].get<std::uint64_t>() + 5;
    CHECK_THROWS_AS(from_json(doc.dump()), CorruptCounts);

    CHECK_THROWS_AS(load(dir / "missing.json"), IoFailure);
}

TEST_CASE("bundled models load and match their languages") {
    CHECK(load(testing::data_dir() / "models" / "english.json").unit() == Unit::character);
    CHECK(load(testing::data_dir() / "models" / "korean.json").unit() == Unit::jamo);
}
