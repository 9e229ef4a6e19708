#include <doctest.h>

#include "../support/paths.hpp"
#include "respeval/gibberish.hpp"

using namespace respeval;
using namespace respeval::gibberish;

namespace {

const markov::BigramModel& english_model() {
    static const auto m = markov::load(testing::data_dir() / "models" / "english.json");
    return m;
}
const markov::BigramModel& korean_model() {
    static const auto m = markov::load(testing::data_dir() / "models" / "korean.json");
    return m;
}
const GibberishConfig& english_config() {
    static const auto c = GibberishConfig::defaults(Language::english, testing::data_dir());
    return c;
}
const GibberishConfig& korean_config() {
    static const auto c = GibberishConfig::defaults(Language::korean, testing::data_dir());
    return c;
}

SurveyItem en(std::string text) { return {"e", "How was it?", std::move(text), Language::english}; }
SurveyItem ko(std::string text) { return {"k", "어땠나요?", std::move(text), Language::korean}; }

bool has_rule(const GibberishVerdict& v, Rule r) {
    return std::find(v.triggered_rules.begin(), v.triggered_rules.end(), r) != v.triggered_rules.end();
}

}  // namespace

TEST_CASE("whitelist matching") {
    const Whitelist wl{"lol", "ha", "so", "ㅋㅋㅋ", "thank you"};
    CHECK(wl.matches("lol"));
    CHECK(wl.matches("LOL!"));
    CHECK(wl.matches("hahaha"));
    CHECK(wl.matches("ha ha ha"));
    CHECK(wl.matches("soooo"));
    CHECK(wl.matches("ㅋㅋㅋㅋㅋㅋ"));
    CHECK(wl.matches("Thank   you."));
    CHECK_FALSE(wl.matches("asdf"));
    CHECK_FALSE(wl.matches("lol asdf"));
    CHECK_FALSE(wl.matches(""));
    CHECK(is_whitelisted("ㅋㅋㅋ", korean_config().whitelist));
    CHECK(is_whitelisted("lol", english_config().whitelist));
    CHECK_FALSE(is_whitelisted("asdf", english_config().whitelist));
}

TEST_CASE("canonical English examples") {
    const auto asdf = detect(en("asdf"), english_model(), english_config());
    CHECK(asdf.is_gibberish);

    const auto d = detect(en("ddddd"), english_model(), english_config());
    CHECK(d.is_gibberish);
    // A five-letter run does not exceed the default threshold of ten; with a lower
    // threshold the run rule fires as well.
    auto strict = english_config();
    strict.run_threshold = 4;
    CHECK(has_rule(detect(en("ddddd"), english_model(), strict), Rule::class_run));

    for (std::string ok : {"lol", "brb", "haha", "soooo"}) {
        const auto v = detect(en(ok), english_model(), english_config());
        CHECK_MESSAGE(!v.is_gibberish, ok);
        CHECK(v.whitelisted);
    }
    const auto hotel = detect(en("i like the ambience and security"), english_model(), english_config());
    CHECK_FALSE(hotel.is_gibberish);
    REQUIRE(hotel.avg_ll.has_value());
    CHECK(*hotel.avg_ll > -4.0);
}

TEST_CASE("English rules") {
    auto cfg = english_config();
    const auto run = detect(en("the strrrrrrrrrrrrrrong coffee"), english_model(), cfg);
    CHECK(has_rule(run, Rule::class_run));
    CHECK(run.is_gibberish);

    const auto symbols = detect(en("!!!???"), english_model(), cfg);
    CHECK(symbols.is_gibberish);
    CHECK_FALSE(symbols.avg_ll.has_value());
    CHECK(has_rule(symbols, Rule::likelihood));

    // Plausible slang: only the word ratio fails, so the item is retained.
    const auto slang = detect(en("gonna grab tacos wit ma bros"), english_model(), cfg);
    if (slang.triggered_rules.size() == 1 && slang.triggered_rules[0] == Rule::valid_word_ratio) {
        CHECK(slang.retained_by_exception);
        CHECK_FALSE(slang.is_gibberish);
    }
    textstat::Lexicon none{"zzzz"};
    cfg.lexicon = std::make_shared<const textstat::Lexicon>(none);
    const auto exc = detect(en("the food was great"), english_model(), cfg);
    CHECK_FALSE(exc.is_gibberish);
    CHECK(exc.retained_by_exception);
}

TEST_CASE("Korean rules") {
    for (std::string ok : {"ㅋㅋㅋ", "ㅇㅇ", "헐"}) {
        const auto v = detect(ko(ok), korean_model(), korean_config());
        CHECK_MESSAGE(!v.is_gibberish, ok);
        CHECK(v.whitelisted);
    }
    const auto sentence = detect(ko("직원들이 친절하고 방이 깨끗해서 좋았어요."), korean_model(), korean_config());
    CHECK_FALSE(sentence.is_gibberish);

    const auto mash = detect(ko("ㅁㄴㅇㄹㅁㄴㅇㄹ"), korean_model(), korean_config());
    CHECK(mash.is_gibberish);
    CHECK(has_rule(mash, Rule::syllable_ratio));

    const auto rep = detect(ko("가가가가가"), korean_model(), korean_config());
    CHECK(has_rule(rep, Rule::jamo_diversity));

    auto cfg = korean_config();
    cfg.morpheme_oracle = [](std::string_view) { return std::size_t{0}; };
    CHECK(has_rule(detect(ko("직원들이 친절했어요"), korean_model(), cfg), Rule::morpheme));
    auto lex = std::make_shared<const textstat::Lexicon>(textstat::Lexicon{"직원", "친절"});
    CHECK(lexicon_morpheme_oracle(lex)("직원들이 친절했어요 뭐") == 2);
}

TEST_CASE("language/model mismatch") {
    CHECK_THROWS_AS(detect(ko("안녕하세요"), english_model(), korean_config()), LanguageModelMismatch);
    CHECK_THROWS_AS(detect(en("hello there"), english_model(), korean_config()), std::invalid_argument);

    Screener s;
    s.add(english_model(), english_config());
    CHECK(s.supports(Language::english));
    CHECK_FALSE(s.supports(Language::korean));
    CHECK_THROWS_AS((void)s.screen(ko("안녕하세요")), LanguageModelMismatch);
    CHECK_THROWS_AS(s.add(english_model(), korean_config()), LanguageModelMismatch);
}

TEST_CASE("config validation") {
    auto cfg = GibberishConfig::thresholds_for(Language::english);
    CHECK(cfg.ll_threshold == -4.0);
    CHECK(GibberishConfig::thresholds_for(Language::korean).ll_threshold == -3.5);
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);  // no lexicon
    cfg = english_config();
    cfg.valid_word_threshold = 1.5;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
