#include "respeval/gibberish.hpp"

#include <algorithm>
#include <fstream>

#include "respeval/utf8.hpp"

namespace respeval::gibberish {

namespace {

bool is_ascii_punct(char32_t cp) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) || (cp >= 0x5B && cp <= 0x60) ||
           (cp >= 0x7B && cp <= 0x7E);
}

std::u32string canonical(std::string_view text) {
    std::u32string out;
    bool pending_space = false;
    for (char32_t cp : utf8::decode(text)) {
        if (utf8::is_space(cp)) {
            pending_space = !out.empty();
            continue;
        }
        if (is_ascii_punct(cp)) continue;
        if (cp >= U'A' && cp <= U'Z') cp = cp - U'A' + U'a';
        if (pending_space) {
            out.push_back(U' ');
            pending_space = false;
        }
        out.push_back(cp);
    }
    return out;
}

bool is_repetition(std::u32string_view text, std::u32string_view entry) {
    if (entry.empty() || text.size() <= entry.size() || text.size() % entry.size() != 0) return false;
    for (std::size_t i = 0; i < text.size(); i += entry.size()) {
        if (text.substr(i, entry.size()) != entry) return false;
    }
    return true;
}

bool is_elongation(std::u32string_view text, std::u32string_view entry) {
    if (entry.empty() || text.size() <= entry.size() || text.substr(0, entry.size()) != entry) return false;
    const char32_t last = entry.back();
    return std::all_of(text.begin() + static_cast<std::ptrdiff_t>(entry.size()), text.end(),
                       [last](char32_t c) { return c == last; });
}

std::u32string without_spaces(std::u32string_view s) {
    std::u32string out;
    for (char32_t c : s) {
        if (c != U' ') out.push_back(c);
    }
    return out;
}

}  // namespace

std::string_view to_string(Rule rule) {
    switch (rule) {
        case Rule::likelihood: return "likelihood";
        case Rule::class_run: return "class_run";
        case Rule::valid_word_ratio: return "valid_word_ratio";
        case Rule::syllable_ratio: return "syllable_ratio";
        case Rule::jamo_diversity: return "jamo_diversity";
        case Rule::morpheme: return "morpheme";
    }
    return "unknown";
}

Whitelist::Whitelist(std::initializer_list<std::string_view> entries) {
    for (auto e : entries) add(e);
}

void Whitelist::add(std::string_view entry) {
    std::u32string c = canonical(entry);
    if (!c.empty() && std::find(entries_.begin(), entries_.end(), c) == entries_.end()) entries_.push_back(std::move(c));
}

Whitelist Whitelist::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open whitelist: " + path.string());
    Whitelist wl;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        wl.add(line);
    }
    return wl;
}

bool Whitelist::matches(std::string_view text) const {
    const std::u32string c = canonical(text);
    if (c.empty()) return false;
    const std::u32string compact = without_spaces(c);
    for (const auto& entry : entries_) {
        if (c == entry || is_elongation(c, entry) || is_repetition(c, entry)) return true;
        // "ha ha ha" counts as a repetition of "ha".
        if (compact.size() != c.size() && is_repetition(compact, entry)) return true;
    }
    return false;
}

bool is_whitelisted(std::string_view text, const Whitelist& whitelist) { return whitelist.matches(text); }

MorphemeOracle lexicon_morpheme_oracle(std::shared_ptr<const textstat::Lexicon> korean_words) {
    return [words = std::move(korean_words)](std::string_view text) -> std::size_t {
        std::size_t found = 0;
        std::u32string token;
        auto flush = [&] {
            for (std::size_t len = token.size(); len > 0; --len) {
                if (words->contains(utf8::encode(std::u32string_view(token).substr(0, len)))) {
                    ++found;
                    break;
                }
            }
            token.clear();
        };
        for (char32_t cp : utf8::decode(text)) {
            if (textstat::is_hangul_syllable(cp)) {
                token.push_back(cp);
            } else if (!token.empty()) {
                flush();
            }
        }
        if (!token.empty()) flush();
        return found;
    };
}

GibberishConfig GibberishConfig::thresholds_for(Language lang) {
    GibberishConfig cfg;
    cfg.language = lang;
    cfg.ll_threshold = lang == Language::english ? -4.0 : -3.5;
    return cfg;
}

GibberishConfig GibberishConfig::defaults(Language lang, const std::filesystem::path& data_dir) {
    GibberishConfig cfg = thresholds_for(lang);
    const std::string name(respeval::to_string(lang));
    cfg.whitelist = Whitelist::load(data_dir / "whitelist" / (name + ".txt"));
    if (lang == Language::english) {
        cfg.lexicon = std::make_shared<const textstat::Lexicon>(textstat::Lexicon::load(data_dir / "lexicon" / "english.txt"));
    }
    return cfg;
}

void GibberishConfig::validate() const {
    auto in_unit = [](double r) { return r >= 0.0 && r <= 1.0; };
    if (!(ll_threshold < 0.0)) throw std::invalid_argument("ll_threshold must be negative");
    if (run_threshold == 0) throw std::invalid_argument("run_threshold must be positive");
    if (jamo_diversity_threshold == 0) throw std::invalid_argument("jamo_diversity_threshold must be positive");
    if (!in_unit(valid_word_threshold) || !in_unit(syllable_ratio_threshold)) {
        throw std::invalid_argument("ratio thresholds must lie in [0, 1]");
    }
    if (language == Language::english && (!lexicon || lexicon->empty())) {
        throw std::invalid_argument("English screening needs a non-empty lexicon");
    }
}

GibberishVerdict detect(const SurveyItem& item, const markov::BigramModel& model, const GibberishConfig& config) {
    if (model.unit() != markov::unit_for(item.language)) {
        throw LanguageModelMismatch("item '" + item.id + "' is " + std::string(respeval::to_string(item.language)) +
                                    " but the model unit is " + std::string(markov::to_string(model.unit())));
    }
    if (config.language != item.language) {
        throw std::invalid_argument("gibberish config language differs from item language");
    }

    GibberishVerdict v;
    if (config.whitelist.matches(item.response)) {
        v.whitelisted = true;
        return v;
    }

    auto fire = [&v](Rule r) { v.triggered_rules.push_back(r); };

    if (item.language == Language::english) {
        const auto text = textstat::normalize_english(item.response);
        v.avg_ll = model.avg_log_likelihood_units(utf8::decode(text.normalized));
        const bool ll_fails = !v.avg_ll || *v.avg_ll < config.ll_threshold;
        if (ll_fails) fire(Rule::likelihood);
        if (textstat::longest_class_run(text) > config.run_threshold) fire(Rule::class_run);
        if (config.lexicon && textstat::valid_word_ratio(text, *config.lexicon) < config.valid_word_threshold) {
            fire(Rule::valid_word_ratio);
        }
        // Slang and elongations: a low word ratio alone is forgiven when the text is plausible.
        if (v.triggered_rules.size() == 1 && v.triggered_rules.front() == Rule::valid_word_ratio && !ll_fails) {
            v.retained_by_exception = true;
            return v;
        }
    } else {
        v.avg_ll = model.avg_log_likelihood_units(textstat::decompose_jamo(item.response).jamo_stream());
        if (!v.avg_ll || *v.avg_ll < config.ll_threshold) fire(Rule::likelihood);
        if (textstat::hangul_syllable_ratio(item.response) < config.syllable_ratio_threshold) fire(Rule::syllable_ratio);
        if (textstat::jamo_diversity(item.response) < config.jamo_diversity_threshold) fire(Rule::jamo_diversity);
        if (config.morpheme_oracle && config.morpheme_oracle(item.response) == 0) fire(Rule::morpheme);
    }
    v.is_gibberish = !v.triggered_rules.empty();
    return v;
}

void Screener::add(markov::BigramModel model, GibberishConfig config) {
    config.validate();
    if (model.unit() != markov::unit_for(config.language)) {
        throw LanguageModelMismatch("model unit does not match the configured language");
    }
    std::erase_if(entries_, [&](const Entry& e) { return e.config.language == config.language; });
    entries_.push_back(Entry{std::move(model), std::move(config)});
}

bool Screener::supports(Language lang) const {
    return std::any_of(entries_.begin(), entries_.end(), [lang](const Entry& e) { return e.config.language == lang; });
}

GibberishVerdict Screener::screen(const SurveyItem& item) const {
    for (const auto& e : entries_) {
        if (e.config.language == item.language) return detect(item, e.model, e.config);
    }
    throw LanguageModelMismatch("no " + std::string(respeval::to_string(item.language)) + " model loaded for item '" +
                                item.id + "'");
}

}  // namespace respeval::gibberish
