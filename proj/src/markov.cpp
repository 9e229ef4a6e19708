#include "respeval/markov.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "respeval/textstat.hpp"
#include "respeval/utf8.hpp"

namespace respeval::markov {

using json = nlohmann::json;

namespace {

constexpr std::string_view kFormatName = "respeval-bigram";
constexpr std::string_view kUnknownToken = "<unk>";

std::string symbol_to_string(char32_t s) {
    return s == unknown_symbol ? std::string(kUnknownToken) : utf8::encode(s);
}

char32_t symbol_from_string(const std::string& s) {
    if (s == kUnknownToken) return unknown_symbol;
    const std::u32string cps = utf8::decode(s);
    if (cps.size() != 1) throw CorruptCounts("vocabulary entry is not a single symbol: '" + s + "'");
    return cps.front();
}

}  // namespace

std::string_view to_string(Unit unit) { return unit == Unit::character ? "char" : "jamo"; }

Unit parse_unit(std::string_view name) {
    if (name == "char" || name == "character") return Unit::character;
    if (name == "jamo") return Unit::jamo;
    throw std::invalid_argument("unknown model unit: " + std::string(name));
}

Unit unit_for(Language lang) { return lang == Language::english ? Unit::character : Unit::jamo; }

std::u32string preprocess(std::string_view text, Unit unit) {
    if (unit == Unit::character) return utf8::decode(textstat::normalize_english(text).normalized);
    return textstat::decompose_jamo(text).jamo_stream();
}

BigramModel::BigramModel(Unit unit, std::vector<char32_t> vocabulary,
                         const std::map<std::pair<char32_t, char32_t>, std::uint64_t>& counts,
                         double smoothing_alpha, Metadata metadata)
    : unit_(unit), alpha_(smoothing_alpha), vocabulary_(std::move(vocabulary)), metadata_(std::move(metadata)) {
    if (!(alpha_ > 0.0) || !std::isfinite(alpha_)) {
        throw std::invalid_argument("smoothing alpha must be a positive finite number");
    }
    vocabulary_.push_back(unknown_symbol);
    std::sort(vocabulary_.begin(), vocabulary_.end());
    vocabulary_.erase(std::unique(vocabulary_.begin(), vocabulary_.end()), vocabulary_.end());
    for (std::size_t i = 0; i < vocabulary_.size(); ++i) index_.emplace(vocabulary_[i], i);

    const std::size_t v = vocabulary_.size();
    counts_.assign(v * v, 0);
    totals_.assign(v, 0);
    for (const auto& [pair, c] : counts) {
        const auto from = index_.find(pair.first);
        const auto to = index_.find(pair.second);
        if (from == index_.end() || to == index_.end()) {
            throw CorruptCounts("transition count refers to a symbol outside the vocabulary");
        }
        counts_[from->second * v + to->second] += c;
        totals_[from->second] += c;
    }
}

std::size_t BigramModel::index_of(char32_t symbol) const {
    const auto it = index_.find(symbol);
    return it == index_.end() ? index_.at(unknown_symbol) : it->second;
}

std::uint64_t BigramModel::count(char32_t from, char32_t to) const {
    const auto a = index_.find(from);
    const auto b = index_.find(to);
    if (a == index_.end() || b == index_.end()) return 0;
    return counts_[a->second * vocabulary_.size() + b->second];
}

std::uint64_t BigramModel::context_total(char32_t from) const {
    const auto a = index_.find(from);
    return a == index_.end() ? 0 : totals_[a->second];
}

std::map<std::pair<char32_t, char32_t>, std::uint64_t> BigramModel::transition_counts() const {
    std::map<std::pair<char32_t, char32_t>, std::uint64_t> out;
    const std::size_t v = vocabulary_.size();
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
            if (const auto c = counts_[i * v + j]; c != 0) out.emplace(std::pair{vocabulary_[i], vocabulary_[j]}, c);
        }
    }
    return out;
}

std::map<char32_t, std::uint64_t> BigramModel::context_totals() const {
    std::map<char32_t, std::uint64_t> out;
    for (std::size_t i = 0; i < vocabulary_.size(); ++i) out.emplace(vocabulary_[i], totals_[i]);
    return out;
}

double BigramModel::probability(char32_t from, char32_t to) const {
    const std::size_t v = vocabulary_.size();
    const std::size_t a = index_of(from);
    const std::size_t b = index_of(to);
    return (static_cast<double>(counts_[a * v + b]) + alpha_) /
           (static_cast<double>(totals_[a]) + alpha_ * static_cast<double>(v));
}

double BigramModel::log_probability(char32_t from, char32_t to) const { return std::log(probability(from, to)); }

std::optional<double> BigramModel::avg_log_likelihood_units(std::u32string_view units) const {
    if (units.size() < 2) return std::nullopt;
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < units.size(); ++i) sum += log_probability(units[i], units[i + 1]);
    return sum / static_cast<double>(units.size() - 1);
}

bool operator==(const BigramModel& a, const BigramModel& b) {
    return a.unit_ == b.unit_ && a.alpha_ == b.alpha_ && a.vocabulary_ == b.vocabulary_ &&
           a.counts_ == b.counts_ && a.totals_ == b.totals_ && a.metadata_ == b.metadata_;
}

BigramModel train(std::span<const std::string> corpus, Unit unit, double smoothing_alpha,
                  BigramModel::Metadata metadata) {
    std::set<char32_t> seen;
    std::map<std::pair<char32_t, char32_t>, std::uint64_t> counts;
    std::uint64_t pairs = 0;
    for (const auto& line : corpus) {
        const std::u32string units = preprocess(line, unit);
        if (units.size() < 2) continue;
        seen.insert(units.begin(), units.end());
        for (std::size_t i = 0; i + 1 < units.size(); ++i) {
            ++counts[{units[i], units[i + 1]}];
            ++pairs;
        }
    }
    if (pairs == 0) throw EmptyCorpus();
    return BigramModel(unit, std::vector<char32_t>(seen.begin(), seen.end()), counts, smoothing_alpha,
                       std::move(metadata));
}

std::vector<std::string> read_corpus(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open corpus: " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
    }
    if (in.bad()) throw IoFailure("error while reading corpus: " + path.string());
    return lines;
}

std::optional<double> avg_log_likelihood(const BigramModel& model, std::string_view text) {
    return model.avg_log_likelihood_units(preprocess(text, model.unit()));
}

std::string to_json(const BigramModel& model) {
    const auto& vocab = model.vocabulary();
    std::unordered_map<char32_t, std::size_t> idx;
    json vocabulary = json::array();
    for (std::size_t i = 0; i < vocab.size(); ++i) {
        idx.emplace(vocab[i], i);
        vocabulary.push_back(symbol_to_string(vocab[i]));
    }
    json counts = json::array();
    for (const auto& [pair, c] : model.transition_counts()) {
        counts.push_back(json::array({idx.at(pair.first), idx.at(pair.second), c}));
    }
    json totals = json::array();
    for (char32_t s : vocab) totals.push_back(model.context_total(s));

    json doc;
    doc["format"] = kFormatName;
    doc["version"] = format_version;
    doc["unit"] = to_string(model.unit());
    doc["alpha"] = model.smoothing_alpha();
    doc["vocabulary"] = std::move(vocabulary);
    doc["counts"] = std::move(counts);
    doc["context_totals"] = std::move(totals);
    doc["metadata"] = model.metadata();
    return doc.dump(1);
}

BigramModel from_json(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw CorruptCounts(std::string("model file is not valid JSON: ") + e.what());
    }
    try {
        const int version = doc.at("version").get<int>();
        if (version != format_version) throw FormatVersionMismatch(version);

        const Unit unit = parse_unit(doc.at("unit").get<std::string>());
        const double alpha = doc.at("alpha").get<double>();

        std::vector<char32_t> vocab;
        for (const auto& s : doc.at("vocabulary")) vocab.push_back(symbol_from_string(s.get<std::string>()));
        if (std::find(vocab.begin(), vocab.end(), unknown_symbol) == vocab.end()) {
            throw CorruptCounts("vocabulary lacks the unknown symbol");
        }

        std::map<std::pair<char32_t, char32_t>, std::uint64_t> counts;
        std::vector<std::uint64_t> row_sums(vocab.size(), 0);
        for (const auto& triple : doc.at("counts")) {
            const auto i = triple.at(0).get<std::size_t>();
            const auto j = triple.at(1).get<std::size_t>();
            const auto c = triple.at(2).get<std::uint64_t>();
            if (i >= vocab.size() || j >= vocab.size()) throw CorruptCounts("count index outside vocabulary");
            counts[{vocab[i], vocab[j]}] += c;
            row_sums[i] += c;
        }
        const auto& totals = doc.at("context_totals");
        if (totals.size() != vocab.size()) throw CorruptCounts("context_totals length differs from vocabulary");
        for (std::size_t i = 0; i < vocab.size(); ++i) {
            if (totals.at(i).get<std::uint64_t>() != row_sums[i]) {
                throw CorruptCounts("context total for '" + symbol_to_string(vocab[i]) +
                                    "' disagrees with its transition counts");
            }
        }
        BigramModel::Metadata metadata;
        if (doc.contains("metadata")) metadata = doc.at("metadata").get<BigramModel::Metadata>();
        return BigramModel(unit, std::move(vocab), counts, alpha, std::move(metadata));
    } catch (const json::exception& e) {
        throw CorruptCounts(std::string("malformed model file: ") + e.what());
    }
}

void save(const BigramModel& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure("cannot write model: " + path.string());
    out << to_json(model) << '\n';
    if (!out) throw IoFailure("error while writing model: " + path.string());
}

BigramModel load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open model: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

}  // namespace respeval::markov
