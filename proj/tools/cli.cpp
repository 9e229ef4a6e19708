#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "respeval/data_paths.hpp"
#include "respeval/http_chat_client.hpp"
#include "respeval/markov.hpp"
#include "respeval/pipeline.hpp"
#include "respeval/records.hpp"
#include "respeval/response_cache.hpp"

namespace respeval::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path resolve(const fs::path& base, const std::string& p) {
    fs::path path(p);
    return path.is_absolute() || base.empty() ? path : base / path;
}

void check_keys(const json& obj, std::initializer_list<std::string_view> allowed, std::string_view where) {
    for (const auto& [key, _] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ConfigError(fmt::format("unknown key \"{}\" in {}", key, where));
        }
    }
}

LanguageSettings parse_language_settings(const json& j, const fs::path& base, std::string_view where) {
    check_keys(j,
               {"ll_threshold", "run_threshold", "valid_word_threshold", "syllable_ratio_threshold",
                "jamo_diversity_threshold", "whitelist", "lexicon", "morpheme_lexicon", "model"},
               where);
    LanguageSettings s;
    if (j.contains("ll_threshold")) s.ll_threshold = j["ll_threshold"].get<double>();
    if (j.contains("run_threshold")) s.run_threshold = j["run_threshold"].get<std::size_t>();
    if (j.contains("valid_word_threshold")) s.valid_word_threshold = j["valid_word_threshold"].get<double>();
    if (j.contains("syllable_ratio_threshold")) s.syllable_ratio_threshold = j["syllable_ratio_threshold"].get<double>();
    if (j.contains("jamo_diversity_threshold")) {
        s.jamo_diversity_threshold = j["jamo_diversity_threshold"].get<std::size_t>();
    }
    if (j.contains("whitelist")) s.whitelist = resolve(base, j["whitelist"].get<std::string>());
    if (j.contains("lexicon")) s.lexicon = resolve(base, j["lexicon"].get<std::string>());
    if (j.contains("morpheme_lexicon")) s.morpheme_lexicon = resolve(base, j["morpheme_lexicon"].get<std::string>());
    if (j.contains("model")) s.model = resolve(base, j["model"].get<std::string>());
    return s;
}

void write_lines(const std::vector<std::string>& lines, const std::optional<fs::path>& path, std::ostream& out) {
    if (!path) {
        for (const auto& l : lines) out << l << '\n';
        out.flush();
        return;
    }
    std::ofstream file(*path, std::ios::binary);
    if (!file) throw IoFailure("cannot write " + path->string());
    for (const auto& l : lines) file << l << '\n';
    if (!file) throw IoFailure("write failed for " + path->string());
}

ojson optional_json(const std::optional<double>& v) { return v ? ojson(*v) : ojson(nullptr); }

Language language_of(const markov::BigramModel& model) {
    return model.unit() == markov::Unit::jamo ? Language::korean : Language::english;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& body) {
    try {
        return body();
    } catch (const JoinMismatch& e) {
        err << "error: " << e.what();
        if (!e.missing_ids.empty()) {
            err << " (missing:";
            for (const auto& id : e.missing_ids) err << ' ' << id;
            err << ')';
        }
        err << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return ExitCode::failure;
}

// ---- report helpers --------------------------------------------------------

std::optional<double> score_column(const records::ScoreRow& row, std::string_view column, bool zero_gibberish) {
    if (row.is_gibberish && zero_gibberish) return 0.0;
    if (column == "effort") return row.effort ? std::optional<double>(*row.effort) : std::nullopt;
    if (column == "relevance") return row.relevance ? std::optional<double>(*row.relevance) : std::nullopt;
    if (column == "completeness") return row.completeness ? std::optional<double>(*row.completeness) : std::nullopt;
    if (column == "overall") return row.overall;
    throw std::invalid_argument("unknown score column: " + std::string(column));
}

std::optional<double> human_column(const records::Annotation& a, std::string_view column) {
    if (column == "effort") return a.effort;
    if (column == "relevance") return a.relevance;
    if (column == "completeness") return a.completeness;
    if (column == "overall") return a.overall;
    throw std::invalid_argument("unknown annotation column: " + std::string(column));
}

int scale_max(std::string_view column) { return column == "effort" ? 7 : 4; }

int to_category(double v, int hi) {
    const long r = std::lround(v);
    if (r < 0 || r > hi) throw std::invalid_argument(fmt::format("rating {} outside 0..{}", v, hi));
    return static_cast<int>(r);
}

}  // namespace

// ---- configuration ------------------------------------------------------------

AppConfig AppConfig::defaults() {
    AppConfig c;
    c.data_dir = default_data_dir();
    return c;
}

AppConfig AppConfig::parse(std::string_view document, const fs::path& base) {
    AppConfig c = defaults();
    const json j = json::parse(document, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ConfigError("config is not a JSON object");
    try {
        check_keys(j,
                   {"data_dir", "english", "korean", "judge", "cache_dir", "threshold", "aggregation", "weights",
                    "workers", "failure_tolerance"},
                   "config");
        if (j.contains("data_dir")) c.data_dir = resolve(base, j["data_dir"].get<std::string>());
        if (j.contains("english")) c.english = parse_language_settings(j["english"], base, "english");
        if (j.contains("korean")) c.korean = parse_language_settings(j["korean"], base, "korean");
        if (j.contains("judge")) {
            const json& jj = j["judge"];
            check_keys(jj,
                       {"endpoint_url", "model", "temperature", "max_tokens", "max_retries", "timeout_seconds",
                        "language"},
                       "judge");
            c.judge.endpoint_url = jj.value("endpoint_url", c.judge.endpoint_url);
            c.judge.model_identifier = jj.value("model", c.judge.model_identifier);
            c.judge.temperature = jj.value("temperature", c.judge.temperature);
            c.judge.max_tokens = jj.value("max_tokens", c.judge.max_tokens);
            c.judge.max_retries = jj.value("max_retries", c.judge.max_retries);
            c.judge.timeout = std::chrono::seconds(jj.value("timeout_seconds", c.judge.timeout.count()));
            if (jj.contains("language")) c.judge.language = parse_language(jj["language"].get<std::string>());
        }
        if (j.contains("cache_dir")) c.cache_dir = resolve(base, j["cache_dir"].get<std::string>());
        c.threshold = j.value("threshold", c.threshold);
        if (j.contains("aggregation")) c.aggregation = aggregate::parse_method(j["aggregation"].get<std::string>());
        if (j.contains("weights")) c.weights = resolve(base, j["weights"].get<std::string>());
        c.workers = j.value("workers", c.workers);
        c.failure_tolerance = j.value("failure_tolerance", c.failure_tolerance);
    } catch (const json::exception& e) {
        throw ConfigError(fmt::format("invalid config: {}", e.what()));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(fmt::format("invalid config: {}", e.what()));
    }
    if (!(c.failure_tolerance >= 0.0 && c.failure_tolerance <= 1.0)) {
        throw ConfigError("failure_tolerance must lie in [0, 1]");
    }
    return c;
}

AppConfig AppConfig::load(const fs::path& path) { return parse(read_file(path), path.parent_path()); }

gibberish::GibberishConfig AppConfig::gibberish_config(Language lang) const {
    const LanguageSettings& s = lang == Language::english ? english : korean;
    auto cfg = gibberish::GibberishConfig::thresholds_for(lang);
    const std::string name(to_string(lang));
    cfg.whitelist = gibberish::Whitelist::load(s.whitelist.value_or(data_dir / "whitelist" / (name + ".txt")));
    if (lang == Language::english) {
        cfg.lexicon = std::make_shared<const textstat::Lexicon>(
            textstat::Lexicon::load(s.lexicon.value_or(data_dir / "lexicon" / "english.txt")));
    }
    if (s.morpheme_lexicon) {
        cfg.morpheme_oracle = gibberish::lexicon_morpheme_oracle(
            std::make_shared<const textstat::Lexicon>(textstat::Lexicon::load(*s.morpheme_lexicon)));
    }
    if (s.ll_threshold) cfg.ll_threshold = *s.ll_threshold;
    if (s.run_threshold) cfg.run_threshold = *s.run_threshold;
    if (s.valid_word_threshold) cfg.valid_word_threshold = *s.valid_word_threshold;
    if (s.syllable_ratio_threshold) cfg.syllable_ratio_threshold = *s.syllable_ratio_threshold;
    if (s.jamo_diversity_threshold) cfg.jamo_diversity_threshold = *s.jamo_diversity_threshold;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

fs::path AppConfig::model_path(Language lang) const {
    const LanguageSettings& s = lang == Language::english ? english : korean;
    return s.model.value_or(data_dir / "models" / (std::string(to_string(lang)) + ".json"));
}

gibberish::Screener build_screener(const AppConfig& config, const std::vector<fs::path>& model_paths) {
    gibberish::Screener screener;
    auto add = [&](const fs::path& path) {
        markov::BigramModel model = markov::load(path);
        const Language lang = language_of(model);
        screener.add(std::move(model), config.gibberish_config(lang));
    };
    if (model_paths.empty()) {
        for (Language lang : {Language::english, Language::korean}) add(config.model_path(lang));
    } else {
        for (const auto& p : model_paths) add(p);
    }
    return screener;
}

// ---- commands -------------------------------------------------------------------

int cmd_train_markov(const TrainArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto lines = markov::read_corpus(args.corpus);
        const auto model =
            markov::train(lines, markov::parse_unit(args.unit), args.alpha, {{"corpus", args.corpus.filename().string()}});
        markov::save(model, args.out);
        out << fmt::format("trained {} model: {} lines, vocabulary {} -> {}\n", markov::to_string(model.unit()),
                           lines.size(), model.vocabulary().size(), args.out.string());
        return ExitCode::ok;
    });
}

int cmd_screen(const ScreenArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const AppConfig config = args.config ? AppConfig::load(*args.config) : AppConfig::defaults();
        const auto screener = build_screener(config, args.models);
        const auto inputs = records::read_items(args.input);

        std::vector<SurveyItem> items;
        std::vector<std::size_t> slot(inputs.size(), SIZE_MAX);
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            if (inputs[i].item) {
                slot[i] = items.size();
                items.push_back(*inputs[i].item);
            }
        }
        const auto outcomes = pipeline::screen_batch(screener, items);

        std::vector<std::string> lines;
        std::size_t gib = 0, errors = 0;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            if (slot[i] == SIZE_MAX) {
                lines.push_back(records::screen_line(inputs[i].id, std::nullopt, std::nullopt, inputs[i].error));
                ++errors;
                continue;
            }
            const auto& o = outcomes[slot[i]];
            lines.push_back(records::screen_line(inputs[i].id, inputs[i].item->language, o.verdict, o.error));
            if (!o.verdict) {
                ++errors;
            } else if (o.verdict->is_gibberish) {
                ++gib;
            }
        }
        write_lines(lines, args.output, out);
        err << fmt::format("screened {} record(s): {} gibberish, {} kept, {} error(s)\n", inputs.size(), gib,
                           inputs.size() - gib - errors, errors);
        return ExitCode::ok;
    });
}

int cmd_evaluate(const EvaluateArgs& args, std::ostream& out, std::ostream& err, judge::ChatClient* client) {
    return guarded(err, [&] {
        AppConfig config = args.config ? AppConfig::load(*args.config) : AppConfig::defaults();
        pipeline::EvaluateOptions opt;
        opt.method = args.aggregation ? aggregate::parse_method(*args.aggregation) : config.aggregation;
        opt.threshold = args.threshold.value_or(config.threshold);
        opt.judge = config.judge;
        if (args.judge_language) opt.judge.language = parse_language(*args.judge_language);
        opt.workers = args.workers.value_or(config.workers);
        opt.record_timing = args.timing;
        if (auto w = args.weights ? args.weights : config.weights) opt.weights = aggregate::load_weights(*w);
        const double tolerance = args.failure_tolerance.value_or(config.failure_tolerance);
        opt.validate();

        const auto screener = build_screener(config, args.models);
        const auto inputs = records::read_items(args.input);

        std::optional<judge::HttpChatClient> http;
        if (!client) client = &http.emplace(judge::HttpChatClient::from_environment());
        judge::CachingChatClient cached(*client, judge::ResponseCache(args.cache_dir.value_or(config.cache_dir)),
                                        args.offline);

        const auto batch = pipeline::evaluate_batch(screener, cached, inputs, opt);
        std::vector<std::string> lines;
        lines.reserve(batch.size());
        std::size_t gib = 0, failed = 0, accepted = 0;
        for (const auto& r : batch) {
            lines.push_back(records::to_json_line(r));
            failed += r.failed();
            if (r.gibberish && r.gibberish->is_gibberish) ++gib;
            if (r.overall && r.overall->acceptance == aggregate::Acceptance::accept) ++accepted;
        }
        write_lines(lines, args.output, out);
        err << fmt::format("evaluated {} item(s): {} gibberish, {} accepted, {} failed; cache {} hit(s), {} miss(es)\n",
                           batch.size(), gib, accepted, failed, cached.hits(), cached.misses());
        if (pipeline::excessive_failures(batch, tolerance)) {
            err << fmt::format("error: more than {:.0f}% of items failed\n", tolerance * 100);
            return ExitCode::excessive_failures;
        }
        return ExitCode::ok;
    });
}

int cmd_fit(const FitArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto annotations = records::read_annotations(args.annotations);
        const auto rows = records::read_score_rows(args.scores);
        std::map<std::string, const records::ScoreRow*> by_id;
        for (const auto& r : rows) {
            if (!r.is_gibberish && r.effort && r.relevance && r.completeness) by_id.emplace(r.id, &r);
        }
        std::vector<aggregate::NormalizedScores> features;
        std::vector<double> targets;
        std::vector<std::string> missing;
        std::set<std::string> used;
        for (const auto& a : annotations) {
            if (!a.overall) continue;
            auto it = by_id.find(a.id);
            if (it == by_id.end()) {
                missing.push_back(a.id);
                continue;
            }
            const auto& r = *it->second;
            features.push_back(aggregate::normalize(*r.effort, *r.relevance, *r.completeness));
            targets.push_back(*a.overall / judge::max_score(judge::Dimension::overall_quality));
            used.insert(a.id);
        }
        for (const auto& [id, _] : by_id) {
            if (!used.contains(id)) missing.push_back(id);
        }
        if (features.empty()) throw JoinMismatch("annotations and scores share no item ids", missing);
        if (!missing.empty()) err << fmt::format("warning: {} id(s) could not be joined\n", missing.size());
        if (features.size() < 4) {
            throw std::invalid_argument(fmt::format("fit needs at least 4 joined items, got {}", features.size()));
        }

        const auto w = aggregate::fit_ridge(features, targets, args.lambda);
        aggregate::save_weights(w, args.out);
        std::vector<double> pred;
        for (const auto& f : features) pred.push_back(aggregate::aggregate_regression(w, f));
        const auto rho = metrics::spearman_rho(pred, targets);
        out << fmt::format(
            "fitted on {} items (lambda {}): w_effort {:.6g}, w_relevance {:.6g}, w_completeness {:.6g}, "
            "intercept {:.6g}; in-sample spearman {}\n",
            w.fitted_on, w.lambda, w.w_effort, w.w_relevance, w.w_completeness, w.intercept,
            rho ? fmt::format("{:.4f}", *rho) : std::string("undefined"));
        return ExitCode::ok;
    });
}

int cmd_report(const ReportArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto rows = records::read_score_rows(args.scores);
        const auto annotations = records::read_annotations(args.annotations);
        std::map<std::string, const records::Annotation*> human;
        for (const auto& a : annotations) human.emplace(a.id, &a);

        std::vector<std::pair<const records::ScoreRow*, const records::Annotation*>> joined;
        std::size_t excluded = 0, unmatched = 0;
        for (const auto& r : rows) {
            auto it = human.find(r.id);
            if (it == human.end()) {
                ++unmatched;
                continue;
            }
            if (r.is_gibberish && !args.include_gibberish) {
                ++excluded;
                continue;
            }
            joined.emplace_back(&r, it->second);
        }
        if (joined.empty()) throw JoinMismatch("scores and annotations share no usable item ids", {});

        ojson report{{"n_joined", joined.size()},
                     {"n_excluded_gibberish", excluded},
                     {"n_unmatched", unmatched},
                     {"include_gibberish", args.include_gibberish}};
        ojson errors = ojson::object();
        ojson dims = ojson::object();
        for (std::string_view col : {"effort", "relevance", "completeness", "overall"}) {
            std::vector<double> x, y;
            for (const auto& [r, a] : joined) {
                auto sx = score_column(*r, col, args.include_gibberish);
                auto hy = human_column(*a, col);
                if (sx && hy) {
                    x.push_back(*sx);
                    y.push_back(*hy);
                }
            }
            ojson d{{"n", x.size()}};
            const std::string key(col);
            if (x.size() < 2) {
                d["spearman"] = d["kendall"] = d["qwk"] = nullptr;
                errors[key] = "fewer than 2 paired ratings";
            } else {
                const auto rho = metrics::spearman_rho(x, y);
                const auto tau = metrics::kendall_tau(x, y);
                d["spearman"] = optional_json(rho);
                d["kendall"] = optional_json(tau);
                if (!rho || !tau) errors[key] = "constant ratings; correlation undefined";
                try {
                    const int hi = scale_max(col);
                    std::vector<int> a, b;
                    for (std::size_t i = 0; i < x.size(); ++i) {
                        a.push_back(to_category(col == "overall" ? x[i] * hi : x[i], hi));
                        b.push_back(to_category(y[i], hi));
                    }
                    d["qwk"] = metrics::quadratic_weighted_kappa(a, b, 0, hi);
                } catch (const std::exception& e) {
                    d["qwk"] = nullptr;
                    errors[key + ".qwk"] = e.what();
                }
            }
            dims[key] = std::move(d);
        }
        report["dimensions"] = std::move(dims);

        if (!args.compare.empty()) {
            try {
                if (args.compare.size() != 2) throw std::invalid_argument("--compare needs exactly two columns");
                std::vector<records::ScoreRow> other_rows;
                if (args.compare_with) other_rows = records::read_score_rows(*args.compare_with);
                std::map<std::string, const records::ScoreRow*> other;
                for (const auto& r : other_rows) other.emplace(r.id, &r);
                auto value = [&](const std::string& spec, const records::ScoreRow& r) -> std::optional<double> {
                    if (spec.rfind("other:", 0) == 0) {
                        if (!args.compare_with) throw std::invalid_argument("\"other:\" columns need --compare-with");
                        auto it = other.find(r.id);
                        if (it == other.end()) return std::nullopt;
                        return score_column(*it->second, spec.substr(6), args.include_gibberish);
                    }
                    return score_column(r, spec, args.include_gibberish);
                };
                std::vector<double> h, a, b;
                for (const auto& [r, ann] : joined) {
                    auto hv = human_column(*ann, args.reference);
                    auto av = value(args.compare[0], *r);
                    auto bv = value(args.compare[1], *r);
                    if (hv && av && bv) {
                        h.push_back(*hv);
                        a.push_back(*av);
                        b.push_back(*bv);
                    }
                }
                metrics::BootstrapOptions bo{args.statistic, args.resamples, args.level, args.seed};
                const auto ci = metrics::bootstrap_ci_diff(h, a, b, bo);
                report["bootstrap"] = ojson{{"a", args.compare[0]},
                                            {"b", args.compare[1]},
                                            {"reference", args.reference},
                                            {"statistic", std::string(metrics::to_string(args.statistic))},
                                            {"n", h.size()},
                                            {"difference", ci.point_estimate},
                                            {"lower", ci.lower},
                                            {"upper", ci.upper},
                                            {"level", ci.level},
                                            {"resamples", ci.resamples},
                                            {"seed", ci.seed},
                                            {"degenerate_draws", ci.degenerate_draws},
                                            {"excludes_zero", ci.lower > 0.0 || ci.upper < 0.0}};
            } catch (const std::exception& e) {
                report["bootstrap"] = nullptr;
                errors["bootstrap"] = e.what();
            }
        }

        {
            std::vector<double> scores;
            std::vector<int> labels;
            for (const auto& [r, a] : joined) {
                auto s = score_column(*r, "overall", args.include_gibberish);
                if (s && a->acceptance) {
                    scores.push_back(*s);
                    labels.push_back(aggregate::positive_class(*a->acceptance));
                }
            }
            try {
                if (scores.empty()) throw std::invalid_argument("no items carry both an overall score and a label");
                const auto roc = metrics::roc_auc(scores, labels);
                ojson pts = ojson::array();
                for (const auto& [fpr, tpr] : roc.points) pts.push_back({fpr, tpr});
                report["roc"] = ojson{{"n", scores.size()}, {"auc", roc.auc}, {"points", std::move(pts)}};
            } catch (const std::exception& e) {
                report["roc"] = nullptr;
                errors["roc"] = e.what();
            }
        }
        report["errors"] = std::move(errors);
        write_lines({report.dump(2)}, args.output, out);
        return ExitCode::ok;
    });
}

// ---- argument parsing -----------------------------------------------------------

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-stage quality evaluation of open-ended survey responses"};
    app.require_subcommand(1);

    TrainArgs train;
    auto* t = app.add_subcommand("train-markov", "Train a bigram model on a line-per-sentence corpus");
    t->add_option("--corpus", train.corpus, "UTF-8 corpus, one sentence per line")->required()->check(CLI::ExistingFile);
    t->add_option("--unit", train.unit, "char (English) or jamo (Korean)")->check(CLI::IsMember({"char", "jamo"}));
    t->add_option("--alpha", train.alpha, "additive smoothing constant")->check(CLI::PositiveNumber);
    t->add_option("--out", train.out, "model file to write")->required();

    ScreenArgs screen;
    auto* s = app.add_subcommand("screen", "Flag gibberish responses");
    s->add_option("--input", screen.input, "JSONL survey items")->required();
    s->add_option("--model", screen.models, "bigram model (repeatable; defaults to the bundled models)");
    s->add_option("--config", screen.config, "JSON settings file");
    s->add_option("--output", screen.output, "verdict JSONL (default: stdout)");

    EvaluateArgs eval;
    auto* e = app.add_subcommand("evaluate", "Screen, judge and aggregate survey responses");
    e->add_option("--input", eval.input, "JSONL survey items")->required();
    e->add_option("--model", eval.models, "bigram model (repeatable; defaults to the bundled models)");
    e->add_option("--config", eval.config, "JSON settings file");
    e->add_option("--aggregation", eval.aggregation, "sum, regression or llm")
        ->check(CLI::IsMember({"sum", "regression", "llm"}));
    e->add_option("--weights", eval.weights, "ridge weights for regression aggregation");
    e->add_option("--cache-dir", eval.cache_dir, "judge response cache directory");
    e->add_option("--threshold", eval.threshold, "acceptance threshold in [0, 1]");
    e->add_option("--judge-language", eval.judge_language, "prompt language: english or korean");
    e->add_option("--workers", eval.workers, "items judged concurrently");
    e->add_option("--failure-tolerance", eval.failure_tolerance, "failed fraction allowed before exit code 2");
    e->add_flag("--offline", eval.offline, "never call the endpoint; cache misses fail");
    e->add_flag("--timing", eval.timing, "record per-item wall-clock time");
    e->add_option("--output", eval.output, "record JSONL (default: stdout)");

    FitArgs fit;
    auto* f = app.add_subcommand("fit", "Fit ridge aggregation weights against human overall ratings");
    f->add_option("--annotations", fit.annotations, "CSV or JSONL human ratings")->required();
    f->add_option("--scores", fit.scores, "evaluate output JSONL")->required();
    f->add_option("--lambda", fit.lambda, "ridge penalty")->check(CLI::NonNegativeNumber);
    f->add_option("--out", fit.out, "weights file to write")->required();

    ReportArgs report;
    std::string statistic = "spearman";
    auto* r = app.add_subcommand("report", "Agreement statistics against human annotations");
    r->add_option("--scores", report.scores, "evaluate output JSONL")->required();
    r->add_option("--annotations", report.annotations, "CSV or JSONL human ratings")->required();
    r->add_option("--compare", report.compare, "two score columns for a bootstrap CI, e.g. overall other:overall")
        ->expected(2);
    r->add_option("--compare-with", report.compare_with, "second evaluate output for other: columns");
    r->add_option("--reference", report.reference, "human column for the bootstrap")
        ->check(CLI::IsMember({"effort", "relevance", "completeness", "overall"}));
    r->add_option("--statistic", statistic, "spearman or kendall")->check(CLI::IsMember({"spearman", "kendall"}));
    r->add_option("--resamples", report.resamples, "bootstrap resamples (>= 1000)");
    r->add_option("--level", report.level, "confidence level");
    r->add_option("--seed", report.seed, "bootstrap seed");
    r->add_flag("--include-gibberish", report.include_gibberish, "score gibberish items as zeros instead of dropping them");
    r->add_option("--output", report.output, "report JSON (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? ExitCode::ok : ExitCode::failure;
    }
    report.statistic = metrics::parse_statistic(statistic);

    if (t->parsed()) return cmd_train_markov(train, out, err);
    if (s->parsed()) return cmd_screen(screen, out, err);
    if (e->parsed()) return cmd_evaluate(eval, out, err);
    if (f->parsed()) return cmd_fit(fit, out, err);
    return cmd_report(report, out, err);
}

}  // namespace respeval::cli
