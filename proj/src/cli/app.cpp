#include "vidreq/cli/app.hpp"

#include <algorithm>
#include <csignal>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <thread>

#include <unistd.h>

#include <CLI11.hpp>

#include "vidreq/annotate/server.hpp"
#include "vidreq/annotate/store.hpp"
#include "vidreq/core/clock.hpp"
#include "vidreq/core/error.hpp"
#include "vidreq/core/io.hpp"
#include "vidreq/core/manifest.hpp"
#include "vidreq/core/parallel.hpp"
#include "vidreq/core/text.hpp"
#include "vidreq/extract/extract.hpp"
#include "vidreq/frames/sampler.hpp"
#include "vidreq/ingest/filter.hpp"
#include "vidreq/relevance/classify.hpp"
#include "vidreq/relevance/evaluate.hpp"
#include "vidreq/stats/stats.hpp"
#include "vidreq/themes/report.hpp"

namespace vidreq::cli {

namespace fs = std::filesystem;
using relevance::LabeledExample;
using relevance::PlatformScope;
using relevance::TextVariant;

fs::path executable_dir() {
    std::error_code ec;
    auto self = fs::read_symlink("/proc/self/exe", ec);
    return ec ? fs::current_path() : self.parent_path();
}

namespace {

struct Options {
    std::string corpus = "corpus.json";
    std::string out = "out";
    std::uint64_t seed = 7;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string profile;
    std::string variant = "both";
    std::string scope = "Both";
    std::string k_range = "2..6";
    std::string labels;
    std::string asr;
    std::string ocr;
    std::string frames;
    std::string session;
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string product;
    int cluster = 0;
    std::string name;
};

struct Context {
    CorpusManifest manifest;
    fs::path corpus_dir;
    fs::path out;
    fs::path frames_root;
    fs::path labels;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    frames::SamplerConfig sampler;
    extract::RegionThresholds thresholds;
    TextVariant variant = TextVariant::AudioVisual;
    PlatformScope scope = PlatformScope::Both;
    themes::KRange k_range;
    std::vector<std::string> asr;
    std::vector<std::string> ocr;
};

[[noreturn]] void config_error(const std::string& detail) { throw Error(ErrorKind::InvalidConfig, detail); }

void apply_profile(const fs::path& path, Context& ctx) {
    const auto j = read_json(path);
    if (!j.is_object()) config_error("platform profile must be a JSON object");
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "threshold") {
                const auto t = value.get<std::vector<double>>();
                if (t.size() != 3) config_error("threshold needs three components");
                for (std::size_t k = 0; k < 3; ++k) {
                    if (!(t[k] > 0.0)) config_error("threshold components must be > 0");
                    ctx.sampler.threshold[k] = t[k];
                }
            } else if (key == "slice_length") {
                const auto l = value.get<long long>();
                if (l < 2) config_error("slice_length must be >= 2");
                ctx.sampler.slice_length = static_cast<std::size_t>(l);
            } else if (key == "tiktok_min_gap_s" || key == "youtube_min_gap_s") {
                const auto g = value.get<double>();
                if (!(g >= 0.0)) config_error(key + " must be >= 0");
                (key == "tiktok_min_gap_s" ? ctx.sampler.tiktok_min_gap_s : ctx.sampler.youtube_min_gap_s) = g;
            } else if (key == "slice_rule") {
                const auto r = value.get<std::string>();
                if (r == "all") ctx.sampler.rule = frames::SliceRule::All;
                else if (r == "any") ctx.sampler.rule = frames::SliceRule::Any;
                else config_error("slice_rule must be \"all\" or \"any\"");
            } else if (key == "ocr_full_frame" || key == "ocr_supplement") {
                const auto f = value.get<double>();
                if (!(f >= 0.0 && f <= 1.0)) config_error(key + " must lie in [0, 1]");
                (key == "ocr_full_frame" ? ctx.thresholds.full_frame : ctx.thresholds.supplement) = f;
            } else {
                config_error("unknown platform profile key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        config_error(std::string("platform profile: ") + e.what());
    }
}

themes::KRange parse_k_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const int k = std::stoi(s);
            return {k, k};
        }
        themes::KRange r{std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
        if (r.min < 2 || r.max < r.min) config_error("k range must satisfy 2 <= min <= max");
        return r;
    } catch (const std::logic_error&) {
        config_error("k range must look like 2..6");
    }
}

Context make_context(const Options& o) {
    Context ctx;
    const fs::path corpus = o.corpus;
    ctx.manifest = parse_manifest(read_file(corpus));
    ctx.corpus_dir = corpus.has_parent_path() ? corpus.parent_path() : fs::path(".");
    ctx.out = o.out;
    ctx.frames_root = o.frames.empty() ? ctx.corpus_dir / "frames" : fs::path(o.frames);
    ctx.labels = o.labels.empty() ? ctx.corpus_dir / "labels.log.jsonl" : fs::path(o.labels);
    ctx.seed = o.seed;
    ctx.jobs = std::max(1u, o.jobs);
    if (!o.profile.empty()) apply_profile(o.profile, ctx);
    auto v = relevance::parse_text_variant(o.variant);
    if (!v) config_error("variant must be audio, visual or both");
    ctx.variant = *v;
    auto s = relevance::parse_platform_scope(o.scope);
    if (!s) config_error("scope must be TikTok, YouTube or Both");
    ctx.scope = *s;
    ctx.k_range = parse_k_range(o.k_range);
    const auto tools = executable_dir();
    ctx.asr = o.asr.empty() ? std::vector<std::string>{(tools / "vidreq-stub-asr").string()}
                            : extract::split_command(o.asr);
    ctx.ocr = o.ocr.empty() ? std::vector<std::string>{(tools / "vidreq-stub-ocr").string()}
                            : extract::split_command(o.ocr);
    return ctx;
}

// ---- shared artifact access ----

ingest::BundleIndex load_bundles(const Context& ctx) {
    ingest::BundleIndex out;
    for (const auto& r : ctx.manifest.records) {
        const auto path = ctx.out / "bundles" / (r.id + ".json");
        if (fs::exists(path)) out.emplace(r.id, bundle_from_json(read_json(path)));
    }
    return out;
}

ingest::FilterReport load_filter_report(const Context& ctx) {
    const auto path = ctx.out / "filter_report.json";
    if (!fs::exists(path)) throw Error(ErrorKind::MissingInput, path.string() + " (run ingest first)");
    return ingest::filter_report_from_json(read_json(path));
}

std::vector<VideoRecord> retained_records(const Context& ctx) {
    const auto report = load_filter_report(ctx);
    const std::set<std::string> keep(report.retained.begin(), report.retained.end());
    std::vector<VideoRecord> out;
    for (const auto& r : ctx.manifest.records) {
        if (keep.contains(r.id)) out.push_back(r);
    }
    return out;
}

std::vector<LabeledExample> ground_truth(const Context& ctx) {
    if (!fs::exists(ctx.labels)) return {};
    return annotate::export_ground_truth(annotate::replay(read_file(ctx.labels)));
}

std::string text_for(const VideoRecord& r, const ingest::BundleIndex& bundles, TextVariant v) {
    if (auto it = bundles.find(r.id); it != bundles.end()) return relevance::assemble_text(it->second, r, v);
    TextBundle empty;
    empty.record_id = r.id;
    return relevance::assemble_text(empty, r, v);
}

// Ground-truth examples for the retained, in-scope records, with texts.
std::vector<LabeledExample> labeled_examples(const Context& ctx, TextVariant v) {
    const auto bundles = load_bundles(ctx);
    std::map<std::string, VideoRecord> records;
    for (auto& r : retained_records(ctx)) {
        if (relevance::in_scope(r.platform, ctx.scope)) records.emplace(r.id, r);
    }
    std::vector<LabeledExample> out;
    for (auto e : ground_truth(ctx)) {
        auto it = records.find(e.record_id);
        if (it == records.end()) continue;
        e.text = text_for(it->second, bundles, v);
        out.push_back(std::move(e));
    }
    return out;
}

std::string dataset_name(const Context& ctx, TextVariant v) {
    std::string name(relevance::to_string(v));
    if (ctx.scope != PlatformScope::Both) name += "_" + case_fold(std::string(relevance::to_string(ctx.scope)));
    return name;
}

fs::path model_path(const Context& ctx, TextVariant v) {
    return ctx.out / "models" / ("reference_" + dataset_name(ctx, v) + ".json");
}

std::unique_ptr<relevance::ScoringBackend> scoring_backend(const Context& ctx, TextVariant v) {
    if (const char* url = std::getenv(relevance::kClassifierUrlEnv); url && *url) {
        return std::make_unique<relevance::HttpClassifier>(url);
    }
    const auto path = model_path(ctx, v);
    if (!fs::exists(path)) throw Error(ErrorKind::MissingInput, path.string() + " (run train first)");
    return std::make_unique<relevance::ReferenceModel>(relevance::ReferenceModel::from_json(read_json(path)));
}

std::vector<relevance::RelevanceVerdict> load_verdicts(const Context& ctx) {
    const auto path = ctx.out / "verdicts.jsonl";
    if (!fs::exists(path)) throw Error(ErrorKind::MissingInput, path.string() + " (run classify first)");
    return relevance::verdicts_from_jsonl(read_file(path));
}

void print_json(const nlohmann::json& j) { std::cout << dump_json(j); }

// ---- stages ----

void stage_sample_frames(const Context& ctx) {
    const auto& records = ctx.manifest.records;
    parallel_for(records.size(), ctx.jobs, [&](std::size_t i) {
        const auto dir = frames::scan_frame_directory(ctx.frames_root / records[i].id);
        nlohmann::json out = nlohmann::json::array();
        for (const auto& c : frames::select_candidates(dir, ctx.sampler)) out.push_back(frames::to_json(c));
        write_json(ctx.out / "candidates" / (records[i].id + ".json"), out);
    });
}

void stage_extract_text(const Context& ctx) {
    const extract::ExecutableAsr asr(ctx.asr);
    const extract::ExecutableOcr ocr(ctx.ocr);
    const extract::ExtractionBackends backends{&asr, &ocr, &ocr, &extract::FrequencyLexicon::bundled()};
    extract::ExtractionConfig config;
    config.thresholds = ctx.thresholds;
    config.media_root = ctx.corpus_dir;
    config.assembled_at = artifact_timestamp();
    const auto& records = ctx.manifest.records;
    parallel_for(records.size(), ctx.jobs, [&](std::size_t i) {
        const auto& r = records[i];
        const auto cand_path = ctx.out / "candidates" / (r.id + ".json");
        if (!fs::exists(cand_path)) throw Error(ErrorKind::MissingInput, cand_path.string() + " (run sample-frames first)");
        std::vector<frames::CandidateFrame> candidates;
        for (const auto& c : read_json(cand_path)) candidates.push_back(frames::candidate_from_json(c));
        const auto dir = frames::scan_frame_directory(ctx.frames_root / r.id);
        const auto bundle = extract::extract_record(r, candidates, dir.frame_files, backends, config);
        write_json(ctx.out / "bundles" / (r.id + ".json"), to_json(bundle));
    });
}

void stage_ingest(const Context& ctx) {
    const auto report = ingest::apply_filters(ctx.manifest, load_bundles(ctx));
    write_json(ctx.out / "filter_report.json", ingest::to_json(report));
}

void stage_train(const Context& ctx, TextVariant v) {
    const auto split = relevance::split_dataset(labeled_examples(ctx, v), ctx.seed);
    const auto model = relevance::ReferenceModel::train(split.train, ctx.seed);
    auto j = model.to_json();
    j["dataset"] = {{"variant", relevance::to_string(v)}, {"platform", relevance::to_string(ctx.scope)}};
    write_json(model_path(ctx, v), j);
    auto ids = [](const std::vector<LabeledExample>& xs) {
        std::vector<std::string> out;
        for (const auto& x : xs) out.push_back(x.record_id);
        return out;
    };
    write_json(ctx.out / "splits" / (dataset_name(ctx, v) + ".json"),
               {{"seed", ctx.seed}, {"train", ids(split.train)}, {"test", ids(split.test)}});
}

relevance::EvalReport stage_evaluate(const Context& ctx, TextVariant v) {
    const auto split_path = ctx.out / "splits" / (dataset_name(ctx, v) + ".json");
    if (!fs::exists(split_path)) throw Error(ErrorKind::MissingInput, split_path.string() + " (run train first)");
    const auto test_ids = read_json(split_path).at("test").get<std::vector<std::string>>();
    const std::set<std::string> wanted(test_ids.begin(), test_ids.end());
    std::vector<LabeledExample> test;
    for (auto& e : labeled_examples(ctx, v)) {
        if (wanted.contains(e.record_id)) test.push_back(std::move(e));
    }
    const auto backend = scoring_backend(ctx, v);
    const auto report = relevance::evaluate(*backend, test, {v, ctx.scope});
    write_json(ctx.out / "eval" / (dataset_name(ctx, v) + "_" + report.model_id + ".json"), relevance::to_json(report));
    return report;
}

void stage_classify(const Context& ctx) {
    const auto backend = scoring_backend(ctx, ctx.variant);
    const auto verdicts =
        relevance::classify_corpus(*backend, load_bundles(ctx), retained_records(ctx), ctx.variant);
    write_file(ctx.out / "verdicts.jsonl", relevance::verdicts_to_jsonl(verdicts));
}

struct ProductDocs {
    std::vector<std::string> ids;
    std::vector<std::string> texts;
};

// Relevant records grouped by product, each group in record-id order.
std::map<std::string, ProductDocs> relevant_by_product(const Context& ctx) {
    const auto bundles = load_bundles(ctx);
    std::map<std::string, const VideoRecord*> by_id;
    for (const auto& r : ctx.manifest.records) by_id[r.id] = &r;
    std::map<std::string, std::map<std::string, std::string>> grouped;
    for (const auto& v : load_verdicts(ctx)) {
        if (v.label != Label::Relevant) continue;
        auto it = by_id.find(v.record_id);
        if (it == by_id.end()) throw Error(ErrorKind::InvalidRecord, "verdict for unknown record '" + v.record_id + "'");
        grouped[it->second->product][v.record_id] = text_for(*it->second, bundles, ctx.variant);
    }
    std::map<std::string, ProductDocs> out;
    for (auto& [product, docs] : grouped) {
        auto& d = out[product];
        for (auto& [id, text] : docs) {
            d.ids.push_back(id);
            d.texts.push_back(std::move(text));
        }
    }
    return out;
}

fs::path theme_file(const Context& ctx, const std::string& product) {
    std::string safe;
    for (unsigned char c : product) safe += std::isalnum(c) || c == '-' || c == '_' ? static_cast<char>(c) : '_';
    return ctx.out / "themes" / (safe + ".json");
}

std::map<annotate::ThemeKey, std::string> theme_names(const Context& ctx) {
    if (!fs::exists(ctx.labels)) return {};
    return annotate::replay(read_file(ctx.labels)).theme_names;
}

void write_rollup(const Context& ctx, const themes::ThemeReport& report,
                  const std::map<std::string, std::size_t>& skipped) {
    auto j = themes::rollup_to_json(report);
    nlohmann::json sk = nlohmann::json::array();
    for (const auto& [product, n] : skipped) sk.push_back({{"product", product}, {"relevant_records", n}});
    j["skipped"] = sk;
    write_json(ctx.out / "themes" / "rollup.json", j);
}

std::map<std::string, std::size_t> skipped_products(const std::map<std::string, ProductDocs>& groups) {
    std::map<std::string, std::size_t> out;
    for (const auto& [product, docs] : groups) {
        if (docs.ids.size() < 3) out[product] = docs.ids.size();
    }
    return out;
}

void stage_cluster(const Context& ctx) {
    const auto groups = relevant_by_product(ctx);
    const char* url = std::getenv(themes::kEmbedderUrlEnv);
    std::optional<themes::HttpEmbedder> remote;
    if (url && *url) remote.emplace(url);

    std::vector<std::pair<std::string, const ProductDocs*>> todo;
    for (const auto& [product, docs] : groups) {
        if (docs.ids.size() >= 3) todo.emplace_back(product, &docs);
    }
    std::vector<themes::ProductThemes> results(todo.size());
    parallel_for(todo.size(), ctx.jobs, [&](std::size_t i) {
        const auto& [product, docs] = todo[i];
        auto m = remote ? remote->embed(docs->texts) : themes::embed_fallback(docs->texts, ctx.seed);
        m.record_ids = docs->ids;
        results[i] = themes::cluster_product(product, docs->ids, docs->texts, m, ctx.seed, ctx.k_range);
    });
    const auto report = themes::build_theme_report(std::move(results), theme_names(ctx));
    for (const auto& p : report.products) write_json(theme_file(ctx, p.run.product), themes::to_json(p));
    write_rollup(ctx, report, skipped_products(groups));
}

void stage_stats(const Context& ctx) {
    const auto records = retained_records(ctx);
    ingest::BundleIndex bundles;
    for (auto& [id, b] : load_bundles(ctx)) {
        if (std::any_of(records.begin(), records.end(), [&](const auto& r) { return r.id == id; })) {
            bundles.emplace(id, std::move(b));
        }
    }
    const auto rows = stats::content_statistics(records, bundles);
    write_json(ctx.out / "stats.json", stats::to_json(rows));
    write_file(ctx.out / "stats.md", stats::to_markdown(rows));
}

void stage_report(const Context& ctx) {
    // Relevance split: manual labels where they exist, verdicts elsewhere.
    const auto records = retained_records(ctx);
    std::map<std::string, Label> manual;
    for (const auto& e : ground_truth(ctx)) manual[e.record_id] = e.label;
    std::map<std::string, relevance::RelevanceVerdict> verdicts;
    for (auto& v : load_verdicts(ctx)) verdicts.emplace(v.record_id, std::move(v));
    std::vector<stats::RelevanceRow> rows;
    for (const auto& r : records) {
        if (auto m = manual.find(r.id); m != manual.end()) {
            rows.push_back({r.id, r.platform, m->second, stats::Provenance::Manual});
        } else if (auto v = verdicts.find(r.id); v != verdicts.end()) {
            rows.push_back({r.id, r.platform, v->second.label, stats::Provenance::Model});
        }
    }
    const auto split = stats::relevance_split_report(rows);

    // Themes with the current names.
    std::vector<themes::ProductThemes> products;
    const auto groups = relevant_by_product(ctx);
    for (const auto& [product, docs] : groups) {
        const auto path = theme_file(ctx, product);
        if (docs.ids.size() >= 3 && fs::exists(path)) products.push_back(themes::product_themes_from_json(read_json(path)));
    }
    const auto report = themes::build_theme_report(std::move(products), theme_names(ctx));
    for (const auto& p : report.products) write_json(theme_file(ctx, p.run.product), themes::to_json(p));
    write_rollup(ctx, report, skipped_products(groups));

    nlohmann::json evals = nlohmann::json::array();
    if (fs::is_directory(ctx.out / "eval")) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(ctx.out / "eval")) files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) evals.push_back(read_json(f));
    }
    write_json(ctx.out / "report.json",
               {{"relevance", stats::to_json(split)}, {"evaluations", evals}, {"themes", themes::rollup_to_json(report)}});

    std::string md = "# Relevance\n\n" + stats::to_markdown(split) + "# Classifier evaluation\n\n";
    md += "| Dataset | Platform | Model | Accuracy | AUC | n_test |\n|---|---|---|---:|---:|---:|\n";
    for (const auto& e : evals) {
        char line[256];
        std::snprintf(line, sizeof line, "| %s | %s | %s | %.3f | %.3f | %zu |\n",
                      e["dataset"]["variant"].get<std::string>().c_str(),
                      e["dataset"]["platform"].get<std::string>().c_str(), e["model_id"].get<std::string>().c_str(),
                      e["accuracy"].get<double>(), e["auc"].get<double>(), e["n_test"].get<std::size_t>());
        md += line;
    }
    md += "\n# Themes\n\n" + themes::rollup_to_markdown(report);
    write_file(ctx.out / "report.md", md);
}

// ---- commands that do not need a corpus stage ----

int serve(const Options& o) {
    const Context ctx = make_context(o);
    annotate::LabelStore store(ctx.labels);
    std::set<std::string> ids;
    for (const auto& r : ctx.manifest.records) ids.insert(r.id);
    store.set_known_records(std::move(ids));

    // Block the shutdown signals here so a dedicated thread can wait for them.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    annotate::AnnotationServer server({&store, ctx.manifest, ctx.out / "bundles", ctx.out / "themes"});
    const int port = server.bind(o.host, o.port);
    std::cout << "listening on http://" << o.host << ":" << port << std::endl;
    std::thread waiter([&] {
        int sig = 0;
        sigwait(&signals, &sig);
        server.stop();
    });
    server.run();
    // Wake the waiter if the server stopped for another reason.
    pthread_kill(waiter.native_handle(), SIGTERM);
    waiter.join();
    return 0;
}

void report_error(const std::string& kind, const std::string& detail) {
    std::cerr << nlohmann::json{{"error", kind}, {"detail", detail}}.dump() << std::endl;
}

}  // namespace

int run(int argc, char** argv) {
    Options o;
    CLI::App app{"Requirements mining over short- and long-form video corpora", "vidreq"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--corpus", o.corpus, "Corpus manifest (corpus.json)");
    app.add_option("--out", o.out, "Artifact directory");
    app.add_option("--seed", o.seed, "Seed for every random choice");
    app.add_option("--jobs", o.jobs, "Per-record parallelism")->check(CLI::PositiveNumber);
    app.add_option("--platform-profile", o.profile, "JSON file overriding sampler and OCR settings");
    app.add_option("--variant", o.variant, "Text combination: audio, visual or both");
    app.add_option("--scope", o.scope, "Platform scope for training: TikTok, YouTube or Both");
    app.add_option("--k-range", o.k_range, "Cluster counts to try, e.g. 2..6");
    app.add_option("--labels", o.labels, "Label event log (default <corpus dir>/labels.log.jsonl)");
    app.add_option("--frames", o.frames, "Frame directories root (default <corpus dir>/frames)");
    app.add_option("--asr", o.asr, "Speech adapter command");
    app.add_option("--ocr", o.ocr, "OCR adapter command");

    auto* ingest = app.add_subcommand("ingest", "Official-account and language filters");
    auto* sample = app.add_subcommand("sample-frames", "Candidate frame selection");
    auto* extract = app.add_subcommand("extract-text", "Transcripts and visual text per record");
    auto* annotate = app.add_subcommand("annotate", "Annotation service");
    auto* serve_cmd = annotate->add_subcommand("serve", "Serve the annotation HTTP API");
    annotate->require_subcommand(1);
    serve_cmd->add_option("--host", o.host);
    serve_cmd->add_option("--port", o.port);
    auto* kappa = app.add_subcommand("kappa", "Inter-rater agreement");
    kappa->add_option("--session", o.session, "Session id (default: all pair sessions)");
    auto* train = app.add_subcommand("train", "Train the reference classifier");
    auto* evaluate = app.add_subcommand("evaluate", "Evaluate a classifier on the held-out split");
    auto* classify = app.add_subcommand("classify", "Classify the retained corpus");
    auto* cluster = app.add_subcommand("cluster", "Theme clustering per product");
    auto* stats = app.add_subcommand("stats", "Content statistics");
    auto* report = app.add_subcommand("report", "Relevance and theme summary");
    auto* pipeline = app.add_subcommand("pipeline", "Every stage in order");
    auto* name_theme = app.add_subcommand("name-theme", "Assign a theme name to a cluster");
    name_theme->add_option("--product", o.product)->required();
    name_theme->add_option("--cluster", o.cluster)->required();
    name_theme->add_option("--name", o.name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report_error("InvalidConfig", e.what());
        return 1;
    }

    try {
        if (serve_cmd->parsed()) return serve(o);
        const Context ctx = make_context(o);
        if (kappa->parsed()) {
            annotate::LabelStore store(ctx.labels);
            if (!fs::exists(ctx.labels)) throw Error(ErrorKind::MissingInput, ctx.labels.string());
            if (o.session.empty()) print_json(annotate::to_json(annotate::summarize_kappa(store)));
            else print_json(annotate::to_json(store.session_agreement(o.session)));
        } else if (name_theme->parsed()) {
            annotate::LabelStore store(ctx.labels);
            store.set_theme_name(o.product, o.cluster, o.name);
        } else if (ingest->parsed()) {
            stage_ingest(ctx);
        } else if (sample->parsed()) {
            stage_sample_frames(ctx);
        } else if (extract->parsed()) {
            stage_extract_text(ctx);
        } else if (train->parsed()) {
            stage_train(ctx, ctx.variant);
        } else if (evaluate->parsed()) {
            print_json(relevance::to_json(stage_evaluate(ctx, ctx.variant)));
        } else if (classify->parsed()) {
            stage_classify(ctx);
        } else if (cluster->parsed()) {
            stage_cluster(ctx);
        } else if (stats->parsed()) {
            stage_stats(ctx);
        } else if (report->parsed()) {
            stage_report(ctx);
        } else if (pipeline->parsed()) {
            stage_sample_frames(ctx);
            stage_extract_text(ctx);
            stage_ingest(ctx);
            for (auto v : {TextVariant::AudioOnly, TextVariant::VisualOnly, TextVariant::AudioVisual}) {
                stage_train(ctx, v);
                stage_evaluate(ctx, v);
            }
            stage_classify(ctx);
            stage_cluster(ctx);
            stage_stats(ctx);
            stage_report(ctx);
        }
        return 0;
    } catch (const Error& e) {
        report_error(std::string(to_string(e.kind())), e.detail());
        return is_backend_failure(e.kind()) ? 2 : 1;
    } catch (const fs::filesystem_error& e) {
        report_error("Io", e.what());
        return 1;
    } catch (const nlohmann::json::exception& e) {
        report_error("MalformedManifest", e.what());
        return 1;
    }
}

}  // namespace vidreq::cli
