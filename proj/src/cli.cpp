#include "geomove/cli.hpp"

#include "geomove/api.hpp"
#include "geomove/class_breaks.hpp"
#include "geomove/error.hpp"
#include "geomove/geoparser.hpp"
#include "geomove/impairment.hpp"
#include "geomove/pipeline.hpp"
#include "geomove/search_index.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace geomove {

namespace fs = std::filesystem;

namespace {

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

RuleSet rules_from(const std::string& arg) {
    if (arg.empty() || arg == "modified") return modified_ruleset();
    if (arg == "baseline") return baseline_ruleset();
    return load_ruleset(arg);
}

fs::path default_data(const char* name) { return fs::path(GEOMOVE_DATA_DIR) / name; }

struct IngestArgs {
    std::vector<std::string> files;
    std::string source;
    std::string index_dir;
    std::string config;
    std::string gazetteer;
    std::string lexicon;
    std::string rules;
    double threshold = kDefaultMovementThreshold;
    bool lenient = false;
    bool rebuild = false;
    bool serial = false;
};

void print_stats(std::ostream& out, const IngestStats& s, double threshold) {
    auto row = [&](const char* name, long v, const std::string& note = {}) {
        out << std::left << std::setw(14) << name << std::right << std::setw(9) << v;
        if (!note.empty()) out << "  " << note;
        out << '\n';
    };
    row("records", s.records);
    row("documents", s.documents);
    row("dropped_empty", s.dropped_empty);
    row("statements", s.statements);
    row("movement", s.movement, "score > " + fixed2(threshold));
    row("with_places", s.with_places);
    row("mentions", s.mentions);
    row("impaired", s.impaired, fixed2(s.impaired_percent()) + "% of movement");
    row("normal", s.normal);
}

int cmd_ingest(const IngestArgs& a, std::ostream& out) {
    ServiceConfig cfg;
    bool have_cfg = false;
    const fs::path cfg_path = resolve_config_path(a.config);
    if (!cfg_path.empty()) {
        cfg = ServiceConfig::load(cfg_path);
        have_cfg = true;
    }
    fs::path index_dir = !a.index_dir.empty() ? fs::path(a.index_dir) : (have_cfg ? cfg.index_dir : fs::path());
    if (index_dir.empty()) throw Error(ErrorKind::BadConfig, "no index directory (use --index or --config)");

    if (a.rebuild) {
        auto idx = SearchIndex::load(index_dir, true);
        idx.save(index_dir);
        out << "rebuilt " << index_dir.string() << " (" << idx.snapshot()->size() << " statements)\n";
        if (a.files.empty()) return 0;
    }
    if (a.files.empty()) throw Error(ErrorKind::BadConfig, "no input files");

    std::optional<Source> source;
    if (!a.source.empty()) {
        source = parse_source(a.source);
        if (!source) throw Error(ErrorKind::BadConfig, "unknown source '" + a.source + "'");
    }

    const fs::path gaz_path = !a.gazetteer.empty() ? fs::path(a.gazetteer)
                              : have_cfg           ? cfg.gazetteer
                                                   : default_data("gazetteer.tsv");
    Gazetteer gaz = Gazetteer::load(gaz_path);
    MovementScorerConfig scfg;
    scfg.threshold = have_cfg ? cfg.threshold : a.threshold;
    scfg.lexicon_path = !a.lexicon.empty() ? fs::path(a.lexicon) : (have_cfg ? cfg.lexicon : fs::path());
    scfg.validate();
    auto scorer = make_scorer(scfg);
    RuleSet rules = rules_from(!a.rules.empty() ? a.rules : (have_cfg ? cfg.rules.string() : std::string()));

    Pipeline p{&gaz, scorer.get(), &rules, scfg.threshold, {}};
    ParseOptions popts;
    popts.lenient = a.lenient;

    const Kernel kernel = a.serial ? Kernel::Serial : Kernel::Parallel;
    IngestStats total;
    std::vector<Statement> stmts;
    for (const auto& f : a.files) {
        auto r = ingest_file(f, source, popts, p, kernel);
        total += r.stats;
        for (auto& s : r.statements) stmts.push_back(std::move(s));
    }

    IndexOptions iopts;
    if (have_cfg) iopts.hex = cfg.hex;
    SearchIndex idx = fs::exists(index_dir / "VERSION") ? SearchIndex::load(index_dir) : SearchIndex(iopts);
    const std::size_t before = idx.snapshot() ? idx.snapshot()->size() : 0;
    for (auto& s : stmts) idx.add(std::move(s));
    idx.commit();
    idx.save(index_dir);

    print_stats(out, total, scfg.threshold);
    out << std::left << std::setw(14) << "indexed" << std::right << std::setw(9) << idx.snapshot()->size() - before
        << "  index total " << idx.snapshot()->size() << '\n';
    return 0;
}

int cmd_eval_impairment(const std::string& rules_arg, const std::string& gold_path, std::ostream& out) {
    RuleSet rs = rules_from(rules_arg);
    auto gold = load_labeled(gold_path);
    std::vector<MovementClass> pred, truth;
    for (const auto& g : gold) {
        pred.push_back(label_text(g.text, rs));
        truth.push_back(g.label);
    }
    auto cm = evaluate(pred, truth);
    auto m = metrics(cm);
    out << "rules " << rs.name << ", " << gold.size() << " statements\n";
    out << "TP " << cm.tp << " FP " << cm.fp << " FN " << cm.fn << " TN " << cm.tn << '\n';
    out << "P " << fixed2(m.precision) << " R " << fixed2(m.recall) << " F1 " << fixed2(m.f1) << " Acc "
        << fixed2(m.accuracy) << '\n';
    return 0;
}

int cmd_eval_geoparser(const std::string& gold_path, const std::string& gaz_path, std::ostream& out) {
    Gazetteer gaz = Gazetteer::load(gaz_path.empty() ? default_data("gazetteer.tsv") : fs::path(gaz_path));
    auto gold = load_geoparser_gold(gold_path);
    auto s = evaluate_geoparser(gold, gaz);
    out << gold.size() << " documents\n";
    out << "TP " << s.tp << " FP " << s.fp << " FN " << s.fn << " resolved " << s.resolved_correct << '\n';
    out << "P " << fixed2(s.precision) << " R " << fixed2(s.recall) << " F1 " << fixed2(s.f1) << " Acc "
        << fixed2(s.resolution_accuracy) << '\n';
    return 0;
}

int cmd_breaks(const std::string& method_name, int k, const std::string& values_csv, std::ostream& out) {
    auto method = parse_break_method(method_name);
    if (!method) throw Error(ErrorKind::BadConfig, "unknown method '" + method_name + "'");
    std::vector<double> values;
    for (const auto& item : split_csv(values_csv)) {
        double v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || ptr != item.data() + item.size())
            throw Error(ErrorKind::BadConfig, "not a number: '" + item + "'");
        values.push_back(v);
    }
    auto cb = compute_breaks(values, *method, k);
    for (std::size_t i = 0; i < cb.bounds.size(); ++i) out << (i ? "," : "") << shortest(cb.bounds[i]);
    out << '\n';
    return 0;
}

struct QueryArgs {
    std::string index_dir;
    std::string config;
    std::string text;
    std::string sources;
    std::string classes;
    std::string t0, t1;
    std::string scale;
    std::string bins;
    int page = 0;
    int page_size = 20;
};

int cmd_query(const QueryArgs& a, std::ostream& out) {
    fs::path index_dir = a.index_dir;
    double threshold = kDefaultMovementThreshold;
    if (const fs::path cfg_path = resolve_config_path(a.config); !cfg_path.empty()) {
        auto cfg = ServiceConfig::load(cfg_path);
        if (index_dir.empty()) index_dir = cfg.index_dir;
        threshold = cfg.threshold;
    }
    if (index_dir.empty()) throw Error(ErrorKind::BadConfig, "no index directory (use --index or --config)");
    auto idx = SearchIndex::load(index_dir);
    // Same parameter handling as the HTTP API.
    Api api(idx, ApiOptions{threshold, BreakMethod::Jenks, 5, nullptr});
    Params params;
    if (!a.text.empty()) params.emplace("text", a.text);
    if (!a.sources.empty()) params.emplace("sources", a.sources);
    if (!a.classes.empty()) params.emplace("movement_class", a.classes);
    if (!a.t0.empty()) params.emplace("t0", a.t0);
    if (!a.t1.empty()) params.emplace("t1", a.t1);
    if (!a.scale.empty()) params.emplace("scale", a.scale);
    if (!a.bins.empty()) params.emplace("bins", a.bins);
    params.emplace("page", std::to_string(a.page));
    params.emplace("page_size", std::to_string(a.page_size));
    Response r = api.handle("/statements", params);
    auto j = nlohmann::json::parse(r.body);
    if (r.status != 200) throw Error(ErrorKind::BadQuery, j["error"]["message"].get<std::string>());

    out << j["total"].get<long>() << " matches\n";
    out << std::left << std::setw(8) << "rel" << std::setw(12) << "date" << std::setw(11) << "source"
        << std::setw(9) << "class" << std::setw(18) << "stmt_id" << "text\n";
    for (const auto& s : j["statements"]) {
        auto text = s["text"].get<std::string>();
        if (text.size() > 70) text = text.substr(0, 67) + "...";
        std::ostringstream rel;
        rel << std::fixed << std::setprecision(3) << s["relevance"].get<double>();
        out << std::left << std::setw(8) << rel.str() << std::setw(12) << s["published_at"].get<std::string>()
            << std::setw(11) << s["source"].get<std::string>() << std::setw(9)
            << s["movement_class"].get<std::string>() << std::setw(18) << s["stmt_id"].get<std::string>() << text
            << '\n';
    }
    return 0;
}

int cmd_serve(const std::string& config_flag, std::ostream& out) {
    const fs::path path = resolve_config_path(config_flag);
    if (path.empty()) throw Error(ErrorKind::BadConfig, "no config (use --config or " + std::string(kConfigEnvVar) + ")");
    auto cfg = ServiceConfig::load(path);
    cfg.validate(true);
    auto idx = SearchIndex::load(cfg.index_dir);
    std::shared_ptr<const Boundaries> bounds;
    if (!cfg.boundaries.empty()) bounds = std::make_shared<const Boundaries>(Boundaries::load(cfg.boundaries));
    Api api(idx, ApiOptions{cfg.threshold, cfg.default_method, cfg.default_k, bounds});
    HttpServer server(api, cfg.cors_allow);
    const int port = server.bind(cfg.host, cfg.port);
    if (port < 0) throw Error(ErrorKind::BadConfig, "cannot bind " + cfg.host + ":" + std::to_string(cfg.port));
    out << "serving " << idx.snapshot()->size() << " statements on http://" << cfg.host << ":" << port << std::endl;
    server.run();
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"geomove: movement statement engine"};
    app.require_subcommand(1);

    IngestArgs ia;
    auto* ingest = app.add_subcommand("ingest", "parse, score, geoparse, label and index record files");
    ingest->add_option("files", ia.files, "line-delimited JSON records");
    ingest->add_option("--source", ia.source, "news, microblog or scientific; overrides the record field");
    ingest->add_option("--index", ia.index_dir, "index directory (created or extended)");
    ingest->add_option("--config", ia.config, "service config supplying paths and threshold");
    ingest->add_option("--gazetteer", ia.gazetteer, "gazetteer TSV");
    ingest->add_option("--lexicon", ia.lexicon, "movement lexicon file");
    ingest->add_option("--rules", ia.rules, "rule file, or 'baseline' / 'modified'");
    ingest->add_option("--threshold", ia.threshold, "movement threshold")->check(CLI::Range(0.0, 1.0));
    ingest->add_flag("--lenient", ia.lenient, "use the default date for bad timestamps");
    ingest->add_flag("--rebuild", ia.rebuild, "regenerate postings from the statement store first");
    ingest->add_flag("--serial", ia.serial, "single-threaded processing");

    std::string serve_config;
    auto* serve = app.add_subcommand("serve", "run the HTTP API");
    serve->add_option("--config", serve_config, "service config JSON");

    std::string rules_arg, imp_gold;
    auto* eval_imp = app.add_subcommand("eval-impairment", "score a rule set against labeled statements");
    eval_imp->add_option("--rules", rules_arg, "rule file, or 'baseline' / 'modified'")->required();
    eval_imp->add_option("--gold", imp_gold, "JSONL with text and label")->required();

    std::string geo_gold, geo_gaz;
    auto* eval_geo = app.add_subcommand("eval-geoparser", "score the geoparser against a gold corpus");
    eval_geo->add_option("--gold", geo_gold, "gold JSONL")->required();
    eval_geo->add_option("--gazetteer", geo_gaz, "gazetteer TSV");

    std::string method, values;
    int k = 5;
    auto* breaks = app.add_subcommand("breaks", "print class bounds for a list of values");
    breaks->add_option("--method", method, "jenks, equal, std, arithmetic or quantile")->required();
    breaks->add_option("--k", k, "number of classes")->required();
    breaks->add_option("--values", values, "comma-separated numbers")->required();

    QueryArgs qa;
    auto* query = app.add_subcommand("query", "ad-hoc search with table output");
    query->add_option("text", qa.text, "free text");
    query->add_option("--index", qa.index_dir, "index directory");
    query->add_option("--config", qa.config, "service config JSON");
    query->add_option("--sources", qa.sources, "comma-separated sources");
    query->add_option("--class", qa.classes, "normal and/or impaired");
    query->add_option("--t0", qa.t0, "first day");
    query->add_option("--t1", qa.t1, "last day");
    query->add_option("--scale", qa.scale, "bin scale for --bins");
    query->add_option("--bins", qa.bins, "comma-separated bin ids");
    query->add_option("--page", qa.page, "page number from 0");
    query->add_option("--page-size", qa.page_size, "statements per page");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*ingest) return cmd_ingest(ia, out);
        if (*serve) return cmd_serve(serve_config, out);
        if (*eval_imp) return cmd_eval_impairment(rules_arg, imp_gold, out);
        if (*eval_geo) return cmd_eval_geoparser(geo_gold, geo_gaz, out);
        if (*breaks) return cmd_breaks(method, k, values, out);
        if (*query) return cmd_query(qa, out);
    } catch (const std::exception& e) {
        err << "geomove: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace geomove
