#include "geomove/api.hpp"

#include "geomove/analytics.hpp"
#include "geomove/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <stdexcept>

namespace geomove {

namespace fs = std::filesystem;
using nlohmann::json;

// ---- config ---------------------------------------------------------------

namespace {

Error bad_config(const std::string& what) { return Error(ErrorKind::BadConfig, what); }

fs::path config_path(const json& j, const char* key, const fs::path& base) {
    if (!j.contains(key) || j[key].is_null()) return {};
    if (!j[key].is_string()) throw bad_config(std::string(key) + " must be a string");
    fs::path p = j[key].get<std::string>();
    if (p.empty() || p.is_absolute()) return p;
    return base / p;
}

}  // namespace

ServiceConfig ServiceConfig::from_json(const json& j, const fs::path& base_dir) {
    if (!j.is_object()) throw bad_config("config must be a JSON object");
    static const std::set<std::string> known{"listen",     "gazetteer",  "boundaries",     "lexicon",
                                             "rules",      "index_dir",  "threshold",      "default_method",
                                             "default_k",  "cors_allow", "hex"};
    for (const auto& [key, _] : j.items())
        if (!known.count(key)) throw bad_config("unknown key '" + key + "'");

    ServiceConfig c;
    try {
        if (j.contains("listen")) {
            auto listen = j["listen"].get<std::string>();
            auto colon = listen.rfind(':');
            if (colon == std::string::npos) throw bad_config("listen must be host:port");
            c.host = listen.substr(0, colon);
            const auto port = listen.substr(colon + 1);
            auto [ptr, ec] = std::from_chars(port.data(), port.data() + port.size(), c.port);
            if (ec != std::errc() || ptr != port.data() + port.size()) throw bad_config("bad port in listen");
        }
        c.gazetteer = config_path(j, "gazetteer", base_dir);
        c.boundaries = config_path(j, "boundaries", base_dir);
        c.lexicon = config_path(j, "lexicon", base_dir);
        c.rules = config_path(j, "rules", base_dir);
        c.index_dir = config_path(j, "index_dir", base_dir);
        c.threshold = j.value("threshold", kDefaultMovementThreshold);
        if (j.contains("default_method")) {
            auto m = parse_break_method(j["default_method"].get<std::string>());
            if (!m) throw bad_config("unknown default_method");
            c.default_method = *m;
        }
        c.default_k = j.value("default_k", c.default_k);
        c.cors_allow = j.value("cors_allow", std::vector<std::string>{});
        if (j.contains("hex")) {
            c.hex.large = j["hex"].value("large", c.hex.large);
            c.hex.small = j["hex"].value("small", c.hex.small);
        }
    } catch (const json::exception& e) {
        throw bad_config(e.what());
    }
    c.validate(false);
    return c;
}

ServiceConfig ServiceConfig::load(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::FileError, path.string() + ": cannot open config");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw bad_config(path.string() + ": " + e.what());
    }
    return from_json(j, path.parent_path());
}

void ServiceConfig::validate(bool check_paths) const {
    if (!(threshold >= 0.0 && threshold <= 1.0)) throw bad_config("threshold must be in [0,1]");
    if (default_k < kMinClasses || default_k > kMaxClasses) throw bad_config("default_k must be in [2,7]");
    if (port < 0 || port > 65535) throw bad_config("port out of range");
    hex.validate();
    if (gazetteer.empty()) throw bad_config("gazetteer path is required");
    if (index_dir.empty()) throw bad_config("index_dir is required");
    if (!check_paths) return;
    for (const auto* p : {&gazetteer, &boundaries, &lexicon, &rules, &index_dir})
        if (!p->empty() && !fs::exists(*p)) throw bad_config(p->string() + " does not exist");
}

fs::path resolve_config_path(const fs::path& flag) {
    const char* env = std::getenv(kConfigEnvVar);
    if (env && *env) return fs::path(env);
    return flag;
}

// ---- request parsing ------------------------------------------------------

namespace {

Error bad_query(const std::string& what) { return Error(ErrorKind::BadQuery, what); }

class ParamReader {
public:
    explicit ParamReader(const Params& p) : p_(p) {
        static const std::set<std::string> known{"text",  "sources", "movement_class", "t0",      "t1",
                                                 "scale", "bins",    "page",           "page_size", "method",
                                                 "k",     "exclude", "limit",          "_"};
        for (const auto& [key, _] : p_)
            if (!known.count(key)) throw bad_query("unknown parameter '" + key + "'");
    }

    std::optional<std::string> single(const std::string& key) const {
        auto [lo, hi] = p_.equal_range(key);
        if (lo == hi) return std::nullopt;
        if (std::next(lo) != hi) throw bad_query("parameter '" + key + "' given more than once");
        return lo->second;
    }

    // Comma-separated and/or repeated; blank items dropped.
    std::vector<std::string> list(const std::string& key) const {
        std::vector<std::string> out;
        auto [lo, hi] = p_.equal_range(key);
        for (auto it = lo; it != hi; ++it) {
            std::string_view v = it->second;
            while (!v.empty()) {
                auto comma = v.find(',');
                auto item = v.substr(0, comma);
                auto b = item.find_first_not_of(' '), e = item.find_last_not_of(' ');
                if (b != std::string_view::npos) out.emplace_back(item.substr(b, e - b + 1));
                if (comma == std::string_view::npos) break;
                v.remove_prefix(comma + 1);
            }
        }
        return out;
    }

    std::optional<int> integer(const std::string& key) const {
        auto v = single(key);
        if (!v) return std::nullopt;
        int out = 0;
        auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
        if (ec != std::errc() || ptr != v->data() + v->size() || v->empty())
            throw bad_query("parameter '" + key + "' must be an integer");
        return out;
    }

    std::optional<Date> date(const std::string& key) const {
        auto v = single(key);
        if (!v) return std::nullopt;
        auto d = parse_iso_date(*v);
        if (!d) throw bad_query("parameter '" + key + "' is not an ISO-8601 date");
        return d;
    }

private:
    const Params& p_;
};

Query parse_query(const ParamReader& r, double threshold) {
    Query q;
    q.text = r.single("text").value_or("");
    for (const auto& s : r.list("sources")) {
        auto src = parse_source(s);
        if (!src) throw bad_query("unknown source '" + s + "'");
        q.sources.insert(*src);
    }
    for (const auto& s : r.list("movement_class")) {
        auto c = parse_movement_class(s);
        if (!c) throw bad_query("unknown movement_class '" + s + "'");
        q.classes.insert(*c);
    }
    q.t0 = r.date("t0");
    q.t1 = r.date("t1");
    BinScale scale = BinScale::Country;
    if (auto s = r.single("scale")) {
        auto parsed = parse_bin_scale(*s);
        if (!parsed) throw bad_query("unknown scale '" + *s + "'");
        scale = *parsed;
    }
    q.scale = scale;
    for (auto& b : r.list("bins")) q.bins.insert(std::move(b));
    q.page = r.integer("page").value_or(0);
    q.page_size = r.integer("page_size").value_or(q.page_size);
    q.min_score = threshold;
    q.validate();
    return q;
}

std::pair<BreakMethod, int> parse_classing(const ParamReader& r, const ApiOptions& o) {
    BreakMethod method = o.default_method;
    if (auto m = r.single("method")) {
        auto parsed = parse_break_method(*m);
        if (!parsed) throw bad_query("unknown method '" + *m + "'");
        method = *parsed;
    }
    const int k = r.integer("k").value_or(o.default_k);
    if (k < kMinClasses || k > kMaxClasses) throw Error(ErrorKind::BadK, "k must be in [2,7]");
    return {method, k};
}

// ---- response building ----------------------------------------------------

json lonlat(LonLat p) { return json{{"lon", p.lon}, {"lat", p.lat}}; }

json statement_json(const Statement& s, std::optional<double> relevance) {
    json places = json::array();
    for (const auto& m : s.places)
        places.push_back({{"surface", m.surface},
                          {"start", m.begin},
                          {"end", m.end},
                          {"place_id", m.resolved.place_id},
                          {"name", m.resolved.name},
                          {"country_code", m.resolved.country_code},
                          {"admin1_code", m.resolved.admin1_code},
                          {"lat", m.resolved.lat},
                          {"lon", m.resolved.lon},
                          {"confidence", m.confidence}});
    json j{{"stmt_id", s.stmt_id},
           {"doc_id", s.doc_id},
           {"source", std::string(to_string(s.source))},
           {"published_at", format_date(s.published_at)},
           {"text", s.text},
           {"movement_score", s.movement_score},
           {"movement_class", std::string(to_string(s.impaired.value_or(MovementClass::Normal)))},
           {"places", std::move(places)}};
    j["url"] = s.url ? json(*s.url) : json(nullptr);
    if (relevance) j["relevance"] = *relevance;
    return j;
}

json timeline_json(const std::vector<TemporalBucket>& buckets) {
    json out = json::array();
    for (const auto& b : buckets)
        out.push_back({{"month", format_year_month(b.month)},
                       {"normal", b.normal},
                       {"impaired", b.impaired},
                       {"total", b.total()}});
    return out;
}

json breaks_json(const ClassBreaks& cb) {
    return json{{"method", std::string(to_string(cb.method))},
                {"k", cb.k},
                {"requested_k", cb.requested_k},
                {"bounds", cb.bounds},
                {"min", cb.min},
                {"max", cb.max}};
}

json envelope() { return json{{"api_version", kApiVersion}}; }

Response error_response(int status, std::string_view kind, const std::string& message) {
    json j = envelope();
    j["error"] = {{"kind", std::string(kind)}, {"message", message}};
    return {status, j.dump()};
}

LonLat bin_centroid(const IndexSnapshot& snap, const ApiOptions& o, BinScale scale, const std::string& id) {
    GeoBin bin;
    bin.bin_id = id;
    bin.scale = scale;
    auto fallback = snap.bin_position(scale, id, &bin.coarse);
    attach_geometry(bin, snap.hex_sizes(), o.boundaries.get(), fallback.value_or(LonLat{}));
    return bin.centroid;
}

}  // namespace

Api::Api(const SearchIndex& index, ApiOptions opts) : index_(index), opts_(std::move(opts)) {
    if (!(opts_.threshold >= 0.0 && opts_.threshold <= 1.0))
        throw Error(ErrorKind::BadConfig, "threshold must be in [0,1]");
}

Response Api::handle(std::string_view path, const Params& params) const {
    static const std::set<std::string_view> endpoints{"/search",  "/bins",     "/connections",
                                                      "/bigrams", "/timeline", "/statements"};
    if (!endpoints.count(path)) return error_response(404, "NotFound", "unknown endpoint " + std::string(path));

    try {
        auto snap = index_.snapshot();
        if (!snap) throw Error(ErrorKind::IndexNotReady, "index has no committed snapshot");

        ParamReader r(params);
        Query q = parse_query(r, opts_.threshold);
        const BinScale scale = q.facet_scale();
        json out = envelope();

        if (path == "/search") {
            auto page = snap->search(q);
            out["total"] = page.total;
            out["scale"] = std::string(to_string(scale));
            json bins = json::array();
            for (const auto& b : page.bin_facet)
                bins.push_back({{"bin_id", b.bin_id}, {"count", b.count}, {"coarse", b.coarse}});
            out["bins"] = std::move(bins);
            out["timeline"] = timeline_json(page.timeline);
            json sources = json::object();
            for (int i = 0; i < kSourceCount; ++i)
                sources[std::string(to_string(static_cast<Source>(i)))] = page.source_counts[std::size_t(i)];
            out["sources"] = std::move(sources);
            out["movement_class"] = {{"normal", page.class_counts[0]}, {"impaired", page.class_counts[1]}};
            json stmts = json::array();
            for (const auto& h : page.statements) stmts.push_back(statement_json(*h.stmt, h.relevance));
            out["statements"] = std::move(stmts);
            out["page"] = q.page;
            out["page_size"] = q.page_size;
        } else if (path == "/bins") {
            auto [method, k] = parse_classing(r, opts_);
            auto page = snap->search(q);
            std::optional<ClassBreaks> cb;
            if (!page.bin_facet.empty()) {
                std::vector<double> counts;
                for (const auto& b : page.bin_facet) counts.push_back(double(b.count));
                cb = compute_breaks(counts, method, k);
            }
            json bins = json::array();
            for (const auto& b : page.bin_facet) {
                GeoBin bin;
                bin.bin_id = b.bin_id;
                bin.scale = scale;
                bin.coarse = b.coarse;
                attach_geometry(bin, snap->hex_sizes(), opts_.boundaries.get(), b.mean_position);
                json ring = json::array();
                for (const auto& p : bin.geometry) ring.push_back({p.lon, p.lat});
                bins.push_back({{"bin_id", b.bin_id},
                                {"count", b.count},
                                {"class", classify(double(b.count), *cb)},
                                {"coarse", b.coarse},
                                {"centroid", lonlat(bin.centroid)},
                                {"geometry", std::move(ring)}});
            }
            out["scale"] = std::string(to_string(scale));
            out["breaks"] = cb ? breaks_json(*cb) : json(nullptr);
            out["bins"] = std::move(bins);
        } else if (path == "/connections") {
            auto [method, k] = parse_classing(r, opts_);
            if (q.bins.empty()) throw bad_query("/connections needs at least one bin");
            auto refs = snap->matches(q);
            auto conn = aggregate_connections(refs, scale, q.bins, method, k, snap->hex_sizes());
            json pairs = json::array();
            for (const auto& p : conn.pairs)
                pairs.push_back({{"a", p.a},
                                 {"b", p.b},
                                 {"weight", p.weight},
                                 {"class", p.class_index},
                                 {"a_centroid", lonlat(bin_centroid(*snap, opts_, scale, p.a))},
                                 {"b_centroid", lonlat(bin_centroid(*snap, opts_, scale, p.b))}});
            out["scale"] = std::string(to_string(scale));
            out["breaks"] = conn.breaks ? breaks_json(*conn.breaks) : json(nullptr);
            out["connections"] = std::move(pairs);
        } else if (path == "/bigrams") {
            auto ex = r.list("exclude");
            std::set<std::string> excluded;
            for (const auto& e : ex) excluded.insert(e);
            const int limit = r.integer("limit").value_or(kDefaultBigramLimit);
            if (limit < 1 || limit > kBigramPool) throw bad_query("limit must be in [1,20]");
            auto grams = top_bigrams(snap->matches(q), excluded, limit);
            json list = json::array();
            for (const auto& g : grams)
                list.push_back({{"bigram", g.text()}, {"first", g.first}, {"second", g.second}, {"count", g.count}});
            out["bigrams"] = std::move(list);
        } else if (path == "/timeline") {
            auto page = snap->search(q);
            out["total"] = page.total;
            out["timeline"] = timeline_json(page.timeline);
        } else {  // /statements
            auto page = snap->search(q);
            json stmts = json::array();
            for (const auto& h : page.statements) stmts.push_back(statement_json(*h.stmt, h.relevance));
            out["total"] = page.total;
            out["page"] = q.page;
            out["page_size"] = q.page_size;
            out["statements"] = std::move(stmts);
        }
        return {200, out.dump()};
    } catch (const Error& e) {
        switch (e.kind()) {
            case ErrorKind::IndexNotReady: return error_response(503, to_string(e.kind()), e.detail());
            case ErrorKind::BadQuery:
            case ErrorKind::BadK:
            case ErrorKind::BadRange:
            case ErrorKind::EmptyInput:
            case ErrorKind::OutOfRange: return error_response(400, to_string(e.kind()), e.detail());
            default: return error_response(500, to_string(e.kind()), e.detail());
        }
    } catch (const std::invalid_argument& e) {
        return error_response(400, "BadQuery", e.what());
    } catch (const std::exception& e) {
        return error_response(500, "Internal", e.what());
    }
}

}  // namespace geomove
