#include "geomove/geoparser.hpp"

#include "geomove/error.hpp"
#include "geomove/text.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace geomove {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::stringstream ss(s);
    while (std::getline(ss, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

template <typename T>
bool parse_number(const std::string& s, T& out) {
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

bool joinable_gap(std::string_view gap) {
    for (char c : gap)
        if (c != ' ' && c != '-') return false;
    return !gap.empty();
}

}  // namespace

Gazetteer::Gazetteer(std::vector<GazetteerEntry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        auto bad = [&](const std::string& why) {
            return Error(ErrorKind::MalformedRow, "gazetteer entry " + std::to_string(i + 1) + ": " + why);
        };
        if (e.name.empty()) throw bad("empty name");
        if (!(e.lat >= -90.0 && e.lat <= 90.0)) throw bad("latitude out of range");
        if (!(e.lon >= -180.0 && e.lon <= 180.0)) throw bad("longitude out of range");
        if (e.population < 0) throw bad("negative population");
        if (!by_id_.emplace(e.place_id, i).second) throw bad("duplicate place_id " + std::to_string(e.place_id));
        std::set<std::string> keys;
        keys.insert(normalize_key(e.name));
        for (const auto& alt : e.alternate_names)
            if (!alt.empty()) keys.insert(normalize_key(alt));
        for (const auto& k : keys)
            if (!k.empty()) by_key_[k].push_back(i);
    }
}

std::string Gazetteer::normalize_key(std::string_view name) {
    std::string key;
    for (const auto& t : tokenize(name)) {
        if (!key.empty()) key += ' ';
        key += to_lower(t.text);
    }
    return key;
}

const GazetteerEntry* Gazetteer::by_id(std::int64_t place_id) const {
    auto it = by_id_.find(place_id);
    return it == by_id_.end() ? nullptr : &entries_[it->second];
}

std::vector<const GazetteerEntry*> Gazetteer::lookup(std::string_view name) const {
    std::vector<const GazetteerEntry*> out;
    auto it = by_key_.find(normalize_key(name));
    if (it == by_key_.end()) return out;
    for (auto idx : it->second) out.push_back(&entries_[idx]);
    return out;
}

Gazetteer Gazetteer::parse(std::istream& in) {
    std::vector<GazetteerEntry> entries;
    std::string line;
    long row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (row == 1 && line.rfind("place_id", 0) == 0) continue;
        auto bad = [&](const std::string& why) {
            return Error(ErrorKind::MalformedRow, "gazetteer row " + std::to_string(row) + ": " + why);
        };
        auto cols = split(line, '\t');
        if (cols.size() != 9) throw bad("expected 9 columns, got " + std::to_string(cols.size()));
        GazetteerEntry e;
        if (!parse_number(trim(cols[0]), e.place_id)) throw bad("bad place_id");
        e.name = trim(cols[1]);
        if (e.name.empty()) throw bad("empty name");
        for (auto& alt : split(cols[2], ';'))
            if (auto a = trim(alt); !a.empty()) e.alternate_names.push_back(a);
        if (!parse_number(trim(cols[3]), e.lat) || e.lat < -90.0 || e.lat > 90.0) throw bad("latitude out of range");
        if (!parse_number(trim(cols[4]), e.lon) || e.lon < -180.0 || e.lon > 180.0)
            throw bad("longitude out of range");
        auto fc = trim(cols[5]);
        if (fc.size() != 1) throw bad("feature_class must be one character");
        e.feature_class = fc[0];
        e.country_code = trim(cols[6]);
        e.admin1_code = trim(cols[7]);
        auto pop = trim(cols[8]);
        if (pop.empty()) e.population = 0;
        else if (!parse_number(pop, e.population) || e.population < 0) throw bad("bad population");
        entries.push_back(std::move(e));
    }
    return Gazetteer(std::move(entries));
}

Gazetteer Gazetteer::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::FileError, "cannot open gazetteer " + path.string());
    return parse(in);
}

bool is_stoplisted_toponym(std::string_view w) {
    // Common English words that are also place names.
    static const std::set<std::string_view> kStop = {
        "of",   "nice",  "mobile", "reading", "bath",  "split", "orange", "hope",  "march", "may",
        "june", "said",  "sale",   "china",   "turkey", "guinea", "home", "union", "eagle", "page"};
    return kStop.count(w) > 0;
}

std::vector<ToponymSpan> recognize_toponyms(std::string_view text, const Gazetteer& gaz, Source source) {
    auto tokens = tokenize(text);
    std::vector<ToponymSpan> out;
    std::size_t i = 0;
    while (i < tokens.size()) {
        bool matched = false;
        std::size_t max_n = std::min(kMaxToponymTokens, tokens.size() - i);
        for (std::size_t n = max_n; n >= 1; --n) {
            bool contiguous = true;
            for (std::size_t k = i + 1; k < i + n && contiguous; ++k)
                contiguous = joinable_gap(text.substr(tokens[k - 1].end, tokens[k].begin - tokens[k - 1].end));
            if (!contiguous) continue;
            std::string_view surface = text.substr(tokens[i].begin, tokens[i + n - 1].end - tokens[i].begin);
            auto cands = gaz.lookup(surface);
            if (cands.empty()) continue;
            if (n == 1 && source != Source::Microblog && !is_capitalized(surface) &&
                is_stoplisted_toponym(to_lower(surface)))
                continue;
            out.push_back({tokens[i].begin, tokens[i + n - 1].end, std::string(surface), std::move(cands)});
            i += n;
            matched = true;
            break;
        }
        if (!matched) ++i;
    }
    return out;
}

Resolution resolve(const std::vector<const GazetteerEntry*>& candidates, const std::vector<PlaceMention>& context) {
    if (candidates.empty()) throw std::invalid_argument("resolve: no candidates");
    if (candidates.size() == 1) return {candidates.front(), 1.0};

    std::set<std::string> context_countries;
    for (const auto& m : context) context_countries.insert(m.resolved.country_code);
    auto in_context = [&](const GazetteerEntry* e) { return context_countries.count(e->country_code) > 0; };
    auto rank = [&](const GazetteerEntry* e) {
        return std::make_tuple(!in_context(e), e->feature_class != 'A', -e->population, e->place_id);
    };
    auto best = *std::min_element(candidates.begin(), candidates.end(),
                                  [&](auto* a, auto* b) { return rank(a) < rank(b); });

    // Confidence reflects which criterion separated the winner from the rest.
    bool context_decided = in_context(best) && std::any_of(candidates.begin(), candidates.end(),
                                                           [&](auto* c) { return !in_context(c); });
    bool class_decided = best->feature_class == 'A' &&
                         std::any_of(candidates.begin(), candidates.end(), [&](auto* c) {
                             return in_context(c) == in_context(best) && c->feature_class != 'A';
                         });
    double conf = context_decided ? 0.9 : class_decided ? 0.75 : 0.6;
    return {best, conf};
}

std::vector<PlaceMention> geoparse(std::string_view text, const Gazetteer& gaz, Source source) {
    auto spans = recognize_toponyms(text, gaz, source);
    std::vector<PlaceMention> mentions(spans.size());
    std::vector<bool> done(spans.size(), false);
    std::vector<PlaceMention> context;
    auto fill = [&](std::size_t i, const Resolution& r) {
        mentions[i] = {spans[i].begin, spans[i].end, spans[i].surface, *r.entry, r.confidence};
        done[i] = true;
        context.push_back(mentions[i]);
    };
    for (std::size_t i = 0; i < spans.size(); ++i)
        if (spans[i].candidates.size() == 1) fill(i, resolve(spans[i].candidates, {}));
    for (std::size_t i = 0; i < spans.size(); ++i)
        if (!done[i]) fill(i, resolve(spans[i].candidates, context));
    return mentions;
}

std::vector<GoldDocument> load_geoparser_gold(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::FileError, "cannot open " + path.string());
    std::vector<GoldDocument> out;
    std::string line;
    long row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            auto j = nlohmann::json::parse(line);
            GoldDocument d;
            d.text = j.at("text").get<std::string>();
            auto src = parse_source(j.value("source", std::string("news")));
            if (!src) throw Error(ErrorKind::MalformedRecord, "line " + std::to_string(row) + ": bad source");
            d.source = *src;
            for (const auto& p : j.at("places")) {
                GoldSpan g{p.at("start").get<std::size_t>(), p.at("end").get<std::size_t>(),
                           p.at("place_id").get<std::int64_t>()};
                if (g.begin >= g.end || g.end > d.text.size())
                    throw Error(ErrorKind::MalformedRecord, "line " + std::to_string(row) + ": span out of bounds");
                d.places.push_back(g);
            }
            out.push_back(std::move(d));
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::MalformedRecord, "line " + std::to_string(row) + ": " + e.what());
        }
    }
    return out;
}

GeoparserScores score_geoparser(const std::vector<GoldDocument>& gold,
                                const std::vector<std::vector<PlaceMention>>& predicted) {
    if (gold.empty()) throw Error(ErrorKind::EmptyGold, "no gold documents");
    if (gold.size() != predicted.size())
        throw Error(ErrorKind::LengthMismatch, "gold and prediction document counts differ");
    GeoparserScores s;
    for (std::size_t d = 0; d < gold.size(); ++d) {
        std::set<std::pair<std::size_t, std::size_t>> matched;
        for (const auto& p : predicted[d]) {
            auto it = std::find_if(gold[d].places.begin(), gold[d].places.end(),
                                   [&](const GoldSpan& g) { return g.begin == p.begin && g.end == p.end; });
            if (it == gold[d].places.end() || matched.count({p.begin, p.end})) {
                ++s.fp;
                continue;
            }
            matched.insert({p.begin, p.end});
            ++s.tp;
            if (p.resolved.place_id == it->place_id) ++s.resolved_correct;
        }
        s.fn += static_cast<long>(gold[d].places.size() - matched.size());
    }
    s.precision = s.tp + s.fp ? double(s.tp) / double(s.tp + s.fp) : 0.0;
    s.recall = s.tp + s.fn ? double(s.tp) / double(s.tp + s.fn) : 0.0;
    s.f1 = s.precision + s.recall > 0 ? 2 * s.precision * s.recall / (s.precision + s.recall) : 0.0;
    s.resolution_accuracy = s.tp ? double(s.resolved_correct) / double(s.tp) : 0.0;
    return s;
}

GeoparserScores evaluate_geoparser(const std::vector<GoldDocument>& gold, const Gazetteer& gaz) {
    if (gold.empty()) throw Error(ErrorKind::EmptyGold, "no gold documents");
    std::vector<std::vector<PlaceMention>> predicted;
    predicted.reserve(gold.size());
    for (const auto& g : gold) predicted.push_back(geoparse(g.text, gaz, g.source));
    return score_geoparser(gold, predicted);
}

}  // namespace geomove
