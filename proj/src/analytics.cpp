#include "geomove/analytics.hpp"

#include "geomove/error.hpp"
#include "geomove/lexicon_data.hpp"
#include "geomove/text.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace geomove {

StatementRefs refs_of(const std::vector<Statement>& stmts) {
    StatementRefs out;
    out.reserve(stmts.size());
    for (const auto& s : stmts) out.push_back(&s);
    return out;
}

std::vector<PlacePair> place_pairs(const Statement& stmt) {
    std::set<std::string> ids;
    for (const auto& m : stmt.places) ids.insert(std::to_string(m.resolved.place_id));
    std::vector<std::string> v(ids.begin(), ids.end());
    std::vector<PlacePair> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) out.push_back({v[i], v[j], 1, 0});
    return out;
}

Connections aggregate_connections(const std::vector<Statement>& stmts, BinScale scale,
                                  const std::set<std::string>& selected_bins, BreakMethod method, int k,
                                  const HexSizes& hex) {
    return aggregate_connections(refs_of(stmts), scale, selected_bins, method, k, hex);
}

Connections aggregate_connections(const StatementRefs& stmts, BinScale scale,
                                  const std::set<std::string>& selected_bins, BreakMethod method, int k,
                                  const HexSizes& hex) {
    if (selected_bins.empty()) throw std::invalid_argument("aggregate_connections: no bins selected");
    std::map<std::pair<std::string, std::string>, long> weights;
    for (const Statement* s : stmts) {
        std::set<std::string> bins;
        for (const auto& m : s->places) {
            if (!is_hex(scale) && !continent_of(m.resolved.country_code)) continue;
            bins.insert(bin_of(m.resolved, scale, hex).bin_id);
        }
        std::vector<std::string> v(bins.begin(), bins.end());
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                if (selected_bins.count(v[i]) || selected_bins.count(v[j])) ++weights[{v[i], v[j]}];
    }
    Connections c;
    for (const auto& [key, w] : weights) c.pairs.push_back({key.first, key.second, w, 0});
    std::stable_sort(c.pairs.begin(), c.pairs.end(),
                     [](const PlacePair& x, const PlacePair& y) { return x.weight > y.weight; });
    if (!c.pairs.empty()) {
        std::vector<double> values;
        for (const auto& p : c.pairs) values.push_back(double(p.weight));
        c.breaks = compute_breaks(values, method, k);
        for (auto& p : c.pairs) p.class_index = classify(double(p.weight), *c.breaks);
    }
    return c;
}

bool is_stopword(std::string_view lower) {
    static const std::unordered_set<std::string_view> kStop = [] {
        std::unordered_set<std::string_view> s;
        for (auto w : lexicon::stopwords()) s.insert(w);
        return s;
    }();
    return kStop.count(lower) > 0;
}

std::vector<std::string> content_tokens(const std::vector<std::string>& tokens) {
    std::vector<std::string> out;
    for (const auto& t : tokens) {
        std::string l = to_lower(t);
        if (!is_stopword(l)) out.push_back(std::move(l));
    }
    return out;
}

std::vector<BigramCount> top_bigrams(const std::vector<Statement>& stmts, const std::set<std::string>& excluded,
                                     int limit) {
    return top_bigrams(refs_of(stmts), excluded, limit);
}

std::vector<BigramCount> top_bigrams(const StatementRefs& stmts, const std::set<std::string>& excluded,
                                     int limit) {
    if (limit < 1 || limit > kBigramPool)
        throw std::invalid_argument("bigram limit must be in [1,20], got " + std::to_string(limit));
    std::map<std::pair<std::string, std::string>, long> counts;
    for (const Statement* s : stmts) {
        auto toks = content_tokens(s->tokens);
        for (std::size_t i = 0; i + 1 < toks.size(); ++i) ++counts[{toks[i], toks[i + 1]}];
    }
    std::vector<BigramCount> ranked;
    ranked.reserve(counts.size());
    for (const auto& [key, n] : counts) ranked.push_back({key.first, key.second, n});
    // counts is already alphabetical, so a stable sort by count keeps ties alphabetical.
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const BigramCount& x, const BigramCount& y) { return x.count > y.count; });
    if (ranked.size() > static_cast<std::size_t>(kBigramPool)) ranked.resize(kBigramPool);
    std::vector<BigramCount> out;
    for (auto& b : ranked) {
        if (excluded.count(b.text())) continue;
        if (static_cast<int>(out.size()) == limit) break;
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<TemporalBucket> temporal_histogram(const std::vector<Statement>& stmts, Date t0, Date t1) {
    return temporal_histogram(refs_of(stmts), t0, t1);
}

std::vector<TemporalBucket> temporal_histogram(const StatementRefs& stmts, Date t0, Date t1) {
    if (t0 > t1) throw Error(ErrorKind::BadRange, format_date(t0) + " is after " + format_date(t1));
    using namespace std::chrono;
    std::vector<TemporalBucket> out;
    YearMonth first = month_of(t0), last = month_of(t1);
    for (YearMonth m = first; m <= last; m += months{1}) out.push_back({m, 0, 0});
    for (const Statement* s : stmts) {
        if (s->published_at < t0 || s->published_at > t1) continue;
        YearMonth m = month_of(s->published_at);
        auto idx = (int(m.year()) - int(first.year())) * 12 + (int(unsigned(m.month())) - int(unsigned(first.month())));
        auto& b = out[static_cast<std::size_t>(idx)];
        if (s->impaired == MovementClass::Impaired) ++b.impaired;
        else ++b.normal;
    }
    return out;
}

}  // namespace geomove
