#pragma once

// Linear-scan reference for the search index. Deliberately naive: every
// query re-derives stems, bins and document frequencies from scratch.

#include "geomove/geo_binning.hpp"
#include "geomove/search_index.hpp"
#include "geomove/stemmer.hpp"
#include "geomove/text.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace geomove::testing {

inline std::set<std::string> oracle_stems(const std::string& text) {
    std::set<std::string> out;
    for (const auto& t : token_strings(text)) out.insert(stem(to_lower(t)));
    return out;
}

inline std::set<std::string> oracle_bins(const Statement& s, BinScale scale, const HexSizes& hex) {
    std::set<std::string> out;
    for (const auto& m : s.places) {
        if (!is_hex(scale) && !continent_of(m.resolved.country_code)) continue;
        out.insert(bin_of(m.resolved, scale, hex).bin_id);
    }
    return out;
}

inline bool oracle_base_match(const Statement& s, const Query& q) {
    if (!q.text.empty()) {
        auto qs = oracle_stems(q.text);
        auto ds = oracle_stems(s.text);
        bool any = !qs.empty() && std::any_of(qs.begin(), qs.end(), [&](const auto& x) { return ds.count(x) > 0; });
        if (!qs.empty() && !any) return false;
    }
    if (!q.sources.empty() && !q.sources.count(s.source)) return false;
    if (!q.classes.empty() && !q.classes.count(s.impaired.value_or(MovementClass::Normal))) return false;
    if (q.t0 && s.published_at < *q.t0) return false;
    if (q.t1 && s.published_at > *q.t1) return false;
    if (q.min_score && !(s.movement_score > *q.min_score)) return false;
    return true;
}

inline bool oracle_match(const Statement& s, const Query& q, const HexSizes& hex) {
    if (!oracle_base_match(s, q)) return false;
    if (q.bins.empty()) return true;
    auto bins = oracle_bins(s, q.facet_scale(), hex);
    return std::any_of(bins.begin(), bins.end(), [&](const auto& b) { return q.bins.count(b) > 0; });
}

inline std::vector<const Statement*> oracle_search(const std::vector<Statement>& corpus, const Query& q,
                                                   const HexSizes& hex) {
    std::vector<const Statement*> out;
    for (const auto& s : corpus)
        if (oracle_match(s, q, hex)) out.push_back(&s);
    return out;
}

/// sum over query stems of tf * ln(1 + N / df). `df_cache` memoizes document
/// frequencies across calls on the same corpus.
inline double oracle_relevance(const std::vector<Statement>& corpus, const Statement& s, const std::string& text,
                               std::map<std::string, long>& df_cache) {
    double rel = 0;
    for (const auto& qs : oracle_stems(text)) {
        auto it = df_cache.find(qs);
        if (it == df_cache.end()) {
            long df = 0;
            for (const auto& d : corpus)
                if (oracle_stems(d.text).count(qs)) ++df;
            it = df_cache.emplace(qs, df).first;
        }
        const long df = it->second;
        if (!df) continue;
        long tf = 0;
        for (const auto& t : token_strings(s.text))
            if (stem(to_lower(t)) == qs) ++tf;
        rel += double(tf) * std::log(1.0 + double(corpus.size()) / double(df));
    }
    return rel;
}

/// Distinct-statement counts per bin over base matches (bin filter ignored).
inline std::map<std::string, long> oracle_bin_facet(const std::vector<Statement>& corpus, const Query& q,
                                                    const HexSizes& hex) {
    std::map<std::string, long> out;
    for (const auto& s : corpus)
        if (oracle_base_match(s, q))
            for (const auto& b : oracle_bins(s, q.facet_scale(), hex)) ++out[b];
    return out;
}

inline std::set<std::string> ids_of(const std::vector<const Statement*>& v) {
    std::set<std::string> out;
    for (const auto* s : v) out.insert(s->stmt_id);
    return out;
}

}  // namespace geomove::testing
