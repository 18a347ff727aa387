#pragma once

// Synthetic statements for property and scale tests.

#include "geomove/geoparser.hpp"
#include "geomove/text.hpp"
#include "geomove/types.hpp"

#include <random>
#include <string>
#include <vector>

namespace geomove::testing {

inline const std::vector<std::string>& synthetic_vocabulary() {
    static const std::vector<std::string> words{
        "gold",     "smuggling", "smuggled", "smuggle",  "flights",  "travel",    "traveled", "border",
        "trucks",   "moved",     "walked",   "migrants", "workers",  "pilgrims",  "ferry",    "cargo",
        "route",    "road",      "train",    "returned", "fled",     "crossed",   "rapidly",  "slowly",
        "through",  "toward",    "into",     "from",     "to",      "the",       "of",       "and",
        "tourists", "couriers",  "lockdown", "storm",    "harbour",  "airport",   "convoy",   "refugees",
        "journey",  "running",   "runs",     "ran",      "marched",  "hiking",    "hikes",    "boats"};
    return words;
}

struct SyntheticOptions {
    std::size_t count = 1000;
    unsigned seed = 1;
    double low_score_fraction = 0.0;  // share of statements with score <= 0.6
    Date first_day = Date{std::chrono::year{2019} / 8 / 1};
    int span_days = 400;
    int max_places = 3;
};

/// Random statements with resolved places drawn from `gaz`. Mention offsets
/// point at the place names inside the generated text.
inline std::vector<Statement> synthetic_statements(const Gazetteer& gaz, const SyntheticOptions& o) {
    std::mt19937_64 rng(o.seed);
    const auto& vocab = synthetic_vocabulary();
    const auto& entries = gaz.entries();
    std::uniform_int_distribution<std::size_t> word(0, vocab.size() - 1);
    std::uniform_int_distribution<std::size_t> place(0, entries.size() - 1);
    std::uniform_int_distribution<int> nwords(4, 10), nplaces(0, o.max_places), day(0, o.span_days - 1);
    std::uniform_int_distribution<int> src(0, kSourceCount - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<Statement> out;
    out.reserve(o.count);
    for (std::size_t i = 0; i < o.count; ++i) {
        Statement s;
        s.stmt_id = "syn" + std::to_string(i);
        s.doc_id = "doc" + std::to_string(i / 3);
        s.source = static_cast<Source>(src(rng));
        s.published_at = o.first_day + std::chrono::days{day(rng)};
        const int w = nwords(rng), p = nplaces(rng);
        for (int k = 0; k < w; ++k) {
            if (!s.text.empty()) s.text += ' ';
            s.text += vocab[word(rng)];
        }
        for (int k = 0; k < p; ++k) {
            const auto& e = entries[place(rng)];
            s.text += k == 0 ? " in " : " and ";
            PlaceMention m;
            m.begin = s.text.size();
            s.text += e.name;
            m.end = s.text.size();
            m.surface = e.name;
            m.resolved = e;
            m.confidence = 1.0;
            s.places.push_back(std::move(m));
        }
        s.text += '.';
        const bool low = unit(rng) < o.low_score_fraction;
        // Low scores include the threshold itself.
        s.movement_score = low ? (unit(rng) < 0.2 ? 0.6 : 0.6 * unit(rng)) : 0.6 + 0.4 * unit(rng) + 1e-9;
        if (s.movement_score > 1.0) s.movement_score = 1.0;
        s.impaired = unit(rng) < 0.3 ? MovementClass::Impaired : MovementClass::Normal;
        if (unit(rng) < 0.5) s.url = "https://example.org/" + s.stmt_id;
        s.tokens = token_strings(s.text);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace geomove::testing
