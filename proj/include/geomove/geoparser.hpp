#pragma once

#include "geomove/types.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace geomove {

inline constexpr std::size_t kMaxToponymTokens = 4;

class Gazetteer {
public:
    Gazetteer() = default;
    /// Throws Error(MalformedRow) for out-of-range coordinates, an empty name
    /// or a duplicate place_id; the row number is the 1-based entry index.
    explicit Gazetteer(std::vector<GazetteerEntry> entries);

    /// TSV: place_id, name, alternate_names (';'-separated), lat, lon,
    /// feature_class, country_code, admin1_code, population. An optional
    /// header row starting with "place_id" and '#' comment lines are skipped.
    static Gazetteer load(const std::filesystem::path& path);
    static Gazetteer parse(std::istream& in);

    std::size_t size() const { return entries_.size(); }
    const std::vector<GazetteerEntry>& entries() const { return entries_; }
    const GazetteerEntry* by_id(std::int64_t place_id) const;

    /// Entries whose name or alternate normalizes to `key` (see normalize_key).
    std::vector<const GazetteerEntry*> lookup(std::string_view name) const;

    /// Lowercased tokens joined by single spaces: "St. Louis" -> "st louis".
    static std::string normalize_key(std::string_view name);

private:
    std::vector<GazetteerEntry> entries_;
    std::unordered_map<std::string, std::vector<std::size_t>> by_key_;
    std::unordered_map<std::int64_t, std::size_t> by_id_;
};

struct ToponymSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::string surface;
    std::vector<const GazetteerEntry*> candidates;
};

/// Longest-match, case-insensitive lookup of up to four consecutive tokens.
/// Tokens in a multi-word name must be separated only by spaces or hyphens.
/// Single lowercase words on the ambiguity stoplist are skipped outside
/// microblog text.
std::vector<ToponymSpan> recognize_toponyms(std::string_view text, const Gazetteer& gaz,
                                            Source source = Source::News);

bool is_stoplisted_toponym(std::string_view lower_word);

struct Resolution {
    const GazetteerEntry* entry = nullptr;
    double confidence = 0.0;
};

/// Ordering: same country as any context mention, then feature class A over
/// P, then larger population, then lower place_id. Throws
/// std::invalid_argument on an empty candidate list.
Resolution resolve(const std::vector<const GazetteerEntry*>& candidates, const std::vector<PlaceMention>& context);

inline const GazetteerEntry& resolve_toponym(const std::vector<const GazetteerEntry*>& candidates,
                                             const std::vector<PlaceMention>& context) {
    return *resolve(candidates, context).entry;
}

/// Recognition plus resolution. Unambiguous spans are resolved first and
/// serve as context for the ambiguous ones, which are then resolved in text
/// order. Output is sorted by span.
std::vector<PlaceMention> geoparse(std::string_view text, const Gazetteer& gaz, Source source = Source::News);

struct GoldSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::int64_t place_id = 0;
};

struct GoldDocument {
    std::string text;
    Source source = Source::News;
    std::vector<GoldSpan> places;
};

/// JSONL: {"text": ..., "source": ..., "places": [{"start", "end", "place_id"}]}
std::vector<GoldDocument> load_geoparser_gold(const std::filesystem::path& path);

struct GeoparserScores {
    long tp = 0, fp = 0, fn = 0;
    long resolved_correct = 0;
    double precision = 0, recall = 0, f1 = 0, resolution_accuracy = 0;
};

/// Exact span match for recognition; resolution accuracy over matched spans.
/// Zero denominators give 0. Throws Error(EmptyGold) on an empty gold set.
GeoparserScores score_geoparser(const std::vector<GoldDocument>& gold,
                                const std::vector<std::vector<PlaceMention>>& predicted);

GeoparserScores evaluate_geoparser(const std::vector<GoldDocument>& gold, const Gazetteer& gaz);

}  // namespace geomove
