#pragma once

#include "geomove/class_breaks.hpp"
#include "geomove/geo_binning.hpp"
#include "geomove/types.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace geomove {

/// Non-owning view of a statement set, as handed out by the search index.
using StatementRefs = std::vector<const Statement*>;
StatementRefs refs_of(const std::vector<Statement>& stmts);

// Undirected co-occurrence of two places or bins; a < b.
struct PlacePair {
    std::string a;
    std::string b;
    long weight = 1;
    int class_index = 0;

    bool operator==(const PlacePair&) const = default;
};

/// All unordered pairs over the statement's distinct place_ids (as decimal
/// strings), sorted.
std::vector<PlacePair> place_pairs(const Statement& stmt);

struct Connections {
    std::vector<PlacePair> pairs;  // weight desc, then (a, b)
    std::optional<ClassBreaks> breaks;
};

/// Pairs lifted to bins at `scale`; pairs inside one bin are dropped, and only
/// pairs touching a selected bin are kept. Weight counts distinct statements.
/// Throws std::invalid_argument when `selected_bins` is empty.
Connections aggregate_connections(const std::vector<Statement>& stmts, BinScale scale,
                                  const std::set<std::string>& selected_bins, BreakMethod method, int k,
                                  const HexSizes& hex = {});
Connections aggregate_connections(const StatementRefs& stmts, BinScale scale,
                                  const std::set<std::string>& selected_bins, BreakMethod method, int k,
                                  const HexSizes& hex = {});

inline constexpr int kBigramPool = 20;
inline constexpr int kDefaultBigramLimit = 10;

struct BigramCount {
    std::string first;
    std::string second;
    long count = 0;

    std::string text() const { return first + " " + second; }
    bool operator==(const BigramCount&) const = default;
};

/// Lowercased tokens with stopwords removed, in order.
std::vector<std::string> content_tokens(const std::vector<std::string>& tokens);

bool is_stopword(std::string_view lower);

/// Ranks bigrams by count desc then alphabetically, keeps the top 20, removes
/// `excluded` ("first second" strings) from that pool, and returns at most
/// `limit`. Throws std::invalid_argument unless 1 <= limit <= 20.
std::vector<BigramCount> top_bigrams(const std::vector<Statement>& stmts, const std::set<std::string>& excluded,
                                     int limit = kDefaultBigramLimit);
std::vector<BigramCount> top_bigrams(const StatementRefs& stmts, const std::set<std::string>& excluded,
                                     int limit = kDefaultBigramLimit);

struct TemporalBucket {
    YearMonth month;
    long normal = 0;
    long impaired = 0;

    long total() const { return normal + impaired; }
};

/// One bucket per calendar month from t0's month to t1's month, oldest first.
/// Statements outside [t0, t1] are ignored; unlabeled ones count as normal.
/// Throws Error(BadRange) if t0 > t1.
std::vector<TemporalBucket> temporal_histogram(const std::vector<Statement>& stmts, Date t0, Date t1);
std::vector<TemporalBucket> temporal_histogram(const StatementRefs& stmts, Date t0, Date t1);

}  // namespace geomove
