#pragma once

#include "geomove/analytics.hpp"
#include "geomove/geo_binning.hpp"
#include "geomove/types.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace geomove {

inline constexpr int kMaxPageSize = 100;
inline constexpr std::size_t kDefaultCommitEvery = 10000;

struct Query {
    std::string text;                  // free text; empty matches everything
    std::set<Source> sources;          // empty = all
    std::set<MovementClass> classes;   // empty = all
    std::optional<Date> t0;            // inclusive
    std::optional<Date> t1;            // inclusive
    std::optional<BinScale> scale;     // facet scale and scale of `bins`
    std::set<std::string> bins;        // empty = no spatial filter
    int page = 0;
    int page_size = 20;
    std::optional<double> min_score;   // exclusive lower bound on movement_score

    /// Throws Error(BadQuery).
    void validate() const;
    BinScale facet_scale() const { return scale.value_or(BinScale::Country); }
};

/// Lowercased, stemmed, de-duplicated query terms.
std::vector<std::string> query_stems(std::string_view text);

enum class Kernel { Serial, Parallel };

// One committed batch of statements with its own postings and columns.
struct Segment {
    struct Posting {
        std::uint32_t doc;  // segment-local
        std::uint32_t tf;
    };
    struct BinInfo {
        std::string id;
        double lon_sum = 0, lat_sum = 0;
        long mentions = 0;
        bool coarse = false;
    };

    std::vector<Statement> stmts;
    std::vector<std::uint8_t> source;
    std::vector<std::uint8_t> label;  // MovementClass, Normal when unset
    std::vector<std::int32_t> day;    // days since epoch
    std::vector<double> score;
    std::unordered_map<std::string, std::vector<Posting>> postings;
    // Per scale: CSR of distinct bin ordinals per statement.
    std::array<std::vector<std::uint32_t>, kBinScaleCount> bin_offsets;
    std::array<std::vector<std::uint32_t>, kBinScaleCount> bin_ids;
    std::array<std::vector<BinInfo>, kBinScaleCount> bins;
    std::array<std::unordered_map<std::string, std::uint32_t>, kBinScaleCount> bin_lookup;

    static std::shared_ptr<const Segment> build(std::vector<Statement> stmts, const HexSizes& hex);
    std::size_t size() const { return stmts.size(); }
};

struct StatementHit {
    const Statement* stmt = nullptr;
    double relevance = 0.0;
};

struct BinFacet {
    std::string bin_id;
    long count = 0;
    LonLat mean_position;  // mean of all indexed mentions in the bin
    bool coarse = false;
};

struct ResultPage {
    long total = 0;
    std::vector<StatementHit> statements;  // one page, relevance desc, recency desc, stmt_id asc
    BinScale facet_scale = BinScale::Country;
    std::vector<BinFacet> bin_facet;        // ignores the bin filter, sorted by bin_id
    std::vector<TemporalBucket> timeline;   // includes the bin filter
    std::array<long, kSourceCount> source_counts{};
    std::array<long, 2> class_counts{};
};

/// Immutable view readers query. Holds shared segments, so it stays valid
/// after later commits.
class IndexSnapshot {
public:
    IndexSnapshot(std::vector<std::shared_ptr<const Segment>> segments, HexSizes hex);

    std::size_t size() const { return total_; }
    const HexSizes& hex_sizes() const { return hex_; }
    const std::vector<std::shared_ptr<const Segment>>& segments() const { return segments_; }
    std::optional<Date> first_day() const { return first_; }
    std::optional<Date> last_day() const { return last_; }
    const Statement* find(const std::string& stmt_id) const;
    /// Mean position of every indexed mention in the bin; nullopt if the bin
    /// has none. `coarse` receives the bin's coarse flag.
    std::optional<LonLat> bin_position(BinScale scale, const std::string& bin_id, bool* coarse = nullptr) const;

    ResultPage search(const Query& q, Kernel kernel = Kernel::Parallel) const;
    /// All matches (bin filter applied), in index order.
    std::vector<const Statement*> matches(const Query& q, Kernel kernel = Kernel::Parallel) const;
    /// Every statement, in index order.
    std::vector<const Statement*> all() const;

private:
    struct Scan;
    Scan scan(const Query& q, Kernel kernel, bool want_facets) const;

    std::vector<std::shared_ptr<const Segment>> segments_;
    std::vector<std::size_t> base_;
    std::size_t total_ = 0;
    HexSizes hex_;
    std::optional<Date> first_, last_;
    std::unordered_map<std::string, const Statement*> by_id_;
};

struct IndexOptions {
    HexSizes hex;
    std::size_t commit_every = kDefaultCommitEvery;
};

/// Single writer, many readers. add() buffers; commit() publishes a new
/// snapshot. add() commits automatically every `commit_every` statements.
class SearchIndex {
public:
    explicit SearchIndex(IndexOptions opts = {});
    SearchIndex(SearchIndex&& other) noexcept;

    /// Throws Error(DuplicateId) if the stmt_id is already indexed or pending.
    void add(Statement stmt);
    void commit();
    std::size_t pending() const { return pending_.size(); }

    /// Null before the first commit.
    std::shared_ptr<const IndexSnapshot> snapshot() const;
    /// Throws Error(IndexNotReady) before the first commit.
    ResultPage search(const Query& q) const;

    const IndexOptions& options() const { return opts_; }

    /// Writes VERSION, meta.json, statements.jsonl and postings.bin for the
    /// current snapshot; pending statements are not written.
    void save(const std::filesystem::path& dir) const;
    /// Reads an index directory. With `rebuild`, postings are regenerated from
    /// statements.jsonl and postings.bin is ignored. Throws Error(FileError)
    /// for a missing or incompatible directory.
    static SearchIndex load(const std::filesystem::path& dir, bool rebuild = false);

private:
    IndexOptions opts_;
    std::vector<std::shared_ptr<const Segment>> segments_;
    std::vector<Statement> pending_;
    std::unordered_set<std::string> ids_;
    mutable std::mutex snap_mu_;
    std::shared_ptr<const IndexSnapshot> snap_;
};

inline constexpr int kIndexFormatVersion = 1;

}  // namespace geomove
