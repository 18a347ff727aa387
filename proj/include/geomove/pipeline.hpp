#pragma once

#include "geomove/corpus.hpp"
#include "geomove/geoparser.hpp"
#include "geomove/impairment.hpp"
#include "geomove/movement_scorer.hpp"
#include "geomove/search_index.hpp"
#include "geomove/types.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace geomove {

// Read-only resources shared by every worker.
struct Pipeline {
    const Gazetteer* gazetteer = nullptr;
    const MovementScorer* scorer = nullptr;
    const RuleSet* rules = nullptr;
    double threshold = kDefaultMovementThreshold;
    SegmentOptions segment;
};

struct IngestStats {
    long records = 0;        // input lines that were not blank
    long documents = 0;      // non-empty after cleaning
    long dropped_empty = 0;  // empty after cleaning
    long statements = 0;     // after segmentation
    long movement = 0;       // score > threshold
    long with_places = 0;    // movement statements with >= 1 mention
    long mentions = 0;
    long impaired = 0;
    long normal = 0;

    double impaired_percent() const { return movement ? 100.0 * double(impaired) / double(movement) : 0.0; }
    IngestStats& operator+=(const IngestStats& o);
    bool operator==(const IngestStats&) const = default;
};

/// clean -> segment -> score -> filter -> geoparse -> label for one document.
/// Returns only movement statements, fully processed, in sentence order.
std::vector<Statement> process_document(const Document& doc, const Pipeline& p, IngestStats* stats = nullptr);

struct IngestResult {
    IngestStats stats;
    std::vector<Statement> statements;  // input order
};

/// Parses and processes line-delimited records. Parse errors carry the
/// 1-based line number. The parallel kernel splits work by document and
/// returns the same result as the serial one.
IngestResult ingest_lines(const std::vector<std::string>& lines, std::optional<Source> source,
                          const ParseOptions& parse, const Pipeline& p, Kernel kernel = Kernel::Parallel);

/// Reads a file of records; errors are prefixed with the file name.
IngestResult ingest_file(const std::filesystem::path& path, std::optional<Source> source,
                         const ParseOptions& parse, const Pipeline& p, Kernel kernel = Kernel::Parallel);

}  // namespace geomove
