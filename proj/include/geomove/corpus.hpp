#pragma once

#include "geomove/types.hpp"

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geomove {

/// Strips markup tags, URLs, @-handles, a leading "RT" marker and control
/// characters, then collapses whitespace. Case and sentence punctuation are
/// preserved. An empty result means the text should be dropped.
///
/// The transformation is iterated to a fixpoint, so it is idempotent.
std::string clean_text(std::string_view raw);

inline constexpr std::size_t kMinStatementTokens = 3;
inline constexpr std::size_t kMicroblogMaxChars = 280;

struct SegmentOptions {
    std::size_t min_tokens = kMinStatementTokens;
};

/// One statement per sentence in document order. Scores, labels and places
/// are left unset. Statement ids are "<doc_id>#<sentence ordinal>"; the
/// ordinal counts sentences before the minimum-token filter so ids stay
/// stable when that threshold changes.
std::vector<Statement> segment_statements(const Document& doc, const SegmentOptions& opts = {});

/// Sentence split only, no token filter.
std::vector<std::string> split_sentences(std::string_view body, Source source);

struct ParseOptions {
    bool lenient = false;
    Date default_date = Date{std::chrono::year{2019} / 8 / 1};
    std::optional<Date> window_begin;
    std::optional<Date> window_end;
};

/// Parses one line-delimited JSON record. `source`, when given, takes
/// precedence over the record's own "source" field.
Document parse_record(std::string_view raw_line, std::optional<Source> source,
                      const ParseOptions& opts = {});

}  // namespace geomove
