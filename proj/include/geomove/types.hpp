#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geomove {

enum class Source : std::uint8_t { News = 0, Microblog = 1, Scientific = 2 };
inline constexpr int kSourceCount = 3;

enum class MovementClass : std::uint8_t { Normal = 0, Impaired = 1 };

std::string_view to_string(Source s);
std::string_view to_string(MovementClass c);
std::optional<Source> parse_source(std::string_view s);
std::optional<MovementClass> parse_movement_class(std::string_view s);

// Day precision is all the pipeline needs; a calendar day in UTC.
using Date = std::chrono::sys_days;
using YearMonth = std::chrono::year_month;

// Accepts "YYYY-MM-DD" or an ISO-8601 datetime ("YYYY-MM-DDThh:mm[:ss[.fff]]"
// followed by "Z", "+hh:mm", "-hh:mm" or nothing). Datetimes are shifted to
// UTC before truncation to the day.
std::optional<Date> parse_iso_date(std::string_view s);
std::string format_date(Date d);
std::string format_year_month(YearMonth ym);
YearMonth month_of(Date d);

struct GazetteerEntry {
    std::int64_t place_id = 0;
    std::string name;
    std::vector<std::string> alternate_names;
    double lat = 0.0;
    double lon = 0.0;
    char feature_class = 'P';
    std::string country_code;
    std::string admin1_code;
    std::int64_t population = 0;
};

struct PlaceMention {
    std::size_t begin = 0;  // byte offsets into Statement::text, half-open
    std::size_t end = 0;
    std::string surface;
    GazetteerEntry resolved;
    double confidence = 0.0;
};

struct Document {
    std::string doc_id;
    Source source = Source::News;
    Date published_at{};
    std::optional<std::string> title;
    std::string body;
    std::optional<std::string> url;
};

struct Statement {
    std::string stmt_id;
    std::string doc_id;
    Source source = Source::News;
    Date published_at{};
    std::string text;
    double movement_score = 0.0;
    std::optional<MovementClass> impaired;  // set only for movement statements
    std::vector<PlaceMention> places;
    std::vector<std::string> tokens;
    std::optional<std::string> url;
};

}  // namespace geomove
