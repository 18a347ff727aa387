#include "geomove/types.hpp"

#include "geomove/error.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

namespace geomove {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedRecord: return "MalformedRecord";
        case ErrorKind::MissingField: return "MissingField";
        case ErrorKind::BadTimestamp: return "BadTimestamp";
        case ErrorKind::FileError: return "FileError";
        case ErrorKind::MalformedRow: return "MalformedRow";
        case ErrorKind::EmptyGold: return "EmptyGold";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::EmptyMatrix: return "EmptyMatrix";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::UnknownCountry: return "UnknownCountry";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::BadK: return "BadK";
        case ErrorKind::BadRange: return "BadRange";
        case ErrorKind::DuplicateId: return "DuplicateId";
        case ErrorKind::BadQuery: return "BadQuery";
        case ErrorKind::IndexNotReady: return "IndexNotReady";
        case ErrorKind::BadConfig: return "BadConfig";
    }
    return "Error";
}

std::string_view to_string(Source s) {
    switch (s) {
        case Source::News: return "news";
        case Source::Microblog: return "microblog";
        case Source::Scientific: return "scientific";
    }
    return "news";
}

std::string_view to_string(MovementClass c) {
    return c == MovementClass::Impaired ? "impaired" : "normal";
}

std::optional<Source> parse_source(std::string_view s) {
    if (s == "news") return Source::News;
    if (s == "microblog" || s == "twitter" || s == "tweet") return Source::Microblog;
    if (s == "scientific") return Source::Scientific;
    return std::nullopt;
}

std::optional<MovementClass> parse_movement_class(std::string_view s) {
    if (s == "normal") return MovementClass::Normal;
    if (s == "impaired") return MovementClass::Impaired;
    return std::nullopt;
}

namespace {

bool read_int(std::string_view s, std::size_t pos, std::size_t len, int& out) {
    if (pos + len > s.size()) return false;
    for (std::size_t i = pos; i < pos + len; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    auto res = std::from_chars(s.data() + pos, s.data() + pos + len, out);
    return res.ec == std::errc{};
}

}  // namespace

std::optional<Date> parse_iso_date(std::string_view s) {
    using namespace std::chrono;
    int y = 0, m = 0, d = 0;
    if (s.size() < 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    if (!read_int(s, 0, 4, y) || !read_int(s, 5, 2, m) || !read_int(s, 8, 2, d)) return std::nullopt;
    year_month_day ymd{year{y}, month{static_cast<unsigned>(m)}, day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) return std::nullopt;
    Date date{ymd};
    if (s.size() == 10) return date;

    if (s[10] != 'T' && s[10] != ' ') return std::nullopt;
    int hh = 0, mm = 0, ss = 0;
    if (!read_int(s, 11, 2, hh) || s.size() < 16 || s[13] != ':' || !read_int(s, 14, 2, mm))
        return std::nullopt;
    std::size_t pos = 16;
    if (pos < s.size() && s[pos] == ':') {
        if (!read_int(s, pos + 1, 2, ss)) return std::nullopt;
        pos += 3;
        if (pos < s.size() && s[pos] == '.') {
            ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
    }
    if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;

    int offset_minutes = 0;
    if (pos < s.size()) {
        if (s[pos] == 'Z' && pos + 1 == s.size()) {
        } else if ((s[pos] == '+' || s[pos] == '-') && s.size() == pos + 6 && s[pos + 3] == ':') {
            int oh = 0, om = 0;
            if (!read_int(s, pos + 1, 2, oh) || !read_int(s, pos + 4, 2, om)) return std::nullopt;
            offset_minutes = (oh * 60 + om) * (s[pos] == '-' ? -1 : 1);
        } else {
            return std::nullopt;
        }
    }
    auto t = sys_seconds{date} + hours{hh} + minutes{mm} + seconds{ss} - minutes{offset_minutes};
    return floor<days>(t);
}

std::string format_date(Date d) {
    std::chrono::year_month_day ymd{d};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(ymd.year()), unsigned(ymd.month()),
                  unsigned(ymd.day()));
    return buf;
}

std::string format_year_month(YearMonth ym) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u", int(ym.year()), unsigned(ym.month()));
    return buf;
}

YearMonth month_of(Date d) {
    std::chrono::year_month_day ymd{d};
    return ymd.year() / ymd.month();
}

}  // namespace geomove
