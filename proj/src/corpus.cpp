#include "geomove/corpus.hpp"

#include "geomove/error.hpp"
#include "geomove/text.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cctype>

namespace geomove {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

void replace_all(std::string& s, std::string_view from, std::string_view to) {
    std::size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
    }
}

std::string normalize_chars(std::string s) {
    replace_all(s, "\xE2\x80\x99", "'");  // right single quote
    replace_all(s, "\xE2\x80\x98", "'");
    replace_all(s, "\xE2\x80\x9C", "\"");
    replace_all(s, "\xE2\x80\x9D", "\"");
    replace_all(s, "\xC2\xA0", " ");  // nbsp
    replace_all(s, "&nbsp;", " ");
    replace_all(s, "&quot;", "\"");
    replace_all(s, "&#39;", "'");
    replace_all(s, "&apos;", "'");
    replace_all(s, "&lt;", "<");
    replace_all(s, "&gt;", ">");
    replace_all(s, "&amp;", "&");
    return s;
}

bool is_block_tag(std::string_view tag) {
    static constexpr std::array<std::string_view, 14> kBlock = {
        "p", "br", "div", "li", "ul", "ol", "tr", "td", "h1", "h2", "h3", "h4", "blockquote", "hr"};
    return std::find(kBlock.begin(), kBlock.end(), tag) != kBlock.end();
}

std::string strip_tags(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '<' && i + 1 < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '/' || s[i + 1] == '!')) {
            auto close = s.find('>', i + 1);
            if (close != std::string_view::npos) {
                std::size_t name_start = i + 1 + (s[i + 1] == '/' ? 1 : 0);
                std::size_t name_end = name_start;
                while (name_end < close && std::isalnum(static_cast<unsigned char>(s[name_end]))) ++name_end;
                if (is_block_tag(to_lower(s.substr(name_start, name_end - name_start)))) out += ' ';
                i = close;
                continue;
            }
        }
        out += s[i];
    }
    return out;
}

bool starts_with_ci(std::string_view s, std::size_t pos, std::string_view prefix) {
    if (pos + prefix.size() > s.size()) return false;
    for (std::size_t k = 0; k < prefix.size(); ++k)
        if (std::tolower(static_cast<unsigned char>(s[pos + k])) != prefix[k]) return false;
    return true;
}

std::string strip_urls_and_handles(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        bool at_word_start = i == 0 || !is_alnum(s[i - 1]);
        if (at_word_start && (starts_with_ci(s, i, "http://") || starts_with_ci(s, i, "https://") ||
                              starts_with_ci(s, i, "www."))) {
            while (i < s.size() && !is_space(s[i])) ++i;
            continue;
        }
        if (s[i] == '@' && at_word_start && i + 1 < s.size() &&
            (is_alnum(s[i + 1]) || s[i + 1] == '_')) {
            ++i;
            while (i < s.size() && (is_alnum(s[i]) || s[i] == '_')) ++i;
            if (i < s.size() && s[i] == ':') ++i;
            continue;
        }
        out += s[i++];
    }
    return out;
}

std::string strip_controls(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        auto u = static_cast<unsigned char>(c);
        if (c == '\t' || c == '\n' || c == '\r') out += ' ';
        else if (u < 0x20 || u == 0x7F) continue;
        else out += c;
    }
    return out;
}

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending = false;
    for (char c : s) {
        if (is_space(c)) {
            pending = !out.empty();
            continue;
        }
        if (pending) out += ' ';
        pending = false;
        out += c;
    }
    return out;
}

std::string strip_rt_marker(std::string s) {
    // "RT" retweet marker, possibly followed by a colon, only at the start.
    while (s.size() >= 2 && s[0] == 'R' && s[1] == 'T' && (s.size() == 2 || s[2] == ' ' || s[2] == ':')) {
        std::size_t k = 2;
        while (k < s.size() && (s[k] == ' ' || s[k] == ':')) ++k;
        s.erase(0, k);
    }
    std::size_t k = 0;
    while (k < s.size() && (s[k] == ':' || s[k] == ' ')) ++k;
    s.erase(0, k);
    return s;
}

std::string clean_once(std::string_view raw) {
    std::string s = normalize_chars(std::string(raw));
    s = strip_controls(s);
    s = strip_tags(s);
    s = strip_urls_and_handles(s);
    s = collapse_whitespace(s);
    s = strip_rt_marker(std::move(s));
    return collapse_whitespace(s);
}

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }
bool is_closer(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }

bool is_abbreviation(std::string_view word) {
    static constexpr std::array<std::string_view, 40> kAbbrev = {
        "mr",   "mrs",  "ms",  "dr",  "prof", "st",   "mt",   "ft",  "jr",  "sr",
        "inc",  "ltd",  "co",  "corp", "vs",  "e.g",  "i.e",  "u.s", "u.k", "u.n",
        "jan",  "feb",  "apr", "aug", "sep",  "sept", "oct",  "nov", "dec", "no",
        "gen",  "gov",  "sen", "rep", "capt", "lt",   "col",  "sgt", "fig", "al"};
    return std::find(kAbbrev.begin(), kAbbrev.end(), word) != kAbbrev.end();
}

}  // namespace

std::string clean_text(std::string_view raw) {
    std::string current(raw);
    // Each pass never grows the text, so this terminates.
    for (int pass = 0; pass < 16; ++pass) {
        std::string next = clean_once(current);
        if (next == current) break;
        current = std::move(next);
    }
    return current;
}

std::vector<std::string> split_sentences(std::string_view body, Source /*source*/) {
    // An unpunctuated microblog post falls out of the general rule as a
    // single sentence, so the source does not change the algorithm.
    std::vector<std::string> out;
    std::size_t start = 0;
    const std::size_t n = body.size();
    auto emit = [&](std::size_t from, std::size_t to) {
        while (from < to && is_space(body[from])) ++from;
        while (to > from && is_space(body[to - 1])) --to;
        if (to > from) out.emplace_back(body.substr(from, to - from));
    };

    std::size_t i = 0;
    while (i < n) {
        if (!is_terminator(body[i])) {
            ++i;
            continue;
        }
        std::size_t term = i;
        std::size_t j = i;
        while (j < n && is_terminator(body[j])) ++j;
        while (j < n && is_closer(body[j])) ++j;
        if (j < n && !is_space(body[j])) {
            i = j;
            continue;
        }
        std::size_t k = j;
        while (k < n && is_space(body[k])) ++k;
        bool boundary = true;
        if (k < n && std::islower(static_cast<unsigned char>(body[k]))) boundary = false;
        if (boundary && body[term] == '.' && j == term + 1) {
            std::size_t w = term;
            while (w > start && !is_space(body[w - 1])) --w;
            std::string word = to_lower(body.substr(w, term - w));
            while (!word.empty() && !std::isalnum(static_cast<unsigned char>(word.front()))) word.erase(0, 1);
            if (is_abbreviation(word)) boundary = false;
            // An initial such as "J. Smith", unless the letter is the whole sentence so far.
            std::size_t first = start;
            while (first < w && is_space(body[first])) ++first;
            if (word.size() == 1 && std::isalpha(static_cast<unsigned char>(word[0])) && k < n && first < w)
                boundary = false;
        }
        if (boundary) {
            emit(start, j);
            start = j;
        }
        i = j;
    }
    emit(start, n);
    return out;
}

std::vector<Statement> segment_statements(const Document& doc, const SegmentOptions& opts) {
    std::vector<Statement> out;
    auto sentences = split_sentences(doc.body, doc.source);
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        auto tokens = token_strings(sentences[i]);
        if (tokens.size() < opts.min_tokens) continue;
        Statement s;
        s.stmt_id = doc.doc_id + "#" + std::to_string(i);
        s.doc_id = doc.doc_id;
        s.source = doc.source;
        s.published_at = doc.published_at;
        s.text = std::move(sentences[i]);
        s.tokens = std::move(tokens);
        s.url = doc.url;
        out.push_back(std::move(s));
    }
    return out;
}

Document parse_record(std::string_view raw_line, std::optional<Source> source, const ParseOptions& opts) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(raw_line);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::MalformedRecord, e.what());
    }
    if (!j.is_object()) throw Error(ErrorKind::MalformedRecord, "record is not a JSON object");

    auto required_string = [&](const char* key) -> std::string {
        auto it = j.find(key);
        if (it == j.end() || it->is_null()) throw Error(ErrorKind::MissingField, key);
        if (!it->is_string()) throw Error(ErrorKind::MalformedRecord, std::string(key) + " is not a string");
        return it->get<std::string>();
    };
    auto optional_string = [&](const char* key) -> std::optional<std::string> {
        auto it = j.find(key);
        if (it == j.end() || it->is_null()) return std::nullopt;
        if (!it->is_string()) throw Error(ErrorKind::MalformedRecord, std::string(key) + " is not a string");
        return it->get<std::string>();
    };

    Document doc;
    doc.doc_id = required_string("id");
    if (doc.doc_id.empty()) throw Error(ErrorKind::MalformedRecord, "empty id");

    if (source) {
        doc.source = *source;
    } else {
        auto src = required_string("source");
        auto parsed = parse_source(src);
        if (!parsed) throw Error(ErrorKind::MalformedRecord, "unknown source '" + src + "'");
        doc.source = *parsed;
    }

    doc.body = required_string("text");
    auto stamp = required_string("published_at");
    auto date = parse_iso_date(stamp);
    bool in_window = date && (!opts.window_begin || *date >= *opts.window_begin) &&
                     (!opts.window_end || *date <= *opts.window_end);
    if (!in_window) {
        if (!opts.lenient)
            throw Error(ErrorKind::BadTimestamp, "'" + stamp + "' in record " + doc.doc_id);
        date = opts.default_date;
    }
    doc.published_at = *date;
    doc.title = optional_string("title");
    doc.url = optional_string("url");
    return doc;
}

}  // namespace geomove
