#include "geomove/text.hpp"

#include <cctype>

namespace geomove {

namespace {

bool is_word_byte(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (!is_word_byte(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < n) {
            auto c = static_cast<unsigned char>(text[i]);
            if (is_word_byte(c)) {
                ++i;
            } else if (c == '\'' && i + 1 < n && std::isalpha(static_cast<unsigned char>(text[i + 1])) &&
                       i > start) {
                ++i;
            } else {
                break;
            }
        }
        std::size_t end = i;
        std::string_view word = text.substr(start, end - start);
        auto lower_tail = [&](std::size_t k) { return to_lower(word.substr(word.size() - k)); };

        if (word.size() > 2 && lower_tail(2) == "'s") {
            end -= 2;
            word = text.substr(start, end - start);
        }
        if (word.size() > 3 && lower_tail(3) == "n't") {
            out.push_back({std::string(word.substr(0, word.size() - 3)), start, end - 3});
            out.push_back({std::string(word.substr(word.size() - 3)), end - 3, end});
            continue;
        }
        // Stray apostrophes inside a word (e.g. "o'clock") are kept as-is.
        if (!word.empty()) out.push_back({std::string(word), start, end});
    }
    return out;
}

std::vector<std::string> token_strings(std::string_view text) {
    std::vector<std::string> out;
    for (auto& t : tokenize(text)) out.push_back(std::move(t.text));
    return out;
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool is_capitalized(std::string_view word) {
    return !word.empty() && std::isupper(static_cast<unsigned char>(word.front()));
}

}  // namespace geomove
