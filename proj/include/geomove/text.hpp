#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace geomove {

struct Token {
    std::string text;  // surface form, original case
    std::size_t begin = 0;
    std::size_t end = 0;
};

/// Splits text into word tokens with byte offsets.
///
/// Words are maximal runs of ASCII alphanumerics and non-ASCII bytes, with
/// internal apostrophes kept. A trailing possessive "'s" is dropped and a
/// "n't" contraction becomes its own token ("didn't" -> "did", "n't").
/// Punctuation and whitespace never appear in the output.
std::vector<Token> tokenize(std::string_view text);

std::vector<std::string> token_strings(std::string_view text);

std::string to_lower(std::string_view s);

bool is_capitalized(std::string_view word);

}  // namespace geomove
