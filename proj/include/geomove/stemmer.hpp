#pragma once

#include <string>
#include <string_view>

namespace geomove {

/// Porter (1980) suffix-stripping stemmer. Input must be lowercase ASCII;
/// words of one or two letters, and words with non-letter bytes, are
/// returned unchanged.
std::string stem(std::string_view word);

}  // namespace geomove
