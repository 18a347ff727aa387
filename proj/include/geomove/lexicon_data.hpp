#pragma once

#include <span>
#include <string_view>
#include <utility>

// Word lists compiled into the library. The movement lexicon shipped in
// data/lexicon.txt mirrors the first three lists; a unit test keeps them in
// sync.
namespace geomove::lexicon {

std::span<const std::string_view> movement_verbs();
std::span<const std::string_view> movement_adjectives();
std::span<const std::string_view> movement_adverbs();
std::span<const std::string_view> directional_prepositions();

// Irregular inflection -> lemma. Covers every movement verb with an
// irregular form plus common auxiliaries and high-frequency verbs.
std::span<const std::pair<std::string_view, std::string_view>> irregular_forms();

std::span<const std::string_view> function_words();
std::span<const std::string_view> common_verbs();
std::span<const std::string_view> common_nouns();
std::span<const std::string_view> common_adjectives();

std::span<const std::string_view> stopwords();

}  // namespace geomove::lexicon
