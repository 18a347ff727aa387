#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace geomove {

enum class Pos { Verb, Noun, Adjective, Adverb, Other };

std::string_view to_string(Pos p);

struct TaggedToken {
    std::string surface;
    std::string lemma;  // lowercase
    Pos pos = Pos::Other;
};

/// Lemma of a single lowercase word, ignoring context. Irregular forms come
/// from a fixed table; regular -s/-es/-ies/-ed/-ing/-ations endings are
/// stripped when the resulting stem is a known word, with consonant
/// undoubling and silent-e restoration.
std::string lemmatize(std::string_view lower_word);

/// Deterministic lexicon + suffix-heuristic tagger. Every token produced by
/// tokenize() gets exactly one tag. Throws std::invalid_argument on empty
/// text.
std::vector<TaggedToken> pos_tag(std::string_view text);

}  // namespace geomove
