#include "geomove/tagger.hpp"

#include "geomove/lexicon_data.hpp"
#include "geomove/text.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace geomove {

namespace {

using WordSet = std::unordered_set<std::string_view>;

struct Tables {
    WordSet function;
    WordSet verbs;
    WordSet nouns;
    WordSet adjectives;
    WordSet adverbs;
    std::unordered_map<std::string_view, std::string_view> irregular;

    Tables() {
        for (auto w : lexicon::function_words()) function.insert(w);
        for (auto w : lexicon::movement_verbs()) verbs.insert(w);
        for (auto w : lexicon::common_verbs()) verbs.insert(w);
        for (auto w : lexicon::common_nouns()) nouns.insert(w);
        for (auto w : lexicon::movement_adjectives()) adjectives.insert(w);
        for (auto w : lexicon::common_adjectives()) adjectives.insert(w);
        for (auto w : lexicon::movement_adverbs()) adverbs.insert(w);
        for (auto [form, lemma] : lexicon::irregular_forms()) irregular.emplace(form, lemma);
    }

    bool content(std::string_view w) const {
        return verbs.count(w) || nouns.count(w) || adjectives.count(w) || adverbs.count(w);
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool has_vowel(std::string_view s) {
    for (char c : s)
        if (is_vowel(c) || c == 'y') return true;
    return false;
}

bool doubled_consonant(std::string_view s) {
    return s.size() >= 2 && s.back() == s[s.size() - 2] && !is_vowel(s.back());
}

// Candidate stems in preference order for one suffix class.
std::vector<std::string> candidates(std::string_view w) {
    std::vector<std::string> out;
    auto add_stem_variants = [&](std::string_view stem) {
        if (stem.size() < 2) return;
        out.emplace_back(stem);
        out.push_back(std::string(stem) + "e");
        if (doubled_consonant(stem)) out.emplace_back(stem.substr(0, stem.size() - 1));
    };
    if (ends_with(w, "ations") || ends_with(w, "ation")) {
        std::string_view stem = w.substr(0, w.size() - (ends_with(w, "s") ? 6 : 5));
        add_stem_variants(stem);
        if (stem.size() >= 2) out.push_back(std::string(stem) + "ate");
    }
    if (ends_with(w, "ies") && w.size() > 4) out.push_back(std::string(w.substr(0, w.size() - 3)) + "y");
    if (ends_with(w, "ied") && w.size() > 4) out.push_back(std::string(w.substr(0, w.size() - 3)) + "y");
    if (ends_with(w, "ing")) add_stem_variants(w.substr(0, w.size() - 3));
    if (ends_with(w, "ed")) {
        // "moved" -> "move" is covered by stripping only the "d".
        std::string_view stem = w.substr(0, w.size() - 2);
        if (stem.size() >= 2) {
            out.emplace_back(stem);
            out.emplace_back(w.substr(0, w.size() - 1));
            if (doubled_consonant(stem)) out.emplace_back(stem.substr(0, stem.size() - 1));
        }
    }
    if (ends_with(w, "es") && w.size() > 3) {
        out.emplace_back(w.substr(0, w.size() - 1));
        out.emplace_back(w.substr(0, w.size() - 2));
    } else if (ends_with(w, "s") && !ends_with(w, "ss") && w.size() > 2) {
        out.emplace_back(w.substr(0, w.size() - 1));
    }
    return out;
}

// Used when no candidate stem is a known word.
std::string fallback_lemma(std::string_view w) {
    if ((ends_with(w, "ies") || ends_with(w, "ied")) && w.size() > 4)
        return std::string(w.substr(0, w.size() - 3)) + "y";
    auto strip = [&](std::size_t n) -> std::optional<std::string> {
        std::string_view stem = w.substr(0, w.size() - n);
        if (stem.size() < 3 || !has_vowel(stem)) return std::nullopt;
        if (doubled_consonant(stem) && stem.back() != 'l' && stem.back() != 's' && stem.back() != 'z')
            stem.remove_suffix(1);
        return std::string(stem);
    };
    if (ends_with(w, "ing"))
        if (auto s = strip(3)) return *s;
    if (ends_with(w, "ed") && !ends_with(w, "eed"))
        if (auto s = strip(2)) return *s;
    if (ends_with(w, "sses")) return std::string(w.substr(0, w.size() - 2));
    if (ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") && !ends_with(w, "is") && w.size() > 3)
        return std::string(w.substr(0, w.size() - 1));
    return std::string(w);
}

bool is_number(std::string_view w) {
    for (char c : w)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != ',' && c != '.') return false;
    return !w.empty();
}

const WordSet& noun_context() {
    static const WordSet s = {"a",    "an",   "the",   "this", "that", "these", "those", "my",
                              "our",  "their", "his",  "her",  "its",  "your",  "some",  "any",
                              "every", "each", "no",   "many", "several", "few", "more", "most",
                              "of",   "for",  "with",  "by",   "in",   "on",    "at",    "from"};
    return s;
}

const WordSet& verb_context() {
    static const WordSet s = {"to",  "will", "would", "can",  "could", "should", "may",   "might",
                              "must", "shall", "i",   "we",   "you",   "they",   "he",    "she",
                              "it",  "did",  "do",    "does", "n't",   "not",    "never", "cannot",
                              "who", "which", "that", "also", "often", "just",   "then"};
    return s;
}

const WordSet& be_forms() {
    static const WordSet s = {"is", "are", "was", "were", "be", "been", "being", "am", "get", "got", "become", "became"};
    return s;
}

}  // namespace

std::string_view to_string(Pos p) {
    switch (p) {
        case Pos::Verb: return "verb";
        case Pos::Noun: return "noun";
        case Pos::Adjective: return "adj";
        case Pos::Adverb: return "adv";
        case Pos::Other: return "other";
    }
    return "other";
}

std::string lemmatize(std::string_view w) {
    const auto& t = tables();
    if (auto it = t.irregular.find(w); it != t.irregular.end()) return std::string(it->second);
    if (t.content(w) || t.function.count(w)) return std::string(w);
    for (const auto& c : candidates(w))
        if (t.content(c)) return c;
    return fallback_lemma(w);
}

std::vector<TaggedToken> pos_tag(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("pos_tag: empty text");
    const auto& t = tables();
    auto tokens = tokenize(text);
    std::vector<TaggedToken> out;
    out.reserve(tokens.size());

    for (std::size_t i = 0; i < tokens.size(); ++i) {
        TaggedToken tok;
        tok.surface = tokens[i].text;
        std::string lower = to_lower(tok.surface);
        std::string prev = i > 0 ? to_lower(tokens[i - 1].text) : std::string();
        Pos prev_pos = i > 0 ? out.back().pos : Pos::Other;
        tok.lemma = lemmatize(lower);

        auto pick = [&]() -> Pos {
            if (t.function.count(lower) || is_number(lower)) return Pos::Other;
            if (i > 0 && is_capitalized(tok.surface) && !t.irregular.count(lower)) return Pos::Noun;
            if (t.irregular.count(lower)) return Pos::Verb;
            if (t.adverbs.count(lower)) return Pos::Adverb;

            const bool inflected = tok.lemma != lower;
            const bool is_v = t.verbs.count(tok.lemma) > 0;
            const bool is_n = t.nouns.count(tok.lemma) > 0 || t.nouns.count(lower) > 0;
            const bool is_adj = t.adjectives.count(lower) > 0;
            const bool after_noun_cue = noun_context().count(prev) > 0 || prev_pos == Pos::Adjective;
            const bool after_verb_cue = verb_context().count(prev) > 0 || prev_pos == Pos::Noun;

            if (inflected && (ends_with(lower, "ed") || ends_with(lower, "ied"))) {
                if (is_adj && be_forms().count(prev)) return Pos::Adjective;
                if (is_v) return Pos::Verb;
                if (is_adj) return Pos::Adjective;
            } else if (inflected && ends_with(lower, "ing")) {
                if (is_v && (be_forms().count(prev) || verb_context().count(prev))) return Pos::Verb;
                if (t.nouns.count(lower)) return Pos::Noun;
                if (is_v) return Pos::Verb;
            } else if (inflected && (ends_with(lower, "ation") || ends_with(lower, "ations"))) {
                return Pos::Noun;
            } else if (inflected && ends_with(lower, "s")) {
                if (is_v && is_n) return (after_verb_cue && !after_noun_cue) ? Pos::Verb : Pos::Noun;
                if (is_v) return Pos::Verb;
                if (is_n) return Pos::Noun;
            } else if (is_v || is_n || is_adj) {
                int kinds = int(is_v) + int(is_n) + int(is_adj);
                if (kinds == 1) return is_v ? Pos::Verb : is_n ? Pos::Noun : Pos::Adjective;
                if (is_adj && be_forms().count(prev)) return Pos::Adjective;
                if (after_noun_cue) return is_n ? Pos::Noun : Pos::Adjective;
                if (after_verb_cue && is_v) return Pos::Verb;
                if (is_v && i == 0) return Pos::Verb;
                return is_n ? Pos::Noun : is_adj ? Pos::Adjective : Pos::Verb;
            }

            // Unknown word: suffix heuristics.
            if (ends_with(lower, "ly")) return Pos::Adverb;
            for (std::string_view s : {"ous", "ful", "less", "able", "ible", "ive", "ical", "ish"})
                if (ends_with(lower, s) && lower.size() > s.size() + 1) return Pos::Adjective;
            for (std::string_view s : {"tion", "sion", "ment", "ness", "ity", "ance", "ence", "ship", "ism", "ist"})
                if (ends_with(lower, s)) return Pos::Noun;
            if (ends_with(lower, "ed") || ends_with(lower, "ing")) return Pos::Verb;
            return Pos::Noun;
        };
        tok.pos = pick();
        out.push_back(std::move(tok));
    }
    return out;
}

}  // namespace geomove
