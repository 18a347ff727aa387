#pragma once

#include "geomove/tagger.hpp"
#include "geomove/types.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace geomove {

enum class RulePos { Verb, Noun, Adjective, Adverb, Any };
enum class MatchKind { Exact, Prefix, Suffix, Lemma };

struct ImpairmentRule {
    std::string rule_id;
    RulePos target_pos = RulePos::Any;
    MatchKind match = MatchKind::Exact;
    std::string pattern;

    bool operator==(const ImpairmentRule&) const = default;
};

struct RuleSet {
    std::string name;
    std::vector<ImpairmentRule> rules;
};

RuleSet baseline_ruleset();
RuleSet modified_ruleset();

/// Rules file: one `rule_id<TAB>pos<TAB>match_kind<TAB>pattern` per line,
/// pos in {verb,noun,adj,adv,any}, match_kind in {exact,prefix,suffix,lemma}.
/// Blank lines and lines starting with '#' are skipped. The set is named
/// after the file stem.
RuleSet load_ruleset(const std::filesystem::path& path);
RuleSet parse_ruleset(std::istream& in, std::string name);
void write_ruleset(std::ostream& out, const RuleSet& rs);

/// Prefix and suffix rules require the surface to be strictly longer than
/// the pattern, so "a" alone is never an "a-" adjective.
bool rule_matches(const ImpairmentRule& rule, const TaggedToken& token);

struct RuleOutcome {
    MovementClass label = MovementClass::Normal;
    std::vector<std::string> fired;  // sorted, unique
};

RuleOutcome apply_ruleset(const std::vector<TaggedToken>& tokens, const RuleSet& rs);

inline MovementClass label_text(std::string_view text, const RuleSet& rs) {
    return apply_ruleset(pos_tag(text), rs).label;
}

struct ConfusionMatrix {
    long tp = 0, fp = 0, fn = 0, tn = 0;
    bool operator==(const ConfusionMatrix&) const = default;
};

struct Metrics {
    double precision = 0, recall = 0, f1 = 0, accuracy = 0;
};

ConfusionMatrix evaluate(const std::vector<MovementClass>& pred, const std::vector<MovementClass>& gold);

/// Zero denominators yield 0 for precision, recall and F1. Throws EmptyMatrix
/// when all four cells are zero.
Metrics metrics(const ConfusionMatrix& cm);

struct LabeledText {
    std::string text;
    MovementClass label = MovementClass::Normal;
};

/// JSONL with {"text": ..., "label": "impaired"|"normal"} per line.
std::vector<LabeledText> load_labeled(const std::filesystem::path& path);

}  // namespace geomove
