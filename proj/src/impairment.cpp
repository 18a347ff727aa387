#include "geomove/impairment.hpp"

#include "geomove/error.hpp"
#include "geomove/text.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace geomove {

namespace {

constexpr std::string_view kNegationWords[] = {"no",      "not",     "never", "none",    "nobody",
                                               "nothing", "nowhere", "n't",   "without", "cannot"};

void add_exact_words(RuleSet& rs) {
    for (auto w : kNegationWords)
        rs.rules.push_back({"exact:" + std::string(w), RulePos::Any, MatchKind::Exact, std::string(w)});
}

std::string_view pos_name(RulePos p) {
    switch (p) {
        case RulePos::Verb: return "verb";
        case RulePos::Noun: return "noun";
        case RulePos::Adjective: return "adj";
        case RulePos::Adverb: return "adv";
        case RulePos::Any: return "any";
    }
    return "any";
}

std::string_view kind_name(MatchKind k) {
    switch (k) {
        case MatchKind::Exact: return "exact";
        case MatchKind::Prefix: return "prefix";
        case MatchKind::Suffix: return "suffix";
        case MatchKind::Lemma: return "lemma";
    }
    return "exact";
}

bool pos_ok(RulePos want, Pos got) {
    switch (want) {
        case RulePos::Any: return true;
        case RulePos::Verb: return got == Pos::Verb;
        case RulePos::Noun: return got == Pos::Noun;
        case RulePos::Adjective: return got == Pos::Adjective;
        case RulePos::Adverb: return got == Pos::Adverb;
    }
    return false;
}

}  // namespace

RuleSet baseline_ruleset() {
    RuleSet rs{"baseline", {}};
    add_exact_words(rs);
    for (std::string p : {"de", "mis", "dis"})
        rs.rules.push_back({"verb-prefix:" + p, RulePos::Verb, MatchKind::Prefix, p});
    for (std::string p : {"a", "dis"})
        rs.rules.push_back({"adj-prefix:" + p, RulePos::Adjective, MatchKind::Prefix, p});
    rs.rules.push_back({"adj-suffix:less", RulePos::Adjective, MatchKind::Suffix, "less"});
    return rs;
}

RuleSet modified_ruleset() {
    RuleSet rs{"modified", {}};
    add_exact_words(rs);
    rs.rules.push_back({"adj-suffix:less", RulePos::Adjective, MatchKind::Suffix, "less"});
    for (std::string l : {"cancel", "postpone", "prevent", "avoid"})
        rs.rules.push_back({"lemma:" + l, RulePos::Any, MatchKind::Lemma, l});
    return rs;
}

RuleSet parse_ruleset(std::istream& in, std::string name) {
    RuleSet rs{std::move(name), {}};
    std::set<std::string> ids;
    std::string line;
    long row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols;
        std::stringstream ss(line);
        std::string col;
        while (std::getline(ss, col, '\t')) cols.push_back(col);
        auto bad = [&](const std::string& why) {
            return Error(ErrorKind::MalformedRow, "rules row " + std::to_string(row) + ": " + why);
        };
        if (cols.size() != 4) throw bad("expected 4 tab-separated columns");

        ImpairmentRule r;
        r.rule_id = cols[0];
        if (cols[1] == "verb") r.target_pos = RulePos::Verb;
        else if (cols[1] == "noun") r.target_pos = RulePos::Noun;
        else if (cols[1] == "adj") r.target_pos = RulePos::Adjective;
        else if (cols[1] == "adv") r.target_pos = RulePos::Adverb;
        else if (cols[1] == "any") r.target_pos = RulePos::Any;
        else throw bad("unknown pos '" + cols[1] + "'");
        if (cols[2] == "exact") r.match = MatchKind::Exact;
        else if (cols[2] == "prefix") r.match = MatchKind::Prefix;
        else if (cols[2] == "suffix") r.match = MatchKind::Suffix;
        else if (cols[2] == "lemma") r.match = MatchKind::Lemma;
        else throw bad("unknown match kind '" + cols[2] + "'");
        r.pattern = cols[3];
        if (r.rule_id.empty() || r.pattern.empty()) throw bad("empty rule id or pattern");
        if ((r.match == MatchKind::Exact || r.match == MatchKind::Lemma) && to_lower(r.pattern) != r.pattern)
            throw bad("exact and lemma patterns must be lowercase");
        if (!ids.insert(r.rule_id).second) throw bad("duplicate rule id '" + r.rule_id + "'");
        rs.rules.push_back(std::move(r));
    }
    return rs;
}

RuleSet load_ruleset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::FileError, "cannot open rules file " + path.string());
    return parse_ruleset(in, path.stem().string());
}

void write_ruleset(std::ostream& out, const RuleSet& rs) {
    for (const auto& r : rs.rules)
        out << r.rule_id << '\t' << pos_name(r.target_pos) << '\t' << kind_name(r.match) << '\t' << r.pattern
            << '\n';
}

bool rule_matches(const ImpairmentRule& rule, const TaggedToken& token) {
    if (!pos_ok(rule.target_pos, token.pos)) return false;
    switch (rule.match) {
        case MatchKind::Exact: return to_lower(token.surface) == rule.pattern;
        case MatchKind::Lemma: return token.lemma == rule.pattern;
        case MatchKind::Prefix: {
            std::string s = to_lower(token.surface);
            return s.size() > rule.pattern.size() && s.compare(0, rule.pattern.size(), rule.pattern) == 0;
        }
        case MatchKind::Suffix: {
            std::string s = to_lower(token.surface);
            return s.size() > rule.pattern.size() &&
                   s.compare(s.size() - rule.pattern.size(), rule.pattern.size(), rule.pattern) == 0;
        }
    }
    return false;
}

RuleOutcome apply_ruleset(const std::vector<TaggedToken>& tokens, const RuleSet& rs) {
    std::set<std::string> fired;
    for (const auto& rule : rs.rules)
        for (const auto& tok : tokens)
            if (rule_matches(rule, tok)) {
                fired.insert(rule.rule_id);
                break;
            }
    RuleOutcome out;
    out.fired.assign(fired.begin(), fired.end());
    out.label = out.fired.empty() ? MovementClass::Normal : MovementClass::Impaired;
    return out;
}

ConfusionMatrix evaluate(const std::vector<MovementClass>& pred, const std::vector<MovementClass>& gold) {
    if (pred.size() != gold.size())
        throw Error(ErrorKind::LengthMismatch,
                    std::to_string(pred.size()) + " predictions vs " + std::to_string(gold.size()) + " gold labels");
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        bool p = pred[i] == MovementClass::Impaired;
        bool g = gold[i] == MovementClass::Impaired;
        if (p && g) ++cm.tp;
        else if (p) ++cm.fp;
        else if (g) ++cm.fn;
        else ++cm.tn;
    }
    return cm;
}

Metrics metrics(const ConfusionMatrix& cm) {
    if (cm.tp < 0 || cm.fp < 0 || cm.fn < 0 || cm.tn < 0)
        throw std::invalid_argument("confusion matrix cells must be non-negative");
    const long total = cm.tp + cm.fp + cm.fn + cm.tn;
    if (total == 0) throw Error(ErrorKind::EmptyMatrix, "confusion matrix has no observations");
    Metrics m;
    m.precision = cm.tp + cm.fp ? double(cm.tp) / double(cm.tp + cm.fp) : 0.0;
    m.recall = cm.tp + cm.fn ? double(cm.tp) / double(cm.tp + cm.fn) : 0.0;
    m.f1 = m.precision + m.recall > 0 ? 2 * m.precision * m.recall / (m.precision + m.recall) : 0.0;
    m.accuracy = double(cm.tp + cm.tn) / double(total);
    return m;
}

std::vector<LabeledText> load_labeled(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::FileError, "cannot open " + path.string());
    std::vector<LabeledText> out;
    std::string line;
    long row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorKind::MalformedRecord, "line " + std::to_string(row) + ": " + e.what());
        }
        if (!j.is_object() || !j.contains("text") || !j.contains("label") || !j["text"].is_string() ||
            !j["label"].is_string())
            throw Error(ErrorKind::MissingField, "line " + std::to_string(row) + ": need text and label");
        auto label = parse_movement_class(to_lower(j["label"].get<std::string>()));
        if (!label) throw Error(ErrorKind::MalformedRecord, "line " + std::to_string(row) + ": bad label");
        out.push_back({j["text"].get<std::string>(), *label});
    }
    return out;
}

}  // namespace geomove
