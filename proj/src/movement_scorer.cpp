#include "geomove/movement_scorer.hpp"

#include "geomove/error.hpp"
#include "geomove/lexicon_data.hpp"
#include "geomove/tagger.hpp"
#include "geomove/text.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace geomove {

void MovementScorerConfig::validate() const {
    if (!(threshold >= 0.0 && threshold <= 1.0))
        throw Error(ErrorKind::BadConfig, "movement threshold must lie in [0,1], got " + std::to_string(threshold));
}

MovementLexicon MovementLexicon::builtin() {
    MovementLexicon lex;
    for (auto w : lexicon::movement_verbs()) lex.verbs.emplace(w);
    for (auto w : lexicon::movement_adjectives()) lex.adjectives.emplace(w);
    for (auto w : lexicon::movement_adverbs()) lex.adverbs.emplace(w);
    for (auto w : lexicon::directional_prepositions()) lex.prepositions.emplace(w);
    return lex;
}

MovementLexicon MovementLexicon::parse(std::istream& in) {
    MovementLexicon lex;
    std::unordered_set<std::string>* section = nullptr;
    bool saw_prepositions = false;
    std::string line;
    long row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
        if (line.front() == '[') {
            if (line == "[verbs]") section = &lex.verbs;
            else if (line == "[adjectives]") section = &lex.adjectives;
            else if (line == "[adverbs]") section = &lex.adverbs;
            else if (line == "[prepositions]") section = &lex.prepositions, saw_prepositions = true;
            else throw Error(ErrorKind::MalformedRow, "lexicon row " + std::to_string(row) + ": unknown section " + line);
            continue;
        }
        if (!section) throw Error(ErrorKind::MalformedRow, "lexicon row " + std::to_string(row) + ": entry before any section");
        section->insert(to_lower(line));
    }
    if (!saw_prepositions)
        for (auto w : lexicon::directional_prepositions()) lex.prepositions.emplace(w);
    return lex;
}

MovementLexicon MovementLexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::FileError, "cannot open lexicon " + path.string());
    return parse(in);
}

LexiconScorer::LexiconScorer(MovementLexicon lex) : lex_(std::move(lex)) {}

double LexiconScorer::hits(std::string_view text) const {
    double h = 0.0;
    for (const auto& tok : tokenize(text)) {
        std::string lower = to_lower(tok.text);
        std::string lemma = lemmatize(lower);
        auto in = [&](const std::unordered_set<std::string>& s) { return s.count(lower) || s.count(lemma); };
        if (in(lex_.verbs)) h += kVerbWeight;
        else if (in(lex_.adjectives) || in(lex_.adverbs)) h += kModifierWeight;
        else if (lex_.prepositions.count(lower)) h += kPrepositionWeight;
    }
    return h;
}

double LexiconScorer::score(std::string_view text) const {
    if (text.empty()) throw std::invalid_argument("score: empty text");
    double h = hits(text);
    return h / (h + kSaturation);
}

std::unique_ptr<MovementScorer> make_scorer(const MovementScorerConfig& cfg) {
    cfg.validate();
    if (cfg.lexicon_path.empty()) return std::make_unique<LexiconScorer>();
    return std::make_unique<LexiconScorer>(MovementLexicon::load(cfg.lexicon_path));
}

std::vector<Statement> filter_movement(std::vector<Statement> stmts, const MovementScorerConfig& cfg) {
    cfg.validate();
    std::erase_if(stmts, [&](const Statement& s) { return !passes_threshold(s.movement_score, cfg.threshold); });
    return stmts;
}

}  // namespace geomove
