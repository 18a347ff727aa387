#pragma once

#include "geomove/types.hpp"

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace geomove {

inline constexpr double kDefaultMovementThreshold = 0.6;

struct MovementScorerConfig {
    double threshold = kDefaultMovementThreshold;
    std::filesystem::path lexicon_path;  // empty = built-in lexicon

    /// Throws Error(BadConfig) unless 0 <= threshold <= 1.
    void validate() const;
};

struct MovementLexicon {
    std::unordered_set<std::string> verbs;
    std::unordered_set<std::string> adjectives;
    std::unordered_set<std::string> adverbs;
    std::unordered_set<std::string> prepositions;

    static MovementLexicon builtin();
    /// Sections "[verbs]", "[adjectives]", "[adverbs]", optionally
    /// "[prepositions]"; one lemma per line; '#' starts a comment. A file
    /// without a prepositions section gets the built-in directional list.
    static MovementLexicon load(const std::filesystem::path& path);
    static MovementLexicon parse(std::istream& in);
};

// A learned model can replace the lexicon scorer behind this interface.
class MovementScorer {
public:
    virtual ~MovementScorer() = default;
    /// Deterministic score in [0,1]. Throws std::invalid_argument on empty text.
    virtual double score(std::string_view text) const = 0;
};

class LexiconScorer final : public MovementScorer {
public:
    static constexpr double kVerbWeight = 1.0;
    static constexpr double kModifierWeight = 0.5;
    static constexpr double kPrepositionWeight = 0.25;
    static constexpr double kSaturation = 0.5;

    explicit LexiconScorer(MovementLexicon lex = MovementLexicon::builtin());

    double score(std::string_view text) const override;
    /// Weighted hit total before the saturating map.
    double hits(std::string_view text) const;

private:
    MovementLexicon lex_;
};

std::unique_ptr<MovementScorer> make_scorer(const MovementScorerConfig& cfg);

/// Keeps statements with movement_score strictly greater than the threshold.
std::vector<Statement> filter_movement(std::vector<Statement> stmts, const MovementScorerConfig& cfg);

inline bool passes_threshold(double score, double threshold) { return score > threshold; }

}  // namespace geomove
