#include "geomove/error.hpp"
#include "geomove/lexicon_data.hpp"
#include "geomove/movement_scorer.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace geomove;

TEST(Scorer, OneVerbTwoPrepositions) {
    LexiconScorer s;
    // travel 1.0 + from 0.25 + to 0.25 = 1.5 -> 1.5 / 2.0
    EXPECT_DOUBLE_EQ(s.hits("They travel from Lisbon to Boston."), 1.5);
    EXPECT_DOUBLE_EQ(s.score("They travel from Lisbon to Boston."), 0.75);
    EXPECT_GT(s.score("They travel from Lisbon to Boston."), 0.6);
}

TEST(Scorer, SingleVerbClearsThreshold) {
    LexiconScorer s;
    EXPECT_NEAR(s.score("Crowds wandered."), 2.0 / 3.0, 1e-12);
}

TEST(Scorer, SailIsNotInTheLexicon) {
    LexiconScorer s;
    // sail is not a lexicon verb, so only the two prepositions count.
    EXPECT_DOUBLE_EQ(s.score("The ship sailed from Lisbon to Boston."), 0.5);
}

TEST(Scorer, NoHits) {
    LexiconScorer s;
    EXPECT_EQ(s.score("The cake recipe needs flour."), 0.0);
    EXPECT_LT(s.score("The cake recipe needs flour."), 0.6);
}

TEST(Scorer, ModifiersWeighHalf) {
    LexiconScorer s;
    EXPECT_DOUBLE_EQ(s.hits("a sudden and dramatic change happened quickly"), 1.5);
}

TEST(Scorer, CaseInsensitiveAndDeterministic) {
    LexiconScorer s;
    EXPECT_EQ(s.score("THEY FLED TO THE HILLS"), s.score("they fled to the hills"));
    EXPECT_EQ(s.score("they fled to the hills"), s.score("they fled to the hills"));
}

TEST(Scorer, EmptyRejected) {
    LexiconScorer s;
    EXPECT_THROW(s.score(""), std::invalid_argument);
}

TEST(Scorer, RangeProperty) {
    LexiconScorer s;
    std::string text;
    for (int i = 0; i < 50; ++i) {
        text += " walk quickly to";
        double v = s.score(text);
        EXPECT_GE(v, 0.0);
        EXPECT_LT(v, 1.0);
    }
}

TEST(Lexicon, ShippedFileMatchesBuiltin) {
    auto file = MovementLexicon::load(std::string(GEOMOVE_DATA_DIR) + "/lexicon.txt");
    auto builtin = MovementLexicon::builtin();
    EXPECT_EQ(file.verbs, builtin.verbs);
    EXPECT_EQ(file.adjectives, builtin.adjectives);
    EXPECT_EQ(file.adverbs, builtin.adverbs);
    EXPECT_EQ(file.prepositions, builtin.prepositions);
    EXPECT_EQ(file.verbs.size(), lexicon::movement_verbs().size());
}

TEST(Lexicon, ParseSectionsAndComments) {
    std::stringstream in("# movement words\n[verbs]\nRoam  # wander\n\n[adverbs]\nswiftly\n");
    auto lex = MovementLexicon::parse(in);
    EXPECT_EQ(lex.verbs.count("roam"), 1u);
    EXPECT_EQ(lex.adverbs.count("swiftly"), 1u);
    EXPECT_TRUE(lex.adjectives.empty());
    EXPECT_EQ(lex.prepositions.count("toward"), 1u);
    LexiconScorer s(lex);
    EXPECT_DOUBLE_EQ(s.hits("they roam swiftly"), 1.5);
}

TEST(Lexicon, EntryBeforeSectionRejected) {
    std::stringstream in("walk\n");
    EXPECT_THROW(MovementLexicon::parse(in), Error);
}

TEST(Filter, StrictInequalityAtThreshold) {
    std::vector<Statement> stmts(3);
    stmts[0].movement_score = 0.59;
    stmts[1].movement_score = 0.60;
    stmts[2].movement_score = 0.61;
    stmts[2].stmt_id = "keep";
    auto kept = filter_movement(stmts, {});
    ASSERT_EQ(kept.size(), 1u);
    EXPECT_EQ(kept[0].stmt_id, "keep");
}

TEST(Filter, ZeroThresholdKeepsAllPositive) {
    std::vector<Statement> stmts(4);
    for (int i = 0; i < 4; ++i) stmts[i].movement_score = 0.1 * (i + 1), stmts[i].stmt_id = std::to_string(i);
    MovementScorerConfig cfg;
    cfg.threshold = 0.0;
    auto kept = filter_movement(stmts, cfg);
    ASSERT_EQ(kept.size(), 4u);
    for (int i = 0; i < 4; ++i) EXPECT_EQ(kept[i].stmt_id, std::to_string(i));
}

TEST(Filter, EmptyInput) { EXPECT_TRUE(filter_movement({}, {}).empty()); }

TEST(Config, ThresholdValidated) {
    MovementScorerConfig cfg;
    cfg.threshold = 1.5;
    EXPECT_THROW(cfg.validate(), Error);
    cfg.threshold = -0.1;
    EXPECT_THROW(filter_movement({}, cfg), Error);
}
