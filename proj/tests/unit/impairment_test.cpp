#include "geomove/error.hpp"
#include "geomove/impairment.hpp"
#include "geomove/tagger.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

using namespace geomove;

namespace {

const TaggedToken& find_token(const std::vector<TaggedToken>& toks, std::string_view surface) {
    for (const auto& t : toks)
        if (t.surface == surface) return t;
    throw std::runtime_error("token not found: " + std::string(surface));
}

double round2(double x) { return std::round(x * 100.0) / 100.0; }

std::set<std::string> ids(const RuleSet& rs) {
    std::set<std::string> s;
    for (const auto& r : rs.rules) s.insert(r.rule_id);
    return s;
}

}  // namespace

TEST(Tagger, RegularAndDoubledPastTense) {
    auto t = pos_tag("Our flight was canceled.");
    EXPECT_EQ(find_token(t, "canceled").lemma, "cancel");
    EXPECT_EQ(find_token(t, "canceled").pos, Pos::Verb);
    EXPECT_EQ(lemmatize("cancelled"), "cancel");
    EXPECT_EQ(lemmatize("postponed"), "postpone");
    EXPECT_EQ(lemmatize("prevented"), "prevent");
    EXPECT_EQ(lemmatize("avoiding"), "avoid");
    EXPECT_EQ(lemmatize("cancellations"), "cancel");
}

TEST(Tagger, PluralNoun) {
    auto t = pos_tag("All flights left early.");
    EXPECT_EQ(find_token(t, "flights").lemma, "flight");
    EXPECT_EQ(find_token(t, "flights").pos, Pos::Noun);
}

TEST(Tagger, ClosedClassWord) {
    auto t = pos_tag("She does not have cancer.");
    EXPECT_EQ(find_token(t, "not").lemma, "not");
    EXPECT_EQ(find_token(t, "not").pos, Pos::Other);
}

TEST(Tagger, IrregularMovementVerbs) {
    const std::pair<const char*, const char*> cases[] = {
        {"went", "go"},    {"ran", "run"},     {"flew", "fly"},     {"fled", "flee"},   {"leapt", "leap"},
        {"crept", "creep"}, {"slid", "slide"}, {"slunk", "slink"},  {"sped", "speed"},  {"strode", "stride"},
        {"swept", "sweep"}, {"trod", "tread"}, {"trodden", "tread"}, {"flown", "fly"},  {"dove", "dive"}};
    for (auto [form, lemma] : cases) EXPECT_EQ(lemmatize(form), lemma) << form;
}

TEST(Tagger, RegularMovementInflections) {
    EXPECT_EQ(lemmatize("travelled"), "travel");
    EXPECT_EQ(lemmatize("traveled"), "travel");
    EXPECT_EQ(lemmatize("hopped"), "hop");
    EXPECT_EQ(lemmatize("moving"), "move");
    EXPECT_EQ(lemmatize("marches"), "march");
    EXPECT_EQ(lemmatize("scurried"), "scurry");
    EXPECT_EQ(lemmatize("cities"), "city");
}

TEST(Tagger, EveryTokenTagged) {
    std::string text = "Hundreds of migrants walked slowly toward the distant border, didn't they?";
    auto t = pos_tag(text);
    EXPECT_EQ(t.size(), 12u);
    for (const auto& tok : t) {
        EXPECT_FALSE(tok.lemma.empty());
        for (char c : tok.lemma) EXPECT_FALSE(std::isupper(static_cast<unsigned char>(c)));
    }
    EXPECT_EQ(find_token(t, "slowly").pos, Pos::Adverb);
    EXPECT_EQ(find_token(t, "distant").pos, Pos::Adjective);
    EXPECT_EQ(find_token(t, "walked").pos, Pos::Verb);
}

TEST(Tagger, EmptyTextRejected) { EXPECT_THROW(pos_tag(""), std::invalid_argument); }

TEST(Rules, BaselineNegationWord) {
    auto r = apply_ruleset(pos_tag("She does not have cancer."), baseline_ruleset());
    EXPECT_EQ(r.label, MovementClass::Impaired);
    EXPECT_EQ(r.fired, std::vector<std::string>{"exact:not"});
}

TEST(Rules, BaselineVerbPrefixAndModifiedRemoval) {
    auto toks = pos_tag("He dismissed the idea.");
    auto b = apply_ruleset(toks, baseline_ruleset());
    EXPECT_EQ(b.label, MovementClass::Impaired);
    EXPECT_NE(std::find(b.fired.begin(), b.fired.end(), "verb-prefix:dis"), b.fired.end());
    EXPECT_EQ(apply_ruleset(toks, modified_ruleset()).label, MovementClass::Normal);
}

TEST(Rules, NoTriggerIsNormal) {
    auto r = apply_ruleset(pos_tag("The train arrived."), baseline_ruleset());
    EXPECT_EQ(r.label, MovementClass::Normal);
    EXPECT_TRUE(r.fired.empty());
}

TEST(Rules, ModifiedLemmaRules) {
    EXPECT_EQ(label_text("Our flight to England was canceled.", modified_ruleset()), MovementClass::Impaired);
    EXPECT_EQ(label_text("The match was postponed.", modified_ruleset()), MovementClass::Impaired);
    auto r = apply_ruleset(pos_tag("We could not fly because the flight was canceled."), modified_ruleset());
    EXPECT_EQ(r.fired, (std::vector<std::string>{"exact:not", "lemma:cancel"}));
}

TEST(Rules, NoFlights) {
    auto r = apply_ruleset(pos_tag("no flights"), baseline_ruleset());
    EXPECT_EQ(r.label, MovementClass::Impaired);
    EXPECT_EQ(r.fired, std::vector<std::string>{"exact:no"});
}

TEST(Rules, ContractionNegation) {
    EXPECT_EQ(label_text("We didn't travel to Lima.", modified_ruleset()), MovementClass::Impaired);
}

TEST(Rules, PrefixNeedsLongerSurface) {
    ImpairmentRule r{"adj-prefix:a", RulePos::Adjective, MatchKind::Prefix, "a"};
    EXPECT_FALSE(rule_matches(r, {"a", "a", Pos::Adjective}));
    EXPECT_TRUE(rule_matches(r, {"able", "able", Pos::Adjective}));
    EXPECT_FALSE(rule_matches(r, {"able", "able", Pos::Verb}));
}

TEST(Rules, ModifiedDeltaIsExact) {
    auto base = ids(baseline_ruleset());
    auto mod = ids(modified_ruleset());
    std::set<std::string> removed, added;
    std::set_difference(base.begin(), base.end(), mod.begin(), mod.end(), std::inserter(removed, removed.end()));
    std::set_difference(mod.begin(), mod.end(), base.begin(), base.end(), std::inserter(added, added.end()));
    EXPECT_EQ(removed, (std::set<std::string>{"verb-prefix:de", "verb-prefix:mis", "verb-prefix:dis",
                                              "adj-prefix:a", "adj-prefix:dis"}));
    EXPECT_EQ(added, (std::set<std::string>{"lemma:cancel", "lemma:postpone", "lemma:prevent", "lemma:avoid"}));
}

TEST(Rules, ShippedFilesMatchBuiltins) {
    for (const auto& rs : {baseline_ruleset(), modified_ruleset()}) {
        auto loaded = load_ruleset(std::string(GEOMOVE_DATA_DIR) + "/rules/" + rs.name + ".tsv");
        EXPECT_EQ(loaded.name, rs.name);
        EXPECT_EQ(loaded.rules, rs.rules);
    }
}

TEST(Rules, RoundTripThroughText) {
    std::stringstream ss;
    write_ruleset(ss, modified_ruleset());
    auto back = parse_ruleset(ss, "modified");
    EXPECT_EQ(back.rules, modified_ruleset().rules);
}

TEST(Rules, ParseErrors) {
    std::stringstream dup("a\tany\texact\tno\na\tany\texact\tnot\n");
    EXPECT_THROW(parse_ruleset(dup, "x"), Error);
    std::stringstream bad_pos("a\tpronoun\texact\tno\n");
    EXPECT_THROW(parse_ruleset(bad_pos, "x"), Error);
    std::stringstream upper("a\tany\tlemma\tCancel\n");
    EXPECT_THROW(parse_ruleset(upper, "x"), Error);
    EXPECT_THROW(load_ruleset("/nonexistent/rules.tsv"), Error);
}

TEST(Rules, OrderInsensitiveAndMonotone) {
    std::mt19937 rng(7);
    const char* texts[] = {"Flights were not canceled but postponed.", "The dismal ship departed.",
                           "Nobody moved to the aimless town.", "They avoided the careless driver."};
    auto rs = baseline_ruleset();
    auto extra = modified_ruleset();
    for (const char* text : texts) {
        auto toks = pos_tag(text);
        auto ref = apply_ruleset(toks, rs);
        for (int k = 0; k < 5; ++k) {
            auto shuffled = rs;
            std::shuffle(shuffled.rules.begin(), shuffled.rules.end(), rng);
            auto r = apply_ruleset(toks, shuffled);
            EXPECT_EQ(r.fired, ref.fired);
            EXPECT_EQ(r.label, ref.label);
        }
        // Adding rules never turns Impaired into Normal.
        auto bigger = rs;
        for (const auto& r : extra.rules)
            if (std::none_of(bigger.rules.begin(), bigger.rules.end(),
                             [&](const ImpairmentRule& x) { return x.rule_id == r.rule_id; }))
                bigger.rules.push_back(r);
        if (ref.label == MovementClass::Impaired) {
            EXPECT_EQ(apply_ruleset(toks, bigger).label, MovementClass::Impaired);
        }
    }
}

TEST(Evaluate, PerfectPredictor) {
    std::vector<MovementClass> gold(10, MovementClass::Impaired);
    gold.resize(20, MovementClass::Normal);
    EXPECT_EQ(evaluate(gold, gold), (ConfusionMatrix{10, 0, 0, 10}));
}

TEST(Evaluate, AllNormalPrediction) {
    std::vector<MovementClass> gold(5, MovementClass::Impaired);
    std::vector<MovementClass> pred(5, MovementClass::Normal);
    EXPECT_EQ(evaluate(pred, gold).fn, 5);
}

TEST(Evaluate, TableOneReconstruction) {
    std::vector<MovementClass> pred, gold;
    auto push = [&](int n, MovementClass p, MovementClass g) {
        for (int i = 0; i < n; ++i) pred.push_back(p), gold.push_back(g);
    };
    push(23, MovementClass::Impaired, MovementClass::Impaired);
    push(27, MovementClass::Impaired, MovementClass::Normal);
    push(8, MovementClass::Normal, MovementClass::Impaired);
    push(42, MovementClass::Normal, MovementClass::Normal);
    EXPECT_EQ(evaluate(pred, gold), (ConfusionMatrix{23, 27, 8, 42}));
}

TEST(Evaluate, LengthMismatch) {
    try {
        evaluate({MovementClass::Normal}, {});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
    }
}

TEST(Metrics, TableOneValues) {
    auto m = metrics({23, 27, 8, 42});
    EXPECT_DOUBLE_EQ(round2(m.precision), 0.46);
    EXPECT_DOUBLE_EQ(round2(m.recall), 0.74);
    EXPECT_DOUBLE_EQ(round2(m.f1), 0.57);
    EXPECT_DOUBLE_EQ(round2(m.accuracy), 0.65);
}

TEST(Metrics, PerfectAndDegenerate) {
    auto p = metrics({1, 0, 0, 1});
    EXPECT_EQ(p.precision, 1.0);
    EXPECT_EQ(p.recall, 1.0);
    EXPECT_EQ(p.f1, 1.0);
    EXPECT_EQ(p.accuracy, 1.0);
    auto d = metrics({0, 0, 5, 5});
    EXPECT_EQ(d.precision, 0.0);
    EXPECT_EQ(d.recall, 0.0);
    EXPECT_EQ(d.f1, 0.0);
    EXPECT_EQ(d.accuracy, 0.5);
    EXPECT_THROW(metrics({0, 0, 0, 0}), Error);
}

TEST(Metrics, BoundsProperty) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> cell(0, 50);
    for (int i = 0; i < 500; ++i) {
        ConfusionMatrix cm{cell(rng), cell(rng), cell(rng), cell(rng)};
        if (cm.tp + cm.fp + cm.fn + cm.tn == 0) continue;
        auto m = metrics(cm);
        for (double v : {m.precision, m.recall, m.f1, m.accuracy}) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
        }
        EXPECT_LE(m.f1, std::max(m.precision, m.recall) + 1e-12);
        EXPECT_EQ(m.accuracy, double(cm.tp + cm.tn) / double(cm.tp + cm.fp + cm.fn + cm.tn));
    }
}
