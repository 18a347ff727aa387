#include "geomove/analytics.hpp"
#include "geomove/error.hpp"
#include "geomove/geoparser.hpp"
#include "geomove/text.hpp"

#include "synthetic.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

using namespace geomove;
using std::chrono::year;

namespace {

const Gazetteer& gazetteer() {
    static const Gazetteer g = Gazetteer::load(std::string(GEOMOVE_DATA_DIR) + "/gazetteer.tsv");
    return g;
}

Statement stmt(std::initializer_list<std::int64_t> ids, std::string text = "") {
    Statement s;
    s.text = std::move(text);
    s.tokens = token_strings(s.text);
    for (auto id : ids) {
        PlaceMention m;
        m.resolved = *gazetteer().by_id(id);
        s.places.push_back(m);
    }
    return s;
}

Statement dated(int y, unsigned m, unsigned d, MovementClass c) {
    Statement s;
    s.published_at = Date{year{y} / m / d};
    s.impaired = c;
    return s;
}

}  // namespace

TEST(PlacePairs, SydneyNewYorkLondon) {
    auto s = geoparse("Flights from Sydney to New York via London were cancelled.", gazetteer());
    Statement st;
    st.places = s;
    ASSERT_EQ(st.places.size(), 3u);
    auto pairs = place_pairs(st);
    ASSERT_EQ(pairs.size(), 3u);
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& p : pairs) {
        EXPECT_LT(p.a, p.b);
        got.insert({p.a, p.b});
    }
    EXPECT_EQ(got, (std::set<std::pair<std::string, std::string>>{{"3026", "3034"}, {"3026", "3040"}, {"3034", "3040"}}));
}

TEST(PlacePairs, RepeatedMentionsCollapse) {
    EXPECT_EQ(place_pairs(stmt({3001, 3001})).size(), 0u);
    EXPECT_EQ(place_pairs(stmt({3001})).size(), 0u);
    EXPECT_EQ(place_pairs(stmt({3001, 3004, 3001})).size(), 1u);
}

TEST(PlacePairs, MatchesBruteForce) {
    std::mt19937 rng(17);
    const auto& entries = gazetteer().entries();
    std::uniform_int_distribution<std::size_t> pick(0, 30);  // small pool forces repeats
    std::uniform_int_distribution<int> count(0, 9);
    for (int trial = 0; trial < 300; ++trial) {
        Statement s;
        for (int i = count(rng); i > 0; --i) {
            PlaceMention m;
            m.resolved = entries[pick(rng)];
            s.places.push_back(m);
        }
        std::set<std::pair<std::string, std::string>> expect;
        std::set<std::int64_t> distinct;
        for (std::size_t i = 0; i < s.places.size(); ++i) {
            distinct.insert(s.places[i].resolved.place_id);
            for (std::size_t j = 0; j < s.places.size(); ++j) {
                auto a = std::to_string(s.places[i].resolved.place_id);
                auto b = std::to_string(s.places[j].resolved.place_id);
                if (a < b) expect.insert({a, b});
            }
        }
        auto pairs = place_pairs(s);
        const std::size_t m = distinct.size();
        EXPECT_EQ(pairs.size(), m * (m - (m > 0)) / 2);
        std::set<std::pair<std::string, std::string>> got;
        for (const auto& p : pairs) got.insert({p.a, p.b});
        EXPECT_EQ(got.size(), pairs.size());
        EXPECT_EQ(got, expect);
    }
}

TEST(Connections, LiftedToBinsAndFiltered) {
    // Mumbai(MH) Chennai(TN) x2, Pune(MH)+Mumbai(MH) inside one bin, Kochi(KL)+Chennai(TN),
    // Tokyo+Osaka elsewhere.
    std::vector<Statement> v{stmt({3001, 3004}), stmt({3002, 3005, 3001}), stmt({3002, 3001}),
                             stmt({3008, 3004}), stmt({3042, 3043}), stmt({3042, 3001})};
    auto c = aggregate_connections(v, BinScale::Admin1, {"IN.TN"}, BreakMethod::EqualInterval, 2);
    ASSERT_EQ(c.pairs.size(), 2u);
    EXPECT_EQ(c.pairs[0], (PlacePair{"IN.MH", "IN.TN", 2, 1}));
    EXPECT_EQ(c.pairs[1], (PlacePair{"IN.KL", "IN.TN", 1, 0}));
    ASSERT_TRUE(c.breaks);
    EXPECT_EQ(c.breaks->bounds, std::vector<double>{1.5});

    auto country = aggregate_connections(v, BinScale::Country, {"JP"}, BreakMethod::Jenks, 3);
    ASSERT_EQ(country.pairs.size(), 1u);
    EXPECT_EQ(country.pairs[0].a, "IN");
    EXPECT_EQ(country.pairs[0].b, "JP");

    auto none = aggregate_connections(v, BinScale::Admin1, {"US.TX"}, BreakMethod::Jenks, 3);
    EXPECT_TRUE(none.pairs.empty());
    EXPECT_FALSE(none.breaks);

    EXPECT_THROW(aggregate_connections(v, BinScale::Admin1, {}, BreakMethod::Jenks, 3), std::invalid_argument);
}

TEST(Connections, WeightsMatchPairCountsAtHexScale) {
    auto stmts = geomove::testing::synthetic_statements(gazetteer(), {.count = 400, .seed = 4});
    const HexSizes hex;
    std::map<std::pair<std::string, std::string>, long> expect;
    std::set<std::string> all;
    for (const auto& s : stmts) {
        std::set<std::string> bins;
        for (const auto& m : s.places) bins.insert(bin_of(m.resolved, BinScale::HexLarge, hex).bin_id);
        all.insert(bins.begin(), bins.end());
        for (const auto& a : bins)
            for (const auto& b : bins)
                if (a < b) ++expect[std::make_pair(a, b)];
    }
    auto c = aggregate_connections(stmts, BinScale::HexLarge, all, BreakMethod::Quantile, 4, hex);
    std::map<std::pair<std::string, std::string>, long> got;
    for (const auto& p : c.pairs) got[std::make_pair(p.a, p.b)] = p.weight;
    EXPECT_EQ(got, expect);
    for (std::size_t i = 1; i < c.pairs.size(); ++i) {
        EXPECT_GE(c.pairs[i - 1].weight, c.pairs[i].weight);
        EXPECT_GE(c.pairs[i - 1].class_index, c.pairs[i].class_index);
    }
}

TEST(Bigrams, StopwordsRemovedAndRanked) {
    std::vector<Statement> v{stmt({}, "Gold smuggling in the port."), stmt({}, "gold smuggling rings were busted"),
                             stmt({}, "The port of Chennai saw gold smuggling.")};
    auto top = top_bigrams(v, {}, 3);
    ASSERT_FALSE(top.empty());
    EXPECT_EQ(top[0], (BigramCount{"gold", "smuggling", 3}));
    for (const auto& b : top) {
        EXPECT_FALSE(is_stopword(b.first));
        EXPECT_FALSE(is_stopword(b.second));
    }
    // Ties are alphabetical.
    for (std::size_t i = 1; i < top.size(); ++i)
        if (top[i - 1].count == top[i].count) {
            EXPECT_LT(top[i - 1].text(), top[i].text());
        }
}

TEST(Bigrams, ExclusionComesFromTheTopTwentyPool) {
    std::vector<Statement> v;
    // 25 distinct bigrams with counts 25..1.
    for (int i = 0; i < 25; ++i)
        for (int r = 0; r < 25 - i; ++r) v.push_back(stmt({}, "alpha" + std::string(1, char('a' + i)) + " omega"));
    auto full = top_bigrams(v, {}, 20);
    ASSERT_EQ(full.size(), 20u);
    EXPECT_EQ(full[0].count, 25);
    EXPECT_EQ(full[19].count, 6);

    auto ex = top_bigrams(v, {"alphaa omega", "alphab omega"}, 20);
    // Excluding two leaves 18; nothing is pulled in from below the pool.
    ASSERT_EQ(ex.size(), 18u);
    EXPECT_EQ(ex[0].text(), "alphac omega");
    EXPECT_EQ(ex.back().count, 6);

    EXPECT_EQ(top_bigrams(v, {}, 5).size(), 5u);
    EXPECT_THROW(top_bigrams(v, {}, 0), std::invalid_argument);
    EXPECT_THROW(top_bigrams(v, {}, 21), std::invalid_argument);
    EXPECT_TRUE(top_bigrams(std::vector<Statement>{}, {}, 10).empty());
}

TEST(Histogram, MonthlyBucketsAndClasses) {
    std::vector<Statement> v{dated(2019, 8, 3, MovementClass::Impaired), dated(2019, 8, 31, MovementClass::Normal),
                             dated(2019, 10, 1, MovementClass::Normal), dated(2020, 1, 15, MovementClass::Impaired),
                             dated(2020, 2, 1, MovementClass::Normal)};
    v[2].impaired.reset();  // unlabeled counts as normal
    auto h = temporal_histogram(v, Date{year{2019} / 8 / 1}, Date{year{2020} / 1 / 31});
    ASSERT_EQ(h.size(), 6u);
    EXPECT_EQ(format_year_month(h[0].month), "2019-08");
    EXPECT_EQ(h[0].impaired, 1);
    EXPECT_EQ(h[0].normal, 1);
    EXPECT_EQ(h[1].total(), 0);
    EXPECT_EQ(h[2].normal, 1);
    EXPECT_EQ(h[5].impaired, 1);

    // Partial months at the edges still produce a bucket.
    auto one = temporal_histogram(v, Date{year{2019} / 8 / 10}, Date{year{2019} / 8 / 10});
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].total(), 0);

    try {
        temporal_histogram(v, Date{year{2020} / 1 / 2}, Date{year{2020} / 1 / 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadRange);
    }
}

TEST(Histogram, ConservationProperty) {
    std::mt19937 rng(21);
    auto stmts = geomove::testing::synthetic_statements(gazetteer(), {.count = 3000, .seed = 9, .span_days = 700});
    std::uniform_int_distribution<int> off(0, 700);
    const Date base = Date{year{2019} / 8 / 1};
    for (int trial = 0; trial < 50; ++trial) {
        Date a = base + std::chrono::days{off(rng)}, b = base + std::chrono::days{off(rng)};
        if (a > b) std::swap(a, b);
        long expect_total = 0, expect_impaired = 0;
        for (const auto& s : stmts)
            if (s.published_at >= a && s.published_at <= b) {
                ++expect_total;
                expect_impaired += s.impaired == MovementClass::Impaired;
            }
        long total = 0, impaired = 0;
        auto h = temporal_histogram(stmts, a, b);
        for (const auto& bucket : h) {
            total += bucket.total();
            impaired += bucket.impaired;
        }
        EXPECT_EQ(total, expect_total);
        EXPECT_EQ(impaired, expect_impaired);
        EXPECT_EQ(h.front().month, month_of(a));
        EXPECT_EQ(h.back().month, month_of(b));
    }
}
