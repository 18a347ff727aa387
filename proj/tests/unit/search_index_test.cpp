#include "geomove/error.hpp"
#include "geomove/search_index.hpp"
#include "geomove/serialize.hpp"

#include "search_oracle.hpp"
#include "synthetic.hpp"

#include <gtest/gtest.h>
#include <omp.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace geomove;
using namespace geomove::testing;
namespace fs = std::filesystem;
using std::chrono::year;

namespace {

const Gazetteer& gazetteer() {
    static const Gazetteer g = Gazetteer::load(std::string(GEOMOVE_DATA_DIR) + "/gazetteer.tsv");
    return g;
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("geomove_" + tag + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                            "_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::remove_all(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

SearchIndex build_index(const std::vector<Statement>& stmts, std::size_t commit_every) {
    SearchIndex idx({HexSizes{}, commit_every});
    for (const auto& s : stmts) idx.add(s);
    idx.commit();
    return idx;
}

Query random_query(std::mt19937& rng, const std::vector<Statement>& corpus) {
    Query q;
    std::uniform_int_distribution<int> coin(0, 3);
    const auto& vocab = synthetic_vocabulary();
    std::uniform_int_distribution<std::size_t> word(0, vocab.size() - 1);
    if (coin(rng)) {
        q.text = vocab[word(rng)];
        if (coin(rng) == 0) q.text += " " + vocab[word(rng)];
    }
    if (coin(rng) == 0) q.sources = {static_cast<Source>(rng() % kSourceCount)};
    if (coin(rng) == 0) q.classes = {static_cast<MovementClass>(rng() % 2)};
    if (coin(rng) == 0) {
        q.t0 = Date{year{2019} / 8 / 1} + std::chrono::days{int(rng() % 200)};
        q.t1 = *q.t0 + std::chrono::days{int(rng() % 200)};
    }
    if (coin(rng) != 0) q.min_score = 0.6;
    q.scale = static_cast<BinScale>(rng() % kBinScaleCount);
    if (coin(rng) == 0) {
        // Select bins taken from a random statement so the filter bites.
        const auto& s = corpus[rng() % corpus.size()];
        for (const auto& b : oracle_bins(s, *q.scale, HexSizes{})) q.bins.insert(b);
        q.bins.insert("nonexistent");
    }
    q.page_size = 1 + int(rng() % 100);
    return q;
}

bool ranks_before(const Statement* a, double ra, const Statement* b, double rb) {
    if (ra != rb) return ra > rb;
    if (a->published_at != b->published_at) return a->published_at > b->published_at;
    return a->stmt_id < b->stmt_id;
}

}  // namespace

TEST(Query, Validation) {
    auto kind = [](const Query& q) {
        try {
            q.validate();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::EmptyInput;  // sentinel: no error
    };
    Query ok;
    EXPECT_EQ(kind(ok), ErrorKind::EmptyInput);
    Query q = ok;
    q.page = -1;
    EXPECT_EQ(kind(q), ErrorKind::BadQuery);
    q = ok;
    q.page_size = 0;
    EXPECT_EQ(kind(q), ErrorKind::BadQuery);
    q.page_size = 101;
    EXPECT_EQ(kind(q), ErrorKind::BadQuery);
    q = ok;
    q.t0 = Date{year{2020} / 2 / 2};
    q.t1 = Date{year{2020} / 2 / 1};
    EXPECT_EQ(kind(q), ErrorKind::BadQuery);
    q = ok;
    q.bins = {"IN"};
    EXPECT_EQ(kind(q), ErrorKind::BadQuery);
    q = ok;
    q.min_score = std::nan("");
    EXPECT_EQ(kind(q), ErrorKind::BadQuery);
}

TEST(Query, Stems) {
    EXPECT_EQ(query_stems("Smuggling smuggled, GOLD"), (std::vector<std::string>{"smuggl", "gold"}));
    EXPECT_TRUE(query_stems("  ").empty());
}

TEST(SearchIndex, NotReadyBeforeCommit) {
    SearchIndex idx;
    EXPECT_EQ(idx.snapshot(), nullptr);
    try {
        idx.search({});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IndexNotReady);
    }
    idx.commit();
    ASSERT_NE(idx.snapshot(), nullptr);
    EXPECT_EQ(idx.search({}).total, 0);
}

TEST(SearchIndex, DuplicateIds) {
    auto stmts = synthetic_statements(gazetteer(), {.count = 3});
    SearchIndex idx;
    idx.add(stmts[0]);
    EXPECT_THROW(idx.add(stmts[0]), Error);  // pending
    idx.commit();
    try {
        idx.add(stmts[0]);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DuplicateId);
    }
    idx.add(stmts[1]);
    EXPECT_EQ(idx.pending(), 1u);
}

TEST(SearchIndex, AutoCommitAndSnapshotIsolation) {
    auto stmts = synthetic_statements(gazetteer(), {.count = 25, .seed = 3});
    SearchIndex idx({HexSizes{}, 10});
    for (int i = 0; i < 10; ++i) idx.add(stmts[i]);
    auto first = idx.snapshot();
    ASSERT_NE(first, nullptr);
    EXPECT_EQ(first->size(), 10u);
    for (int i = 10; i < 25; ++i) idx.add(stmts[i]);
    EXPECT_EQ(idx.pending(), 5u);
    EXPECT_EQ(idx.snapshot()->size(), 20u);
    // The earlier snapshot is unchanged.
    EXPECT_EQ(first->size(), 10u);
    EXPECT_EQ(first->search({}).total, 10);
    idx.commit();
    EXPECT_EQ(idx.snapshot()->size(), 25u);
    EXPECT_EQ(idx.snapshot()->segments().size(), 3u);
    EXPECT_NE(idx.snapshot()->find("syn24"), nullptr);
    EXPECT_EQ(first->find("syn24"), nullptr);
}

TEST(SearchIndex, BadOptions) {
    EXPECT_THROW(SearchIndex({HexSizes{1, 2}, 10}), Error);
    EXPECT_THROW(SearchIndex({HexSizes{}, 0}), Error);
}

TEST(SearchIndex, MatchesLinearScanOracle) {
    auto corpus = synthetic_statements(gazetteer(), {.count = 2500, .seed = 77, .low_score_fraction = 0.2});
    auto idx = build_index(corpus, 700);
    auto snap = idx.snapshot();
    std::mt19937 rng(4242);
    std::map<std::string, long> df_cache;
    for (int i = 0; i < 60; ++i) {
        Query q = random_query(rng, corpus);
        auto expect = oracle_search(corpus, q, snap->hex_sizes());
        auto got = snap->matches(q, Kernel::Serial);
        ASSERT_EQ(ids_of(got), ids_of(expect)) << "query " << i << " '" << q.text << "'";

        auto page = snap->search(q, Kernel::Serial);
        EXPECT_EQ(page.total, long(expect.size()));

        // Full ranking from the oracle, then the first page.
        std::vector<std::pair<const Statement*, double>> ranked;
        for (const auto* s : expect) ranked.push_back({s, oracle_relevance(corpus, *s, q.text, df_cache)});
        std::sort(ranked.begin(), ranked.end(),
                  [](const auto& a, const auto& b) { return ranks_before(a.first, a.second, b.first, b.second); });
        const std::size_t n = std::min<std::size_t>(ranked.size(), std::size_t(q.page_size));
        ASSERT_EQ(page.statements.size(), n);
        for (std::size_t k = 0; k < n; ++k) {
            EXPECT_NEAR(page.statements[k].relevance, ranked[k].second, 1e-9);
            // Ties in relevance are ordered by date then id, so ids line up.
            EXPECT_EQ(page.statements[k].stmt->stmt_id, ranked[k].first->stmt_id) << "query " << i << " rank " << k;
        }

        auto facet_expect = oracle_bin_facet(corpus, q, snap->hex_sizes());
        std::map<std::string, long> facet_got;
        for (const auto& b : page.bin_facet) facet_got[b.bin_id] = b.count;
        EXPECT_EQ(facet_got, facet_expect) << "query " << i;

        std::array<long, kSourceCount> src{};
        std::array<long, 2> cls{};
        for (const auto* s : expect) {
            ++src[std::size_t(s->source)];
            ++cls[std::size_t(s->impaired.value_or(MovementClass::Normal))];
        }
        EXPECT_EQ(page.source_counts, src);
        EXPECT_EQ(page.class_counts, cls);

        long timeline_total = 0;
        for (const auto& b : page.timeline) timeline_total += b.total();
        EXPECT_EQ(timeline_total, page.total);
    }
}

TEST(SearchIndex, SerialAndParallelKernelsAgree) {
    const int saved = omp_get_max_threads();
    omp_set_num_threads(4);
    auto corpus = synthetic_statements(gazetteer(), {.count = 12000, .seed = 5, .low_score_fraction = 0.3});
    auto idx = build_index(corpus, 10000);
    auto snap = idx.snapshot();
    std::mt19937 rng(8);
    for (int i = 0; i < 20; ++i) {
        Query q = random_query(rng, corpus);
        auto a = snap->matches(q, Kernel::Serial);
        auto b = snap->matches(q, Kernel::Parallel);
        EXPECT_EQ(a, b) << "query " << i;
        auto pa = snap->search(q, Kernel::Serial), pb = snap->search(q, Kernel::Parallel);
        EXPECT_EQ(pa.total, pb.total);
        ASSERT_EQ(pa.statements.size(), pb.statements.size());
        for (std::size_t k = 0; k < pa.statements.size(); ++k) EXPECT_EQ(pa.statements[k].stmt, pb.statements[k].stmt);
    }
    omp_set_num_threads(saved);
}

TEST(SearchIndex, PaginationCoversAllMatchesOnce) {
    auto corpus = synthetic_statements(gazetteer(), {.count = 500, .seed = 12});
    auto idx = build_index(corpus, 10000);
    Query q;
    q.text = "gold travel";
    q.page_size = 7;
    std::set<std::string> seen;
    long total = -1;
    std::vector<StatementHit> all;
    for (q.page = 0;; ++q.page) {
        auto page = idx.search(q);
        total = page.total;
        if (page.statements.empty()) break;
        for (const auto& h : page.statements) {
            EXPECT_TRUE(seen.insert(h.stmt->stmt_id).second);
            all.push_back(h);
        }
    }
    EXPECT_EQ(long(seen.size()), total);
    for (std::size_t i = 1; i < all.size(); ++i)
        EXPECT_FALSE(ranks_before(all[i].stmt, all[i].relevance, all[i - 1].stmt, all[i - 1].relevance));
    // A page past the end is empty but keeps the total.
    q.page = 1000;
    auto past = idx.search(q);
    EXPECT_TRUE(past.statements.empty());
    EXPECT_EQ(past.total, total);
}

TEST(SearchIndex, StemmedFormsRetrieveEachOther) {
    auto corpus = synthetic_statements(gazetteer(), {.count = 800, .seed = 2});
    auto idx = build_index(corpus, 10000);
    auto snap = idx.snapshot();
    std::set<std::string> base;
    for (const char* w : {"smuggle", "smuggled", "smuggling"}) {
        Query q;
        q.text = w;
        auto ids = ids_of(snap->matches(q));
        EXPECT_FALSE(ids.empty());
        if (base.empty()) base = ids;
        EXPECT_EQ(ids, base) << w;
    }
}

TEST(SearchIndex, BinPositionIsMeanOfMentions) {
    auto corpus = synthetic_statements(gazetteer(), {.count = 300, .seed = 6});
    auto idx = build_index(corpus, 100);
    auto snap = idx.snapshot();
    double lon = 0, lat = 0;
    long n = 0;
    for (const auto& s : corpus)
        for (const auto& m : s.places)
            if (m.resolved.country_code == "IN") {
                lon += m.resolved.lon;
                lat += m.resolved.lat;
                ++n;
            }
    ASSERT_GT(n, 0);
    auto pos = snap->bin_position(BinScale::Country, "IN");
    ASSERT_TRUE(pos);
    EXPECT_NEAR(pos->lon, lon / double(n), 1e-9);
    EXPECT_NEAR(pos->lat, lat / double(n), 1e-9);
    EXPECT_FALSE(snap->bin_position(BinScale::Country, "ZZ"));
}

TEST(Serialize, StatementRoundTrip) {
    auto corpus = synthetic_statements(gazetteer(), {.count = 50, .seed = 31});
    for (const auto& s : corpus) {
        auto back = statement_from_json(to_json(s));
        EXPECT_EQ(back.stmt_id, s.stmt_id);
        EXPECT_EQ(back.doc_id, s.doc_id);
        EXPECT_EQ(back.source, s.source);
        EXPECT_EQ(back.published_at, s.published_at);
        EXPECT_EQ(back.text, s.text);
        EXPECT_EQ(back.movement_score, s.movement_score);
        EXPECT_EQ(back.impaired, s.impaired);
        EXPECT_EQ(back.url, s.url);
        EXPECT_EQ(back.tokens, s.tokens);
        ASSERT_EQ(back.places.size(), s.places.size());
        for (std::size_t i = 0; i < s.places.size(); ++i) {
            EXPECT_EQ(back.places[i].begin, s.places[i].begin);
            EXPECT_EQ(back.places[i].end, s.places[i].end);
            EXPECT_EQ(back.places[i].resolved.place_id, s.places[i].resolved.place_id);
            EXPECT_EQ(back.places[i].resolved.admin1_code, s.places[i].resolved.admin1_code);
            EXPECT_EQ(back.places[i].resolved.lat, s.places[i].resolved.lat);
        }
    }
}

TEST(IndexStore, SaveLoadAndRebuildAgree) {
    TempDir dir("store");
    auto corpus = synthetic_statements(gazetteer(), {.count = 1500, .seed = 19, .low_score_fraction = 0.1});
    auto idx = build_index(corpus, 400);
    idx.save(dir.path);
    for (const char* f : {"VERSION", "meta.json", "statements.jsonl", "postings.bin"})
        EXPECT_TRUE(fs::exists(dir.path / f)) << f;

    auto loaded = SearchIndex::load(dir.path);
    auto rebuilt = SearchIndex::load(dir.path, true);
    EXPECT_EQ(loaded.snapshot()->size(), corpus.size());
    EXPECT_EQ(rebuilt.snapshot()->segments().size(), 1u);  // default commit_every exceeds 1500
    std::mt19937 rng(1);
    for (int i = 0; i < 25; ++i) {
        Query q = random_query(rng, corpus);
        auto a = idx.search(q), b = loaded.search(q), c = rebuilt.search(q);
        EXPECT_EQ(a.total, b.total);
        EXPECT_EQ(a.total, c.total);
        ASSERT_EQ(a.statements.size(), b.statements.size());
        ASSERT_EQ(a.statements.size(), c.statements.size());
        for (std::size_t k = 0; k < a.statements.size(); ++k) {
            EXPECT_EQ(a.statements[k].stmt->stmt_id, b.statements[k].stmt->stmt_id);
            EXPECT_EQ(a.statements[k].stmt->stmt_id, c.statements[k].stmt->stmt_id);
            EXPECT_NEAR(a.statements[k].relevance, b.statements[k].relevance, 1e-9);
        }
    }
    // A loaded index keeps accepting statements.
    auto extra = synthetic_statements(gazetteer(), {.count = 1, .seed = 99});
    extra[0].stmt_id = "extra";
    loaded.add(extra[0]);
    loaded.commit();
    EXPECT_EQ(loaded.snapshot()->size(), corpus.size() + 1);
    EXPECT_THROW(loaded.add(corpus[0]), Error);
}

TEST(IndexStore, HexSizesPersist) {
    TempDir dir("hex");
    SearchIndex idx({HexSizes{8, 2}, 100});
    for (const auto& s : synthetic_statements(gazetteer(), {.count = 20})) idx.add(s);
    idx.commit();
    idx.save(dir.path);
    auto loaded = SearchIndex::load(dir.path);
    EXPECT_EQ(loaded.options().hex.large, 8);
    EXPECT_EQ(loaded.options().hex.small, 2);
}

TEST(IndexStore, CorruptDirectoriesAreRejected) {
    TempDir dir("corrupt");
    auto corpus = synthetic_statements(gazetteer(), {.count = 40, .seed = 23});
    auto idx = build_index(corpus, 100);
    auto expect_file_error = [&](const char* what) {
        try {
            SearchIndex::load(dir.path);
            ADD_FAILURE() << what;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::FileError) << what << ": " << e.what();
        }
    };
    expect_file_error("missing dir");

    idx.save(dir.path);
    EXPECT_NO_THROW(SearchIndex::load(dir.path));

    std::ofstream(dir.path / "VERSION") << "geomove-index 99\n";
    expect_file_error("version");
    idx.save(dir.path);

    {
        std::ofstream f(dir.path / "postings.bin", std::ios::binary | std::ios::trunc);
        f << "GMPI";
    }
    expect_file_error("truncated postings");
    // Rebuild ignores the broken postings.
    EXPECT_EQ(SearchIndex::load(dir.path, true).snapshot()->size(), corpus.size());
    idx.save(dir.path);

    {
        std::ofstream f(dir.path / "postings.bin", std::ios::binary | std::ios::trunc);
        f << "XXXX";
    }
    expect_file_error("magic");
    idx.save(dir.path);

    {
        std::ofstream f(dir.path / "statements.jsonl", std::ios::app);
        f << "{not json}\n";
    }
    expect_file_error("statement row");
    idx.save(dir.path);

    fs::remove(dir.path / "meta.json");
    expect_file_error("meta");
}
