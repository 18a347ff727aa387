#include "geomove/search_index.hpp"

#include "geomove/error.hpp"
#include "geomove/serialize.hpp"
#include "geomove/stemmer.hpp"
#include "geomove/text.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace geomove {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr char kVersionLine[] = "geomove-index 1";
constexpr char kPostingsMagic[4] = {'G', 'M', 'P', 'I'};
// Below this many candidates the parallel kernel runs on one thread.
constexpr std::size_t kParallelMin = 4096;

std::int32_t day_number(Date d) { return static_cast<std::int32_t>(d.time_since_epoch().count()); }

using TermCounts = std::vector<std::pair<std::string, std::uint32_t>>;

TermCounts term_counts(const std::vector<std::string>& tokens) {
    std::unordered_map<std::string, std::uint32_t> tf;
    for (const auto& t : tokens) ++tf[stem(to_lower(t))];
    return {tf.begin(), tf.end()};
}

using Postings = std::unordered_map<std::string, std::vector<Segment::Posting>>;

std::shared_ptr<const Segment> build_segment(std::vector<Statement> stmts, const HexSizes& hex,
                                             Postings* preloaded) {
    auto seg = std::make_shared<Segment>();
    const std::size_t n = stmts.size();
    seg->source.resize(n);
    seg->label.resize(n);
    seg->day.resize(n);
    seg->score.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = stmts[i];
        seg->source[i] = static_cast<std::uint8_t>(s.source);
        seg->label[i] = static_cast<std::uint8_t>(s.impaired.value_or(MovementClass::Normal));
        seg->day[i] = day_number(s.published_at);
        seg->score[i] = s.movement_score;
    }

    if (preloaded) {
        seg->postings = std::move(*preloaded);
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (auto& [term, tf] : term_counts(stmts[i].tokens))
                seg->postings[term].push_back({static_cast<std::uint32_t>(i), tf});
    }

    for (int sc = 0; sc < kBinScaleCount; ++sc) {
        const auto scale = static_cast<BinScale>(sc);
        auto& offsets = seg->bin_offsets[sc];
        auto& ids = seg->bin_ids[sc];
        auto& infos = seg->bins[sc];
        auto& lookup = seg->bin_lookup[sc];
        offsets.reserve(n + 1);
        offsets.push_back(0);
        for (const auto& s : stmts) {
            const auto start = ids.size();
            for (const auto& m : s.places) {
                if (!is_hex(scale) && !continent_of(m.resolved.country_code)) continue;
                AdminBin b = bin_of(m.resolved, scale, hex);
                auto [it, fresh] = lookup.try_emplace(b.bin_id, static_cast<std::uint32_t>(infos.size()));
                if (fresh) infos.push_back({b.bin_id, 0, 0, 0, b.coarse});
                auto& info = infos[it->second];
                info.lon_sum += m.resolved.lon;
                info.lat_sum += m.resolved.lat;
                ++info.mentions;
                if (std::find(ids.begin() + static_cast<long>(start), ids.end(), it->second) == ids.end())
                    ids.push_back(it->second);
            }
            offsets.push_back(static_cast<std::uint32_t>(ids.size()));
        }
    }
    seg->stmts = std::move(stmts);
    return seg;
}

// Per-query state for filtering one segment.
struct SegmentFilter {
    const Segment* seg = nullptr;
    unsigned source_mask = 0;
    unsigned class_mask = 0;
    std::int32_t d0 = INT32_MIN, d1 = INT32_MAX;
    bool has_min = false;
    double min_score = 0.0;
    const std::vector<std::uint32_t>* domain = nullptr;  // candidate docs; null = every doc
    int bin_scale = 0;
    std::vector<char> bin_selected;  // by segment bin ordinal; empty = no spatial filter

    std::size_t domain_size() const { return domain ? domain->size() : seg->size(); }
    std::uint32_t doc_at(std::size_t i) const { return domain ? (*domain)[i] : static_cast<std::uint32_t>(i); }

    bool passes_base(std::uint32_t d) const {
        if (!((source_mask >> seg->source[d]) & 1u)) return false;
        if (!((class_mask >> seg->label[d]) & 1u)) return false;
        if (seg->day[d] < d0 || seg->day[d] > d1) return false;
        if (has_min && !(seg->score[d] > min_score)) return false;
        return true;
    }

    bool passes_bins(std::uint32_t d) const {
        if (bin_selected.empty()) return true;
        const auto& off = seg->bin_offsets[bin_scale];
        const auto& ids = seg->bin_ids[bin_scale];
        for (auto k = off[d]; k < off[d + 1]; ++k)
            if (bin_selected[ids[k]]) return true;
        return false;
    }
};

struct FilterOutput {
    std::vector<std::uint32_t> base;     // pass every filter except the bin filter
    std::vector<std::uint32_t> matched;  // pass every filter
};

void filter_range(const SegmentFilter& f, std::size_t begin, std::size_t end, FilterOutput& out) {
    for (std::size_t i = begin; i < end; ++i) {
        const auto d = f.doc_at(i);
        if (!f.passes_base(d)) continue;
        out.base.push_back(d);
        if (f.passes_bins(d)) out.matched.push_back(d);
    }
}

FilterOutput filter_serial(const SegmentFilter& f) {
    FilterOutput out;
    filter_range(f, 0, f.domain_size(), out);
    return out;
}

// Static contiguous chunks, concatenated in chunk order, so the output is
// identical to the serial kernel.
FilterOutput filter_parallel(const SegmentFilter& f) {
    const std::size_t n = f.domain_size();
#ifdef _OPENMP
    if (n >= kParallelMin && omp_get_max_threads() > 1) {
        const int threads = omp_get_max_threads();
        std::vector<FilterOutput> parts(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
        {
            const auto t = static_cast<std::size_t>(omp_get_thread_num());
            const auto nt = static_cast<std::size_t>(omp_get_num_threads());
            const std::size_t begin = n * t / nt, end = n * (t + 1) / nt;
            filter_range(f, begin, end, parts[t]);
        }
        FilterOutput out;
        for (auto& p : parts) {
            out.base.insert(out.base.end(), p.base.begin(), p.base.end());
            out.matched.insert(out.matched.end(), p.matched.begin(), p.matched.end());
        }
        return out;
    }
#endif
    FilterOutput out;
    filter_range(f, 0, n, out);
    return out;
}

bool ranks_before(const StatementHit& x, const StatementHit& y) {
    if (x.relevance != y.relevance) return x.relevance > y.relevance;
    if (x.stmt->published_at != y.stmt->published_at) return x.stmt->published_at > y.stmt->published_at;
    return x.stmt->stmt_id < y.stmt->stmt_id;
}

template <class T>
void write_pod(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T read_pod(std::istream& is, const fs::path& path) {
    T v{};
    if (!is.read(reinterpret_cast<char*>(&v), sizeof v))
        throw Error(ErrorKind::FileError, path.string() + ": truncated");
    return v;
}

}  // namespace

std::vector<std::string> query_stems(std::string_view text) {
    std::vector<std::string> out;
    for (const auto& t : token_strings(text)) {
        auto s = stem(to_lower(t));
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    }
    return out;
}

void Query::validate() const {
    if (page < 0) throw Error(ErrorKind::BadQuery, "page must be >= 0");
    if (page_size < 1 || page_size > kMaxPageSize)
        throw Error(ErrorKind::BadQuery, "page_size must be in [1," + std::to_string(kMaxPageSize) + "]");
    if (t0 && t1 && *t0 > *t1) throw Error(ErrorKind::BadQuery, "t0 is after t1");
    if (!bins.empty() && !scale) throw Error(ErrorKind::BadQuery, "bins given without a scale");
    if (min_score && !std::isfinite(*min_score)) throw Error(ErrorKind::BadQuery, "min_score must be finite");
}

std::shared_ptr<const Segment> Segment::build(std::vector<Statement> stmts, const HexSizes& hex) {
    return build_segment(std::move(stmts), hex, nullptr);
}

IndexSnapshot::IndexSnapshot(std::vector<std::shared_ptr<const Segment>> segments, HexSizes hex)
    : segments_(std::move(segments)), hex_(hex) {
    for (const auto& seg : segments_) {
        base_.push_back(total_);
        total_ += seg->size();
        for (const auto& s : seg->stmts) {
            by_id_.emplace(s.stmt_id, &s);
            if (!first_ || s.published_at < *first_) first_ = s.published_at;
            if (!last_ || s.published_at > *last_) last_ = s.published_at;
        }
    }
}

const Statement* IndexSnapshot::find(const std::string& stmt_id) const {
    auto it = by_id_.find(stmt_id);
    return it == by_id_.end() ? nullptr : it->second;
}

std::optional<LonLat> IndexSnapshot::bin_position(BinScale scale, const std::string& bin_id, bool* coarse) const {
    const int sc = static_cast<int>(scale);
    double lon = 0, lat = 0;
    long n = 0;
    for (const auto& seg : segments_) {
        auto it = seg->bin_lookup[sc].find(bin_id);
        if (it == seg->bin_lookup[sc].end()) continue;
        const auto& info = seg->bins[sc][it->second];
        lon += info.lon_sum;
        lat += info.lat_sum;
        n += info.mentions;
        if (coarse) *coarse = info.coarse;
    }
    if (!n) return std::nullopt;
    return LonLat{lon / double(n), lat / double(n)};
}

std::vector<const Statement*> IndexSnapshot::all() const {
    std::vector<const Statement*> out;
    out.reserve(total_);
    for (const auto& seg : segments_)
        for (const auto& s : seg->stmts) out.push_back(&s);
    return out;
}

struct IndexSnapshot::Scan {
    std::vector<StatementHit> matched;
    std::map<std::string, BinFacet> facet;
    std::map<std::string, std::pair<double, double>> facet_pos;  // lon, lat sums
};

IndexSnapshot::Scan IndexSnapshot::scan(const Query& q, Kernel kernel, bool want_facets) const {
    q.validate();
    Scan out;
    const auto stems = query_stems(q.text);
    const bool text_mode = !stems.empty();

    // Global idf over all segments.
    std::vector<double> idf(stems.size(), 0.0);
    for (std::size_t t = 0; t < stems.size(); ++t) {
        std::size_t df = 0;
        for (const auto& seg : segments_) {
            auto it = seg->postings.find(stems[t]);
            if (it != seg->postings.end()) df += it->second.size();
        }
        if (df) idf[t] = std::log(1.0 + double(total_) / double(df));
    }

    unsigned source_mask = 0, class_mask = 0;
    if (q.sources.empty()) source_mask = (1u << kSourceCount) - 1;
    for (auto s : q.sources) source_mask |= 1u << static_cast<unsigned>(s);
    if (q.classes.empty()) class_mask = 3u;
    for (auto c : q.classes) class_mask |= 1u << static_cast<unsigned>(c);
    const int bin_scale = static_cast<int>(q.scale.value_or(BinScale::Country));
    const int facet_scale = static_cast<int>(q.facet_scale());

    for (const auto& seg : segments_) {
        SegmentFilter f;
        f.seg = seg.get();
        f.source_mask = source_mask;
        f.class_mask = class_mask;
        if (q.t0) f.d0 = day_number(*q.t0);
        if (q.t1) f.d1 = day_number(*q.t1);
        f.has_min = q.min_score.has_value();
        f.min_score = q.min_score.value_or(0.0);
        f.bin_scale = bin_scale;
        if (!q.bins.empty()) {
            f.bin_selected.assign(seg->bins[bin_scale].size(), 0);
            for (const auto& b : q.bins) {
                auto it = seg->bin_lookup[bin_scale].find(b);
                if (it != seg->bin_lookup[bin_scale].end()) f.bin_selected[it->second] = 1;
            }
        }

        std::vector<double> rel;
        std::vector<std::uint32_t> domain;
        if (text_mode) {
            rel.assign(seg->size(), 0.0);
            for (std::size_t t = 0; t < stems.size(); ++t) {
                auto it = seg->postings.find(stems[t]);
                if (it == seg->postings.end()) continue;
                for (const auto& p : it->second) {
                    if (rel[p.doc] == 0.0) domain.push_back(p.doc);
                    rel[p.doc] += double(p.tf) * idf[t];
                }
            }
            std::sort(domain.begin(), domain.end());
            f.domain = &domain;
        }

        FilterOutput fo = kernel == Kernel::Serial ? filter_serial(f) : filter_parallel(f);

        for (auto d : fo.matched) out.matched.push_back({&seg->stmts[d], text_mode ? rel[d] : 0.0});

        if (want_facets) {
            const auto& off = seg->bin_offsets[facet_scale];
            const auto& ids = seg->bin_ids[facet_scale];
            std::vector<long> counts(seg->bins[facet_scale].size(), 0);
            for (auto d : fo.base)
                for (auto k = off[d]; k < off[d + 1]; ++k) ++counts[ids[k]];
            for (std::size_t b = 0; b < counts.size(); ++b) {
                if (!counts[b]) continue;
                const auto& info = seg->bins[facet_scale][b];
                auto& bf = out.facet[info.id];
                bf.bin_id = info.id;
                bf.count += counts[b];
                bf.coarse = info.coarse;
            }
        }
    }

    if (want_facets) {
        // Mean position over every indexed mention of the bin, not only matches.
        for (const auto& seg : segments_) {
            for (const auto& info : seg->bins[facet_scale]) {
                auto it = out.facet.find(info.id);
                if (it == out.facet.end()) continue;
                auto& acc = out.facet_pos[info.id];
                acc.first += info.lon_sum;
                acc.second += info.lat_sum;
            }
        }
    }
    return out;
}

std::vector<const Statement*> IndexSnapshot::matches(const Query& q, Kernel kernel) const {
    auto sc = scan(q, kernel, false);
    std::vector<const Statement*> out;
    out.reserve(sc.matched.size());
    for (const auto& h : sc.matched) out.push_back(h.stmt);
    return out;
}

ResultPage IndexSnapshot::search(const Query& q, Kernel kernel) const {
    auto sc = scan(q, kernel, true);
    ResultPage page;
    page.total = static_cast<long>(sc.matched.size());
    page.facet_scale = q.facet_scale();

    for (const auto& h : sc.matched) {
        ++page.source_counts[static_cast<std::size_t>(h.stmt->source)];
        ++page.class_counts[static_cast<std::size_t>(h.stmt->impaired.value_or(MovementClass::Normal))];
    }

    // Mention counts per bin, to turn the position sums into means.
    std::map<std::string, long> mentions;
    for (const auto& seg : segments_)
        for (const auto& info : seg->bins[static_cast<int>(page.facet_scale)])
            if (sc.facet.count(info.id)) mentions[info.id] += info.mentions;
    for (auto& [id, bf] : sc.facet) {
        const auto& pos = sc.facet_pos[id];
        const double n = double(std::max(1L, mentions[id]));
        bf.mean_position = {pos.first / n, pos.second / n};
        page.bin_facet.push_back(std::move(bf));
    }

    const auto lo = q.t0 ? q.t0 : first_;
    const auto hi = q.t1 ? q.t1 : last_;
    if (lo && hi) {
        std::vector<const Statement*> refs;
        refs.reserve(sc.matched.size());
        for (const auto& h : sc.matched) refs.push_back(h.stmt);
        page.timeline = temporal_histogram(refs, *lo, *hi);
    }

    const auto start = static_cast<std::size_t>(q.page) * static_cast<std::size_t>(q.page_size);
    if (start < sc.matched.size()) {
        const auto stop = std::min(sc.matched.size(), start + static_cast<std::size_t>(q.page_size));
        std::partial_sort(sc.matched.begin(), sc.matched.begin() + static_cast<long>(stop), sc.matched.end(),
                          ranks_before);
        page.statements.assign(sc.matched.begin() + static_cast<long>(start),
                               sc.matched.begin() + static_cast<long>(stop));
    }
    return page;
}

SearchIndex::SearchIndex(IndexOptions opts) : opts_(opts) {
    opts_.hex.validate();
    if (opts_.commit_every == 0) throw Error(ErrorKind::BadConfig, "commit_every must be positive");
}

SearchIndex::SearchIndex(SearchIndex&& other) noexcept
    : opts_(other.opts_),
      segments_(std::move(other.segments_)),
      pending_(std::move(other.pending_)),
      ids_(std::move(other.ids_)) {
    std::lock_guard lock(other.snap_mu_);
    snap_ = std::move(other.snap_);
}

void SearchIndex::add(Statement stmt) {
    if (!ids_.insert(stmt.stmt_id).second)
        throw Error(ErrorKind::DuplicateId, "statement " + stmt.stmt_id + " already indexed");
    pending_.push_back(std::move(stmt));
    if (pending_.size() >= opts_.commit_every) commit();
}

void SearchIndex::commit() {
    if (!pending_.empty()) segments_.push_back(Segment::build(std::move(pending_), opts_.hex));
    pending_.clear();
    auto snap = std::make_shared<const IndexSnapshot>(segments_, opts_.hex);
    std::lock_guard lock(snap_mu_);
    snap_ = std::move(snap);
}

std::shared_ptr<const IndexSnapshot> SearchIndex::snapshot() const {
    std::lock_guard lock(snap_mu_);
    return snap_;
}

ResultPage SearchIndex::search(const Query& q) const {
    auto snap = snapshot();
    if (!snap) throw Error(ErrorKind::IndexNotReady, "no committed snapshot");
    return snap->search(q);
}

void SearchIndex::save(const fs::path& dir) const {
    auto snap = snapshot();
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorKind::FileError, dir.string() + ": " + ec.message());

    auto open = [&](const char* name, std::ios::openmode mode) {
        std::ofstream os(dir / name, mode);
        if (!os) throw Error(ErrorKind::FileError, (dir / name).string() + ": cannot write");
        return os;
    };

    const std::size_t n = snap ? snap->size() : 0;
    {
        auto os = open("VERSION", std::ios::out | std::ios::trunc);
        os << kVersionLine << '\n';
    }
    {
        json meta{{"format_version", kIndexFormatVersion},
                  {"statements", n},
                  {"hex", {{"large", opts_.hex.large}, {"small", opts_.hex.small}}}};
        auto os = open("meta.json", std::ios::out | std::ios::trunc);
        os << meta.dump(2) << '\n';
    }
    {
        auto os = open("statements.jsonl", std::ios::out | std::ios::trunc);
        if (snap)
            for (const auto* s : snap->all()) os << to_json(*s).dump() << '\n';
    }
    {
        // Merged postings with global doc numbers, terms sorted for a stable file.
        std::map<std::string, std::vector<Segment::Posting>> merged;
        if (snap) {
            std::uint32_t base = 0;
            for (const auto& seg : snap->segments()) {
                for (const auto& [term, list] : seg->postings) {
                    auto& dst = merged[term];
                    for (const auto& p : list) dst.push_back({p.doc + base, p.tf});
                }
                base += static_cast<std::uint32_t>(seg->size());
            }
        }
        auto os = open("postings.bin", std::ios::out | std::ios::trunc | std::ios::binary);
        os.write(kPostingsMagic, sizeof kPostingsMagic);
        write_pod<std::uint32_t>(os, kIndexFormatVersion);
        write_pod<std::uint64_t>(os, n);
        write_pod<std::uint64_t>(os, merged.size());
        for (const auto& [term, list] : merged) {
            write_pod<std::uint32_t>(os, static_cast<std::uint32_t>(term.size()));
            os.write(term.data(), static_cast<std::streamsize>(term.size()));
            write_pod<std::uint64_t>(os, list.size());
            for (const auto& p : list) {
                write_pod(os, p.doc);
                write_pod(os, p.tf);
            }
        }
        if (!os) throw Error(ErrorKind::FileError, (dir / "postings.bin").string() + ": write failed");
    }
}

SearchIndex SearchIndex::load(const fs::path& dir, bool rebuild) {
    auto fail = [&](const std::string& what) { return Error(ErrorKind::FileError, dir.string() + ": " + what); };

    std::ifstream vf(dir / "VERSION");
    std::string version;
    if (!vf || !std::getline(vf, version)) throw fail("not an index directory (no VERSION)");
    if (version != kVersionLine) throw fail("unsupported index version '" + version + "'");

    json meta;
    {
        std::ifstream mf(dir / "meta.json");
        if (!mf) throw fail("missing meta.json");
        try {
            mf >> meta;
        } catch (const json::exception& e) {
            throw fail(std::string("bad meta.json: ") + e.what());
        }
    }
    IndexOptions opts;
    try {
        opts.hex.large = meta.at("hex").at("large").get<double>();
        opts.hex.small = meta.at("hex").at("small").get<double>();
    } catch (const json::exception& e) {
        throw fail(std::string("bad meta.json: ") + e.what());
    }
    const auto expected = meta.value("statements", std::uint64_t{0});

    std::vector<Statement> stmts;
    {
        std::ifstream sf(dir / "statements.jsonl");
        if (!sf) throw fail("missing statements.jsonl");
        std::string line;
        std::size_t row = 0;
        while (std::getline(sf, line)) {
            ++row;
            if (line.empty()) continue;
            try {
                stmts.push_back(statement_from_json(json::parse(line)));
            } catch (const json::exception& e) {
                throw fail("statements.jsonl row " + std::to_string(row) + ": " + e.what());
            }
        }
    }
    if (stmts.size() != expected)
        throw fail("meta.json lists " + std::to_string(expected) + " statements, store has " +
                   std::to_string(stmts.size()));

    SearchIndex idx(opts);
    for (const auto& s : stmts)
        if (!idx.ids_.insert(s.stmt_id).second) throw fail("duplicate stmt_id " + s.stmt_id + " in store");

    if (rebuild) {
        // Same segmenting as a fresh ingest.
        for (std::size_t i = 0; i < stmts.size(); i += opts.commit_every) {
            auto end = std::min(stmts.size(), i + opts.commit_every);
            idx.segments_.push_back(Segment::build({std::make_move_iterator(stmts.begin() + long(i)),
                                                    std::make_move_iterator(stmts.begin() + long(end))},
                                                   opts.hex));
        }
    } else {
        const auto path = dir / "postings.bin";
        std::ifstream pf(path, std::ios::binary);
        if (!pf) throw fail("missing postings.bin (use rebuild)");
        char magic[4];
        if (!pf.read(magic, 4) || std::memcmp(magic, kPostingsMagic, 4) != 0) throw fail("postings.bin: bad magic");
        if (read_pod<std::uint32_t>(pf, path) != std::uint32_t(kIndexFormatVersion))
            throw fail("postings.bin: version mismatch");
        if (read_pod<std::uint64_t>(pf, path) != stmts.size()) throw fail("postings.bin: statement count mismatch");
        const auto terms = read_pod<std::uint64_t>(pf, path);
        Postings postings;
        for (std::uint64_t t = 0; t < terms; ++t) {
            const auto len = read_pod<std::uint32_t>(pf, path);
            if (len > 4096) throw fail("postings.bin: corrupt term length");
            std::string term(len, '\0');
            if (!pf.read(term.data(), len)) throw fail("postings.bin: truncated");
            const auto count = read_pod<std::uint64_t>(pf, path);
            if (count > stmts.size()) throw fail("postings.bin: corrupt posting count");
            auto& list = postings[term];
            list.reserve(count);
            for (std::uint64_t k = 0; k < count; ++k) {
                Segment::Posting p{read_pod<std::uint32_t>(pf, path), read_pod<std::uint32_t>(pf, path)};
                if (p.doc >= stmts.size() || p.tf == 0) throw fail("postings.bin: posting out of range");
                list.push_back(p);
            }
        }
        if (!stmts.empty()) idx.segments_.push_back(build_segment(std::move(stmts), opts.hex, &postings));
    }
    idx.commit();
    return idx;
}

}  // namespace geomove
