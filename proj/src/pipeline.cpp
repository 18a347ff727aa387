#include "geomove/pipeline.hpp"

#include "geomove/error.hpp"

#include <exception>
#include <fstream>
#include <stdexcept>

namespace geomove {

IngestStats& IngestStats::operator+=(const IngestStats& o) {
    records += o.records;
    documents += o.documents;
    dropped_empty += o.dropped_empty;
    statements += o.statements;
    movement += o.movement;
    with_places += o.with_places;
    mentions += o.mentions;
    impaired += o.impaired;
    normal += o.normal;
    return *this;
}

std::vector<Statement> process_document(const Document& doc, const Pipeline& p, IngestStats* stats) {
    if (!p.gazetteer || !p.scorer || !p.rules) throw std::invalid_argument("pipeline resources not set");
    IngestStats local;
    Document clean = doc;
    clean.body = clean_text(doc.body);
    std::vector<Statement> out;
    if (clean.body.empty()) {
        ++local.dropped_empty;
    } else {
        ++local.documents;
        auto stmts = segment_statements(clean, p.segment);
        local.statements += static_cast<long>(stmts.size());
        for (auto& s : stmts) {
            s.movement_score = p.scorer->score(s.text);
            if (!passes_threshold(s.movement_score, p.threshold)) continue;
            ++local.movement;
            s.places = geoparse(s.text, *p.gazetteer, s.source);
            if (!s.places.empty()) ++local.with_places;
            local.mentions += static_cast<long>(s.places.size());
            s.impaired = label_text(s.text, *p.rules);
            ++(*s.impaired == MovementClass::Impaired ? local.impaired : local.normal);
            out.push_back(std::move(s));
        }
    }
    if (stats) *stats += local;
    return out;
}

IngestResult ingest_lines(const std::vector<std::string>& lines, std::optional<Source> source,
                          const ParseOptions& parse, const Pipeline& p, Kernel kernel) {
    IngestResult res;
    std::vector<Document> docs;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].find_first_not_of(" \t\r") == std::string::npos) continue;
        ++res.stats.records;
        try {
            docs.push_back(parse_record(lines[i], source, parse));
        } catch (const Error& e) {
            throw Error(e.kind(), "line " + std::to_string(i + 1) + ": " + e.detail());
        }
    }

    const long n = static_cast<long>(docs.size());
    std::vector<std::vector<Statement>> per_doc(docs.size());
    std::vector<IngestStats> per_stats(docs.size());
    std::vector<std::exception_ptr> errors(docs.size());
    auto run = [&](long i) {
        try {
            per_doc[i] = process_document(docs[i], p, &per_stats[i]);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (kernel == Kernel::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (long i = 0; i < n; ++i) run(i);
    } else {
        for (long i = 0; i < n; ++i) run(i);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    for (std::size_t i = 0; i < docs.size(); ++i) {
        res.stats += per_stats[i];
        for (auto& s : per_doc[i]) res.statements.push_back(std::move(s));
    }
    return res;
}

IngestResult ingest_file(const std::filesystem::path& path, std::optional<Source> source,
                         const ParseOptions& parse, const Pipeline& p, Kernel kernel) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::FileError, path.string() + ": cannot open");
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
    try {
        return ingest_lines(lines, source, parse, p, kernel);
    } catch (const Error& e) {
        throw Error(e.kind(), path.string() + ": " + e.detail());
    }
}

}  // namespace geomove
