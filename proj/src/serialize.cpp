#include "geomove/serialize.hpp"

#include "geomove/error.hpp"
#include "geomove/text.hpp"

namespace geomove {

using nlohmann::json;

json to_json(const GazetteerEntry& e) {
    return json{{"place_id", e.place_id},         {"name", e.name},
                {"alternate_names", e.alternate_names}, {"lat", e.lat},
                {"lon", e.lon},                   {"feature_class", std::string(1, e.feature_class)},
                {"country_code", e.country_code}, {"admin1_code", e.admin1_code},
                {"population", e.population}};
}

GazetteerEntry gazetteer_entry_from_json(const json& j) {
    GazetteerEntry e;
    e.place_id = j.at("place_id").get<std::int64_t>();
    e.name = j.at("name").get<std::string>();
    e.alternate_names = j.value("alternate_names", std::vector<std::string>{});
    e.lat = j.at("lat").get<double>();
    e.lon = j.at("lon").get<double>();
    auto fc = j.value("feature_class", std::string("P"));
    e.feature_class = fc.empty() ? 'P' : fc[0];
    e.country_code = j.value("country_code", std::string());
    e.admin1_code = j.value("admin1_code", std::string());
    e.population = j.value("population", std::int64_t{0});
    return e;
}

json to_json(const PlaceMention& m) {
    return json{{"start", m.begin},
                {"end", m.end},
                {"surface", m.surface},
                {"confidence", m.confidence},
                {"place", to_json(m.resolved)}};
}

PlaceMention place_mention_from_json(const json& j) {
    PlaceMention m;
    m.begin = j.at("start").get<std::size_t>();
    m.end = j.at("end").get<std::size_t>();
    m.surface = j.value("surface", std::string());
    m.confidence = j.value("confidence", 0.0);
    m.resolved = gazetteer_entry_from_json(j.at("place"));
    return m;
}

json to_json(const Statement& s) {
    json places = json::array();
    for (const auto& m : s.places) places.push_back(to_json(m));
    json j{{"stmt_id", s.stmt_id},
           {"doc_id", s.doc_id},
           {"source", std::string(to_string(s.source))},
           {"published_at", format_date(s.published_at)},
           {"text", s.text},
           {"movement_score", s.movement_score},
           {"places", std::move(places)}};
    j["impaired"] = s.impaired ? json(std::string(to_string(*s.impaired))) : json(nullptr);
    j["url"] = s.url ? json(*s.url) : json(nullptr);
    return j;
}

Statement statement_from_json(const json& j) {
    Statement s;
    try {
        s.stmt_id = j.at("stmt_id").get<std::string>();
        s.doc_id = j.at("doc_id").get<std::string>();
        auto src = parse_source(j.at("source").get<std::string>());
        if (!src) throw Error(ErrorKind::MalformedRecord, "bad source in statement " + s.stmt_id);
        s.source = *src;
        auto date = parse_iso_date(j.at("published_at").get<std::string>());
        if (!date) throw Error(ErrorKind::BadTimestamp, "statement " + s.stmt_id);
        s.published_at = *date;
        s.text = j.at("text").get<std::string>();
        s.movement_score = j.at("movement_score").get<double>();
        if (j.contains("impaired") && !j["impaired"].is_null()) {
            auto c = parse_movement_class(j["impaired"].get<std::string>());
            if (!c) throw Error(ErrorKind::MalformedRecord, "bad label in statement " + s.stmt_id);
            s.impaired = *c;
        }
        for (const auto& p : j.value("places", json::array())) s.places.push_back(place_mention_from_json(p));
        if (j.contains("url") && !j["url"].is_null()) s.url = j["url"].get<std::string>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::MalformedRecord, std::string("statement record: ") + e.what());
    }
    s.tokens = token_strings(s.text);
    return s;
}

}  // namespace geomove
