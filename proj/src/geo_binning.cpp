#include "geomove/geo_binning.hpp"

#include "geomove/error.hpp"
#include "geomove/text.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace geomove {

namespace {

const double kSqrt3 = std::sqrt(3.0);

// ISO 3166-1 alpha-2 -> continent, following the GeoNames country table.
const std::unordered_map<std::string_view, std::string_view>& continent_table() {
    static const auto table = [] {
        std::unordered_map<std::string_view, std::string_view> t;
        auto add = [&](std::string_view cont, std::string_view codes) {
            for (std::size_t i = 0; i + 2 <= codes.size(); i += 3) t.emplace(codes.substr(i, 2), cont);
        };
        add("AF",
            "DZ AO BJ BW BF BI CM CV CF TD KM CD CG CI DJ EG GQ ER ET GA GM GH GN GW KE LS LR LY MG MW ML MR MU "
            "YT MA MZ NA NE NG RE RW SH ST SN SC SL SO ZA SS SD SZ TZ TG TN UG EH ZM ZW");
        add("AN", "AQ BV GS HM TF");
        add("AS",
            "AF AM AZ BH BD BT IO BN KH CN CX CC CY GE HK IN ID IR IQ IL JP JO KZ KW KG LA LB MO MY MV MN MM NP "
            "KP OM PK PS PH QA SA SG KR LK SY TW TJ TH TL TR TM AE UZ VN YE");
        add("EU",
            "AX AL AD AT BY BE BA BG HR CZ DK EE FO FI FR DE GI GR GG HU IS IE IM IT JE XK LV LI LT LU MT MD MC "
            "ME NL MK NO PL PT RO RU SM RS SK SI ES SJ SE CH UA GB VA");
        add("NA",
            "AI AG AW BS BB BZ BM BQ VG CA KY CR CU CW DM DO SV GL GD GP GT HT HN JM MQ MX MS NI PA PR BL KN LC "
            "MF PM VC SX TT TC US VI");
        add("OC", "AS AU CK FJ PF GU KI MH FM NR NC NZ NU NF MP PW PG PN WS SB TK TO TV UM VU WF");
        add("SA", "AR BO BR CL CO EC FK GF GY PY PE SR UY VE");
        return t;
    }();
    return table;
}

void check_coords(double lat, double lon) {
    if (!(lat >= -90.0 && lat <= 90.0) || !(lon >= -180.0 && lon <= 180.0))
        throw Error(ErrorKind::OutOfRange,
                    "coordinate (" + std::to_string(lat) + ", " + std::to_string(lon) + ") out of range");
}

LonLat ring_centroid(const std::vector<std::vector<LonLat>>& rings) {
    double a_sum = 0, cx = 0, cy = 0, mx = 0, my = 0;
    std::size_t n = 0;
    for (const auto& ring : rings) {
        for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
            double cross = ring[i].lon * ring[i + 1].lat - ring[i + 1].lon * ring[i].lat;
            a_sum += cross;
            cx += (ring[i].lon + ring[i + 1].lon) * cross;
            cy += (ring[i].lat + ring[i + 1].lat) * cross;
            mx += ring[i].lon;
            my += ring[i].lat;
            ++n;
        }
    }
    if (std::abs(a_sum) > 1e-12) return {cx / (3.0 * a_sum), cy / (3.0 * a_sum)};
    if (n == 0) return {};
    return {mx / double(n), my / double(n)};
}

std::vector<LonLat> parse_ring(const nlohmann::json& coords) {
    std::vector<LonLat> ring;
    for (const auto& p : coords) ring.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    if (!ring.empty() && !(ring.front() == ring.back())) ring.push_back(ring.front());
    return ring;
}

}  // namespace

std::string_view to_string(BinScale s) {
    switch (s) {
        case BinScale::Continent: return "continent";
        case BinScale::Country: return "country";
        case BinScale::Admin1: return "admin1";
        case BinScale::HexLarge: return "hex_large";
        case BinScale::HexSmall: return "hex_small";
    }
    return "country";
}

std::optional<BinScale> parse_bin_scale(std::string_view s) {
    std::string l = to_lower(s);
    for (auto scale : {BinScale::Continent, BinScale::Country, BinScale::Admin1, BinScale::HexLarge, BinScale::HexSmall})
        if (l == to_string(scale)) return scale;
    return std::nullopt;
}

void HexSizes::validate() const {
    if (!(small > 0.0 && large > small))
        throw Error(ErrorKind::BadConfig, "hex sizes must satisfy large > small > 0");
}

double HexSizes::for_scale(BinScale s) const {
    if (s == BinScale::HexLarge) return large;
    if (s == BinScale::HexSmall) return small;
    throw std::invalid_argument("not a hex scale");
}

HexCoord hex_axial(double lat, double lon, double cell_size) {
    check_coords(lat, lon);
    if (!(cell_size > 0.0)) throw std::invalid_argument("cell_size must be positive");
    double fq = (2.0 / 3.0 * lon) / cell_size;
    double fr = (-1.0 / 3.0 * lon + kSqrt3 / 3.0 * lat) / cell_size;
    double fx = fq, fz = fr, fy = -fx - fz;
    double rx = std::round(fx), ry = std::round(fy), rz = std::round(fz);
    double dx = std::abs(rx - fx), dy = std::abs(ry - fy), dz = std::abs(rz - fz);
    if (dx > dy && dx > dz) rx = -ry - rz;
    else if (dy <= dz) rz = -rx - ry;
    return {static_cast<int>(rx), static_cast<int>(rz)};
}

std::string hex_id(HexCoord h) { return std::to_string(h.q) + ":" + std::to_string(h.r); }

std::string assign_hex(double lat, double lon, double cell_size) { return hex_id(hex_axial(lat, lon, cell_size)); }

std::optional<HexCoord> parse_hex_id(std::string_view id) {
    auto colon = id.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    try {
        std::size_t used = 0;
        std::string q(id.substr(0, colon)), r(id.substr(colon + 1));
        HexCoord h;
        h.q = std::stoi(q, &used);
        if (used != q.size()) return std::nullopt;
        h.r = std::stoi(r, &used);
        if (used != r.size()) return std::nullopt;
        return h;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

LonLat hex_center(HexCoord h, double cell_size) {
    return {cell_size * 1.5 * h.q, cell_size * kSqrt3 * (h.r + h.q / 2.0)};
}

std::vector<LonLat> hex_polygon(HexCoord h, double cell_size) {
    LonLat c = hex_center(h, cell_size);
    std::vector<LonLat> ring;
    for (int i = 0; i < 6; ++i) {
        double ang = M_PI / 3.0 * i;
        ring.push_back({c.lon + cell_size * std::cos(ang), c.lat + cell_size * std::sin(ang)});
    }
    ring.push_back(ring.front());
    return ring;
}

std::optional<std::string_view> continent_of(std::string_view country_code) {
    const auto& t = continent_table();
    auto it = t.find(country_code);
    if (it == t.end()) return std::nullopt;
    return it->second;
}

AdminBin assign_admin(const GazetteerEntry& place, BinScale scale) {
    if (is_hex(scale)) throw std::invalid_argument("assign_admin: hex scale");
    auto cont = continent_of(place.country_code);
    if (!cont) throw Error(ErrorKind::UnknownCountry, "'" + place.country_code + "' for " + place.name);
    switch (scale) {
        case BinScale::Continent: return {std::string(*cont), false};
        case BinScale::Country: return {place.country_code, false};
        default:
            if (place.admin1_code.empty()) return {place.country_code, true};
            return {place.country_code + "." + place.admin1_code, false};
    }
}

AdminBin bin_of(const GazetteerEntry& place, BinScale scale, const HexSizes& hex) {
    if (is_hex(scale)) return {assign_hex(place.lat, place.lon, hex.for_scale(scale)), false};
    return assign_admin(place, scale);
}

Boundaries Boundaries::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::FileError, "cannot open boundaries " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

Boundaries Boundaries::parse(std::string_view geojson) {
    Boundaries b;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(geojson);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::MalformedRecord, std::string("boundaries: ") + e.what());
    }
    if (j.value("type", "") != "FeatureCollection" || !j.contains("features"))
        throw Error(ErrorKind::MalformedRecord, "boundaries: expected a FeatureCollection");
    std::size_t idx = 0;
    for (const auto& f : j["features"]) {
        ++idx;
        try {
            const auto& props = f.at("properties");
            auto str = [&](const char* k) {
                return props.contains(k) && props[k].is_string() ? props[k].get<std::string>() : std::string();
            };
            std::string cc = str("country_code"), a1 = str("admin1_code"), cont = str("continent");
            std::pair<BinScale, std::string> key;
            if (!cc.empty() && !a1.empty()) key = {BinScale::Admin1, cc + "." + a1};
            else if (!cc.empty()) key = {BinScale::Country, cc};
            else if (!cont.empty()) key = {BinScale::Continent, cont};
            else throw Error(ErrorKind::MalformedRecord, "no country_code, admin1_code or continent");

            BoundaryFeature feat;
            const auto& geom = f.at("geometry");
            std::string type = geom.at("type").get<std::string>();
            if (type == "Polygon") {
                feat.rings.push_back(parse_ring(geom.at("coordinates").at(0)));
            } else if (type == "MultiPolygon") {
                for (const auto& poly : geom.at("coordinates")) feat.rings.push_back(parse_ring(poly.at(0)));
            } else {
                throw Error(ErrorKind::MalformedRecord, "unsupported geometry " + type);
            }
            feat.centroid = ring_centroid(feat.rings);
            b.features_[key] = std::move(feat);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::MalformedRecord, "boundaries feature " + std::to_string(idx) + ": " + e.what());
        } catch (const Error& e) {
            throw Error(ErrorKind::MalformedRecord, "boundaries feature " + std::to_string(idx) + ": " + e.what());
        }
    }
    return b;
}

const BoundaryFeature* Boundaries::find(BinScale scale, const std::string& bin_id) const {
    auto it = features_.find({scale, bin_id});
    return it == features_.end() ? nullptr : &it->second;
}

void attach_geometry(GeoBin& bin, const HexSizes& hex, const Boundaries* boundaries, LonLat fallback_centroid) {
    if (is_hex(bin.scale)) {
        auto h = parse_hex_id(bin.bin_id);
        if (!h) throw std::invalid_argument("bad hex id " + bin.bin_id);
        double size = hex.for_scale(bin.scale);
        bin.geometry = hex_polygon(*h, size);
        bin.centroid = hex_center(*h, size);
        return;
    }
    // A coarse Admin1 bin is a whole country.
    BinScale lookup_scale = bin.coarse ? BinScale::Country : bin.scale;
    if (const BoundaryFeature* f = boundaries ? boundaries->find(lookup_scale, bin.bin_id) : nullptr) {
        bin.geometry = f->rings.empty() ? std::vector<LonLat>{} : f->rings.front();
        bin.centroid = f->centroid;
    } else {
        bin.geometry.clear();
        bin.centroid = fallback_centroid;
    }
}

std::vector<GeoBin> aggregate_counts(const std::vector<Statement>& stmts, BinScale scale, const HexSizes& hex,
                                     const Boundaries* boundaries) {
    struct Acc {
        long count = 0;
        bool coarse = false;
        double lon = 0, lat = 0;
        long points = 0;
    };
    std::map<std::string, Acc> acc;
    for (const auto& s : stmts) {
        std::set<std::string> seen;
        for (const auto& m : s.places) {
            if (!is_hex(scale) && !continent_of(m.resolved.country_code)) continue;
            AdminBin b = bin_of(m.resolved, scale, hex);
            auto& a = acc[b.bin_id];
            a.coarse = a.coarse || b.coarse;
            a.lon += m.resolved.lon;
            a.lat += m.resolved.lat;
            ++a.points;
            if (seen.insert(b.bin_id).second) ++a.count;
        }
    }
    std::vector<GeoBin> out;
    out.reserve(acc.size());
    for (auto& [id, a] : acc) {
        GeoBin bin;
        bin.bin_id = id;
        bin.scale = scale;
        bin.count = a.count;
        bin.coarse = a.coarse;
        attach_geometry(bin, hex, boundaries, {a.lon / double(a.points), a.lat / double(a.points)});
        out.push_back(std::move(bin));
    }
    return out;
}

}  // namespace geomove
