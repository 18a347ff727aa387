#pragma once

#include "geomove/types.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geomove {

enum class BinScale { Continent, Country, Admin1, HexLarge, HexSmall };
inline constexpr int kBinScaleCount = 5;

std::string_view to_string(BinScale s);
/// Accepts the to_string names ("continent", "country", "admin1",
/// "hex_large", "hex_small") case-insensitively.
std::optional<BinScale> parse_bin_scale(std::string_view s);
inline bool is_hex(BinScale s) { return s == BinScale::HexLarge || s == BinScale::HexSmall; }

struct LonLat {
    double lon = 0.0;
    double lat = 0.0;
    bool operator==(const LonLat&) const = default;
};

// Circumradius in degrees of lon/lat for the two hex scales.
struct HexSizes {
    double large = 5.0;
    double small = 1.25;

    /// Throws Error(BadConfig) unless large > small > 0.
    void validate() const;
    double for_scale(BinScale s) const;
};

struct HexCoord {
    int q = 0;
    int r = 0;
    bool operator==(const HexCoord&) const = default;
};

/// Flat-top hex grid in plate carree; axial coordinates rounded through
/// cube coordinates. Throws Error(OutOfRange) for coordinates outside
/// [-90,90] x [-180,180] and std::invalid_argument for cell_size <= 0.
HexCoord hex_axial(double lat, double lon, double cell_size);
std::string assign_hex(double lat, double lon, double cell_size);

std::string hex_id(HexCoord h);
std::optional<HexCoord> parse_hex_id(std::string_view id);
LonLat hex_center(HexCoord h, double cell_size);
/// Six corners counter-clockwise from angle 0, first corner repeated.
std::vector<LonLat> hex_polygon(HexCoord h, double cell_size);

/// Two-letter continent code (AF, AN, AS, EU, NA, OC, SA) for an ISO
/// 3166-1 alpha-2 country code, or nullopt.
std::optional<std::string_view> continent_of(std::string_view country_code);

struct AdminBin {
    std::string bin_id;
    bool coarse = false;  // Admin1 requested but the place has no admin1 code
};

/// Continent code, country code, or "CC.ADM1". Throws Error(UnknownCountry)
/// and std::invalid_argument for hex scales.
AdminBin assign_admin(const GazetteerEntry& place, BinScale scale);
inline AdminBin assign_admin(const PlaceMention& m, BinScale scale) { return assign_admin(m.resolved, scale); }

/// Bin of a place at any scale.
AdminBin bin_of(const GazetteerEntry& place, BinScale scale, const HexSizes& hex = {});

struct BoundaryFeature {
    std::vector<std::vector<LonLat>> rings;  // outer ring of each polygon part
    LonLat centroid;
};

/// Admin geometry keyed by (scale, bin id). A feature with an admin1_code is
/// an Admin1 bin ("CC.ADM1"); with only a country_code a Country bin; with
/// only a continent a Continent bin.
class Boundaries {
public:
    static Boundaries load(const std::filesystem::path& path);
    static Boundaries parse(std::string_view geojson);

    const BoundaryFeature* find(BinScale scale, const std::string& bin_id) const;
    std::size_t size() const { return features_.size(); }

private:
    std::map<std::pair<BinScale, std::string>, BoundaryFeature> features_;
};

struct GeoBin {
    std::string bin_id;
    BinScale scale = BinScale::Country;
    std::vector<LonLat> geometry;  // closed ring; empty if no boundary known
    LonLat centroid;
    long count = 0;
    bool coarse = false;
};

/// Distinct statements per bin, bins with zero count omitted, sorted by
/// bin_id. Mentions whose country has no continent entry are skipped.
std::vector<GeoBin> aggregate_counts(const std::vector<Statement>& stmts, BinScale scale, const HexSizes& hex = {},
                                     const Boundaries* boundaries = nullptr);

/// Geometry and centroid for one bin. Hex bins are analytic; admin bins use
/// the boundary file, falling back to `fallback_centroid` with no geometry.
void attach_geometry(GeoBin& bin, const HexSizes& hex, const Boundaries* boundaries, LonLat fallback_centroid);

}  // namespace geomove
