#pragma once

// Reference geometry for the flat-top hex grid.

#include "geomove/geo_binning.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace geomove::testing {

// Flat-top cells are the Voronoi cells of this center lattice, so the owning
// cell of a point is its nearest center.
struct NearestCenter {
    HexCoord cell;
    double best = 0;
    double second = 0;  // margin to the edge is (second - best) / 2
};

inline NearestCenter nearest_center(double lat, double lon, double s) {
    const int q0 = static_cast<int>(std::floor(lon / (1.5 * s)));
    NearestCenter out{{0, 0}, std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    for (int q = q0 - 2; q <= q0 + 2; ++q) {
        const double cx = 1.5 * s * q;
        const int r0 = static_cast<int>(std::floor(lat / (std::sqrt(3.0) * s) - q / 2.0));
        for (int r = r0 - 2; r <= r0 + 2; ++r) {
            const double cy = std::sqrt(3.0) * s * (r + q / 2.0);
            const double d = std::hypot(lon - cx, lat - cy);
            if (d < out.best) {
                out.second = out.best;
                out.best = d;
                out.cell = {q, r};
            } else if (d < out.second) {
                out.second = d;
            }
        }
    }
    return out;
}

/// Signed-area test against a counter-clockwise convex ring; `eps` > 0
/// demands strict interior.
inline bool inside_convex(const std::vector<LonLat>& ring, double lon, double lat, double eps = -1e-9) {
    for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
        const double cross = (ring[i + 1].lon - ring[i].lon) * (lat - ring[i].lat) -
                             (ring[i + 1].lat - ring[i].lat) * (lon - ring[i].lon);
        if (cross <= eps) return false;
    }
    return true;
}

inline const std::vector<HexCoord>& hex_neighbours() {
    static const std::vector<HexCoord> n{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
    return n;
}

}  // namespace geomove::testing
