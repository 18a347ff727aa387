#pragma once

// Exhaustive optimal partition, the reference for Jenks.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

namespace geomove::testing {

// Two-pass SSE of one class.
inline double class_sse(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
    double mean = 0;
    for (std::size_t i = lo; i < hi; ++i) mean += v[i];
    mean /= double(hi - lo);
    double s = 0;
    for (std::size_t i = lo; i < hi; ++i) s += (v[i] - mean) * (v[i] - mean);
    return s;
}

struct Partition {
    double sse = std::numeric_limits<double>::infinity();
    double runner_up = std::numeric_limits<double>::infinity();
    std::vector<double> bounds;
};

/// Every placement of k-1 cuts between adjacent distinct sorted values.
inline Partition brute_force_partition(std::vector<double> v, int k) {
    std::sort(v.begin(), v.end());
    std::vector<std::size_t> cut_points;  // cut after index i
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1]) cut_points.push_back(i);
    const int cuts = std::min<int>(k - 1, static_cast<int>(cut_points.size()));
    Partition best;
    if (cuts == 0) {
        best.sse = class_sse(v, 0, v.size());
        return best;
    }
    std::vector<int> pick(cut_points.size(), 0);
    std::fill(pick.end() - cuts, pick.end(), 1);
    do {
        std::vector<std::size_t> ends;
        for (std::size_t i = 0; i < pick.size(); ++i)
            if (pick[i]) ends.push_back(cut_points[i] + 1);
        ends.push_back(v.size());
        double total = 0;
        std::size_t lo = 0;
        for (auto hi : ends) {
            total += class_sse(v, lo, hi);
            lo = hi;
        }
        if (total < best.sse) {
            best.runner_up = best.sse;
            best.sse = total;
            best.bounds.clear();
            for (std::size_t e = 0; e + 1 < ends.size(); ++e) best.bounds.push_back(v[ends[e] - 1]);
        } else if (total < best.runner_up) {
            best.runner_up = total;
        }
    } while (std::next_permutation(pick.begin(), pick.end()));
    return best;
}

}  // namespace geomove::testing
