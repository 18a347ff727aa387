#include "geomove/class_breaks.hpp"

#include "geomove/error.hpp"
#include "geomove/text.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace geomove {

namespace {

std::vector<double> equal_interval(double lo, double hi, int k) {
    std::vector<double> b;
    for (int i = 1; i < k; ++i) b.push_back(lo + i * (hi - lo) / k);
    return b;
}

std::vector<double> quantile(const std::vector<double>& sorted, int k) {
    const std::size_t n = sorted.size();
    std::vector<double> b;
    for (int i = 1; i < k; ++i) {
        std::size_t rank = (static_cast<std::size_t>(i) * n + static_cast<std::size_t>(k) - 1) / static_cast<std::size_t>(k);
        b.push_back(sorted[std::max<std::size_t>(rank, 1) - 1]);
    }
    return b;
}

std::vector<double> std_deviation(const std::vector<double>& v, int k) {
    double mean = std::accumulate(v.begin(), v.end(), 0.0) / double(v.size());
    double ss = 0;
    for (double x : v) ss += (x - mean) * (x - mean);
    double sigma = std::sqrt(ss / double(v.size()));
    std::vector<double> b;
    if (sigma == 0.0) return b;
    if (k % 2 == 0) {
        int half = k / 2 - 1;
        for (int j = -half; j <= half; ++j) b.push_back(mean + j * sigma);
    } else {
        int half = (k - 1) / 2;
        for (int j = half - 1; j >= 0; --j) b.push_back(mean - (j + 0.5) * sigma);
        for (int j = 0; j < half; ++j) b.push_back(mean + (j + 0.5) * sigma);
    }
    return b;
}

std::vector<double> arithmetic_progression(double lo, double hi, int k) {
    double unit = (hi - lo) / (k * (k + 1) / 2.0);
    std::vector<double> b;
    for (int i = 1; i < k; ++i) b.push_back(lo + unit * (i * (i + 1) / 2.0));
    return b;
}

// Exact Fisher optimal partition over sorted distinct values with weights.
std::vector<double> jenks(const std::vector<double>& sorted, int k) {
    std::vector<double> v;
    std::vector<double> w;
    for (double x : sorted) {
        if (!v.empty() && v.back() == x) w.back() += 1.0;
        else v.push_back(x), w.push_back(1.0);
    }
    const int m = static_cast<int>(v.size());
    k = std::min(k, m);
    if (k <= 1) return {};

    std::vector<double> sw(m + 1, 0.0), swx(m + 1, 0.0), swx2(m + 1, 0.0);
    for (int i = 0; i < m; ++i) {
        sw[i + 1] = sw[i] + w[i];
        swx[i + 1] = swx[i] + w[i] * v[i];
        swx2[i + 1] = swx2[i] + w[i] * v[i] * v[i];
    }
    // SSE of v[i..j] inclusive.
    auto cost = [&](int i, int j) {
        double n = sw[j + 1] - sw[i];
        double s = swx[j + 1] - swx[i];
        double s2 = swx2[j + 1] - swx2[i];
        return std::max(0.0, s2 - s * s / n);
    };

    const double inf = std::numeric_limits<double>::infinity();
    // dp[c][j]: best SSE placing v[0..j] into c+1 classes; start[c][j]: first index of the last class.
    std::vector<std::vector<double>> dp(k, std::vector<double>(m, inf));
    std::vector<std::vector<int>> start(k, std::vector<int>(m, 0));
    for (int j = 0; j < m; ++j) dp[0][j] = cost(0, j);
    for (int c = 1; c < k; ++c) {
        for (int j = c; j < m; ++j) {
            for (int i = c; i <= j; ++i) {
                double val = dp[c - 1][i - 1] + cost(i, j);
                if (val < dp[c][j]) {
                    dp[c][j] = val;
                    start[c][j] = i;
                }
            }
        }
    }
    std::vector<double> bounds(k - 1);
    int j = m - 1;
    for (int c = k - 1; c >= 1; --c) {
        int i = start[c][j];
        bounds[c - 1] = v[i - 1];
        j = i - 1;
    }
    return bounds;
}

}  // namespace

std::string_view to_string(BreakMethod m) {
    switch (m) {
        case BreakMethod::Jenks: return "jenks";
        case BreakMethod::EqualInterval: return "equal_interval";
        case BreakMethod::StdDeviation: return "std_deviation";
        case BreakMethod::ArithmeticProgression: return "arithmetic_progression";
        case BreakMethod::Quantile: return "quantile";
    }
    return "equal_interval";
}

std::optional<BreakMethod> parse_break_method(std::string_view s) {
    std::string l = to_lower(s);
    std::replace(l.begin(), l.end(), '-', '_');
    if (l == "jenks" || l == "natural_breaks") return BreakMethod::Jenks;
    if (l == "equal" || l == "equal_interval" || l == "equalinterval") return BreakMethod::EqualInterval;
    if (l == "std" || l == "stddev" || l == "std_deviation" || l == "stddeviation" || l == "standard_deviation")
        return BreakMethod::StdDeviation;
    if (l == "arithmetic" || l == "arithmetic_progression" || l == "arithmeticprogression")
        return BreakMethod::ArithmeticProgression;
    if (l == "quantile") return BreakMethod::Quantile;
    return std::nullopt;
}

ClassBreaks compute_breaks(const std::vector<double>& values, BreakMethod method, int k) {
    if (values.empty()) throw Error(ErrorKind::EmptyInput, "no values to classify");
    if (k < kMinClasses || k > kMaxClasses)
        throw Error(ErrorKind::BadK, "k must be in [2,7], got " + std::to_string(k));
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("compute_breaks: non-finite value");

    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    ClassBreaks cb;
    cb.method = method;
    cb.requested_k = k;
    cb.min = sorted.front();
    cb.max = sorted.back();

    std::vector<double> raw;
    switch (method) {
        case BreakMethod::EqualInterval: raw = equal_interval(cb.min, cb.max, k); break;
        case BreakMethod::Quantile: raw = quantile(sorted, k); break;
        case BreakMethod::StdDeviation: raw = std_deviation(sorted, k); break;
        case BreakMethod::ArithmeticProgression: raw = arithmetic_progression(cb.min, cb.max, k); break;
        case BreakMethod::Jenks: raw = jenks(sorted, k); break;
    }
    for (double b : raw) {
        if (b < cb.min || b >= cb.max) continue;
        if (!cb.bounds.empty() && b <= cb.bounds.back()) continue;
        cb.bounds.push_back(b);
    }
    cb.k = static_cast<int>(cb.bounds.size()) + 1;
    return cb;
}

int classify(double v, const ClassBreaks& cb) {
    auto it = std::lower_bound(cb.bounds.begin(), cb.bounds.end(), v);
    return static_cast<int>(it - cb.bounds.begin());
}

double within_class_sse(std::vector<double> values, const std::vector<double>& bounds) {
    std::sort(values.begin(), values.end());
    ClassBreaks cb;
    cb.bounds = bounds;
    cb.k = static_cast<int>(bounds.size()) + 1;
    std::vector<double> sum(cb.k, 0.0), sum2(cb.k, 0.0), n(cb.k, 0.0);
    for (double v : values) {
        int c = classify(v, cb);
        sum[c] += v;
        sum2[c] += v * v;
        n[c] += 1.0;
    }
    double total = 0;
    for (int c = 0; c < cb.k; ++c)
        if (n[c] > 0) total += std::max(0.0, sum2[c] - sum[c] * sum[c] / n[c]);
    return total;
}

}  // namespace geomove
