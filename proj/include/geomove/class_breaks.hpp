#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geomove {

enum class BreakMethod { Jenks, EqualInterval, StdDeviation, ArithmeticProgression, Quantile };

inline constexpr int kMinClasses = 2;
inline constexpr int kMaxClasses = 7;

std::string_view to_string(BreakMethod m);
/// Accepts canonical names plus short forms: jenks, equal/equal_interval,
/// std/stddev/std_deviation, arithmetic/arithmetic_progression, quantile.
std::optional<BreakMethod> parse_break_method(std::string_view s);

struct ClassBreaks {
    BreakMethod method = BreakMethod::EqualInterval;
    int k = 0;                  // effective class count = bounds.size() + 1
    int requested_k = 0;
    std::vector<double> bounds;  // ascending upper bounds of classes 0..k-2
    double min = 0.0;
    double max = 0.0;
};

/// Throws Error(EmptyInput) and Error(BadK) for k outside [2,7]. Bounds are
/// strictly ascending and lie in [min, max); duplicates and bounds at max are
/// dropped, which lowers the effective k.
ClassBreaks compute_breaks(const std::vector<double>& values, BreakMethod method, int k);

/// Smallest i with v <= bounds[i], else k-1.
int classify(double v, const ClassBreaks& cb);

/// Total within-class sum of squared deviations for the given upper bounds.
double within_class_sse(std::vector<double> values, const std::vector<double>& bounds);

}  // namespace geomove
