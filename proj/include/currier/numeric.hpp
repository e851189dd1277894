#pragma once

#include <cstddef>
#include <span>

namespace currier {

// Kahan compensated accumulator. Keeps long confidence sums deterministic
// and accurate regardless of list length.
class KahanSum {
public:
    void add(double value) {
        double y = value - compensation_;
        double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }

    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

inline double compensated_sum(std::span<const double> values) {
    KahanSum acc;
    for (double v : values) acc.add(v);
    return acc.value();
}

inline double compensated_mean(std::span<const double> values) {
    if (values.empty()) return 0.0;
    return compensated_sum(values) / static_cast<double>(values.size());
}

} // namespace currier
