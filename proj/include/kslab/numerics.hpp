#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>

namespace kslab {

/// Neumaier-compensated accumulator. Pairwise sums in the library use this so
/// results do not depend on how a reduction is scheduled.
class KahanSum {
public:
    void add(double value) {
        const double t = sum_ + value;
        if (std::abs(sum_) >= std::abs(value)) {
            comp_ += (sum_ - t) + value;
        } else {
            comp_ += (value - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm_squared(std::span<const double> a) { return dot(a, a); }

inline double norm(std::span<const double> a) { return std::sqrt(norm_squared(a)); }

inline double distance_squared(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

/// Trapezoid rule on an arbitrary sorted abscissa grid.
inline double trapezoid(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("trapezoid: size mismatch");
    if (x.size() < 2) return 0.0;
    KahanSum acc;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        acc.add(0.5 * (x[i + 1] - x[i]) * (y[i] + y[i + 1]));
    }
    return acc.value();
}

/// Adaptive Simpson quadrature; used by test oracles and the moment-flow
/// cross-checks, not on any performance path.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 60);

}  // namespace kslab
