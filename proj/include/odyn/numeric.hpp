#pragma once

#include <functional>
#include <vector>

namespace odyn {

struct MinResult {
    double x = 0.0;
    double value = 0.0;
};

/// Golden-section minimizer for a unimodal f on [a, b]. Tolerates +inf
/// values at the ends of the bracket. Stops when the bracket shrinks to
/// x_tol * (1 + |x|) or after max_iter shrink steps.
MinResult golden_section_min(const std::function<double(double)>& f, double a, double b,
                             double x_tol = 1e-12, int max_iter = 200);

/// Largest x in [lo, hi] with pred(x) true. pred must be true on a prefix
/// of the interval and true at lo. Bisects to tol_rel * (1 + |x|).
double bisect_last_true(const std::function<bool(double)>& pred, double lo, double hi,
                        double tol_rel = 1e-13);

/// n points log-uniformly spaced in [a, b], 0 < a < b.
std::vector<double> log_space(double a, double b, int n);

/// Slope of the least-squares line through (x_i, y_i).
double lsq_slope(const std::vector<double>& xs, const std::vector<double>& ys);

/// Shape-preserving monotone cubic interpolant (Fritsch-Carlson tangents)
/// through strictly increasing abscissae.
class MonotoneCubic {
public:
    MonotoneCubic(std::vector<double> xs, std::vector<double> ys);

    double operator()(double x) const;

    double x_front() const { return xs_.front(); }
    double x_back() const { return xs_.back(); }
    double y_back() const { return ys_.back(); }

private:
    std::vector<double> xs_, ys_, tangents_;
};

}  // namespace odyn
