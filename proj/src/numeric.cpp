#include "odyn/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace odyn {

MinResult golden_section_min(const std::function<double(double)>& f, double a, double b,
                             double x_tol, int max_iter) {
    if (!(a <= b)) throw std::invalid_argument("golden_section_min: empty bracket");
    const double inv_gr = (std::sqrt(5.0) - 1.0) / 2.0;

    double c = b - (b - a) * inv_gr;
    double d = a + (b - a) * inv_gr;
    double fc = f(c);
    double fd = f(d);

    for (int i = 0; i < max_iter; ++i) {
        if (b - a <= x_tol * (1.0 + std::abs(a) + std::abs(b))) break;
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * inv_gr;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * inv_gr;
            fd = f(d);
        }
    }
    const double xm = (fc < fd) ? c : d;
    return {xm, std::min(fc, fd)};
}

double bisect_last_true(const std::function<bool(double)>& pred, double lo, double hi,
                        double tol_rel) {
    if (!(lo <= hi)) throw std::invalid_argument("bisect_last_true: empty interval");
    if (pred(hi)) return hi;
    // invariant: pred(lo) true, pred(hi) false
    for (int i = 0; i < 300 && hi - lo > tol_rel * (1.0 + std::abs(lo)); ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (pred(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::vector<double> log_space(double a, double b, int n) {
    if (!(a > 0.0) || !(b > a) || n < 2)
        throw std::invalid_argument("log_space: need 0 < a < b and n >= 2");
    std::vector<double> out(static_cast<size_t>(n));
    const double la = std::log(a), lb = std::log(b);
    for (int i = 0; i < n; ++i)
        out[static_cast<size_t>(i)] = std::exp(la + (lb - la) * i / (n - 1));
    out.front() = a;
    out.back() = b;
    return out;
}

double lsq_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("lsq_slope: need two or more points");
    const double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double num = 0, den = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    if (den == 0.0) throw std::invalid_argument("lsq_slope: degenerate abscissae");
    return num / den;
}

MonotoneCubic::MonotoneCubic(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    const size_t n = xs_.size();
    if (n < 2 || ys_.size() != n)
        throw std::invalid_argument("MonotoneCubic: need two or more (x, y) pairs");
    for (size_t i = 1; i < n; ++i)
        if (!(xs_[i] > xs_[i - 1]))
            throw std::invalid_argument("MonotoneCubic: abscissae must be strictly increasing");

    std::vector<double> d(n - 1);  // secant slopes
    for (size_t i = 0; i + 1 < n; ++i) d[i] = (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);

    tangents_.assign(n, 0.0);
    tangents_[0] = d[0];
    tangents_[n - 1] = d[n - 2];
    for (size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) {
            tangents_[i] = 0.0;
        } else {
            // harmonic mean keeps the interpolant monotone on each interval
            const double w1 = 2.0 * (xs_[i + 1] - xs_[i]) + (xs_[i] - xs_[i - 1]);
            const double w2 = (xs_[i + 1] - xs_[i]) + 2.0 * (xs_[i] - xs_[i - 1]);
            tangents_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    // Fritsch-Carlson limiter
    for (size_t i = 0; i + 1 < n; ++i) {
        if (d[i] == 0.0) {
            tangents_[i] = 0.0;
            tangents_[i + 1] = 0.0;
            continue;
        }
        const double alpha = tangents_[i] / d[i];
        const double beta = tangents_[i + 1] / d[i];
        const double s = alpha * alpha + beta * beta;
        if (s > 9.0) {
            const double tau = 3.0 / std::sqrt(s);
            tangents_[i] = tau * alpha * d[i];
            tangents_[i + 1] = tau * beta * d[i];
        }
    }
}

double MonotoneCubic::operator()(double x) const {
    if (x <= xs_.front()) return ys_.front();
    if (x >= xs_.back()) return ys_.back();
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    const size_t i = static_cast<size_t>(it - xs_.begin()) - 1;
    const double h = xs_[i + 1] - xs_[i];
    const double t = (x - xs_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    return h00 * ys_[i] + h10 * h * tangents_[i] + h01 * ys_[i + 1] + h11 * h * tangents_[i + 1];
}

}  // namespace odyn
