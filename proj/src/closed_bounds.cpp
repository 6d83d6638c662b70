#include "jensen/closed_bounds.hpp"

#include <cmath>
#include <string>

#include "jensen/common.hpp"

namespace jensen {

void Endpoints::validate() const {
    if (!std::isfinite(m) || !std::isfinite(M)) throw DomainError("endpoints must be finite");
    if (!(m > 0.0)) throw DomainError("lower endpoint must be positive");
    if (!(m <= M)) throw DomainError("lower endpoint exceeds upper endpoint");
}

double relative_spread_bound(const Endpoints& e) {
    e.validate();
    const double spread = e.M - e.m;
    return spread * spread / (4.0 * e.m * e.M);
}

double logarithmic_mean(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw DomainError("logarithmic mean needs positive finite arguments");
    if (a == b) return a;
    // ln b - ln a = log1p((b - a) / a) without cancellation near a == b
    return (b - a) / std::log1p((b - a) / a);
}

std::pair<double, double> log_spread_bounds(const Endpoints& e) {
    e.validate();
    const double spread = e.M - e.m;
    if (spread == 0.0) return {0.0, 0.0};
    const double log_ratio = std::log1p(spread / e.m);
    return {0.25 * spread * log_ratio, 0.25 * spread * spread / std::sqrt(e.m * e.M)};
}

double power_gap_bound(double alpha, double m, double M) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("power_gap_bound needs alpha > 0");
    if (!std::isfinite(m) || !std::isfinite(M) || !(m <= M)) throw DomainError("endpoints must satisfy m <= M");
    if (alpha >= 1.0 ? !(m >= 0.0) : !(m > 0.0))
        throw DomainError(alpha >= 1.0 ? "lower endpoint must be nonnegative" : "lower endpoint must be positive");
    if (alpha == 1.0 || m == M) return 0.0;
    const double spread = std::abs(std::pow(M, alpha - 1.0) - std::pow(m, alpha - 1.0));
    return 0.25 * alpha * (M - m) * spread;
}

}  // namespace jensen
