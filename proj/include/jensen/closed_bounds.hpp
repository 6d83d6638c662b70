#pragma once

// Closed-form scalar bounds over an interval [m, M] with 0 < m <= M.

#include <utility>

namespace jensen {

struct Endpoints {
    double m = 1.0;
    double M = 1.0;

    /// Throws DomainError unless 0 < m <= M and both are finite.
    void validate() const;
};

/// (M - m)^2 / (4 m M)
double relative_spread_bound(const Endpoints& e);

/// L(a, b) = (b - a) / (ln b - ln a), and a when a == b.
double logarithmic_mean(double a, double b);

/// (1/4 (M - m)(ln M - ln m), 1/4 (M - m)^2 / sqrt(m M)). The first never
/// exceeds the second since sqrt(m M) <= L(m, M).
std::pair<double, double> log_spread_bounds(const Endpoints& e);

/// (alpha/4)(M - m)|M^(alpha-1) - m^(alpha-1)|, the converse bound of x^alpha
/// (alpha >= 1) or -x^alpha (0 < alpha < 1) over [m, M]. m = 0 is admitted
/// for alpha >= 1 only.
double power_gap_bound(double alpha, double m, double M);

inline double power_gap_bound(double alpha, const Endpoints& e) { return power_gap_bound(alpha, e.m, e.M); }

}  // namespace jensen
