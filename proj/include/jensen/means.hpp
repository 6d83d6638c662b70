#pragma once

// Weighted arithmetic, geometric and harmonic means with converse
// certificates over the value range [m, M].

#include <optional>
#include <vector>

#include "jensen/certificate.hpp"

namespace jensen {

/// Values with a probability vector of matching length. Weights must be
/// strictly positive and sum to 1 within 1e-9.
struct PositiveSample {
    std::vector<double> values;
    std::vector<double> weights;

    /// Throws InputError / DomainError. `allow_zero` admits values equal to 0.
    void validate(bool allow_zero = false) const;

    /// Sample min and max.
    Endpoints range() const;
};

struct WeightedMeans {
    double arithmetic = 0.0;
    double geometric = 0.0;
    double harmonic = 0.0;
};

WeightedMeans weighted_means(const PositiveSample& s);

// Each certificate takes the sample range as [m, M] unless wider endpoints are
// supplied; endpoints that fail to enclose the values are a DomainError.

/// 1 <= A/G <= exp((M - m)^2 / (4 m M))
Certificate ag_certificate(const PositiveSample& s, const std::optional<Endpoints>& e = std::nullopt,
                           const Tolerance& tol = {});

/// 1 <= G/H <= exp((M - m)^2 / (4 m M)), via the A/G certificate of the reciprocals.
Certificate gh_certificate(const PositiveSample& s, const std::optional<Endpoints>& e = std::nullopt,
                           const Tolerance& tol = {});

/// 0 <= sum w x^p - (sum w x)^p <= (p/4)(M - m)(M^(p-1) - m^(p-1)), p >= 1, values >= 0.
Certificate power_mean_certificate(const PositiveSample& s, double p,
                                   const std::optional<Endpoints>& e = std::nullopt, const Tolerance& tol = {});

/// 1 <= prod x_i^(w_i x_i) / A^A <= (M/m)^((M - m)/4)
Certificate self_power_certificate(const PositiveSample& s, const std::optional<Endpoints>& e = std::nullopt,
                                   const Tolerance& tol = {});

}  // namespace jensen
