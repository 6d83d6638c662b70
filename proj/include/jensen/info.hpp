#pragma once

// Shannon and Rényi entropies (natural logarithm), informational energy, and
// converse certificates bounding their distance from the uniform case.

#include <cstdint>
#include <vector>

#include "jensen/certificate.hpp"

namespace jensen {

/// Strictly positive probabilities summing to 1 within 1e-9.
class DiscreteDistribution {
public:
    explicit DiscreteDistribution(std::vector<double> probs);

    /// Normalizes nonnegative counts. Zero counts are rejected unless
    /// `strip_zeros`, which drops them (and so changes n).
    static DiscreteDistribution from_counts(const std::vector<double>& counts, bool strip_zeros = false);

    /// Drops zero probabilities and renormalizes.
    static DiscreteDistribution from_probs_stripping_zeros(const std::vector<double>& probs);

    static DiscreteDistribution uniform(std::size_t n);

    const std::vector<double>& probs() const { return probs_; }
    std::size_t size() const { return probs_.size(); }
    double pmin() const { return pmin_; }
    double pmax() const { return pmax_; }

private:
    std::vector<double> probs_;
    double pmin_;
    double pmax_;
};

/// Rényi order alpha in (0,1) U (1, inf).
class RenyiOrder {
public:
    explicit RenyiOrder(double alpha);
    double value() const { return alpha_; }
    bool below_one() const { return alpha_ < 1.0; }

private:
    double alpha_;
};

double shannon_entropy(const DiscreteDistribution& d);

/// (1/(1-alpha)) ln sum p_i^alpha
double renyi_entropy(const DiscreteDistribution& d, const RenyiOrder& o);

/// E(X) = sum p_i^2
double informational_energy(const DiscreteDistribution& d);

/// ln n - H <= sum_{i<j} (p_i - p_j)^2
Certificate dg_counterpart_bound(const DiscreteDistribution& d, const Tolerance& tol = {});

// The certificates below need n >= 2 and throw InputError otherwise.

/// ln n - H <= (P - p)^2 / (4 p P)
Certificate t4_certificate(const DiscreteDistribution& d, const Tolerance& tol = {});

/// ln n - H <= (n/4)(P - p)(ln P - ln p) <= (n/4)(P - p)^2 / sqrt(p P).
/// The second stage is the "outer_bound" detail.
Certificate t5_certificate(const DiscreteDistribution& d, const Tolerance& tol = {});

/// (1 - alpha)(H_alpha - H) >= 0. One-sided: bound is +inf.
Certificate renyi_order_gap(const DiscreteDistribution& d, const RenyiOrder& o, const Tolerance& tol = {});

/// (1 - alpha)(H_alpha - H) <= (P^(a-1) - p^(a-1))^2 / (4 p^(a-1) P^(a-1))
Certificate t6_certificate(const DiscreteDistribution& d, const RenyiOrder& o, const Tolerance& tol = {});

/// 0 <= (1 - alpha) H_alpha - ln n - alpha ln G_n(p) <= (n/4)(P^a - p^a)^2 / (p^a P^a).
/// The sharper factor-1/4 bound is the "tight_bound" detail and is also checked.
Certificate t7_certificate(const DiscreteDistribution& d, const RenyiOrder& o, const Tolerance& tol = {});

/// alpha < 1: n^(1-a) - sum p^a; alpha > 1: sum p^a - n^(1-a).
/// Bound n * power_gap_bound(alpha, p, P).
Certificate t8_certificate(const DiscreteDistribution& d, const RenyiOrder& o, const Tolerance& tol = {});

/// alpha < 1: E^a - sum p^(a+1); alpha > 1: sum p^(a+1) - E^a, with
/// sum p^(a+1) = exp(-alpha H_(alpha+1)). Bound power_gap_bound(alpha, p, P).
Certificate t9_certificate(const DiscreteDistribution& d, const RenyiOrder& o, const Tolerance& tol = {});

}  // namespace jensen
