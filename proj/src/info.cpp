#include "jensen/info.hpp"

#include <algorithm>
#include <cmath>

namespace jensen {

namespace {

constexpr double kProbabilitySumTolerance = 1e-9;

void require_pair(const DiscreteDistribution& d, const char* what) {
    if (d.size() < 2) throw InputError(std::string(what) + " needs at least two outcomes");
}

double power_sum(const DiscreteDistribution& d, double exponent) {
    Accumulator acc(d.size());
    for (double p : d.probs()) acc.add(std::pow(p, exponent));
    return acc.value();
}

Certificate make(std::string name, double lhs, double bound, const Tolerance& tol) {
    Certificate c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.bound = bound;
    c.lower_anchor = 0.0;
    c.valid = judge(c, tol);
    return c;
}

const char* regime_note(const RenyiOrder& o) {
    return o.below_one() ? "alpha in (0,1): H_alpha <= H" : "alpha > 1: H_alpha >= H";
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw InputError("distribution must have at least one outcome");
    CompensatedSum total;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        if (!std::isfinite(probs_[i]) || !(probs_[i] > 0.0))
            throw DomainError("probability " + std::to_string(i) + " must be strictly positive", i);
        total.add(probs_[i]);
    }
    if (std::abs(total.value() - 1.0) > kProbabilitySumTolerance) throw InputError("probabilities must sum to 1");
    const auto [lo, hi] = std::minmax_element(probs_.begin(), probs_.end());
    pmin_ = *lo;
    pmax_ = *hi;
}

DiscreteDistribution DiscreteDistribution::from_counts(const std::vector<double>& counts, bool strip_zeros) {
    std::vector<double> kept;
    CompensatedSum total;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double c = counts[i];
        if (!std::isfinite(c) || c < 0.0) throw DomainError("count " + std::to_string(i) + " must be nonnegative", i);
        if (c == 0.0) {
            if (!strip_zeros) throw DomainError("count " + std::to_string(i) + " is zero (use --strip-zeros)", i);
            continue;
        }
        kept.push_back(c);
        total.add(c);
    }
    if (kept.empty()) throw InputError("counts must contain a positive entry");
    for (double& c : kept) c /= total.value();
    return DiscreteDistribution(std::move(kept));
}

DiscreteDistribution DiscreteDistribution::from_probs_stripping_zeros(const std::vector<double>& probs) {
    return from_counts(probs, /*strip_zeros=*/true);
}

DiscreteDistribution DiscreteDistribution::uniform(std::size_t n) {
    if (n == 0) throw InputError("distribution must have at least one outcome");
    return DiscreteDistribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

RenyiOrder::RenyiOrder(double alpha) : alpha_(alpha) {
    if (!std::isfinite(alpha) || !(alpha > 0.0)) throw DomainError("Renyi order must be positive and finite");
    if (alpha == 1.0) throw DomainError("Renyi order 1 is the Shannon entropy; use shannon_entropy");
}

double shannon_entropy(const DiscreteDistribution& d) {
    Accumulator acc(d.size());
    for (double p : d.probs()) acc.add(-p * std::log(p));
    return acc.value();
}

double renyi_entropy(const DiscreteDistribution& d, const RenyiOrder& o) {
    return std::log(power_sum(d, o.value())) / (1.0 - o.value());
}

double informational_energy(const DiscreteDistribution& d) { return power_sum(d, 2.0); }

Certificate dg_counterpart_bound(const DiscreteDistribution& d, const Tolerance& tol) {
    const auto& p = d.probs();
    Accumulator acc(p.size() * p.size() / 2 + 1);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) acc.add((p[i] - p[j]) * (p[i] - p[j]));
    const double lhs = std::log(static_cast<double>(d.size())) - shannon_entropy(d);
    return make("dg_counterpart", lhs, acc.value(), tol);
}

Certificate t4_certificate(const DiscreteDistribution& d, const Tolerance& tol) {
    require_pair(d, "t4_certificate");
    const double lhs = std::log(static_cast<double>(d.size())) - shannon_entropy(d);
    // xi_i = 1/p_i lies in [1/P, 1/p]
    const Endpoints e{1.0 / d.pmax(), 1.0 / d.pmin()};
    Certificate c = make("t4", lhs, relative_spread_bound(e), tol);
    c.endpoints = Endpoints{d.pmin(), d.pmax()};
    return c;
}

Certificate t5_certificate(const DiscreteDistribution& d, const Tolerance& tol) {
    require_pair(d, "t5_certificate");
    const double n = static_cast<double>(d.size());
    const double lhs = std::log(n) - shannon_entropy(d);
    const Endpoints e{d.pmin(), d.pmax()};
    const auto [inner, outer] = log_spread_bounds(e);
    Certificate c = make("t5", lhs, n * inner, tol);
    c.endpoints = e;
    c.details = {{"outer_bound", n * outer}};
    c.valid = c.valid && tol.leq(n * inner, n * outer);
    return c;
}

Certificate renyi_order_gap(const DiscreteDistribution& d, const RenyiOrder& o, const Tolerance& tol) {
    const double h_alpha = renyi_entropy(d, o);
    const double h = shannon_entropy(d);
    Certificate c = make("renyi_order_gap", (1.0 - o.value()) * (h_alpha - h),
                         std::numeric_limits<double>::infinity(), tol);
    c.details = {{"alpha", o.value()}, {"renyi_entropy", h_alpha}, {"shannon_entropy", h}};
    c.note = regime_note(o);
    return c;
}

Certificate t6_certificate(const DiscreteDistribution& d, const RenyiOrder& o, const Tolerance& tol) {
    require_pair(d, "t6_certificate");
    const double a1 = o.value() - 1.0;
    const double at_min = std::pow(d.pmin(), a1);
    const double at_max = std::pow(d.pmax(), a1);
    // xi_i = p_i^(alpha-1); its range flips orientation at alpha = 1
    const Endpoints e = o.below_one() ? Endpoints{at_max, at_min} : Endpoints{at_min, at_max};
    Certificate c = make("t6", renyi_order_gap(d, o, tol).lhs, relative_spread_bound(e), tol);
    c.endpoints = e;
    c.details = {{"alpha", o.value()}};
    c.note = regime_note(o);
    return c;
}

Certificate t7_certificate(const DiscreteDistribution& d, const RenyiOrder& o, const Tolerance& tol) {
    require_pair(d, "t7_certificate");
    const double a = o.value();
    const double n = static_cast<double>(d.size());
    Accumulator log_sum(d.size());
    for (double p : d.probs()) log_sum.add(std::log(p));
    const double log_geometric_mean = log_sum.value() / n;
    const double lhs = std::log(power_sum(d, a)) - std::log(n) - a * log_geometric_mean;

    // xi_i = n p_i^alpha in [n p^alpha, n P^alpha]; the n^2 cancels in the spread bound
    const double lo = std::pow(d.pmin(), a);
    const double hi = std::pow(d.pmax(), a);
    const double tight = (hi - lo) * (hi - lo) / (4.0 * lo * hi);
    Certificate c = make("t7", lhs, n * tight, tol);
    c.endpoints = Endpoints{n * lo, n * hi};
    c.details = {{"alpha", a}, {"tight_bound", tight}};
    c.valid = c.valid && tol.leq(lhs, tight);
    return c;
}

Certificate t8_certificate(const DiscreteDistribution& d, const RenyiOrder& o, const Tolerance& tol) {
    require_pair(d, "t8_certificate");
    const double a = o.value();
    const double n = static_cast<double>(d.size());
    const double uniform_value = std::pow(n, 1.0 - a);
    const double sum = power_sum(d, a);  // = exp((1 - alpha) H_alpha)
    const double lhs = o.below_one() ? uniform_value - sum : sum - uniform_value;
    Certificate c = make("t8", lhs, n * power_gap_bound(a, d.pmin(), d.pmax()), tol);
    c.endpoints = Endpoints{d.pmin(), d.pmax()};
    c.details = {{"alpha", a}};
    c.note = o.below_one() ? "alpha in (0,1)" : "alpha > 1";
    return c;
}

Certificate t9_certificate(const DiscreteDistribution& d, const RenyiOrder& o, const Tolerance& tol) {
    require_pair(d, "t9_certificate");
    const double a = o.value();
    const double energy_power = std::pow(informational_energy(d), a);
    const double sum = power_sum(d, a + 1.0);  // = exp(-alpha H_(alpha+1))
    const double lhs = o.below_one() ? energy_power - sum : sum - energy_power;
    Certificate c = make("t9", lhs, power_gap_bound(a, d.pmin(), d.pmax()), tol);
    c.endpoints = Endpoints{d.pmin(), d.pmax()};
    c.details = {{"alpha", a}};
    c.note = o.below_one() ? "alpha in (0,1)"
                           : "alpha > 1, read with H_(alpha+1): sum p^(alpha+1) - E^alpha";
    return c;
}

}  // namespace jensen
