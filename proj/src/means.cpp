#include "jensen/means.hpp"

#include <algorithm>
#include <cmath>

namespace jensen {

namespace {

constexpr double kWeightSumTolerance = 1e-9;

Endpoints resolve_endpoints(const PositiveSample& s, const std::optional<Endpoints>& e) {
    const Endpoints range = s.range();
    if (!e) return range;
    if (!std::isfinite(e->m) || !std::isfinite(e->M) || e->m > range.m || e->M < range.M)
        throw DomainError("endpoints must enclose every value");
    return *e;
}

std::vector<double> mapped(const std::vector<double>& xs, double (*fn)(double)) {
    std::vector<double> out(xs.size());
    std::transform(xs.begin(), xs.end(), out.begin(), fn);
    return out;
}

double log_of(double x) { return std::log(x); }

Certificate ratio_certificate(std::string name, double log_lhs, double log_bound, const Endpoints& e,
                              const Tolerance& tol) {
    Certificate c;
    c.name = std::move(name);
    c.lower_anchor = 1.0;
    c.log_lhs = log_lhs;
    c.log_bound = log_bound;
    c.lhs = std::exp(log_lhs);
    c.bound = std::exp(log_bound);
    c.endpoints = e;
    c.valid = judge(c, tol);
    return c;
}

// ln A - sum w ln x, the Jensen gap of -ln.
double log_ag_ratio(const std::vector<double>& values, const std::vector<double>& weights) {
    return std::log(weighted_average(values, weights)) - weighted_average(mapped(values, log_of), weights);
}

}  // namespace

void PositiveSample::validate(bool allow_zero) const {
    if (values.empty()) throw InputError("sample must not be empty");
    if (values.size() != weights.size())
        throw InputError("values and weights differ in length (" + std::to_string(values.size()) + " vs " +
                         std::to_string(weights.size()) + ")");
    CompensatedSum total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!std::isfinite(weights[i]) || !(weights[i] > 0.0))
            throw InputError("weight " + std::to_string(i) + " must be strictly positive");
        total.add(weights[i]);
    }
    if (std::abs(total.value() - 1.0) > kWeightSumTolerance) throw InputError("weights must sum to 1");
    for (std::size_t i = 0; i < values.size(); ++i) {
        const bool ok = allow_zero ? values[i] >= 0.0 : values[i] > 0.0;
        if (!std::isfinite(values[i]) || !ok)
            throw DomainError("value " + std::to_string(i) + (allow_zero ? " must be nonnegative" : " must be positive"),
                              i);
    }
}

Endpoints PositiveSample::range() const {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return {*lo, *hi};
}

WeightedMeans weighted_means(const PositiveSample& s) {
    s.validate();
    WeightedMeans m;
    m.arithmetic = weighted_average(s.values, s.weights);
    // scaled by the first value so that constant samples come out exact
    const double x0 = s.values.front();
    std::vector<double> log_ratio(s.values.size()), inverse_ratio(s.values.size());
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        log_ratio[i] = std::log(s.values[i] / x0);
        inverse_ratio[i] = x0 / s.values[i];
    }
    m.geometric = x0 * std::exp(weighted_average(log_ratio, s.weights));
    m.harmonic = x0 / weighted_average(inverse_ratio, s.weights);
    return m;
}

Certificate ag_certificate(const PositiveSample& s, const std::optional<Endpoints>& e, const Tolerance& tol) {
    s.validate();
    const Endpoints ends = resolve_endpoints(s, e);
    return ratio_certificate("ag", log_ag_ratio(s.values, s.weights), relative_spread_bound(ends), ends, tol);
}

Certificate gh_certificate(const PositiveSample& s, const std::optional<Endpoints>& e, const Tolerance& tol) {
    s.validate();
    const Endpoints ends = resolve_endpoints(s, e);
    const PositiveSample reciprocal{mapped(s.values, [](double x) { return 1.0 / x; }), s.weights};
    Certificate c = ag_certificate(reciprocal, Endpoints{1.0 / ends.M, 1.0 / ends.m}, tol);
    c.name = "gh";
    c.endpoints = ends;
    return c;
}

Certificate power_mean_certificate(const PositiveSample& s, double p, const std::optional<Endpoints>& e,
                                   const Tolerance& tol) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("power mean exponent must be >= 1");
    s.validate(/*allow_zero=*/true);
    const Endpoints ends = resolve_endpoints(s, e);
    if (ends.m < 0.0) throw DomainError("endpoints must be nonnegative");
    Certificate c;
    c.name = "power_mean";
    const double mean = weighted_average(s.values, s.weights);
    std::vector<double> powers(s.values.size());
    for (std::size_t i = 0; i < powers.size(); ++i) powers[i] = std::pow(s.values[i], p);
    c.lhs = weighted_average(powers, s.weights) - std::pow(mean, p);
    c.bound = power_gap_bound(p, ends.m, ends.M);
    c.lower_anchor = 0.0;
    c.endpoints = ends;
    c.details = {{"p", p}};
    c.valid = judge(c, tol);
    return c;
}

Certificate self_power_certificate(const PositiveSample& s, const std::optional<Endpoints>& e, const Tolerance& tol) {
    s.validate();
    const Endpoints ends = resolve_endpoints(s, e);
    std::vector<double> x_log_x(s.values.size());
    for (std::size_t i = 0; i < x_log_x.size(); ++i) x_log_x[i] = s.values[i] * std::log(s.values[i]);
    const double a = weighted_average(s.values, s.weights);
    const double log_lhs = weighted_average(x_log_x, s.weights) - a * std::log(a);
    return ratio_certificate("self_power", log_lhs, log_spread_bounds(ends).first, ends, tol);
}

}  // namespace jensen
