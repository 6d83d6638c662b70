#include "jensen/engine.hpp"

#include <algorithm>
#include <cmath>

namespace jensen {

namespace {

void check_weights(std::span<const double> w, double& total) {
    Accumulator acc(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!std::isfinite(w[i]) || w[i] < 0.0)
            throw InputError("weight " + std::to_string(i) + " must be finite and nonnegative");
        acc.add(w[i]);
    }
    total = acc.value();
    if (!(total > 0.0)) throw InputError("weights must have positive total");
}

void check_points(std::span<const Point> vs, std::size_t expected_count) {
    if (vs.empty()) throw InputError("at least one point is required");
    if (vs.size() != expected_count)
        throw InputError("expected " + std::to_string(expected_count) + " points, got " + std::to_string(vs.size()));
    const std::size_t d = vs.front().size();
    if (d == 0) throw InputError("points must have dimension >= 1");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].size() != d)
            throw InputError("point " + std::to_string(i) + " has dimension " + std::to_string(vs[i].size()) +
                             ", expected " + std::to_string(d));
        for (double c : vs[i])
            if (!std::isfinite(c)) throw InputError("point " + std::to_string(i) + " has a non-finite coordinate");
    }
}

// Means are taken relative to the first term so that constant inputs
// reproduce their value exactly.
template <typename Term>
double shifted_mean(std::size_t k, std::span<const double> w, double total, Term term) {
    const double origin = term(0);
    Accumulator acc(k);
    for (std::size_t i = 1; i < k; ++i) acc.add(w[i] * (term(i) - origin));
    return origin + acc.value() / total;
}

Point weighted_mean(std::span<const Point> vs, std::span<const double> w, double total) {
    const std::size_t d = vs.front().size();
    Point mean(d);
    for (std::size_t j = 0; j < d; ++j)
        mean[j] = shifted_mean(vs.size(), w, total, [&](std::size_t i) { return vs[i][j]; });
    return mean;
}

std::vector<Point> gradients_at(const ConvexFunction& f, const WeightedSample& s) {
    std::vector<Point> g;
    g.reserve(s.size());
    for (const auto& x : s.points()) g.push_back(f.gradient(x));
    return g;
}

// (1/P) sum w_i <u_i, v_i> - <u_bar, v_bar>, evaluated as the centered sum
// (1/P) sum w_i <u_i - u_bar, v_i - v_bar> to avoid cancellation.
double mean_product_minus_product_of_means(std::span<const Point> u, std::span<const Point> v,
                                           std::span<const double> w, double total) {
    const Point u_bar = weighted_mean(u, w, total);
    const Point v_bar = weighted_mean(v, w, total);
    Accumulator acc(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        double term = 0.0;
        for (std::size_t j = 0; j < u_bar.size(); ++j) term += (u[i][j] - u_bar[j]) * (v[i][j] - v_bar[j]);
        acc.add(w[i] * term);
    }
    return acc.value() / total;
}

double difference_norm(const Bounds& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < b.lower.size(); ++j) {
        const double diff = b.upper[j] - b.lower[j];
        s += diff * diff;
    }
    return std::sqrt(s);
}

}  // namespace

WeightedSample::WeightedSample(std::vector<Point> points, std::vector<double> weights)
    : points_(std::move(points)), weights_(std::move(weights)), total_(0.0) {
    check_points(points_, weights_.size());
    check_weights(weights_, total_);
}

WeightedSample WeightedSample::uniform(std::vector<Point> points) {
    std::vector<double> w(points.size(), 1.0);
    return WeightedSample(std::move(points), std::move(w));
}

Point WeightedSample::mean() const { return weighted_mean(points_, weights_, total_); }

void Bounds::validate() const {
    if (lower.empty() || lower.size() != upper.size()) throw InputError("bounds must share a positive dimension");
    for (std::size_t j = 0; j < lower.size(); ++j) {
        if (!std::isfinite(lower[j]) || !std::isfinite(upper[j]))
            throw InputError("bound coordinate " + std::to_string(j) + " is not finite");
        if (lower[j] > upper[j])
            throw InputError("lower bound exceeds upper bound at coordinate " + std::to_string(j));
    }
}

bool Bounds::contains(std::span<const double> x) const {
    if (x.size() != lower.size()) return false;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] < lower[j] || x[j] > upper[j]) return false;
    return true;
}

Bounds Bounds::enclosing(std::span<const Point> vectors) {
    if (vectors.empty()) throw InputError("cannot enclose an empty set");
    Bounds b{vectors.front(), vectors.front()};
    for (const auto& v : vectors) {
        if (v.size() != b.lower.size()) throw InputError("vectors must share one dimension");
        for (std::size_t j = 0; j < v.size(); ++j) {
            b.lower[j] = std::min(b.lower[j], v[j]);
            b.upper[j] = std::max(b.upper[j], v[j]);
        }
    }
    return b;
}

double jensen_gap(const ConvexFunction& f, const WeightedSample& s) {
    std::vector<double> values(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) values[i] = f.value(s.points()[i]);
    const Point mean = s.mean();
    const double at_mean = f.value(mean);
    const bool tangent = std::all_of(mean.begin(), mean.end(), [&](double t) { return f.gradient_defined_at(t); });
    if (!tangent) {
        const double mean_value =
            shifted_mean(s.size(), s.weights(), s.total(), [&](std::size_t i) { return values[i]; });
        return mean_value - at_mean;
    }
    // Weighted mean of f(x_i) - f(mean) - <grad f(mean), x_i - mean>. The
    // linear part sums to zero, and every term is nonnegative, so the large
    // values of f never cancel against each other.
    const Point g = f.gradient(mean);
    Accumulator acc(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        double linear = 0.0;
        for (std::size_t j = 0; j < mean.size(); ++j) linear += g[j] * (s.points()[i][j] - mean[j]);
        acc.add(s.weights()[i] * ((values[i] - at_mean) - linear));
    }
    return acc.value() / s.total();
}

double covariance_bound(const ConvexFunction& f, const WeightedSample& s) {
    const auto g = gradients_at(f, s);
    return mean_product_minus_product_of_means(s.points(), g, s.weights(), s.total());
}

double pairwise_coupling(std::span<const Point> u, std::span<const Point> v, std::span<const double> w) {
    check_points(u, w.size());
    check_points(v, w.size());
    if (u.front().size() != v.front().size()) throw InputError("u and v must share one dimension");
    double total = 0.0;
    check_weights(w, total);

    const std::size_t k = u.size();
    const std::size_t d = u.front().size();
    Accumulator acc(k * k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            double inner = 0.0;
            for (std::size_t c = 0; c < d; ++c) inner += (u[i][c] - u[j][c]) * (v[i][c] - v[j][c]);
            acc.add(w[i] * w[j] * inner);
        }
    }
    return acc.value() / (2.0 * total * total);
}

double weighted_variance(std::span<const Point> vs, std::span<const double> w) {
    check_points(vs, w.size());
    double total = 0.0;
    check_weights(w, total);
    return mean_product_minus_product_of_means(vs, vs, w, total);
}

double cbs_bound(const ConvexFunction& f, const WeightedSample& s) {
    const auto g = gradients_at(f, s);
    const double var_x = weighted_variance(s.points(), s.weights());
    const double var_g = weighted_variance(g, s.weights());
    return std::sqrt(std::max(0.0, var_x)) * std::sqrt(std::max(0.0, var_g));
}

double box_variance_bound(const BoxBounds& b) {
    b.validate();
    const double n = difference_norm(b);
    return 0.25 * n * n;
}

double converse_bound(const BoxBounds& b, const GradientBounds& g) {
    b.validate();
    g.validate();
    if (b.lower.size() != g.lower.size()) throw InputError("box and gradient bounds differ in dimension");
    return 0.25 * difference_norm(b) * difference_norm(g);
}

double scalar_converse_bound(const ConvexFunction& f, double lo, double hi) {
    if (!f.is_scalar()) throw InputError(f.name() + " is not a scalar function");
    if (!(lo <= hi)) throw InputError("scalar converse bound requires lo <= hi");
    const double dlo = f.derivative(lo);
    const double dhi = f.derivative(hi);
    return 0.25 * (hi - lo) * (dhi - dlo);
}

ConditionVerdict check_box_conditions(const WeightedSample& s, const BoxBounds& b, const Tolerance& tol) {
    b.validate();
    if (b.lower.size() != s.dim()) throw InputError("box dimension does not match the sample");
    ConditionVerdict v;
    v.strict_box = std::all_of(s.points().begin(), s.points().end(), [&](const Point& x) { return b.contains(x); });
    Accumulator acc(s.size());
    Point above(s.dim()), below(s.dim());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Point& x = s.points()[i];
        for (std::size_t j = 0; j < x.size(); ++j) {
            above[j] = b.upper[j] - x[j];
            below[j] = x[j] - b.lower[j];
        }
        acc.add(s.weights()[i] * dot(above, below));
    }
    v.box_sum = acc.value();
    v.generalized_box = tol.geq(v.box_sum, 0.0);
    return v;
}

ConditionVerdict check_conditions(const WeightedSample& s, const ConvexFunction& f, const BoxBounds& b,
                                  const GradientBounds& g, const Tolerance& tol) {
    g.validate();
    if (g.lower.size() != s.dim()) throw InputError("gradient bound dimension does not match the sample");
    ConditionVerdict v = check_box_conditions(s, b, tol);
    const auto grads = gradients_at(f, s);
    v.strict_gradient = std::all_of(grads.begin(), grads.end(), [&](const Point& x) { return g.contains(x); });
    Accumulator acc(s.size());
    Point above(s.dim()), below(s.dim());
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.dim(); ++j) {
            above[j] = g.upper[j] - grads[i][j];
            below[j] = grads[i][j] - g.lower[j];
        }
        acc.add(s.weights()[i] * dot(above, below));
    }
    v.gradient_sum = acc.value();
    v.generalized_gradient = tol.geq(v.gradient_sum, 0.0);
    return v;
}

BoundChainReport bound_chain(const ConvexFunction& f, const WeightedSample& s, const std::optional<BoxBounds>& box,
                             const std::optional<GradientBounds>& gradient_bounds, const Tolerance& tol) {
    BoundChainReport r;
    const auto grads = gradients_at(f, s);
    r.box = box ? *box : Bounds::enclosing(s.points());
    r.gradient_bounds = gradient_bounds ? *gradient_bounds : Bounds::enclosing(grads);
    r.conditions = check_conditions(s, f, r.box, r.gradient_bounds, tol);

    r.gap = jensen_gap(f, s);
    r.dg_bound = mean_product_minus_product_of_means(s.points(), grads, s.weights(), s.total());
    const double var_x = weighted_variance(s.points(), s.weights());
    const double var_g = weighted_variance(grads, s.weights());
    r.cbs_bound = std::sqrt(std::max(0.0, var_x)) * std::sqrt(std::max(0.0, var_g));
    r.box_bound = converse_bound(r.box, r.gradient_bounds);

    r.slacks = {r.dg_bound - r.gap, r.cbs_bound - r.dg_bound, r.box_bound - r.cbs_bound};
    r.nonnegative = tol.geq(r.gap, 0.0);
    r.ordered = tol.leq(r.gap, r.dg_bound) && tol.leq(r.dg_bound, r.cbs_bound) && tol.leq(r.cbs_bound, r.box_bound);
    r.valid = r.nonnegative && r.ordered;
    return r;
}

}  // namespace jensen
