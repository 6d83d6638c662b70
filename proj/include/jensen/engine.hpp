#pragma once

// Jensen gap and its hierarchy of converse upper bounds for differentiable
// convex functions of several variables.
//
//   gap  = (1/P) sum p_i f(x_i) - f(x_bar)
//   dg   = (1/P) sum p_i <x_i, grad f(x_i)> - <x_bar, g_bar>
//   cbs  = sqrt(Var x) * sqrt(Var grad f)
//   box  = 1/4 ||upper - lower|| * ||M - m||
//
// With the sample inside the box and the gradients inside [m, M],
// 0 <= gap <= dg <= cbs <= box.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "jensen/common.hpp"
#include "jensen/convex.hpp"

namespace jensen {

/// k points of a common dimension d with nonnegative weights of positive total.
class WeightedSample {
public:
    /// Throws InputError on empty input, ragged points, non-finite entries,
    /// negative weights or a nonpositive total.
    WeightedSample(std::vector<Point> points, std::vector<double> weights);

    /// Equal weights.
    static WeightedSample uniform(std::vector<Point> points);

    const std::vector<Point>& points() const { return points_; }
    const std::vector<double>& weights() const { return weights_; }
    std::size_t size() const { return points_.size(); }
    std::size_t dim() const { return points_.front().size(); }
    double total() const { return total_; }

    Point mean() const;

private:
    std::vector<Point> points_;
    std::vector<double> weights_;
    double total_;
};

/// Coordinatewise lower/upper vectors; used both for the point box (psi, phi)
/// and for the gradient box (m, M).
struct Bounds {
    Point lower;
    Point upper;

    /// Throws InputError unless lower <= upper coordinatewise with equal dimension.
    void validate() const;
    bool contains(std::span<const double> x) const;

    /// Tightest box containing every vector.
    static Bounds enclosing(std::span<const Point> vectors);
};

using BoxBounds = Bounds;
using GradientBounds = Bounds;

double jensen_gap(const ConvexFunction& f, const WeightedSample& s);

double covariance_bound(const ConvexFunction& f, const WeightedSample& s);

/// (1/(2P^2)) sum_{i,j} w_i w_j <u_i - u_j, v_i - v_j>, evaluated as the
/// literal double sum.
double pairwise_coupling(std::span<const Point> u, std::span<const Point> v, std::span<const double> w);

/// (1/P) sum w_i ||v_i||^2 - ||v_bar||^2.
double weighted_variance(std::span<const Point> vs, std::span<const double> w);

double cbs_bound(const ConvexFunction& f, const WeightedSample& s);

/// 1/4 ||upper - lower||^2.
double box_variance_bound(const BoxBounds& b);

/// 1/4 ||upper - lower|| * ||M - m||.
double converse_bound(const BoxBounds& b, const GradientBounds& g);

/// 1/4 (hi - lo)(f'(hi) - f'(lo)) for scalar f.
double scalar_converse_bound(const ConvexFunction& f, double lo, double hi);

enum class ConditionMode { Strict, Generalized };

struct ConditionVerdict {
    bool strict_box = false;
    bool strict_gradient = false;
    double box_sum = 0.0;       // sum p_i <upper - x_i, x_i - lower>
    double gradient_sum = 0.0;  // sum p_i <M - g_i, g_i - m>
    bool generalized_box = false;
    bool generalized_gradient = false;

    bool strict() const { return strict_box && strict_gradient; }
    bool generalized() const { return generalized_box && generalized_gradient; }
    bool holds(ConditionMode mode) const { return mode == ConditionMode::Strict ? strict() : generalized(); }
};

/// Box part only; gradient fields are left false/zero.
ConditionVerdict check_box_conditions(const WeightedSample& s, const BoxBounds& b,
                                      const Tolerance& tol = {});

ConditionVerdict check_conditions(const WeightedSample& s, const ConvexFunction& f, const BoxBounds& b,
                                  const GradientBounds& g, const Tolerance& tol = {});

struct BoundChainReport {
    double gap = 0.0;
    double dg_bound = 0.0;
    double cbs_bound = 0.0;
    double box_bound = 0.0;
    /// dg - gap, cbs - dg, box - cbs
    std::array<double, 3> slacks{};
    BoxBounds box;
    GradientBounds gradient_bounds;
    ConditionVerdict conditions;
    bool nonnegative = false;
    bool ordered = false;
    bool valid = false;
};

/// Omitted bounds are replaced by the coordinatewise min/max of the points
/// and of their gradients.
BoundChainReport bound_chain(const ConvexFunction& f, const WeightedSample& s,
                             const std::optional<BoxBounds>& box = std::nullopt,
                             const std::optional<GradientBounds>& gradient_bounds = std::nullopt,
                             const Tolerance& tol = {});

}  // namespace jensen
