#pragma once

// Closed registry of differentiable convex functions with analytic gradients.

#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jensen/common.hpp"

namespace jensen {

enum class FunctionKind {
    NegLog,         // -ln x
    XLogX,          // x ln x
    PowerP,         // x^p, p >= 1
    NegPowerAlpha,  // -x^alpha, alpha in (0,1)
    PowerAlpha,     // x^alpha, alpha > 1
    SquaredNorm,    // ||x||^2
    LogSumExp,      // ln sum_j exp(x_j)
};

/// One coordinate's admissible range. Infinite ends are always open.
struct Interval {
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    bool lower_closed = false;
    bool upper_closed = false;

    bool contains(double x) const;
    bool interior(double x) const { return x > lower && x < upper; }
};

/// A registered convex function: identifier, parameters and domain.
///
/// Scalar functions (arity 1) accept only one-dimensional points; the
/// multivariate entries accept any dimension d >= 1 with the same interval
/// on every coordinate.
class ConvexFunction {
public:
    using Params = std::map<std::string, double>;

    /// Looks up `name` in the registry. Missing parameters take their
    /// defaults (p = 2, alpha = 0.5 for neg_power_alpha, alpha = 2 for
    /// power_alpha); unknown names or out-of-range parameters throw InputError.
    static ConvexFunction make(std::string_view name, const Params& params = {});

    static const std::vector<std::string>& registry_names();

    const std::string& name() const { return name_; }
    const Params& params() const { return params_; }
    FunctionKind kind() const { return kind_; }
    bool is_scalar() const;
    const Interval& coordinate_domain() const { return domain_; }

    /// Interval on which the gradient rule is finite. Equal to the interior of
    /// the domain except for power_p / power_alpha, whose one-sided derivative
    /// at the closed end 0 is finite.
    bool gradient_defined_at(double x) const;

    /// Throws DomainError naming the first coordinate outside the domain, or
    /// InputError on a dimension the function does not accept.
    void check_domain(std::span<const double> x) const;
    void check_gradient_domain(std::span<const double> x) const;

    double value(std::span<const double> x) const;
    Point gradient(std::span<const double> x) const;

    /// Scalar derivative f'(t); only for scalar functions.
    double derivative(double t) const;

    friend bool operator==(const ConvexFunction& a, const ConvexFunction& b) {
        return a.name_ == b.name_ && a.params_ == b.params_;
    }

private:
    ConvexFunction(std::string name, FunctionKind kind, Params params, Interval domain);

    void check_dimension(std::span<const double> x) const;
    double param(const char* key) const { return params_.at(key); }

    std::string name_;
    FunctionKind kind_;
    Params params_;
    Interval domain_;
};

// Free-function spellings of the module operations.

inline double evaluate(const ConvexFunction& f, std::span<const double> x) { return f.value(x); }

inline Point gradient(const ConvexFunction& f, std::span<const double> x) { return f.gradient(x); }

inline constexpr double kDefaultFiniteDifferenceStep = 1e-5;

/// Central differences with per-coordinate step h * max(1, |x_j|).
/// Every probe must stay in the gradient domain or DomainError is thrown.
Point numeric_gradient(const ConvexFunction& f, std::span<const double> x,
                       double h = kDefaultFiniteDifferenceStep);

struct GradientCheckReport {
    Point analytic;
    Point numeric;
    std::vector<double> abs_deviation;
    std::vector<double> rel_deviation;  // |a - n| / max(1, |a|)
    double max_deviation = 0.0;
    bool pass = false;
};

GradientCheckReport gradient_check(const ConvexFunction& f, std::span<const double> x,
                                   double h = kDefaultFiniteDifferenceStep, double tol = 1e-6);

}  // namespace jensen
