#include "jensen/convex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace jensen {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Interval positive_open() { return {0.0, kInf, false, false}; }
Interval nonnegative() { return {0.0, kInf, true, false}; }
Interval whole_line() { return {}; }

double param_or(const ConvexFunction::Params& params, const char* key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

void reject_unknown_params(std::string_view name, const ConvexFunction::Params& params,
                           std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : params) {
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* a) { return key == a; }) == allowed.end())
            throw InputError("function '" + std::string(name) + "' has no parameter '" + key + "'");
        if (!std::isfinite(value))
            throw InputError("parameter '" + key + "' must be finite");
    }
}

std::string coordinate_message(const std::string& fn, std::size_t j, double x, const char* what) {
    std::ostringstream os;
    os.precision(17);
    os << fn << ": coordinate " << j << " = " << x << " " << what;
    return os.str();
}

}  // namespace

bool Interval::contains(double x) const {
    if (!std::isfinite(x)) return false;
    const bool above = lower_closed ? x >= lower : x > lower;
    const bool below = upper_closed ? x <= upper : x < upper;
    return above && below;
}

const std::vector<std::string>& ConvexFunction::registry_names() {
    static const std::vector<std::string> names = {
        "neg_log", "x_log_x", "power_p", "neg_power_alpha", "power_alpha", "squared_norm", "log_sum_exp"};
    return names;
}

ConvexFunction::ConvexFunction(std::string name, FunctionKind kind, Params params, Interval domain)
    : name_(std::move(name)), kind_(kind), params_(std::move(params)), domain_(domain) {}

ConvexFunction ConvexFunction::make(std::string_view name, const Params& params) {
    if (name == "neg_log") {
        reject_unknown_params(name, params, {});
        return {"neg_log", FunctionKind::NegLog, {}, positive_open()};
    }
    if (name == "x_log_x") {
        reject_unknown_params(name, params, {});
        return {"x_log_x", FunctionKind::XLogX, {}, positive_open()};
    }
    if (name == "power_p") {
        reject_unknown_params(name, params, {"p"});
        const double p = param_or(params, "p", 2.0);
        if (!(p >= 1.0)) throw InputError("power_p requires p >= 1");
        return {"power_p", FunctionKind::PowerP, {{"p", p}}, nonnegative()};
    }
    if (name == "neg_power_alpha") {
        reject_unknown_params(name, params, {"alpha"});
        const double a = param_or(params, "alpha", 0.5);
        if (!(a > 0.0 && a < 1.0)) throw InputError("neg_power_alpha requires alpha in (0,1)");
        return {"neg_power_alpha", FunctionKind::NegPowerAlpha, {{"alpha", a}}, nonnegative()};
    }
    if (name == "power_alpha") {
        reject_unknown_params(name, params, {"alpha"});
        const double a = param_or(params, "alpha", 2.0);
        if (!(a > 1.0)) throw InputError("power_alpha requires alpha > 1");
        return {"power_alpha", FunctionKind::PowerAlpha, {{"alpha", a}}, nonnegative()};
    }
    if (name == "squared_norm") {
        reject_unknown_params(name, params, {});
        return {"squared_norm", FunctionKind::SquaredNorm, {}, whole_line()};
    }
    if (name == "log_sum_exp") {
        reject_unknown_params(name, params, {});
        return {"log_sum_exp", FunctionKind::LogSumExp, {}, whole_line()};
    }
    throw InputError("unknown function '" + std::string(name) + "'");
}

bool ConvexFunction::is_scalar() const {
    return kind_ != FunctionKind::SquaredNorm && kind_ != FunctionKind::LogSumExp;
}

bool ConvexFunction::gradient_defined_at(double x) const {
    if (domain_.interior(x)) return std::isfinite(x);
    // x^p with p >= 1 has a finite one-sided derivative at 0.
    if ((kind_ == FunctionKind::PowerP || kind_ == FunctionKind::PowerAlpha) && x == 0.0) return true;
    return false;
}

void ConvexFunction::check_dimension(std::span<const double> x) const {
    if (x.empty()) throw InputError(name_ + ": point must have at least one coordinate");
    if (is_scalar() && x.size() != 1)
        throw InputError(name_ + " is scalar but received a point of dimension " + std::to_string(x.size()));
}

void ConvexFunction::check_domain(std::span<const double> x) const {
    check_dimension(x);
    for (std::size_t j = 0; j < x.size(); ++j)
        if (!domain_.contains(x[j])) throw DomainError(coordinate_message(name_, j, x[j], "is outside the domain"), j);
}

void ConvexFunction::check_gradient_domain(std::span<const double> x) const {
    check_dimension(x);
    for (std::size_t j = 0; j < x.size(); ++j)
        if (!gradient_defined_at(x[j]))
            throw DomainError(coordinate_message(name_, j, x[j], "is not an interior point"), j);
}

double ConvexFunction::value(std::span<const double> x) const {
    check_domain(x);
    switch (kind_) {
        case FunctionKind::NegLog: return -std::log(x[0]);
        case FunctionKind::XLogX: return x[0] * std::log(x[0]);
        case FunctionKind::PowerP: return std::pow(x[0], param("p"));
        case FunctionKind::NegPowerAlpha: return -std::pow(x[0], param("alpha"));
        case FunctionKind::PowerAlpha: return std::pow(x[0], param("alpha"));
        case FunctionKind::SquaredNorm: return squared_norm(x);
        case FunctionKind::LogSumExp: {
            const double top = *std::max_element(x.begin(), x.end());
            double s = 0.0;
            for (double xj : x) s += std::exp(xj - top);
            return top + std::log(s);
        }
    }
    return 0.0;
}

double ConvexFunction::derivative(double t) const {
    if (!is_scalar()) throw InputError(name_ + " is not a scalar function");
    if (!gradient_defined_at(t)) throw DomainError(coordinate_message(name_, 0, t, "is not an interior point"), 0);
    switch (kind_) {
        case FunctionKind::NegLog: return -1.0 / t;
        case FunctionKind::XLogX: return std::log(t) + 1.0;
        case FunctionKind::PowerP: {
            const double p = param("p");
            return p == 1.0 ? 1.0 : p * std::pow(t, p - 1.0);
        }
        case FunctionKind::NegPowerAlpha: {
            const double a = param("alpha");
            return -a * std::pow(t, a - 1.0);
        }
        case FunctionKind::PowerAlpha: {
            const double a = param("alpha");
            return a * std::pow(t, a - 1.0);
        }
        default: break;
    }
    return 0.0;
}

Point ConvexFunction::gradient(std::span<const double> x) const {
    check_gradient_domain(x);
    if (is_scalar()) return {derivative(x[0])};
    Point g(x.size());
    if (kind_ == FunctionKind::SquaredNorm) {
        for (std::size_t j = 0; j < x.size(); ++j) g[j] = 2.0 * x[j];
        return g;
    }
    // softmax
    const double top = *std::max_element(x.begin(), x.end());
    double s = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        g[j] = std::exp(x[j] - top);
        s += g[j];
    }
    for (double& gj : g) gj /= s;
    return g;
}

Point numeric_gradient(const ConvexFunction& f, std::span<const double> x, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw InputError("finite-difference step must be positive");
    f.check_gradient_domain(x);
    const Interval& dom = f.coordinate_domain();
    Point g(x.size());
    Point probe(x.begin(), x.end());
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double step = h * std::max(1.0, std::abs(x[j]));
        const double up = x[j] + step;
        const double down = x[j] - step;
        if (!dom.interior(up) || !dom.interior(down))
            throw DomainError(coordinate_message(f.name(), j, x[j], "is too close to the domain boundary for the step"),
                              j);
        probe[j] = up;
        const double f_up = f.value(probe);
        probe[j] = down;
        const double f_down = f.value(probe);
        probe[j] = x[j];
        g[j] = (f_up - f_down) / (up - down);
    }
    return g;
}

GradientCheckReport gradient_check(const ConvexFunction& f, std::span<const double> x, double h, double tol) {
    GradientCheckReport r;
    r.analytic = f.gradient(x);
    r.numeric = numeric_gradient(f, x, h);
    r.abs_deviation.resize(x.size());
    r.rel_deviation.resize(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        r.abs_deviation[j] = std::abs(r.analytic[j] - r.numeric[j]);
        r.rel_deviation[j] = r.abs_deviation[j] / std::max(1.0, std::abs(r.analytic[j]));
        r.max_deviation = std::max(r.max_deviation, r.rel_deviation[j]);
    }
    r.pass = r.max_deviation <= tol;
    return r;
}

}  // namespace jensen
