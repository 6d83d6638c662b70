#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace jensen {

using Point = std::vector<double>;

/// Raised when an argument lies outside the domain of a function or formula.
/// `coordinate` names the offending component when one exists.
class DomainError : public std::domain_error {
public:
    static constexpr std::size_t kNoCoordinate = static_cast<std::size_t>(-1);

    explicit DomainError(const std::string& what, std::size_t coordinate = kNoCoordinate)
        : std::domain_error(what), coordinate_(coordinate) {}

    std::size_t coordinate() const noexcept { return coordinate_; }

private:
    std::size_t coordinate_;
};

/// Malformed input: shape mismatches, bad weights, unknown names.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Inequality tolerance: `lhs <= rhs` passes when
/// lhs - rhs <= rel * max(1, |lhs|, |rhs|) + abs.
struct Tolerance {
    double rel = 1e-9;
    double abs = 1e-12;

    double allowance(double lhs, double rhs) const {
        return rel * std::max({1.0, std::abs(lhs), std::abs(rhs)}) + abs;
    }
    bool leq(double lhs, double rhs) const { return lhs - rhs <= allowance(lhs, rhs); }
    bool geq(double lhs, double rhs) const { return leq(rhs, lhs); }
    bool eq(double lhs, double rhs) const { return std::abs(lhs - rhs) <= allowance(lhs, rhs); }
};

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Index-order accumulator; switches to compensated summation above
/// kCompensationThreshold terms so reports stay reproducible.
class Accumulator {
public:
    static constexpr std::size_t kCompensationThreshold = 1000;

    explicit Accumulator(std::size_t expected_terms)
        : compensated_(expected_terms > kCompensationThreshold) {}

    void add(double x) {
        if (compensated_)
            kahan_.add(x);
        else
            plain_ += x;
    }
    double value() const { return compensated_ ? kahan_.value() : plain_; }

private:
    bool compensated_;
    double plain_ = 0.0;
    CompensatedSum kahan_;
};

/// sum w_i v_i / sum w_i, accumulated relative to v_0 so that a constant
/// sequence returns its value exactly.
inline double weighted_average(std::span<const double> values, std::span<const double> weights) {
    const double origin = values.front();
    Accumulator num(values.size());
    Accumulator den(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        num.add(weights[i] * (values[i] - origin));
        den.add(weights[i]);
    }
    return origin + num.value() / den.value();
}

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
    return s;
}

inline double squared_norm(std::span<const double> a) { return dot(a, a); }

inline double norm(std::span<const double> a) { return std::sqrt(squared_norm(a)); }

}  // namespace jensen
