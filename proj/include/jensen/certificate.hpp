#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jensen/closed_bounds.hpp"
#include "jensen/common.hpp"

namespace jensen {

/// A concrete instance of one inequality `anchor <= lhs <= bound`.
///
/// Ratio certificates (anchor 1) also carry their logarithms; validity is
/// judged on those so that overflowing exponentials stay decidable.
struct Certificate {
    std::string name;
    double lhs = 0.0;
    double bound = std::numeric_limits<double>::infinity();
    double lower_anchor = 0.0;
    std::optional<Endpoints> endpoints;
    std::optional<double> log_lhs;
    std::optional<double> log_bound;
    /// Extra named quantities (second-stage bounds, entropies, regime flags).
    std::vector<std::pair<std::string, double>> details;
    std::string note;
    bool valid = false;

    std::optional<double> detail(const std::string& key) const {
        for (const auto& [k, v] : details)
            if (k == key) return v;
        return std::nullopt;
    }
};

/// anchor <= lhs <= bound within `tol`; for ratio certificates with log
/// forms, 0 <= log_lhs <= log_bound.
bool judge(const Certificate& c, const Tolerance& tol);

}  // namespace jensen
