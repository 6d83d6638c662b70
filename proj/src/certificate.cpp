#include "jensen/certificate.hpp"

#include <cmath>

namespace jensen {

bool judge(const Certificate& c, const Tolerance& tol) {
    if (c.log_lhs && c.log_bound) return tol.geq(*c.log_lhs, 0.0) && tol.leq(*c.log_lhs, *c.log_bound);
    if (std::isnan(c.lhs) || std::isnan(c.bound)) return false;
    return tol.geq(c.lhs, c.lower_anchor) && (std::isinf(c.bound) || tol.leq(c.lhs, c.bound));
}

}  // namespace jensen
