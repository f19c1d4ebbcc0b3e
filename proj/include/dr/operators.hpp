#pragma once

#include <span>
#include <stdexcept>

#include "dr/constraint_set.hpp"
#include "dr/vec.hpp"

namespace dr {

using SetList = std::span<const ConstraintSet* const>;

/// Reflection through a set: R_S(x) = 2 P_S(x) - x.
inline Point reflect(const ConstraintSet& s, const Point& x) {
    Point p = s.project(x);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = 2.0 * p[i] - x[i];
    return p;
}

/// Two-set Douglas-Rachford step: T_{A,B}(x) = (x + R_B(R_A(x))) / 2.
inline Point dr_step(const ConstraintSet& a, const ConstraintSet& b, const Point& x) {
    return midpoint(x, reflect(b, reflect(a, x)));
}

/// Three-set composition (x + R_C(R_B(R_A(x)))) / 2. Fixed points of this
/// operator need not locate points of the triple intersection; it exists
/// to reproduce that failure.
inline Point dr3_step(const ConstraintSet& a, const ConstraintSet& b, const ConstraintSet& c,
                      const Point& x) {
    return midpoint(x, reflect(c, reflect(b, reflect(a, x))));
}

/// Cyclic scheme over N >= 2 sets: applies the two-set steps
/// T_{C1,C2}, T_{C2,C3}, ..., T_{C_{N-1},C_N}, T_{C_N,C1} in that order.
inline Point cyclic_dr_step(SetList sets, const Point& x) {
    if (sets.size() < 2)
        throw std::invalid_argument("cyclic_dr_step: needs at least 2 sets");
    Point y = x;
    for (std::size_t i = 0; i < sets.size(); ++i)
        y = dr_step(*sets[i], *sets[(i + 1) % sets.size()], y);
    return y;
}

/// Averaged scheme over N >= 2 sets: the mean of the N cyclically paired
/// two-set steps T_{C_i,C_{i+1}}(x). Each summand depends only on x, so
/// they may be evaluated concurrently.
inline Point averaged_dr_step(SetList sets, const Point& x) {
    if (sets.size() < 2)
        throw std::invalid_argument("averaged_dr_step: needs at least 2 sets");
    Point acc(x.size(), 0.0);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const Point t = dr_step(*sets[i], *sets[(i + 1) % sets.size()], x);
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += t[k];
    }
    const double inv = 1.0 / static_cast<double>(sets.size());
    for (double& v : acc) v *= inv;
    return acc;
}

}  // namespace dr
