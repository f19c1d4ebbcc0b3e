#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dr {

/// Dense point in R^n; the dimension is the vector length.
using Point = std::vector<double>;

inline bool all_finite(const Point& x) {
    for (double v : x)
        if (!std::isfinite(v)) return false;
    return true;
}

inline void check_dim(const Point& x, std::size_t dim, const char* where) {
    if (x.size() != dim)
        throw std::invalid_argument(std::string(where) + ": expected dimension " +
                                    std::to_string(dim) + ", got " + std::to_string(x.size()));
}

inline double dot(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const Point& x) { return std::sqrt(dot(x, x)); }

inline double distance(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline Point add(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Point sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Point scaled(const Point& a, double s) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

/// r = a + s*b
inline Point axpy(const Point& a, double s, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + s * b[i];
    return r;
}

/// Midpoint (a + b)/2; the averaging half of reflect-reflect-average.
inline Point midpoint(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = 0.5 * (a[i] + b[i]);
    return r;
}

}  // namespace dr
