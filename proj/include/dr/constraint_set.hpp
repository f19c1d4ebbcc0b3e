#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "dr/vec.hpp"

namespace dr {

/// Thrown when a set-valued projection has no selected nearest point,
/// e.g. projecting the center of a sphere onto the sphere.
class AmbiguousProjection : public std::domain_error {
public:
    explicit AmbiguousProjection(const std::string& what) : std::domain_error(what) {}
};

/// A constraint set exposed through its nearest-point projector.
///
/// project() returns a member of the set. For convex sets the projection
/// is unique and idempotent; for nonconvex sets it returns a fixed,
/// deterministic selection among the nearest points, and may throw
/// AmbiguousProjection on the singular manifold where no selection rule
/// applies. is_convex() is metadata only; no operator consults it.
class ConstraintSet {
public:
    virtual ~ConstraintSet() = default;

    virtual Point project(const Point& x) const = 0;

    virtual bool is_convex() const { return false; }

    /// Ambient dimension.
    virtual std::size_t ambient_dim() const = 0;
};

}  // namespace dr
