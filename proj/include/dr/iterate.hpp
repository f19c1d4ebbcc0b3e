#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dr/constraint_set.hpp"
#include "dr/vec.hpp"

namespace dr {

enum class StopReason { converged, max_iter, cycle_detected };

struct IterationTrace;

/// Termination policy for the iteration driver.
struct StopRule {
    std::size_t max_iter = 10000;
    double tol = 1e-12;  // on the step norm ||x_{n+1} - x_n||

    /// Optional custom test, evaluated on the trace collected so far
    /// (including the initial one-point trace). Returning true stops the
    /// run with StopReason::converged.
    std::function<bool(const IterationTrace&)> predicate;

    /// When set, stop with cycle_detected once x_{n+1} returns to
    /// x_{n-1} within tol while the single step norm stays above tol.
    bool detect_two_cycle = false;

    /// Iterate norms beyond this stop the run with the diverged flag set.
    double divergence_norm = 1e12;
};

/// Record of a driver run. iterates[n] is x_n; shadows[n] is the shadow
/// projection of x_n; step_norms[n] is ||x_{n+1} - x_n||.
struct IterationTrace {
    std::vector<Point> iterates;
    std::vector<Point> shadows;
    std::vector<double> step_norms;
    std::size_t iterations = 0;
    StopReason stop_reason = StopReason::max_iter;
    bool diverged = false;

    const Point& last() const { return iterates.back(); }
    const Point& last_shadow() const { return shadows.back(); }
};

using StepFn = std::function<Point(const Point&)>;

namespace detail {
// Selection-free projections are retried once from a point nudged off the
// singular manifold (first coordinate, 1e-12).
template <typename F>
Point eval_perturbed(const F& f, const Point& x) {
    try {
        return f(x);
    } catch (const AmbiguousProjection&) {
        Point y = x;
        if (!y.empty()) y[0] += 1e-12;
        return f(y);
    }
}
}  // namespace detail

/// Drives x_{n+1} = step(x_n), recording iterates, shadow projections and
/// step norms. Stops on the rule's predicate, step-norm tolerance,
/// two-cycle detection, iteration budget, or divergence. A non-finite
/// iterate ends the run (diverged flag) without being recorded.
inline IterationTrace run(const StepFn& step, Point x0, const StopRule& rule,
                          const ConstraintSet& shadow_set) {
    if (rule.max_iter < 1) throw std::invalid_argument("run: max_iter must be >= 1");

    auto project_shadow = [&](const Point& x) {
        return detail::eval_perturbed([&](const Point& y) { return shadow_set.project(y); }, x);
    };

    IterationTrace trace;
    trace.shadows.push_back(project_shadow(x0));
    trace.iterates.push_back(std::move(x0));

    while (true) {
        if (rule.predicate && rule.predicate(trace)) {
            trace.stop_reason = StopReason::converged;
            break;
        }
        if (trace.step_norms.size() >= rule.max_iter) {
            trace.stop_reason = StopReason::max_iter;
            break;
        }

        const Point& x = trace.iterates.back();
        Point next = detail::eval_perturbed(step, x);
        if (!all_finite(next)) {
            trace.stop_reason = StopReason::max_iter;
            trace.diverged = true;
            break;
        }
        const double step_norm = distance(next, x);
        trace.step_norms.push_back(step_norm);
        trace.shadows.push_back(project_shadow(next));
        trace.iterates.push_back(std::move(next));

        if (norm(trace.iterates.back()) > rule.divergence_norm) {
            trace.stop_reason = StopReason::max_iter;
            trace.diverged = true;
            break;
        }
        if (step_norm <= rule.tol) {
            trace.stop_reason = StopReason::converged;
            break;
        }
        if (rule.detect_two_cycle && trace.iterates.size() >= 3) {
            const Point& prev2 = trace.iterates[trace.iterates.size() - 3];
            if (distance(trace.iterates.back(), prev2) <= rule.tol && step_norm > rule.tol) {
                trace.stop_reason = StopReason::cycle_detected;
                break;
            }
        }
    }
    trace.iterations = trace.step_norms.size();
    return trace;
}

/// ||x_n|| / n. For an inconsistent pair this approximates the gap
/// between the sets; it tends to 0 when the sets intersect.
inline double displacement_estimate(const IterationTrace& trace, std::size_t n) {
    if (n < 1) throw std::invalid_argument("displacement_estimate: n must be >= 1");
    if (n > trace.iterations)
        throw std::invalid_argument("displacement_estimate: n exceeds recorded iterations");
    return norm(trace.iterates[n]) / static_cast<double>(n);
}

/// True iff ||x_{n+1} - c|| <= ||x_n - c|| + 1e-12 for every consecutive
/// pair. Holds for convex pairs against any fixed point of the step
/// operator; may fail for nonconvex problems.
inline bool fejer_check(const IterationTrace& trace, const Point& c) {
    for (std::size_t n = 0; n + 1 < trace.iterates.size(); ++n) {
        if (distance(trace.iterates[n + 1], c) > distance(trace.iterates[n], c) + 1e-12)
            return false;
    }
    return true;
}

}  // namespace dr
