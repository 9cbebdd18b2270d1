#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "kinoplan/core/errors.hpp"
#include "kinoplan/core/types.hpp"

namespace kinoplan {

enum class CostKind {
    PathLength,       // workspace path length over the position coordinates
    ControlDuration,  // total propagation time
};

[[nodiscard]] inline std::string_view to_string(CostKind kind) noexcept {
    return kind == CostKind::PathLength ? "path_length" : "control_duration";
}

[[nodiscard]] inline CostKind cost_kind_from_string(const std::string& s) {
    if (s == "path_length") return CostKind::PathLength;
    if (s == "control_duration") return CostKind::ControlDuration;
    throw SchemaError("unknown cost metric kind: \"" + s + "\"");
}

// Strict-positivity floor for path-length segments with zero displacement
// (e.g. hover), charged per second of duration.
inline constexpr Scalar kZeroDisplacementCostRate = 1e-6;

struct CostMetric {
    CostKind kind = CostKind::PathLength;
    // Number of leading state coordinates that are workspace positions;
    // path length is measured in this projection.
    int position_dims = 3;
    // Lipschitz constant hint (K_c). Analysis metadata, never read at runtime.
    std::optional<Scalar> lipschitz_hint;
};

/// Cost of one propagated segment. Additive by construction: splitting the
/// sample list at any interior index and summing the part costs reproduces
/// the whole (exactly for control_duration, to rounding for path_length).
[[nodiscard]] inline Scalar segment_cost(std::span<const State> samples,
                                         const Control& /*control*/, Scalar duration,
                                         const CostMetric& metric) {
    if (samples.size() < 2) {
        throw InvalidSegmentError("segment_cost: segment needs at least 2 samples");
    }
    if (!(duration > 0)) {
        throw InvalidSegmentError("segment_cost: segment duration must be positive");
    }
    switch (metric.kind) {
        case CostKind::ControlDuration:
            return duration;
        case CostKind::PathLength: {
            const int d = metric.position_dims;
            Scalar total = 0;
            for (std::size_t i = 1; i < samples.size(); ++i) {
                total += (samples[i].head(d) - samples[i - 1].head(d)).norm();
            }
            if (total == 0) return kZeroDisplacementCostRate * duration;
            return total;
        }
    }
    KINO_CHECK(false, "unreachable cost kind");
}

/// Euclidean ball over a subset of state dimensions.
struct GoalRegion {
    std::vector<int> dims;  // state dimensions the ball lives in
    Vec center;             // one entry per element of dims
    Scalar radius = 0;
};

/// Boundary-inclusive goal membership.
[[nodiscard]] inline bool in_goal(const State& x, const GoalRegion& goal) noexcept {
    Scalar d2 = 0;
    for (std::size_t i = 0; i < goal.dims.size(); ++i) {
        const Scalar dx = x[goal.dims[i]] - goal.center[static_cast<int>(i)];
        d2 += dx * dx;
    }
    return d2 <= goal.radius * goal.radius;
}

/// Densely sampled path between a parent state and a candidate child.
struct TrajectorySegment {
    std::vector<State> samples;  // >= 2, endpoints included
    Control control;             // zero-order hold over the segment
    Scalar duration = 0;         // seconds, in (0, t_prop]
    Scalar incremental_cost = 0;
};

}  // namespace kinoplan
