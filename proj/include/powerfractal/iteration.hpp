// Copyright 2026 The powerfractal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "powerfractal/complex_value.hpp"

#include <cstdint>
#include <optional>

namespace powerfractal {

/// Largest accepted iteration budget. Escape fields store counts as int32
/// and reserve INT32_MAX as the interior sentinel.
inline constexpr std::uint32_t kMaxIterationBudget = 2147483646u;

inline constexpr std::uint32_t kRenderBudget = 500;
inline constexpr std::uint32_t kClassifyBudget = 1000;

struct IterationConfig {
    double bailout_radius = 2.0;
    std::uint32_t max_iterations = kRenderBudget;

    /// Throws std::invalid_argument unless bailout >= 2 and
    /// 1 <= max_iterations <= kMaxIterationBudget.
    void validate() const;

    static IterationConfig render() { return {2.0, kRenderBudget}; }
    static IterationConfig classify() { return {2.0, kClassifyBudget}; }
};

struct OrbitOutcome {
    /// Iteration t >= 1 at which |Z_t| first exceeded the bailout; empty when
    /// the orbit stayed bounded for the whole budget.
    std::optional<std::uint32_t> escape_index;
    /// Z at termination.
    ComplexValue final_value;

    bool escaped() const { return escape_index.has_value(); }

    friend bool operator==(const OrbitOutcome&, const OrbitOutcome&) = default;
};

/// z^2 + c.
constexpr ComplexValue quadratic_step(ComplexValue z, ComplexValue c)
{
    return {z.re * z.re - z.im * z.im + c.re, 2.0 * z.re * z.im + c.im};
}

/// Iterates Z_t = Z_{t-1}^2 + c from Z_0 = z0 for t = 1..max_iterations and
/// stops at the first t with |Z_t| > bailout (strict). Z_0 itself is never
/// tested.
OrbitOutcome escape_time(ComplexValue z0, ComplexValue c, const IterationConfig& cfg);

/// Orbit of the critical point 0; boundedness decides c in M.
inline OrbitOutcome critical_orbit(ComplexValue c, const IterationConfig& cfg)
{
    return escape_time({0.0, 0.0}, c, cfg);
}

} // namespace powerfractal
