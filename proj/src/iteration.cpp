// Copyright 2026 The powerfractal Authors
// SPDX-License-Identifier: Apache-2.0

#include "powerfractal/iteration.hpp"

#include <stdexcept>
#include <string>

namespace powerfractal {

void IterationConfig::validate() const
{
    if (!(bailout_radius >= 2.0) || !std::isfinite(bailout_radius)) {
        throw std::invalid_argument("bailout radius must be a finite value >= 2, got " +
                                    std::to_string(bailout_radius));
    }
    if (max_iterations < 1 || max_iterations > kMaxIterationBudget) {
        throw std::invalid_argument("max_iterations must be in [1, " +
                                    std::to_string(kMaxIterationBudget) + "], got " +
                                    std::to_string(max_iterations));
    }
}

OrbitOutcome escape_time(ComplexValue z0, ComplexValue c, const IterationConfig& cfg)
{
    const double bailout_sq = cfg.bailout_radius * cfg.bailout_radius;
    ComplexValue z = z0;
    for (std::uint32_t t = 1; t <= cfg.max_iterations; ++t) {
        z = quadratic_step(z, c);
        if (z.norm_squared() > bailout_sq) {
            return {t, z};
        }
    }
    return {std::nullopt, z};
}

} // namespace powerfractal
