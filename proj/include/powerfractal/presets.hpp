// Copyright 2026 The powerfractal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "powerfractal/power.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace powerfractal {

enum class SweepAxis { Real, Reactive };

/// A one-dimensional study: P varies with Q fixed (real axis) or Q varies
/// with P fixed (reactive axis).
struct SweepPreset {
    std::string name;
    SweepAxis axis = SweepAxis::Real;
    std::vector<double> values;
    double fixed_other = 0.0;

    PowerPhasor phasor(double value) const
    {
        return axis == SweepAxis::Real ? PowerPhasor{value, fixed_other}
                                       : PowerPhasor{fixed_other, value};
    }
};

/// Real-power sweep 0, D_x/2, D_x and just past D_x (0.26), Q = 0, with
/// D_x = 0.25.
SweepPreset fig3_preset();
/// Reactive-power sweep 0, D_y/2, D_y and just past D_y (0.70), P = 0, with
/// D_y = 0.63.
SweepPreset fig4_preset();

std::optional<SweepPreset> find_preset(std::string_view name);

/// The four (+-m, +-m) operating points in quadrant order I, II, III, IV.
std::vector<PowerPhasor> quadrant_study_points(double magnitude);

} // namespace powerfractal
