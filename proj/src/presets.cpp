// Copyright 2026 The powerfractal Authors
// SPDX-License-Identifier: Apache-2.0

#include "powerfractal/presets.hpp"

namespace powerfractal {

SweepPreset fig3_preset()
{
    return {"fig3", SweepAxis::Real, {0.0, 0.125, 0.25, 0.26}, 0.0};
}

SweepPreset fig4_preset()
{
    return {"fig4", SweepAxis::Reactive, {0.0, 0.315, 0.63, 0.70}, 0.0};
}

std::optional<SweepPreset> find_preset(std::string_view name)
{
    if (name == "fig3") return fig3_preset();
    if (name == "fig4") return fig4_preset();
    return std::nullopt;
}

std::vector<PowerPhasor> quadrant_study_points(double magnitude)
{
    const double m = magnitude;
    return {{m, m}, {-m, m}, {-m, -m}, {m, -m}};
}

} // namespace powerfractal
