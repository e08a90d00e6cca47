// Copyright 2026 The powerfractal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "powerfractal/complex_value.hpp"

#include <string_view>

namespace powerfractal {

/// Complex power S = P + jQ. P is signed real power (negative for a source),
/// Q is signed reactive power (positive inductive, negative capacitive).
struct PowerPhasor {
    double p = 0.0;
    double q = 0.0;

    static PowerPhasor checked(double p, double q);

    double apparent() const { return std::hypot(p, q); }

    friend constexpr bool operator==(const PowerPhasor&, const PowerPhasor&) = default;
};

enum class Quadrant {
    I,
    II,
    III,
    IV,
    PositiveRealAxis,
    NegativeRealAxis,
    PositiveImagAxis,
    NegativeImagAxis,
    Origin,
};

std::string_view to_string(Quadrant q);

Quadrant classify_quadrant(const PowerPhasor& s);

enum class PowerCharacter { Lagging, Leading, Unity, PurelyReactive };

std::string_view to_string(PowerCharacter c);

struct PowerFactor {
    /// cos(theta) = p / |S|, carrying the sign of p.
    double value;
    PowerCharacter character;
};

/// Throws std::domain_error when p = q = 0.
PowerFactor power_factor(const PowerPhasor& s);

enum class ScalingMode { Direct, Normalized };

/// How a phasor lands in the parameter plane. Direct reads (p, q) as (re, im);
/// normalized maps the bases onto the extents (c_x, c_y) of M on the positive
/// axes.
struct ScalingConfig {
    ScalingMode mode = ScalingMode::Direct;
    double c_x = 0.25;
    double c_y = 0.63;
    double p_base = 1.0;
    double q_base = 1.0;

    void validate() const;
};

ComplexValue to_parameter(const PowerPhasor& s, const ScalingConfig& sc);
PowerPhasor from_parameter(ComplexValue c, const ScalingConfig& sc);

} // namespace powerfractal
