// Copyright 2026 The powerfractal Authors
// SPDX-License-Identifier: Apache-2.0

#include "powerfractal/power.hpp"

#include <stdexcept>
#include <string>

namespace powerfractal {

PowerPhasor PowerPhasor::checked(double p, double q)
{
    if (!std::isfinite(p) || !std::isfinite(q)) {
        throw std::invalid_argument("power values must be finite, got P=" + std::to_string(p) +
                                    " Q=" + std::to_string(q));
    }
    return {p, q};
}

std::string_view to_string(Quadrant q)
{
    switch (q) {
    case Quadrant::I: return "I";
    case Quadrant::II: return "II";
    case Quadrant::III: return "III";
    case Quadrant::IV: return "IV";
    case Quadrant::PositiveRealAxis: return "PositiveRealAxis";
    case Quadrant::NegativeRealAxis: return "NegativeRealAxis";
    case Quadrant::PositiveImagAxis: return "PositiveImagAxis";
    case Quadrant::NegativeImagAxis: return "NegativeImagAxis";
    case Quadrant::Origin: return "Origin";
    }
    return "?";
}

Quadrant classify_quadrant(const PowerPhasor& s)
{
    if (s.p == 0.0 && s.q == 0.0) return Quadrant::Origin;
    if (s.q == 0.0) return s.p > 0.0 ? Quadrant::PositiveRealAxis : Quadrant::NegativeRealAxis;
    if (s.p == 0.0) return s.q > 0.0 ? Quadrant::PositiveImagAxis : Quadrant::NegativeImagAxis;
    if (s.p > 0.0) return s.q > 0.0 ? Quadrant::I : Quadrant::IV;
    return s.q > 0.0 ? Quadrant::II : Quadrant::III;
}

std::string_view to_string(PowerCharacter c)
{
    switch (c) {
    case PowerCharacter::Lagging: return "lagging";
    case PowerCharacter::Leading: return "leading";
    case PowerCharacter::Unity: return "unity";
    case PowerCharacter::PurelyReactive: return "purely-reactive";
    }
    return "?";
}

PowerFactor power_factor(const PowerPhasor& s)
{
    if (s.p == 0.0 && s.q == 0.0) {
        throw std::domain_error("power factor undefined at origin");
    }
    const double pf = s.p / s.apparent();
    PowerCharacter character;
    if (s.p == 0.0) {
        character = PowerCharacter::PurelyReactive;
    } else if (s.q > 0.0) {
        character = PowerCharacter::Lagging;
    } else if (s.q < 0.0) {
        character = PowerCharacter::Leading;
    } else {
        character = PowerCharacter::Unity;
    }
    return {pf, character};
}

void ScalingConfig::validate() const
{
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(c_x) || !positive(c_y) || !positive(p_base) || !positive(q_base)) {
        throw std::invalid_argument("scaling constants c_x, c_y, p_base, q_base must be positive");
    }
}

ComplexValue to_parameter(const PowerPhasor& s, const ScalingConfig& sc)
{
    if (sc.mode == ScalingMode::Direct) {
        return {s.p, s.q};
    }
    return {(s.p / sc.p_base) * sc.c_x, (s.q / sc.q_base) * sc.c_y};
}

PowerPhasor from_parameter(ComplexValue c, const ScalingConfig& sc)
{
    if (sc.mode == ScalingMode::Direct) {
        return {c.re, c.im};
    }
    return {(c.re / sc.c_x) * sc.p_base, (c.im / sc.c_y) * sc.q_base};
}

} // namespace powerfractal
