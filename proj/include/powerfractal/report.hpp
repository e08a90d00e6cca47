// Copyright 2026 The powerfractal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "powerfractal/analysis.hpp"
#include "powerfractal/power.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace powerfractal {

/// One classified operating point: where S lands in the power plane and in
/// the parameter plane, and whether its Julia set is connected.
struct ClassificationRecord {
    PowerPhasor power;
    ComplexValue parameter;
    Quadrant quadrant;
    std::optional<PowerFactor> power_factor; // empty at the origin
    ConnectivityVerdict verdict;
    std::uint32_t budget;
};

ClassificationRecord classify_operating_point(const PowerPhasor& s, const ScalingConfig& sc,
                                              const IterationConfig& cfg);

inline constexpr const char* kCsvHeader =
    "p,q,c_re,c_im,quadrant,power_factor,verdict,evidence,escape_index,budget";

/// %.6f with negative zero printed as "0.000000".
std::string format_fixed(double v);

/// Without trailing newline.
std::string csv_row(const ClassificationRecord& rec);
std::string json_record(const ClassificationRecord& rec);
/// "quadrant I, pf 0.707107 lagging, Connected (OracleInterior), c=0.220000+0.220000i, ..."
std::string line_record(const ClassificationRecord& rec);

} // namespace powerfractal
