// Copyright 2026 The powerfractal Authors
// SPDX-License-Identifier: Apache-2.0

#include "powerfractal/report.hpp"

#include <json.hpp>

#include <cstdio>

namespace powerfractal {

ClassificationRecord classify_operating_point(const PowerPhasor& s, const ScalingConfig& sc,
                                              const IterationConfig& cfg)
{
    sc.validate();
    const ComplexValue c = to_parameter(s, sc);
    std::optional<PowerFactor> pf;
    if (s.p != 0.0 || s.q != 0.0) pf = power_factor(s);
    return {s, c, classify_quadrant(s), pf, julia_connectivity(c, cfg), cfg.max_iterations};
}

std::string format_fixed(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string out(buf);
    if (out == "-0.000000") out.erase(0, 1);
    return out;
}

std::string csv_row(const ClassificationRecord& rec)
{
    std::string row;
    row += format_fixed(rec.power.p) + ',';
    row += format_fixed(rec.power.q) + ',';
    row += format_fixed(rec.parameter.re) + ',';
    row += format_fixed(rec.parameter.im) + ',';
    row += std::string(to_string(rec.quadrant)) + ',';
    row += (rec.power_factor ? format_fixed(rec.power_factor->value) : "undefined") + ',';
    row += to_string(rec.verdict.decision) + ',';
    row += evidence_label(rec.verdict) + ',';
    row += (rec.verdict.escape_index ? std::to_string(*rec.verdict.escape_index) : "") + ',';
    row += std::to_string(rec.budget);
    return row;
}

std::string json_record(const ClassificationRecord& rec)
{
    nlohmann::ordered_json j;
    j["p"] = rec.power.p;
    j["q"] = rec.power.q;
    j["c_re"] = rec.parameter.re;
    j["c_im"] = rec.parameter.im;
    j["quadrant"] = to_string(rec.quadrant);
    if (rec.power_factor) {
        j["power_factor"] = rec.power_factor->value;
    } else {
        j["power_factor"] = "undefined";
    }
    j["verdict"] = to_string(rec.verdict.decision);
    j["evidence"] = evidence_label(rec.verdict);
    if (rec.verdict.escape_index) {
        j["escape_index"] = *rec.verdict.escape_index;
    } else {
        j["escape_index"] = nullptr;
    }
    j["budget"] = rec.budget;
    return j.dump();
}

std::string line_record(const ClassificationRecord& rec)
{
    std::string line = "quadrant " + std::string(to_string(rec.quadrant)) + ", pf ";
    if (rec.power_factor) {
        line += format_fixed(rec.power_factor->value) + ' ' +
                std::string(to_string(rec.power_factor->character));
    } else {
        line += "undefined";
    }
    line += ", " + to_string(rec.verdict.decision) + " (" + evidence_label(rec.verdict) + ")";
    const std::string im = format_fixed(rec.parameter.im);
    line += ", c=" + format_fixed(rec.parameter.re) + (im.front() == '-' ? "" : "+") + im + "i";
    line += ", budget " + std::to_string(rec.budget);
    return line;
}

} // namespace powerfractal
