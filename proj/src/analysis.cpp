// Copyright 2026 The powerfractal Authors
// SPDX-License-Identifier: Apache-2.0

#include "powerfractal/analysis.hpp"

#include "powerfractal/sampling.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

namespace powerfractal {

std::string to_string(Connectivity d)
{
    return d == Connectivity::Connected ? "Connected" : "Disconnected";
}

std::string evidence_label(const ConnectivityVerdict& v)
{
    switch (v.evidence) {
    case EvidenceKind::OracleInterior: return "OracleInterior";
    case EvidenceKind::BoundedAtBudget: return "BoundedAtBudget";
    case EvidenceKind::EscapedAt: return "EscapedAt(" + std::to_string(*v.escape_index) + ")";
    }
    return "?";
}

bool cardioid_or_bulb_interior(ComplexValue c)
{
    const double x = c.re - 0.25;
    const double y2 = c.im * c.im;
    const double q = x * x + y2;
    if (q * (q + x) < y2 / 4.0) return true;
    const double xb = c.re + 1.0;
    return xb * xb + y2 < 1.0 / 16.0;
}

ConnectivityVerdict mandelbrot_membership(ComplexValue c, const IterationConfig& cfg)
{
    cfg.validate();
    if (cardioid_or_bulb_interior(c)) {
        return {Connectivity::Connected, EvidenceKind::OracleInterior, std::nullopt, 0};
    }
    const OrbitOutcome orbit = critical_orbit(c, cfg);
    if (orbit.escaped()) {
        return {Connectivity::Disconnected, EvidenceKind::EscapedAt, orbit.escape_index,
                cfg.max_iterations};
    }
    return {Connectivity::Connected, EvidenceKind::BoundedAtBudget, std::nullopt,
            cfg.max_iterations};
}

ConnectivityVerdict julia_connectivity(ComplexValue c, const IterationConfig& cfg)
{
    return mandelbrot_membership(c, cfg);
}

SymmetryReport check_relation(std::string name, const SymmetryOptions& opts,
                              const SampleRelation& check)
{
    if (opts.sample_count < 1) {
        throw std::invalid_argument("symmetry check needs at least one sample");
    }
    opts.cfg.validate();
    opts.window.validate();

    // Drawn sequentially so the sample set does not depend on worker count.
    SeededSampler sampler(opts.seed);
    std::vector<ComplexValue> samples;
    samples.reserve(opts.sample_count);
    for (std::uint64_t i = 0; i < opts.sample_count; ++i) {
        const double re = sampler.uniform(opts.window.left(), opts.window.right());
        const double im = sampler.uniform(opts.window.bottom(), opts.window.top());
        samples.push_back({re, im});
    }

    struct Partial {
        std::uint64_t mismatches = 0;
        std::optional<SymmetryMismatch> first;
    };
    const auto worker_count = static_cast<unsigned>(
        std::min<std::uint64_t>(resolve_workers(opts.workers), opts.sample_count));
    std::vector<Partial> partials(worker_count);
    auto scan = [&](unsigned w) {
        const std::uint64_t begin = opts.sample_count * w / worker_count;
        const std::uint64_t end = opts.sample_count * (w + 1) / worker_count;
        for (std::uint64_t i = begin; i < end; ++i) {
            if (auto m = check(i, samples[i])) {
                if (partials[w].mismatches++ == 0) partials[w].first = *m;
            }
        }
    };
    if (worker_count == 1) {
        scan(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < worker_count; ++w) pool.emplace_back(scan, w);
    }

    SymmetryReport report{std::move(name), opts.sample_count, 0, std::nullopt};
    for (const Partial& part : partials) {
        report.mismatches += part.mismatches;
        if (part.first && !report.first_mismatch) report.first_mismatch = part.first;
    }
    return report;
}

SymmetryReport check_negation_symmetry(ComplexValue c, const SymmetryOptions& opts)
{
    return check_relation("negation z -> -z", opts,
                          [&](std::uint64_t i, ComplexValue z) -> std::optional<SymmetryMismatch> {
                              const OrbitOutcome expected = escape_time(z, c, opts.cfg);
                              const OrbitOutcome actual = escape_time(-z, c, opts.cfg);
                              if (expected == actual) return std::nullopt;
                              return SymmetryMismatch{i, z, expected, actual};
                          });
}

SymmetryReport check_conjugation_relation(ComplexValue c, const SymmetryOptions& opts)
{
    std::string name = c.im == 0.0 ? "real-axis mirror z -> conj(z)"
                                   : "conjugation (z, c) -> (conj(z), conj(c))";
    return check_relation(std::move(name), opts,
                          [&](std::uint64_t i, ComplexValue z) -> std::optional<SymmetryMismatch> {
                              const OrbitOutcome expected = escape_time(z, c, opts.cfg);
                              OrbitOutcome actual = escape_time(z.conj(), c.conj(), opts.cfg);
                              actual.final_value = actual.final_value.conj();
                              if (expected == actual) return std::nullopt;
                              return SymmetryMismatch{i, z, expected, actual};
                          });
}

} // namespace powerfractal
