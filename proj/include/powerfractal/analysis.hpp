// Copyright 2026 The powerfractal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "powerfractal/complex_value.hpp"
#include "powerfractal/field.hpp"
#include "powerfractal/iteration.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace powerfractal {

enum class Connectivity { Connected, Disconnected };

enum class EvidenceKind { OracleInterior, BoundedAtBudget, EscapedAt };

struct ConnectivityVerdict {
    Connectivity decision;
    EvidenceKind evidence;
    /// Set iff evidence is EscapedAt.
    std::optional<std::uint32_t> escape_index;
    /// Iterations granted to the critical orbit (0 when the oracle decided).
    std::uint32_t budget_used;

    bool connected() const { return decision == Connectivity::Connected; }

    friend bool operator==(const ConnectivityVerdict&, const ConnectivityVerdict&) = default;
};

std::string to_string(Connectivity d);
/// "OracleInterior", "BoundedAtBudget" or "EscapedAt(<index>)".
std::string evidence_label(const ConnectivityVerdict& v);

/// Closed-form membership in the main cardioid or the period-2 bulb of M.
/// Both tests are strict, so the cusp c = 1/4 and the bulb rim report false.
bool cardioid_or_bulb_interior(ComplexValue c);

/// Oracle shortcut first, then the critical orbit under cfg. A bounded orbit
/// is reported Connected with BoundedAtBudget evidence.
ConnectivityVerdict mandelbrot_membership(ComplexValue c, const IterationConfig& cfg);

/// J_c is connected iff c is in M, so this shares the membership procedure.
ConnectivityVerdict julia_connectivity(ComplexValue c, const IterationConfig& cfg);

struct SymmetryMismatch {
    std::uint64_t sample_index;
    ComplexValue input;
    OrbitOutcome expected;
    OrbitOutcome actual;
};

struct SymmetryReport {
    std::string relation_name;
    std::uint64_t samples_tested = 0;
    std::uint64_t mismatches = 0;
    /// Lowest-indexed mismatch, independent of worker count.
    std::optional<SymmetryMismatch> first_mismatch;

    bool clean() const { return mismatches == 0; }
};

struct SymmetryOptions {
    std::uint64_t sample_count = 1000;
    std::uint64_t seed = 1;
    IterationConfig cfg = IterationConfig::render();
    /// Starting points are drawn uniformly from this window.
    GridSpec window = GridSpec::julia_default();
    unsigned workers = 1;
};

/// Evaluates relation on opts.sample_count starting points drawn from
/// opts.window by SeededSampler(opts.seed). The relation returns a mismatch
/// or nothing; samples are spread over opts.workers threads.
using SampleRelation =
    std::function<std::optional<SymmetryMismatch>(std::uint64_t index, ComplexValue z)>;
SymmetryReport check_relation(std::string relation_name, const SymmetryOptions& opts,
                              const SampleRelation& relation);

/// escape_time(z, c) against escape_time(-z, c): escape flag, index and
/// final value must agree exactly.
SymmetryReport check_negation_symmetry(ComplexValue c, const SymmetryOptions& opts);

/// escape_time(z, c) against escape_time(conj z, conj c): escape flag and
/// index must agree and the final values must be conjugates. For real c
/// this is the mirror of the filled Julia set in the real axis.
SymmetryReport check_conjugation_relation(ComplexValue c, const SymmetryOptions& opts);

} // namespace powerfractal
