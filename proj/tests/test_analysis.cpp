// Copyright 2026 The powerfractal Authors
// SPDX-License-Identifier: Apache-2.0

#include "powerfractal/analysis.hpp"

#include "support/orbit_oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace powerfractal;

TEST_CASE("cardioid_or_bulb_interior closed forms")
{
    CHECK(cardioid_or_bulb_interior({0, 0}));
    CHECK(cardioid_or_bulb_interior({-1, 0}));
    CHECK(cardioid_or_bulb_interior({0.22, 0.22}));
    CHECK(cardioid_or_bulb_interior({0.22, -0.22}));
    CHECK(cardioid_or_bulb_interior({-0.22, 0.22}));
    CHECK(cardioid_or_bulb_interior({-0.22, -0.22}));
    CHECK(cardioid_or_bulb_interior({-0.33, 0.57}));
    CHECK(cardioid_or_bulb_interior({0, 0.63}));

    // Cusp and the bulb rim are excluded (strict tests).
    CHECK_FALSE(cardioid_or_bulb_interior({0.25, 0}));
    CHECK_FALSE(cardioid_or_bulb_interior({-1.25, 0}));
    CHECK_FALSE(cardioid_or_bulb_interior({0.44, 0.15}));
    CHECK_FALSE(cardioid_or_bulb_interior({0, 1}));
    CHECK_FALSE(cardioid_or_bulb_interior({3, 0}));

    SUBCASE("0.22+0.22i by hand")
    {
        // q = (0.22 - 0.25)^2 + 0.22^2 = 0.0493; q (q + x - 1/4) = 0.00095149 < y^2/4 = 0.0121
        const double q = 0.0009 + 0.0484;
        CHECK(q * (q - 0.03) == doctest::Approx(0.00095149));
        CHECK(q * (q - 0.03) < 0.0484 / 4);
    }
}

TEST_CASE("cardioid closed form agrees with its parametrisation")
{
    // Boundary: c = e^{it}/2 - e^{2it}/4. Points scaled slightly inward along
    // the ray from the cardioid's inner point 0 are inside, outward are not.
    for (int k = 1; k < 360; ++k) {
        const double t = 2 * std::numbers::pi * k / 360.0;
        const double bre = std::cos(t) / 2 - std::cos(2 * t) / 4;
        const double bim = std::sin(t) / 2 - std::sin(2 * t) / 4;
        CHECK(cardioid_or_bulb_interior({bre * 0.99, bim * 0.99}));
        const ComplexValue outside{bre * 1.01, bim * 1.01};
        // Outside the cardioid, but could land in the period-2 bulb near t = pi.
        const double xb = outside.re + 1;
        if (xb * xb + outside.im * outside.im >= 1.0 / 16) {
            CHECK_FALSE(cardioid_or_bulb_interior(outside));
        }
    }
}

TEST_CASE("oracle soundness: closed-form interior points never escape")
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> re(-1.3, 0.5);
    std::uniform_real_distribution<double> im(-0.7, 0.7);
    const IterationConfig cfg = IterationConfig::classify();
    int tested = 0;
    while (tested < 2000) {
        const ComplexValue c{re(rng), im(rng)};
        if (!cardioid_or_bulb_interior(c)) continue;
        ++tested;
        CHECK_FALSE(critical_orbit(c, cfg).escaped());
    }
}

TEST_CASE("mandelbrot_membership")
{
    const auto cfg = IterationConfig::classify();

    const auto one = mandelbrot_membership({1, 0}, cfg);
    CHECK(one.decision == Connectivity::Disconnected);
    CHECK(one.evidence == EvidenceKind::EscapedAt);
    CHECK(one.escape_index == 3u);
    CHECK(evidence_label(one) == "EscapedAt(3)");

    const auto c1 = mandelbrot_membership({-0.33, 0.57}, cfg);
    CHECK(c1.connected());
    CHECK(c1.evidence == EvidenceKind::OracleInterior);

    const auto far = mandelbrot_membership({3, 0}, cfg);
    CHECK(far.decision == Connectivity::Disconnected);
    CHECK(far.escape_index == 1u);

    const auto minus_one = mandelbrot_membership({-1, 0}, cfg);
    CHECK(minus_one.connected());
    CHECK(minus_one.evidence == EvidenceKind::OracleInterior);
    CHECK(minus_one.budget_used == 0);

    SUBCASE("the cusp 1/4 is only believed, not proved")
    {
        for (std::uint32_t budget : {10u, 1000u, 100000u}) {
            const auto cusp = mandelbrot_membership({0.25, 0}, {2.0, budget});
            CHECK(cusp.connected());
            CHECK(cusp.evidence == EvidenceKind::BoundedAtBudget);
            CHECK(cusp.budget_used == budget);
            CHECK(evidence_label(cusp) == "BoundedAtBudget");
        }
    }
}

TEST_CASE("julia_connectivity")
{
    const auto cfg = IterationConfig::classify();

    const auto c2 = julia_connectivity({0.44, 0.15}, cfg);
    CHECK(c2.decision == Connectivity::Disconnected);
    CHECK(c2.escape_index == 7u);

    const auto q4 = julia_connectivity({0.22, -0.22}, cfg);
    CHECK(q4.connected());
    CHECK(q4.evidence == EvidenceKind::OracleInterior);

    // Just past the cusp; frozen from oracle::escape_index.
    const auto past = julia_connectivity({0.26, 0}, cfg);
    CHECK(past.decision == Connectivity::Disconnected);
    CHECK(past.escape_index == 30u);
    CHECK(past.escape_index == oracle::escape_index(0.0, 0.26, 1000));

    const auto up = julia_connectivity({0, 0.70}, cfg);
    CHECK(up.escape_index == 13u);
    CHECK(up.escape_index == oracle::escape_index(0.0, {0, 0.70}, 1000));
}

TEST_CASE("membership properties on random parameters")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coord(-2.5, 2.5);
    const IterationConfig cfg{2.0, 400};
    for (int i = 0; i < 3000; ++i) {
        const ComplexValue c{coord(rng), coord(rng)};
        const auto v = mandelbrot_membership(c, cfg);

        CHECK(julia_connectivity(c, cfg) == v);

        const auto mirrored = mandelbrot_membership(c.conj(), cfg);
        CHECK(mirrored.decision == v.decision);
        CHECK(mirrored.escape_index == v.escape_index);

        CHECK((v.decision == Connectivity::Disconnected) == (v.evidence == EvidenceKind::EscapedAt));
        if (v.escape_index) CHECK(*v.escape_index <= v.budget_used);

        if (c.norm_squared() > 4.0) {
            CHECK(v.decision == Connectivity::Disconnected);
            CHECK(v.escape_index == 1u);
        }

        const auto bigger = mandelbrot_membership(c, {2.0, 4000});
        if (v.decision == Connectivity::Disconnected) {
            CHECK(bigger.escape_index == v.escape_index);
        } else if (v.evidence == EvidenceKind::OracleInterior) {
            CHECK(bigger == v);
        }
        // BoundedAtBudget may turn into EscapedAt, never the other way round.
        if (bigger.connected()) CHECK(v.connected());
    }
}

TEST_CASE("symmetry checks report zero mismatches")
{
    SymmetryOptions opts;
    opts.sample_count = 1000;
    opts.seed = 42;

    for (ComplexValue c : {ComplexValue{0.22, 0.22}, ComplexValue{0.44, 0.15}, ComplexValue{0, 0},
                           ComplexValue{-0.22, 0.22}, ComplexValue{0.25, 0}}) {
        const auto neg = check_negation_symmetry(c, opts);
        CHECK(neg.samples_tested == 1000);
        CHECK(neg.mismatches == 0);
        CHECK_FALSE(neg.first_mismatch.has_value());

        const auto conj = check_conjugation_relation(c, opts);
        CHECK(conj.samples_tested == 1000);
        CHECK(conj.mismatches == 0);
    }

    opts.sample_count = 10;
    CHECK(check_negation_symmetry({0, 0}, opts).clean());

    CHECK(check_conjugation_relation({0.25, 0}, opts).relation_name.starts_with("real-axis"));
    CHECK(check_conjugation_relation({0.22, 0.22}, opts).relation_name.starts_with("conjugation"));

    opts.sample_count = 0;
    CHECK_THROWS_AS(check_negation_symmetry({0, 0}, opts), std::invalid_argument);
}

TEST_CASE("symmetry reports do not depend on worker count")
{
    SymmetryOptions opts;
    opts.sample_count = 5000;
    opts.seed = 8;
    opts.workers = 1;
    const auto one = check_conjugation_relation({-0.12, 0.75}, opts);
    for (unsigned w : {2u, 3u, 8u}) {
        opts.workers = w;
        const auto many = check_conjugation_relation({-0.12, 0.75}, opts);
        CHECK(many.samples_tested == one.samples_tested);
        CHECK(many.mismatches == one.mismatches);
        CHECK(many.first_mismatch.has_value() == one.first_mismatch.has_value());
    }
}

TEST_CASE("check_relation keeps the lowest-indexed mismatch across workers")
{
    SymmetryOptions opts;
    opts.sample_count = 1000;
    opts.seed = 3;
    auto fails_above_600 = [](std::uint64_t i, ComplexValue z) -> std::optional<SymmetryMismatch> {
        if (i < 600 || i % 7 != 0) return std::nullopt;
        return SymmetryMismatch{i, z, {}, {}};
    };
    for (unsigned w : {1u, 2u, 4u, 16u}) {
        opts.workers = w;
        const auto report = check_relation("synthetic", opts, fails_above_600);
        CHECK(report.relation_name == "synthetic");
        // Multiples of 7 in [600, 1000): 602, 609, ..., 994.
        CHECK(report.mismatches == 57);
        REQUIRE(report.first_mismatch.has_value());
        CHECK(report.first_mismatch->sample_index == 602);
        CHECK_FALSE(report.clean());
    }
}

TEST_CASE("sampled points stay inside the window and follow the seed")
{
    SymmetryOptions opts;
    opts.sample_count = 500;
    opts.window = {{1.0, -1.0}, 0.5, 2, 1};
    std::vector<ComplexValue> first, second;
    auto collect = [](std::vector<ComplexValue>& into) {
        return [&into](std::uint64_t, ComplexValue z) -> std::optional<SymmetryMismatch> {
            into.push_back(z);
            return std::nullopt;
        };
    };
    check_relation("a", opts, collect(first));
    check_relation("b", opts, collect(second));
    CHECK(first == second);
    for (const ComplexValue& z : first) {
        CHECK(z.re >= 0.75);
        CHECK(z.re < 1.25);
        CHECK(z.im >= -1.125);
        CHECK(z.im < -0.875);
    }
}
