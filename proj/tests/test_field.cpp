// Copyright 2026 The powerfractal Authors
// SPDX-License-Identifier: Apache-2.0

#include "powerfractal/field.hpp"

#include <doctest.h>

#include <cmath>

using namespace powerfractal;

TEST_CASE("pixel_to_complex samples pixel centres")
{
    CHECK(pixel_to_complex({{0, 0}, 4.0, 2, 2}, 0, 0) == ComplexValue{-1, 1});
    CHECK(pixel_to_complex({{0, 0}, 4.0, 2, 2}, 1, 1) == ComplexValue{1, -1});
    CHECK(pixel_to_complex({{0, 0}, 4.0, 1, 1}, 0, 0) == ComplexValue{0, 0});
    CHECK(pixel_to_complex({{0.5, 0.5}, 2.0, 2, 2}, 1, 1) == ComplexValue{1.0, 0.0});

    // Non-square grid: height = width * rows / cols.
    const GridSpec wide{{0, 0}, 4.0, 4, 2};
    CHECK(wide.height() == 2.0);
    CHECK(pixel_to_complex(wide, 0, 0) == ComplexValue{-1.5, 0.5});
    CHECK(pixel_to_complex(wide, 3, 1) == ComplexValue{1.5, -0.5});

    CHECK_THROWS_AS(pixel_to_complex(wide, 4, 0), std::out_of_range);
    CHECK_THROWS_AS(pixel_to_complex(wide, 0, 2), std::out_of_range);
}

TEST_CASE("complex_to_pixel inverts the mapping")
{
    const GridSpec spec{{-0.5, 0.0}, 3.0, 100, 100};
    for (std::uint32_t row = 0; row < spec.rows; row += 7) {
        for (std::uint32_t col = 0; col < spec.cols; col += 3) {
            const PixelIndex px = complex_to_pixel(spec, pixel_to_complex(spec, col, row));
            CHECK(px.col == col);
            CHECK(px.row == row);
        }
    }
    // (0.22 + 2.0) / 0.03 and (1.5 - 0.22) / 0.03 by hand.
    const PixelIndex marker = complex_to_pixel(spec, {0.22, 0.22});
    CHECK(marker.col == 74);
    CHECK(marker.row == 42);

    // Window corners map into the grid.
    CHECK(complex_to_pixel(spec, {spec.right(), spec.bottom()}).col == 99);
    CHECK(complex_to_pixel(spec, {spec.right(), spec.bottom()}).row == 99);
    CHECK(complex_to_pixel(spec, {spec.left(), spec.top()}).col == 0);

    CHECK_THROWS_AS(complex_to_pixel(spec, {10, 10}), std::out_of_range);
}

TEST_CASE("GridSpec validation")
{
    CHECK_NOTHROW(GridSpec{}.validate());
    CHECK_THROWS(GridSpec{{0, 0}, 0.0, 4, 4}.validate());
    CHECK_THROWS(GridSpec{{0, 0}, 1.0, 0, 4}.validate());
    CHECK_THROWS(GridSpec{{0, 0}, 1.0, 4, 0}.validate());
    CHECK_THROWS(GridSpec{{std::nan(""), 0}, 1.0, 4, 4}.validate());
}

TEST_CASE("single-cell fields")
{
    const auto cfg = IterationConfig::render();
    const auto inside = compute_escape_field({{-1, 0}, 3.0, 1, 1}, RenderMode::mandelbrot(), cfg, 1);
    CHECK(inside.interior(0, 0));
    CHECK(inside.budget() == cfg.max_iterations);

    const auto outside = compute_escape_field({{3, 0}, 3.0, 1, 1}, RenderMode::mandelbrot(), cfg, 1);
    CHECK(outside.at(0, 0) == 1);
}

TEST_CASE("Julia field of c = 0 is the unit disk")
{
    const GridSpec spec{{0, 0}, 4.0, 96, 96};
    const auto field = compute_escape_field(spec, RenderMode::julia({0, 0}),
                                            IterationConfig::render(), 4);
    for (std::uint32_t row = 0; row < spec.rows; ++row) {
        for (std::uint32_t col = 0; col < spec.cols; ++col) {
            const double r = pixel_to_complex(spec, col, row).magnitude();
            if (std::abs(r - 1.0) < 0x1.0p-40) continue;
            CHECK_MESSAGE(field.interior(col, row) == (r < 1.0), "pixel ", col, ",", row);
        }
    }
}

TEST_CASE("field symmetry and worker independence")
{
    const IterationConfig cfg{2.0, 300};

    SUBCASE("Julia fields are symmetric under z -> -z")
    {
        const GridSpec spec{{0, 0}, 3.6, 64, 48};
        for (ComplexValue c : {ComplexValue{0.22, 0.22}, ComplexValue{0.44, 0.15},
                               ComplexValue{-0.33, 0.57}, ComplexValue{-0.8, 0.156}}) {
            const auto f = compute_escape_field(spec, RenderMode::julia(c), cfg, 3);
            for (std::uint32_t row = 0; row < spec.rows; ++row) {
                for (std::uint32_t col = 0; col < spec.cols; ++col) {
                    REQUIRE(f.at(col, row) == f.at(spec.cols - 1 - col, spec.rows - 1 - row));
                }
            }
        }
    }

    SUBCASE("Mandelbrot field mirrors across the real axis")
    {
        const GridSpec spec{{-0.75, 0}, 2.7, 80, 60};
        const auto f = compute_escape_field(spec, RenderMode::mandelbrot(), cfg, 2);
        for (std::uint32_t row = 0; row < spec.rows; ++row) {
            for (std::uint32_t col = 0; col < spec.cols; ++col) {
                REQUIRE(f.at(col, row) == f.at(col, spec.rows - 1 - row));
            }
        }
    }

    SUBCASE("cells agree for every worker count")
    {
        const GridSpec spec{{-0.5, 0}, 3.0, 73, 41};
        const auto serial = compute_escape_field(spec, RenderMode::mandelbrot(), cfg, 1);
        for (unsigned w : {2u, 3u, 7u, 41u, 64u, 0u}) {
            const auto parallel = compute_escape_field(spec, RenderMode::mandelbrot(), cfg, w);
            CHECK(std::equal(serial.cells().begin(), serial.cells().end(),
                             parallel.cells().begin(), parallel.cells().end()));
        }
    }

    SUBCASE("recorded escape indices respect the budget")
    {
        const GridSpec spec{{0, 0}, 4.0, 50, 50};
        const auto f = compute_escape_field(spec, RenderMode::julia({-0.12, 0.75}), {2.0, 37}, 2);
        for (std::int32_t cell : f.cells()) {
            CHECK((cell == EscapeField::kInterior || (cell >= 1 && cell <= 37)));
        }
    }
}

TEST_CASE("compute_escape_field validates its inputs")
{
    CHECK_THROWS(compute_escape_field({{0, 0}, -1.0, 4, 4}, RenderMode::mandelbrot(),
                                      IterationConfig::render()));
    CHECK_THROWS(compute_escape_field({{0, 0}, 1.0, 4, 4}, RenderMode::mandelbrot(), {2.0, 0}));
}
