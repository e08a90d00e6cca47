// Copyright 2026 The powerfractal Authors
// SPDX-License-Identifier: Apache-2.0

#include "powerfractal/field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

namespace powerfractal {

void GridSpec::validate() const
{
    if (!std::isfinite(center.re) || !std::isfinite(center.im)) {
        throw std::invalid_argument("grid center must be finite");
    }
    if (!(width > 0.0) || !std::isfinite(width)) {
        throw std::invalid_argument("grid width must be positive, got " + std::to_string(width));
    }
    if (cols < 1 || rows < 1) {
        throw std::invalid_argument("grid dimensions must be at least 1x1");
    }
}

ComplexValue pixel_to_complex(const GridSpec& spec, std::uint32_t col, std::uint32_t row)
{
    if (col >= spec.cols || row >= spec.rows) {
        throw std::out_of_range("pixel (" + std::to_string(col) + ", " + std::to_string(row) +
                                ") outside " + std::to_string(spec.cols) + "x" +
                                std::to_string(spec.rows) + " grid");
    }
    const double step = spec.width / spec.cols;
    const double half_cols = spec.cols / 2.0;
    const double half_rows = spec.rows / 2.0;
    return {spec.center.re + (col + 0.5 - half_cols) * step,
            spec.center.im + (half_rows - row - 0.5) * step};
}

PixelIndex complex_to_pixel(const GridSpec& spec, ComplexValue p)
{
    if (!spec.contains(p)) {
        std::ostringstream msg;
        msg << "point " << p.re << (p.im < 0 ? "" : "+") << p.im << "i lies outside window re ["
            << spec.left() << ", " << spec.right() << "], im [" << spec.bottom() << ", "
            << spec.top() << "]";
        throw std::out_of_range(msg.str());
    }
    const double step = spec.pixel_size();
    const auto col = static_cast<std::uint32_t>(std::floor((p.re - spec.left()) / step));
    const auto row = static_cast<std::uint32_t>(std::floor((spec.top() - p.im) / step));
    return {std::min(col, spec.cols - 1), std::min(row, spec.rows - 1)};
}

EscapeField::EscapeField(GridSpec spec, RenderMode mode, std::uint32_t budget)
    : spec_(spec), mode_(mode), budget_(budget),
      cells_(static_cast<std::size_t>(spec.cols) * spec.rows, kInterior)
{
}

unsigned resolve_workers(unsigned requested)
{
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

void render_rows(EscapeField& field, const IterationConfig& cfg, std::uint32_t row_begin,
                 std::uint32_t row_end)
{
    const GridSpec& spec = field.spec();
    const RenderMode& mode = field.mode();
    for (std::uint32_t row = row_begin; row < row_end; ++row) {
        auto out = field.row_span(row);
        for (std::uint32_t col = 0; col < spec.cols; ++col) {
            const ComplexValue point = pixel_to_complex(spec, col, row);
            const OrbitOutcome outcome = mode.kind == RenderMode::Kind::Mandelbrot
                                             ? critical_orbit(point, cfg)
                                             : escape_time(point, mode.c, cfg);
            out[col] = outcome.escaped() ? static_cast<std::int32_t>(*outcome.escape_index)
                                         : EscapeField::kInterior;
        }
    }
}

} // namespace

EscapeField compute_escape_field(const GridSpec& spec, const RenderMode& mode,
                                 const IterationConfig& cfg, unsigned workers)
{
    spec.validate();
    cfg.validate();
    EscapeField field(spec, mode, cfg.max_iterations);

    const unsigned bands = std::min<unsigned>(resolve_workers(workers), spec.rows);
    if (bands <= 1) {
        render_rows(field, cfg, 0, spec.rows);
        return field;
    }

    std::vector<std::jthread> pool;
    pool.reserve(bands);
    for (unsigned b = 0; b < bands; ++b) {
        const auto begin = static_cast<std::uint32_t>(std::uint64_t{spec.rows} * b / bands);
        const auto end = static_cast<std::uint32_t>(std::uint64_t{spec.rows} * (b + 1) / bands);
        pool.emplace_back([&field, &cfg, begin, end] { render_rows(field, cfg, begin, end); });
    }
    pool.clear();
    return field;
}

} // namespace powerfractal
