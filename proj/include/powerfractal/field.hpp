// Copyright 2026 The powerfractal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "powerfractal/complex_value.hpp"
#include "powerfractal/iteration.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace powerfractal {

/// A window of the complex plane sampled on a cols x rows pixel grid with
/// square pixels. Row 0 is the top edge (largest imaginary part).
struct GridSpec {
    ComplexValue center;
    double width = 4.0;
    std::uint32_t cols = 512;
    std::uint32_t rows = 512;

    void validate() const;

    double pixel_size() const { return width / cols; }
    double height() const { return width * rows / cols; }
    double left() const { return center.re - width / 2.0; }
    double right() const { return center.re + width / 2.0; }
    double top() const { return center.im + height() / 2.0; }
    double bottom() const { return center.im - height() / 2.0; }

    bool contains(ComplexValue p) const
    {
        return p.re >= left() && p.re <= right() && p.im >= bottom() && p.im <= top();
    }

    static GridSpec mandelbrot_default() { return {{-0.5, 0.0}, 3.0, 512, 512}; }
    static GridSpec julia_default() { return {{0.0, 0.0}, 4.0, 512, 512}; }
};

/// Center of pixel (col, row). Throws std::out_of_range for indices outside
/// the grid.
ComplexValue pixel_to_complex(const GridSpec& spec, std::uint32_t col, std::uint32_t row);

/// Pixel whose cell contains p, with points on the right/bottom window edge
/// folded into the last column/row. Throws std::out_of_range if p lies
/// outside the window.
struct PixelIndex {
    std::uint32_t col;
    std::uint32_t row;
};
PixelIndex complex_to_pixel(const GridSpec& spec, ComplexValue p);

/// Which point is iterated per pixel: the parameter (Mandelbrot) or the
/// starting value with c held fixed (Julia).
struct RenderMode {
    enum class Kind { Mandelbrot, Julia };
    Kind kind = Kind::Mandelbrot;
    ComplexValue c;

    static RenderMode mandelbrot() { return {Kind::Mandelbrot, {}}; }
    static RenderMode julia(ComplexValue c) { return {Kind::Julia, c}; }
};

class EscapeField {
public:
    /// Stored for cells whose orbit never escaped within the budget.
    static constexpr std::int32_t kInterior = std::numeric_limits<std::int32_t>::max();

    EscapeField(GridSpec spec, RenderMode mode, std::uint32_t budget);

    const GridSpec& spec() const { return spec_; }
    const RenderMode& mode() const { return mode_; }
    std::uint32_t budget() const { return budget_; }
    std::uint32_t cols() const { return spec_.cols; }
    std::uint32_t rows() const { return spec_.rows; }

    std::int32_t at(std::uint32_t col, std::uint32_t row) const
    {
        return cells_[static_cast<std::size_t>(row) * spec_.cols + col];
    }
    bool interior(std::uint32_t col, std::uint32_t row) const { return at(col, row) == kInterior; }

    /// Row-major, row 0 first.
    std::span<const std::int32_t> cells() const { return cells_; }
    std::span<std::int32_t> row_span(std::uint32_t row)
    {
        return std::span<std::int32_t>(cells_).subspan(static_cast<std::size_t>(row) * spec_.cols,
                                                       spec_.cols);
    }

private:
    GridSpec spec_;
    RenderMode mode_;
    std::uint32_t budget_;
    std::vector<std::int32_t> cells_;
};

/// workers == 0 selects std::thread::hardware_concurrency(). Rows are split
/// into contiguous bands, one per worker; each cell depends only on its own
/// pixel, so the result is identical for every worker count.
EscapeField compute_escape_field(const GridSpec& spec, const RenderMode& mode,
                                 const IterationConfig& cfg, unsigned workers = 0);

/// Resolves a requested worker count (0 = hardware concurrency) to >= 1.
unsigned resolve_workers(unsigned requested);

} // namespace powerfractal
