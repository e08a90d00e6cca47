// Copyright 2026 The powerfractal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "powerfractal/field.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace powerfractal {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend constexpr bool operator==(const Rgb&, const Rgb&) = default;
};

inline constexpr Rgb kBlack{0, 0, 0};
inline constexpr Rgb kYellow{255, 255, 0};

extern const std::array<Rgb, 256> kDefaultEscapeRamp;

/// Interior cells take interior_color; an escape index t maps to
/// ramp[(t * index_stride) mod 256].
struct PaletteSpec {
    Rgb interior_color = kBlack;
    std::array<Rgb, 256> ramp = kDefaultEscapeRamp;
    std::uint32_t index_stride = 8;

    /// Rejects palettes where any ramp entry equals the interior color.
    void validate() const;

    Rgb escape_color(std::uint32_t escape_index) const
    {
        return ramp[(static_cast<std::uint64_t>(escape_index) * index_stride) % 256];
    }
};

class ImageBuffer {
public:
    ImageBuffer(std::uint32_t cols, std::uint32_t rows);

    std::uint32_t cols() const { return cols_; }
    std::uint32_t rows() const { return rows_; }

    Rgb pixel(std::uint32_t col, std::uint32_t row) const;
    void set_pixel(std::uint32_t col, std::uint32_t row, Rgb color);

    /// Row-major RGB triples, top row first; size cols * rows * 3.
    std::span<const std::uint8_t> bytes() const { return bytes_; }

    friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;

private:
    std::size_t offset(std::uint32_t col, std::uint32_t row) const
    {
        return (static_cast<std::size_t>(row) * cols_ + col) * 3;
    }

    std::uint32_t cols_;
    std::uint32_t rows_;
    std::vector<std::uint8_t> bytes_;
};

ImageBuffer colorize(const EscapeField& field, const PaletteSpec& palette = {});

/// Filled square of side max(3, cols / 100), clipped at the borders, centred
/// on the pixel containing point. Throws std::out_of_range naming the window
/// bounds when point lies outside spec.
ImageBuffer overlay_marker(ImageBuffer img, const GridSpec& spec, ComplexValue point,
                           Rgb color = kYellow);

/// Binary PPM: "P6\n<cols> <rows>\n255\n" followed by the raw bytes.
void write_ppm(const ImageBuffer& img, std::ostream& out);
/// Throws std::runtime_error naming the path when it cannot be written.
void write_ppm(const ImageBuffer& img, const std::filesystem::path& path);

/// Parses the P6 subset emitted by write_ppm (maxval 255, optional comments).
ImageBuffer read_ppm(std::istream& in);
ImageBuffer read_ppm(const std::filesystem::path& path);

} // namespace powerfractal
