// Copyright 2026 The powerfractal Authors
// SPDX-License-Identifier: Apache-2.0

#include "powerfractal/imaging.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace powerfractal {

void PaletteSpec::validate() const
{
    for (std::size_t i = 0; i < ramp.size(); ++i) {
        if (ramp[i] == interior_color) {
            throw std::invalid_argument("palette ramp entry " + std::to_string(i) +
                                        " collides with the interior color");
        }
    }
}

ImageBuffer::ImageBuffer(std::uint32_t cols, std::uint32_t rows)
    : cols_(cols), rows_(rows), bytes_(static_cast<std::size_t>(cols) * rows * 3, 0)
{
    if (cols == 0 || rows == 0) {
        throw std::invalid_argument("image dimensions must be at least 1x1");
    }
}

Rgb ImageBuffer::pixel(std::uint32_t col, std::uint32_t row) const
{
    const std::size_t at = offset(col, row);
    return {bytes_.at(at), bytes_.at(at + 1), bytes_.at(at + 2)};
}

void ImageBuffer::set_pixel(std::uint32_t col, std::uint32_t row, Rgb color)
{
    const std::size_t at = offset(col, row);
    bytes_.at(at) = color.r;
    bytes_.at(at + 1) = color.g;
    bytes_.at(at + 2) = color.b;
}

ImageBuffer colorize(const EscapeField& field, const PaletteSpec& palette)
{
    palette.validate();
    ImageBuffer img(field.cols(), field.rows());
    for (std::uint32_t row = 0; row < field.rows(); ++row) {
        for (std::uint32_t col = 0; col < field.cols(); ++col) {
            const std::int32_t cell = field.at(col, row);
            img.set_pixel(col, row,
                          cell == EscapeField::kInterior
                              ? palette.interior_color
                              : palette.escape_color(static_cast<std::uint32_t>(cell)));
        }
    }
    return img;
}

ImageBuffer overlay_marker(ImageBuffer img, const GridSpec& spec, ComplexValue point, Rgb color)
{
    if (img.cols() != spec.cols || img.rows() != spec.rows) {
        throw std::invalid_argument("marker grid does not match image dimensions");
    }
    const PixelIndex center = complex_to_pixel(spec, point);
    const auto side = static_cast<std::int64_t>(std::max<std::uint32_t>(3, spec.cols / 100));
    const std::int64_t c0 = static_cast<std::int64_t>(center.col) - side / 2;
    const std::int64_t r0 = static_cast<std::int64_t>(center.row) - side / 2;
    const std::int64_t c_lo = std::max<std::int64_t>(0, c0);
    const std::int64_t r_lo = std::max<std::int64_t>(0, r0);
    const std::int64_t c_hi = std::min<std::int64_t>(spec.cols, c0 + side);
    const std::int64_t r_hi = std::min<std::int64_t>(spec.rows, r0 + side);
    for (std::int64_t r = r_lo; r < r_hi; ++r) {
        for (std::int64_t c = c_lo; c < c_hi; ++c) {
            img.set_pixel(static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(r), color);
        }
    }
    return img;
}

void write_ppm(const ImageBuffer& img, std::ostream& out)
{
    out << "P6\n" << img.cols() << ' ' << img.rows() << "\n255\n";
    const auto bytes = img.bytes();
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

void write_ppm(const ImageBuffer& img, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    write_ppm(img, out);
    out.flush();
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

namespace {

// Next whitespace-delimited header token, skipping '#' comments.
std::string header_token(std::istream& in)
{
    std::string token;
    while (in) {
        const int ch = in.get();
        if (ch == EOF) break;
        if (ch == '#') {
            std::string ignored;
            std::getline(in, ignored);
            continue;
        }
        if (std::isspace(ch)) {
            if (!token.empty()) break;
            continue;
        }
        token.push_back(static_cast<char>(ch));
    }
    return token;
}

std::uint32_t header_number(std::istream& in, const char* what)
{
    const std::string token = header_token(in);
    try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(token, &used);
        if (used != token.size() || v == 0 || v > 0xFFFFFFFFul) throw std::out_of_range(what);
        return static_cast<std::uint32_t>(v);
    } catch (const std::logic_error&) {
        throw std::runtime_error(std::string("malformed PPM ") + what + ": '" + token + "'");
    }
}

} // namespace

ImageBuffer read_ppm(std::istream& in)
{
    if (header_token(in) != "P6") {
        throw std::runtime_error("not a binary PPM (P6) stream");
    }
    const std::uint32_t cols = header_number(in, "width");
    const std::uint32_t rows = header_number(in, "height");
    if (header_number(in, "maxval") != 255) {
        throw std::runtime_error("only 8-bit PPM (maxval 255) is supported");
    }
    ImageBuffer img(cols, rows);
    std::vector<char> raw(img.bytes().size());
    in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size()) {
        throw std::runtime_error("truncated PPM pixel data");
    }
    for (std::uint32_t row = 0; row < rows; ++row) {
        for (std::uint32_t col = 0; col < cols; ++col) {
            const std::size_t at = (static_cast<std::size_t>(row) * cols + col) * 3;
            img.set_pixel(col, row,
                          {static_cast<std::uint8_t>(raw[at]), static_cast<std::uint8_t>(raw[at + 1]),
                           static_cast<std::uint8_t>(raw[at + 2])});
        }
    }
    return img;
}

ImageBuffer read_ppm(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string() + " for reading");
    }
    return read_ppm(in);
}

} // namespace powerfractal
