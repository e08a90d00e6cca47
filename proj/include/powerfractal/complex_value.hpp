// Copyright 2026 The powerfractal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace powerfractal {

/// A point in the complex plane, used both for the parameter c and the
/// dynamic variable z. Values entering the library from outside go through
/// checked(), which rejects NaN and infinity.
struct ComplexValue {
    double re = 0.0;
    double im = 0.0;

    constexpr ComplexValue() = default;
    constexpr ComplexValue(double re_, double im_) : re(re_), im(im_) {}

    static ComplexValue checked(double re, double im)
    {
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw std::invalid_argument("complex value must be finite, got (" +
                                        std::to_string(re) + ", " + std::to_string(im) + ")");
        }
        return {re, im};
    }

    constexpr double norm_squared() const { return re * re + im * im; }
    double magnitude() const { return std::hypot(re, im); }

    constexpr ComplexValue conj() const { return {re, -im}; }
    constexpr ComplexValue operator-() const { return {-re, -im}; }

    friend constexpr bool operator==(const ComplexValue&, const ComplexValue&) = default;
};

} // namespace powerfractal
