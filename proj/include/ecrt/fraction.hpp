/*
 * Copyright (C) 2026 The ecrt-paillier Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ECRT_FRACTION_HPP
#define ECRT_FRACTION_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ecrt {

/// Exact rational for operation-count bookkeeping. Always reduced, den > 0.
class Fraction {
public:
    constexpr Fraction() = default;
    constexpr Fraction(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) { // NOLINT
        if (den_ == 0) {
            throw std::invalid_argument("Fraction with zero denominator");
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    constexpr std::int64_t num() const noexcept { return num_; }
    constexpr std::int64_t den() const noexcept { return den_; }
    constexpr bool is_zero() const noexcept { return num_ == 0; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Decimal rendering, exact when the denominator only has factors 2 and 5.
    std::string to_string(int max_digits = 6) const {
        std::string out = num_ < 0 ? "-" : "";
        const std::int64_t n = num_ < 0 ? -num_ : num_;
        out += std::to_string(n / den_);
        std::int64_t rem = n % den_;
        if (rem == 0) {
            return out;
        }
        out += '.';
        for (int i = 0; i < max_digits && rem != 0; ++i) {
            rem *= 10;
            out += static_cast<char>('0' + rem / den_);
            rem %= den_;
        }
        return out;
    }

    friend constexpr Fraction operator+(Fraction a, Fraction b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend constexpr Fraction operator-(Fraction a, Fraction b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend constexpr Fraction operator*(Fraction a, Fraction b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
    friend constexpr Fraction operator/(Fraction a, Fraction b) { return {a.num_ * b.den_, a.den_ * b.num_}; }
    friend constexpr bool operator==(Fraction a, Fraction b) = default;
    friend constexpr std::strong_ordering operator<=>(Fraction a, Fraction b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace ecrt

#endif // ECRT_FRACTION_HPP
