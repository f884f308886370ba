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

/*
 * bigint.hpp
 *
 * Arbitrary-precision unsigned integers over 64-bit limbs, plus the
 * number-theory helpers (gcd, inverse, reference modular power) that the
 * rest of the library and its tests rely on.
 */

#ifndef ECRT_BIGINT_HPP
#define ECRT_BIGINT_HPP

#include <ecrt/errors.hpp>

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ecrt {

using Limb = std::uint64_t;
using DoubleLimb = unsigned __int128;

/// Unsigned integer of unbounded width.
///
/// Limbs are stored little-endian. The representation is canonical: there is
/// never a most-significant zero limb, and zero is a single zero limb.
class Nat {
public:
    static constexpr std::size_t limb_bits = 64;

    Nat() : limbs_(1, 0) {}
    Nat(std::uint64_t value) : limbs_(1, value) {} // NOLINT: implicit by intent

    explicit Nat(std::vector<Limb> limbs) : limbs_(std::move(limbs)) { normalize(); }

    static Nat power_of_two(std::size_t exponent) {
        std::vector<Limb> limbs(exponent / limb_bits + 1, 0);
        limbs.back() = Limb{1} << (exponent % limb_bits);
        return Nat(std::move(limbs));
    }

    static Nat from_hex(std::string_view text);
    static Nat from_dec(std::string_view text);

    std::string to_hex() const;
    std::string to_dec() const;

    std::span<const Limb> limbs() const noexcept { return limbs_; }
    std::size_t limb_count() const noexcept { return limbs_.size(); }
    Limb limb(std::size_t i) const noexcept { return i < limbs_.size() ? limbs_[i] : 0; }

    bool is_zero() const noexcept { return limbs_.size() == 1 && limbs_[0] == 0; }
    bool is_one() const noexcept { return limbs_.size() == 1 && limbs_[0] == 1; }
    bool is_odd() const noexcept { return (limbs_[0] & 1) != 0; }

    std::size_t bit_length() const noexcept {
        const Limb top = limbs_.back();
        return (limbs_.size() - 1) * limb_bits + (limb_bits - std::countl_zero(top));
    }

    bool bit(std::size_t i) const noexcept {
        const std::size_t w = i / limb_bits;
        return w < limbs_.size() && ((limbs_[w] >> (i % limb_bits)) & 1) != 0;
    }

    std::uint64_t to_u64() const {
        if (limbs_.size() > 1) {
            throw InvalidArgumentError("Nat does not fit in 64 bits");
        }
        return limbs_[0];
    }

    friend bool operator==(const Nat&, const Nat&) = default;

private:
    void normalize() {
        while (limbs_.size() > 1 && limbs_.back() == 0) {
            limbs_.pop_back();
        }
        if (limbs_.empty()) {
            limbs_.push_back(0);
        }
    }

    std::vector<Limb> limbs_;
};

// ---------------------------------------------------------------------------
// Core arithmetic
// ---------------------------------------------------------------------------

inline std::strong_ordering cmp(const Nat& a, const Nat& b) {
    if (a.limb_count() != b.limb_count()) {
        return a.limb_count() <=> b.limb_count();
    }
    for (std::size_t i = a.limb_count(); i-- > 0;) {
        if (a.limb(i) != b.limb(i)) {
            return a.limb(i) <=> b.limb(i);
        }
    }
    return std::strong_ordering::equal;
}

inline std::strong_ordering operator<=>(const Nat& a, const Nat& b) { return cmp(a, b); }

inline Nat add(const Nat& a, const Nat& b) {
    const auto& big = a.limb_count() >= b.limb_count() ? a : b;
    const auto& small = a.limb_count() >= b.limb_count() ? b : a;
    std::vector<Limb> out(big.limb_count() + 1, 0);
    Limb carry = 0;
    for (std::size_t i = 0; i < big.limb_count(); ++i) {
        const DoubleLimb s = DoubleLimb{big.limb(i)} + small.limb(i) + carry;
        out[i] = static_cast<Limb>(s);
        carry = static_cast<Limb>(s >> 64);
    }
    out.back() = carry;
    return Nat(std::move(out));
}

inline Nat sub(const Nat& a, const Nat& b) {
    if (a < b) {
        throw UnderflowError("Nat subtraction underflow");
    }
    std::vector<Limb> out(a.limb_count(), 0);
    Limb borrow = 0;
    for (std::size_t i = 0; i < a.limb_count(); ++i) {
        const Limb x = a.limb(i);
        const Limb y = b.limb(i);
        const Limb d = x - y - borrow;
        borrow = (x < y || (x == y && borrow != 0)) ? 1 : 0;
        out[i] = d;
    }
    return Nat(std::move(out));
}

inline Nat mul(const Nat& a, const Nat& b) {
    if (a.is_zero() || b.is_zero()) {
        return Nat{};
    }
    const std::size_t na = a.limb_count();
    const std::size_t nb = b.limb_count();
    std::vector<Limb> out(na + nb, 0);
    for (std::size_t i = 0; i < na; ++i) {
        Limb carry = 0;
        const DoubleLimb ai = a.limb(i);
        for (std::size_t j = 0; j < nb; ++j) {
            const DoubleLimb t = ai * b.limb(j) + out[i + j] + carry;
            out[i + j] = static_cast<Limb>(t);
            carry = static_cast<Limb>(t >> 64);
        }
        out[i + nb] = carry;
    }
    return Nat(std::move(out));
}

inline Nat shift_left(const Nat& a, std::size_t bits) {
    if (a.is_zero()) {
        return a;
    }
    const std::size_t whole = bits / Nat::limb_bits;
    const unsigned part = bits % Nat::limb_bits;
    std::vector<Limb> out(a.limb_count() + whole + 1, 0);
    for (std::size_t i = 0; i < a.limb_count(); ++i) {
        out[i + whole] |= a.limb(i) << part;
        if (part != 0) {
            out[i + whole + 1] = a.limb(i) >> (Nat::limb_bits - part);
        }
    }
    return Nat(std::move(out));
}

inline Nat shift_right(const Nat& a, std::size_t bits) {
    const std::size_t whole = bits / Nat::limb_bits;
    const unsigned part = bits % Nat::limb_bits;
    if (whole >= a.limb_count()) {
        return Nat{};
    }
    std::vector<Limb> out(a.limb_count() - whole, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a.limb(i + whole) >> part;
        if (part != 0) {
            out[i] |= a.limb(i + whole + 1) << (Nat::limb_bits - part);
        }
    }
    return Nat(std::move(out));
}

/// Low `bits` bits of `a`, i.e. a mod 2^bits.
inline Nat low_bits(const Nat& a, std::size_t bits) {
    const std::size_t whole = bits / Nat::limb_bits;
    const unsigned part = bits % Nat::limb_bits;
    std::vector<Limb> out(std::min(a.limb_count(), whole + 1), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a.limb(i);
    }
    if (whole < out.size()) {
        out[whole] &= part == 0 ? 0 : (~Limb{0} >> (Nat::limb_bits - part));
    }
    return Nat(std::move(out));
}

namespace detail {

inline std::pair<Nat, Limb> div_rem_limb(const Nat& a, Limb d) {
    std::vector<Limb> q(a.limb_count(), 0);
    DoubleLimb rem = 0;
    for (std::size_t i = a.limb_count(); i-- > 0;) {
        const DoubleLimb cur = (rem << 64) | a.limb(i);
        q[i] = static_cast<Limb>(cur / d);
        rem = cur % d;
    }
    return {Nat(std::move(q)), static_cast<Limb>(rem)};
}

} // namespace detail

/// Quotient and remainder, a = q*b + r with r < b. Normalized long division.
inline std::pair<Nat, Nat> div_rem(const Nat& a, const Nat& b) {
    if (b.is_zero()) {
        throw DivisionByZeroError("Nat division by zero");
    }
    if (a < b) {
        return {Nat{}, a};
    }
    if (b.limb_count() == 1) {
        auto [q, r] = detail::div_rem_limb(a, b.limb(0));
        return {std::move(q), Nat(r)};
    }

    const std::size_t n = b.limb_count();
    const std::size_t m = a.limb_count() - n;
    const unsigned s = static_cast<unsigned>(std::countl_zero(b.limb(n - 1)));

    std::vector<Limb> v(n);
    std::vector<Limb> u(a.limb_count() + 1);
    for (std::size_t i = n; i-- > 0;) {
        v[i] = (b.limb(i) << s) | (s != 0 && i > 0 ? b.limb(i - 1) >> (64 - s) : 0);
    }
    u[a.limb_count()] = s != 0 ? a.limb(a.limb_count() - 1) >> (64 - s) : 0;
    for (std::size_t i = a.limb_count(); i-- > 0;) {
        u[i] = (a.limb(i) << s) | (s != 0 && i > 0 ? a.limb(i - 1) >> (64 - s) : 0);
    }

    constexpr DoubleLimb base = DoubleLimb{1} << 64;
    std::vector<Limb> q(m + 1, 0);
    for (std::size_t j = m + 1; j-- > 0;) {
        const DoubleLimb num = (DoubleLimb{u[j + n]} << 64) | u[j + n - 1];
        DoubleLimb qhat = num / v[n - 1];
        DoubleLimb rhat = num % v[n - 1];
        while (qhat >= base || qhat * v[n - 2] > ((rhat << 64) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= base) {
                break;
            }
        }

        __int128 borrow = 0;
        __int128 t = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const DoubleLimb p = qhat * v[i];
            t = static_cast<__int128>(u[i + j]) - borrow - static_cast<__int128>(static_cast<Limb>(p));
            u[i + j] = static_cast<Limb>(t);
            borrow = static_cast<__int128>(p >> 64) - (t >> 64);
        }
        t = static_cast<__int128>(u[j + n]) - borrow;
        u[j + n] = static_cast<Limb>(t);

        q[j] = static_cast<Limb>(qhat);
        if (t < 0) {
            --q[j];
            Limb carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const DoubleLimb sum = DoubleLimb{u[i + j]} + v[i] + carry;
                u[i + j] = static_cast<Limb>(sum);
                carry = static_cast<Limb>(sum >> 64);
            }
            u[j + n] += carry;
        }
    }

    std::vector<Limb> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = (u[i] >> s) | (s != 0 ? u[i + 1] << (64 - s) : 0);
    }
    return {Nat(std::move(q)), Nat(std::move(r))};
}

inline Nat operator+(const Nat& a, const Nat& b) { return add(a, b); }
inline Nat operator-(const Nat& a, const Nat& b) { return sub(a, b); }
inline Nat operator*(const Nat& a, const Nat& b) { return mul(a, b); }
inline Nat operator/(const Nat& a, const Nat& b) { return div_rem(a, b).first; }
inline Nat operator%(const Nat& a, const Nat& b) { return div_rem(a, b).second; }
inline Nat operator<<(const Nat& a, std::size_t bits) { return shift_left(a, bits); }
inline Nat operator>>(const Nat& a, std::size_t bits) { return shift_right(a, bits); }
inline Nat& operator+=(Nat& a, const Nat& b) { return a = add(a, b); }
inline Nat& operator-=(Nat& a, const Nat& b) { return a = sub(a, b); }
inline Nat& operator*=(Nat& a, const Nat& b) { return a = mul(a, b); }

// ---------------------------------------------------------------------------
// Number theory
// ---------------------------------------------------------------------------

inline Nat gcd(Nat a, Nat b) {
    while (!b.is_zero()) {
        Nat r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// gcd and lcm of two positive integers.
inline std::pair<Nat, Nat> gcd_lcm(const Nat& a, const Nat& b) {
    if (a.is_zero() || b.is_zero()) {
        throw InvalidArgumentError("gcd_lcm requires positive inputs");
    }
    Nat g = gcd(a, b);
    Nat l = (a / g) * b;
    return {std::move(g), std::move(l)};
}

/// x < m with a*x = 1 (mod m), by the extended Euclidean algorithm.
///
/// The Bezout coefficient of `a` is tracked modulo m so everything stays
/// unsigned.
inline Nat mod_inverse(const Nat& a, const Nat& m) {
    if (m <= Nat(1)) {
        throw InvalidArgumentError("mod_inverse requires modulus > 1");
    }
    Nat r0 = m;
    Nat r1 = a % m;
    Nat t0{0};
    Nat t1{1};
    while (!r1.is_zero()) {
        auto [q, r] = div_rem(r0, r1);
        Nat qt = (q * t1) % m;
        Nat t2 = t0 >= qt ? t0 - qt : (t0 + m) - qt;
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.is_one()) {
        throw NotInvertibleError("value is not invertible modulo m");
    }
    return t0;
}

/// a^e mod m by left-to-right square-and-multiply with a full division after
/// every step. Slow on purpose; it is the reference for the Montgomery paths.
inline Nat mod_pow_oracle(const Nat& a, const Nat& e, const Nat& m) {
    if (m <= Nat(1)) {
        throw InvalidArgumentError("mod_pow_oracle requires modulus > 1");
    }
    const Nat base = a % m;
    Nat result{1};
    for (std::size_t i = e.bit_length(); i-- > 0;) {
        result = (result * result) % m;
        if (e.bit(i)) {
            result = (result * base) % m;
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Text forms
// ---------------------------------------------------------------------------

inline Nat Nat::from_hex(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty hex string");
    }
    std::vector<Limb> limbs((text.size() + 15) / 16, 0);
    std::size_t nibble = 0;
    for (std::size_t i = text.size(); i-- > 0; ++nibble) {
        const char c = text[i];
        Limb v = 0;
        if (c >= '0' && c <= '9') {
            v = static_cast<Limb>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            v = static_cast<Limb>(c - 'a' + 10);
        } else if (c >= 'A' && c <= 'F') {
            v = static_cast<Limb>(c - 'A' + 10);
        } else {
            throw ParseError("invalid hex digit in '" + std::string(text) + "'");
        }
        limbs[nibble / 16] |= v << (4 * (nibble % 16));
    }
    return Nat(std::move(limbs));
}

inline std::string Nat::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(limbs_.size() * 16);
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        for (int shift = 60; shift >= 0; shift -= 4) {
            out.push_back(digits[(limbs_[i] >> shift) & 0xf]);
        }
    }
    const auto first = out.find_first_not_of('0');
    return first == std::string::npos ? std::string("0") : out.substr(first);
}

inline Nat Nat::from_dec(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty decimal string");
    }
    std::vector<Limb> limbs{0};
    for (const char c : text) {
        if (c < '0' || c > '9') {
            throw ParseError("invalid decimal digit in '" + std::string(text) + "'");
        }
        Limb carry = static_cast<Limb>(c - '0');
        for (auto& l : limbs) {
            const DoubleLimb t = DoubleLimb{l} * 10 + carry;
            l = static_cast<Limb>(t);
            carry = static_cast<Limb>(t >> 64);
        }
        if (carry != 0) {
            limbs.push_back(carry);
        }
    }
    return Nat(std::move(limbs));
}

inline std::string Nat::to_dec() const {
    constexpr Limb chunk = 10'000'000'000'000'000'000ULL; // 10^19
    std::vector<Limb> parts;
    Nat rest = *this;
    while (!rest.is_zero()) {
        auto [q, r] = detail::div_rem_limb(rest, chunk);
        parts.push_back(r);
        rest = std::move(q);
    }
    if (parts.empty()) {
        return "0";
    }
    std::string out = std::to_string(parts.back());
    for (std::size_t i = parts.size() - 1; i-- > 0;) {
        std::string piece = std::to_string(parts[i]);
        out.append(19 - piece.size(), '0');
        out += piece;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Nat& v) { return os << "0x" << v.to_hex(); }

// ---------------------------------------------------------------------------
// Randomness
// ---------------------------------------------------------------------------

template <class Rng>
concept Limb64Generator = requires(Rng& rng) {
    { rng() } -> std::convertible_to<std::uint64_t>;
} && Rng::min() == 0 && Rng::max() == std::numeric_limits<std::uint64_t>::max();

/// Uniform value in [0, 2^bits), consuming whole 64-bit draws.
template <Limb64Generator Rng>
Nat random_bits(Rng& rng, std::size_t bits) {
    std::vector<Limb> limbs((bits + 63) / 64 + 1, 0);
    for (std::size_t i = 0; i + 1 < limbs.size(); ++i) {
        limbs[i] = static_cast<Limb>(rng());
    }
    return low_bits(Nat(std::move(limbs)), bits);
}

/// Uniform value in [0, bound) by rejection.
template <Limb64Generator Rng>
Nat random_below(Rng& rng, const Nat& bound) {
    if (bound.is_zero()) {
        throw InvalidArgumentError("random_below requires a positive bound");
    }
    const std::size_t bits = bound.bit_length();
    for (;;) {
        Nat candidate = random_bits(rng, bits);
        if (candidate < bound) {
            return candidate;
        }
    }
}

} // namespace ecrt

#endif // ECRT_BIGINT_HPP
