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
 * montgomery.hpp
 *
 * Montgomery contexts and the two redundant-form multipliers:
 *
 *   mm_radix2  bit-serial radix-2 recurrence (the small, slow unit)
 *   mm_cios    word-level Coarsely Integrated Operand Scanning
 *
 * Neither multiplier performs the final conditional subtraction. For inputs
 * in [0, 2m) and R >= 4m the output stays in [0, 2m), so results can be
 * chained without reduction. `cond_sub` is the explicit judgment that brings
 * a value back into [0, m).
 */

#ifndef ECRT_MONTGOMERY_HPP
#define ECRT_MONTGOMERY_HPP

#include <ecrt/bigint.hpp>
#include <ecrt/errors.hpp>
#include <ecrt/op_sink.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace ecrt {

inline constexpr unsigned kDefaultWordBits = 32;

enum class Multiplier {
    radix2,
    cios,
};

/// Immutable Montgomery context for one odd modulus.
class MontCtx {
public:
    MontCtx(Nat modulus, unsigned word_bits = kDefaultWordBits)
        : modulus_(std::move(modulus)), word_bits_(word_bits) {
        if (!modulus_.is_odd()) {
            throw InvalidArgumentError("Montgomery modulus must be odd");
        }
        if (modulus_ <= Nat(2)) {
            throw InvalidArgumentError("Montgomery modulus must exceed 2");
        }
        if (word_bits_ != 8 && word_bits_ != 16 && word_bits_ != 32 && word_bits_ != 64) {
            throw InvalidArgumentError("word size must be one of 8, 16, 32, 64 bits, got " +
                                       std::to_string(word_bits_));
        }

        const std::size_t bits = modulus_.bit_length();
        r_exp_ = (bits + 2 + word_bits_ - 1) / word_bits_ * word_bits_;
        words_ = r_exp_ / word_bits_;

        const Nat radix = Nat::power_of_two(r_exp_);
        if (radix < Nat(4) * modulus_) {
            throw InvalidArgumentError("Montgomery radix must be at least 4 * modulus");
        }
        r_mod_m_ = radix % modulus_;
        r2_mod_m_ = Nat::power_of_two(2 * r_exp_) % modulus_;
        twice_modulus_ = modulus_ << 1;

        // Newton iteration for m^-1 mod 2^64; an odd m is its own inverse mod 8,
        // and each step doubles the number of correct low bits.
        const Limb m0 = modulus_.limb(0);
        Limb inv = m0;
        for (int i = 0; i < 5; ++i) {
            inv *= 2 - m0 * inv;
        }
        const Limb mask = word_mask();
        m_prime_ = (0 - inv) & mask;
        if (((m0 * m_prime_ + 1) & mask) != 0) {
            throw Error("Montgomery word inverse failed its self-check");
        }

        modulus_words_ = split_words(modulus_);
    }

    const Nat& modulus() const noexcept { return modulus_; }
    const Nat& twice_modulus() const noexcept { return twice_modulus_; }
    std::size_t modulus_bits() const noexcept { return modulus_.bit_length(); }
    unsigned word_bits() const noexcept { return word_bits_; }
    /// k with R = 2^k.
    std::size_t r_exp() const noexcept { return r_exp_; }
    /// Number of CIOS words, r_exp / word_bits.
    std::size_t word_count() const noexcept { return words_; }
    const Nat& r_mod_m() const noexcept { return r_mod_m_; }
    const Nat& r2_mod_m() const noexcept { return r2_mod_m_; }
    /// -modulus^-1 mod 2^word_bits.
    Limb m_prime() const noexcept { return m_prime_; }
    std::span<const Limb> modulus_words() const noexcept { return modulus_words_; }

    Limb word_mask() const noexcept {
        return word_bits_ == 64 ? ~Limb{0} : (Limb{1} << word_bits_) - 1;
    }

    /// Little-endian word_bits-wide digits of `value`, zero-padded to word_count().
    std::vector<Limb> split_words(const Nat& value) const {
        std::vector<Limb> out(words_, 0);
        const std::size_t per_limb = 64 / word_bits_;
        for (std::size_t i = 0; i < words_; ++i) {
            const Limb l = value.limb(i / per_limb);
            out[i] = (l >> ((i % per_limb) * word_bits_)) & word_mask();
        }
        return out;
    }

    Nat join_words(std::span<const Limb> words) const {
        const std::size_t per_limb = 64 / word_bits_;
        std::vector<Limb> limbs((words.size() + per_limb - 1) / per_limb, 0);
        for (std::size_t i = 0; i < words.size(); ++i) {
            limbs[i / per_limb] |= words[i] << ((i % per_limb) * word_bits_);
        }
        return Nat(std::move(limbs));
    }

    friend bool operator==(const MontCtx& a, const MontCtx& b) {
        return a.word_bits_ == b.word_bits_ && a.modulus_ == b.modulus_;
    }

private:
    Nat modulus_;
    unsigned word_bits_;
    std::size_t r_exp_ = 0;
    std::size_t words_ = 0;
    Nat r_mod_m_;
    Nat r2_mod_m_;
    Nat twice_modulus_;
    Limb m_prime_ = 0;
    std::vector<Limb> modulus_words_;
};

inline MontCtx ctx_new(const Nat& modulus, unsigned word_bits = kDefaultWordBits) {
    return MontCtx(modulus, word_bits);
}

namespace detail {

inline void check_redundant(const Nat& v, const MontCtx& ctx, const char* what) {
    if (v >= ctx.twice_modulus()) {
        throw InvalidArgumentError(std::string(what) + " operand must be below 2 * modulus");
    }
}

/// CIOS loop over word_bits-wide digits held in 64-bit slots. The
/// accumulator is double the word width so a*b + t + c never overflows.
template <unsigned WordBits>
std::vector<Limb> cios_kernel(std::span<const Limb> a, std::span<const Limb> b, std::span<const Limb> p,
                              Limb p_prime) {
    using Acc = std::conditional_t<WordBits == 64, DoubleLimb, std::uint64_t>;
    constexpr Acc mask = WordBits == 64 ? Acc{~Limb{0}} : (Acc{1} << WordBits) - 1;
    const std::size_t l = p.size();

    std::vector<Limb> t(l, 0);
    std::vector<Limb> s(l + 1, 0);
    for (std::size_t i = 0; i < l; ++i) {
        const Acc bi = b[i];
        Acc acc = Acc{a[0]} * bi + t[0];
        s[0] = static_cast<Limb>(acc & mask);
        Acc c = acc >> WordBits;
        for (std::size_t j = 1; j < l; ++j) {
            acc = Acc{a[j]} * bi + t[j] + c;
            s[j] = static_cast<Limb>(acc & mask);
            c = acc >> WordBits;
        }
        s[l] = static_cast<Limb>(c);

        const Acc m = static_cast<Acc>(static_cast<Limb>(Acc{s[0]} * p_prime) & static_cast<Limb>(mask));
        acc = Acc{s[0]} + m * p[0];
        c = acc >> WordBits;
        for (std::size_t j = 1; j < l; ++j) {
            acc = Acc{s[j]} + m * p[j] + c;
            t[j - 1] = static_cast<Limb>(acc & mask);
            c = acc >> WordBits;
        }
        // Fits in one word: the running value stays below a + m < R.
        t[l - 1] = static_cast<Limb>(Acc{s[l]} + c);
    }
    return t;
}

} // namespace detail

/// Word-level CIOS Montgomery product a*b*R^-1 mod m, in [0, 2m).
inline Nat mm_cios(const Nat& a, const Nat& b, const MontCtx& ctx, OpSink* sink = nullptr) {
    detail::check_redundant(a, ctx, "mm_cios");
    detail::check_redundant(b, ctx, "mm_cios");

    const auto aw = ctx.split_words(a);
    const auto bw = ctx.split_words(b);
    std::vector<Limb> t;
    switch (ctx.word_bits()) {
    case 8:
        t = detail::cios_kernel<8>(aw, bw, ctx.modulus_words(), ctx.m_prime());
        break;
    case 16:
        t = detail::cios_kernel<16>(aw, bw, ctx.modulus_words(), ctx.m_prime());
        break;
    case 32:
        t = detail::cios_kernel<32>(aw, bw, ctx.modulus_words(), ctx.m_prime());
        break;
    default:
        t = detail::cios_kernel<64>(aw, bw, ctx.modulus_words(), ctx.m_prime());
        break;
    }
    emit(sink, OpKind::mm, ctx.modulus_bits());
    return ctx.join_words(t);
}

/// Radix-2 Montgomery product a*b*R^-1 mod m, in [0, 2m).
///
/// One iteration per bit of a, over all r_exp bits: add b if the bit is set,
/// add m if the accumulator is odd, halve. The quotient digits are forced by
/// parity, so the result equals the CIOS result bit for bit.
inline Nat mm_radix2(const Nat& a, const Nat& b, const MontCtx& ctx, OpSink* sink = nullptr) {
    detail::check_redundant(a, ctx, "mm_radix2");
    detail::check_redundant(b, ctx, "mm_radix2");

    const std::size_t n = ctx.modulus().limb_count() + 1;
    std::vector<Limb> t(n, 0);
    std::vector<Limb> bv(n, 0);
    std::vector<Limb> mv(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        bv[i] = b.limb(i);
        mv[i] = ctx.modulus().limb(i);
    }

    const auto add_into = [&t, n](const std::vector<Limb>& x) {
        Limb carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const DoubleLimb s = DoubleLimb{t[i]} + x[i] + carry;
            t[i] = static_cast<Limb>(s);
            carry = static_cast<Limb>(s >> 64);
        }
    };

    for (std::size_t i = 0; i < ctx.r_exp(); ++i) {
        if (a.bit(i)) {
            add_into(bv);
        }
        if ((t[0] & 1) != 0) {
            add_into(mv);
        }
        for (std::size_t j = 0; j + 1 < n; ++j) {
            t[j] = (t[j] >> 1) | (t[j + 1] << 63);
        }
        t[n - 1] >>= 1;
    }
    emit(sink, OpKind::mm, ctx.modulus_bits());
    return Nat(std::move(t));
}

inline Nat mm(const Nat& a, const Nat& b, const MontCtx& ctx, Multiplier which = Multiplier::cios,
              OpSink* sink = nullptr) {
    return which == Multiplier::cios ? mm_cios(a, b, ctx, sink) : mm_radix2(a, b, ctx, sink);
}

/// a*R mod m (redundant).
inline Nat to_mont(const Nat& a, const MontCtx& ctx, Multiplier which = Multiplier::cios,
                   OpSink* sink = nullptr) {
    return mm(a, ctx.r2_mod_m(), ctx, which, sink);
}

/// a*R^-1 mod m (redundant).
inline Nat from_mont(const Nat& a, const MontCtx& ctx, Multiplier which = Multiplier::cios,
                     OpSink* sink = nullptr) {
    return mm(a, Nat(1), ctx, which, sink);
}

/// The judgment: t - m if t >= m, else t. Requires t < 2m.
inline Nat cond_sub(const Nat& t, const MontCtx& ctx, OpSink* sink = nullptr) {
    detail::check_redundant(t, ctx, "cond_sub");
    emit(sink, OpKind::judgment, ctx.modulus_bits());
    return t >= ctx.modulus() ? t - ctx.modulus() : t;
}

} // namespace ecrt

#endif // ECRT_MONTGOMERY_HPP
