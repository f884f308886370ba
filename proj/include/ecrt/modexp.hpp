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

#ifndef ECRT_MODEXP_HPP
#define ECRT_MODEXP_HPP

#include <ecrt/bigint.hpp>
#include <ecrt/errors.hpp>
#include <ecrt/montgomery.hpp>
#include <ecrt/op_sink.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace ecrt {

/// Exponent bits, most significant first.
using BitString = std::vector<bool>;

/// Registers of the Montgomery power ladder, both in the Montgomery domain
/// and below 2m. After consuming exponent prefix e', s holds a^e' and z holds
/// a^(e'+1).
struct LadderState {
    Nat s;
    Nat z;
    Nat modulus;
    unsigned word_bits = kDefaultWordBits;

    bool bound_to(const MontCtx& ctx) const noexcept {
        return word_bits == ctx.word_bits() && modulus == ctx.modulus();
    }
};

/// An exponent's fixed-width expansion cut into contiguous pieces, most
/// significant piece first.
struct ExponentSegments {
    std::vector<BitString> segments;
    std::size_t total_bits = 0;

    std::vector<std::size_t> lengths() const {
        std::vector<std::size_t> out;
        out.reserve(segments.size());
        for (const auto& s : segments) {
            out.push_back(s.size());
        }
        return out;
    }
};

/// `width_bits` bits of e, most significant first, zero-padded.
inline BitString fixed_width_bits(const Nat& e, std::size_t width_bits) {
    if (e.bit_length() > width_bits) {
        throw InvalidArgumentError("exponent wider than the requested width");
    }
    BitString out(width_bits);
    for (std::size_t i = 0; i < width_bits; ++i) {
        out[i] = e.bit(width_bits - 1 - i);
    }
    return out;
}

/// Segment lengths for cutting `width_bits` into `k` stages: every segment
/// gets ceil(width/k) bits until the bits run out, so the last one takes the
/// remainder.
inline std::vector<std::size_t> segment_lengths(std::size_t width_bits, std::size_t k) {
    if (k == 0) {
        throw InvalidArgumentError("segment count must be at least 1");
    }
    if (k > width_bits) {
        throw InvalidArgumentError("segment count exceeds exponent width");
    }
    const std::size_t chunk = (width_bits + k - 1) / k;
    std::vector<std::size_t> out(k, 0);
    std::size_t left = width_bits;
    for (std::size_t i = 0; i < k; ++i) {
        out[i] = i + 1 == k ? left : std::min(chunk, left);
        left -= out[i];
    }
    return out;
}

inline ExponentSegments split_exponent(const Nat& e, std::size_t k, std::size_t width_bits) {
    const auto lengths = segment_lengths(width_bits, k);
    const BitString bits = fixed_width_bits(e, width_bits);
    ExponentSegments out;
    out.total_bits = width_bits;
    std::size_t pos = 0;
    for (const auto len : lengths) {
        out.segments.emplace_back(bits.begin() + static_cast<std::ptrdiff_t>(pos),
                                  bits.begin() + static_cast<std::ptrdiff_t>(pos + len));
        pos += len;
    }
    return out;
}

/// Starts a ladder for plain-domain base a < m: S = MM(1, R^2), Z = MM(a, R^2).
inline LadderState ladder_init(const Nat& a, const MontCtx& ctx, OpSink* sink = nullptr) {
    if (a >= ctx.modulus()) {
        throw InvalidArgumentError("ladder base must be below the modulus");
    }
    Nat s = mm_cios(Nat(1), ctx.r2_mod_m(), ctx, sink);
    Nat z = mm_cios(a, ctx.r2_mod_m(), ctx, sink);
    return LadderState{std::move(s), std::move(z), ctx.modulus(), ctx.word_bits()};
}

/// Starts a ladder whose base is already in the Montgomery domain (z < 2m),
/// as produced by a separate preprocessing multiplication.
inline LadderState ladder_init_mont(const Nat& z_mont, const MontCtx& ctx, OpSink* sink = nullptr) {
    detail::check_redundant(z_mont, ctx, "ladder_init_mont");
    Nat s = mm_cios(Nat(1), ctx.r2_mod_m(), ctx, sink);
    return LadderState{std::move(s), z_mont, ctx.modulus(), ctx.word_bits()};
}

/// Consumes `segment` (most significant bit first). Exactly two
/// multiplications per bit whatever its value.
inline LadderState ladder_advance(LadderState state, const BitString& segment, const MontCtx& ctx,
                                  OpSink* sink = nullptr) {
    if (!state.bound_to(ctx)) {
        throw ContextMismatchError("ladder state belongs to a different Montgomery context");
    }
    for (const bool bit : segment) {
        if (bit) {
            state.s = mm_cios(state.s, state.z, ctx, sink);
            state.z = mm_cios(state.z, state.z, ctx, sink);
        } else {
            state.z = mm_cios(state.s, state.z, ctx, sink);
            state.s = mm_cios(state.s, state.s, ctx, sink);
        }
    }
    return state;
}

/// Leaves the Montgomery domain: MM(S, 1). The result is congruent to a^e
/// and below 2m; no judgment is applied.
inline Nat ladder_finalize(const LadderState& state, const MontCtx& ctx, OpSink* sink = nullptr) {
    if (!state.bound_to(ctx)) {
        throw ContextMismatchError("ladder state belongs to a different Montgomery context");
    }
    return mm_cios(state.s, Nat(1), ctx, sink);
}

/// a^e mod m in redundant form. The exponent is expanded to `width_bits`
/// (default: its own bit length), giving 2*width + 3 multiplications.
inline Nat ladder_pow(const Nat& a, const Nat& e, const MontCtx& ctx, OpSink* sink = nullptr,
                      std::optional<std::size_t> width_bits = std::nullopt) {
    const std::size_t width = width_bits.value_or(e.bit_length());
    auto state = ladder_init(a, ctx, sink);
    state = ladder_advance(std::move(state), fixed_width_bits(e, width), ctx, sink);
    return ladder_finalize(state, ctx, sink);
}

/// a^e mod m, fully reduced. Convenience for callers that do not care about
/// the redundant envelope.
inline Nat mont_pow(const Nat& a, const Nat& e, const MontCtx& ctx) {
    return cond_sub(ladder_pow(a % ctx.modulus(), e, ctx), ctx);
}

} // namespace ecrt

#endif // ECRT_MODEXP_HPP
