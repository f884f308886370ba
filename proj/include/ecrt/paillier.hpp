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
 * paillier.hpp
 *
 * Paillier key generation, encryption, homomorphic evaluation and three
 * decryption backends:
 *
 *   decrypt_traditional  L(c^lambda mod n^2) * mu mod n
 *   decrypt_crt_base     CRT split over p^2 / q^2 with a judgment after every
 *                        Montgomery step and a separate recombination multiply
 *   decrypt_ecrt         merged t_p = e_p * l_3 and t_q = e_q * l_4; the
 *                        exponentiation outputs stay redundant and the only
 *                        judgment is after the single mod-n multiplication
 *
 * Postprocessing work is reported to an optional OpSink; OpCounter turns those
 * events into width-weighted totals.
 */

#ifndef ECRT_PAILLIER_HPP
#define ECRT_PAILLIER_HPP

#include <ecrt/bigint.hpp>
#include <ecrt/errors.hpp>
#include <ecrt/fraction.hpp>
#include <ecrt/modexp.hpp>
#include <ecrt/montgomery.hpp>
#include <ecrt/op_sink.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace ecrt {

using DefaultRng = std::mt19937_64;

struct PublicKey {
    Nat n;
    Nat n_sq;
    Nat g;
    std::size_t bits = 0; ///< N; the primes are N/2 bits each
};

struct PrivateKey {
    Nat p;
    Nat q;
    Nat lambda;
    Nat mu;
    Nat p_sq;
    Nat q_sq;
};

struct KeyPair {
    PublicKey pk;
    PrivateKey sk;
};

struct Ciphertext {
    Nat value;

    friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

/// Precomputed values for CRT-base decryption, with the Montgomery contexts
/// they were derived against.
struct CrtParams {
    Nat e_p;
    Nat e_q;
    Nat l_3; ///< (q^-1 mod p) * q
    Nat l_4; ///< (p^-1 mod q) * p
    Nat y_p; ///< R^2 mod p^2
    Nat y_q;
    Nat e_p_r; ///< e_p * R mod p
    Nat e_q_r;
    Nat l_3_r; ///< l_3 * R mod n
    Nat l_4_r;
    MontCtx ctx_p_sq;
    MontCtx ctx_q_sq;
    MontCtx ctx_p;
    MontCtx ctx_q;
    MontCtx ctx_n;
};

/// Precomputed values for eCRT decryption.
struct EcrtParams {
    Nat t_p; ///< e_p * l_3 mod n
    Nat t_q; ///< e_q * l_4 mod n
    Nat t_p_r; ///< t_p * R mod n
    Nat t_q_r;
    Nat y_p;
    Nat y_q;
    MontCtx ctx_p_sq;
    MontCtx ctx_q_sq;
    MontCtx ctx_n;
};

// ---------------------------------------------------------------------------
// Operation accounting
// ---------------------------------------------------------------------------

/// Records postprocessing events and weights them in units of 2N-bit
/// operations.
///
/// Widths are first snapped to the nominal classes N/2 (p, q), N (p^2, q^2,
/// n) and 2N (n^2). Two weightings are offered:
///   shared    every multiplication runs on the shared N-bit multiplier, so
///             anything narrower still costs an N-bit op; judgments cost
///             their nominal width
///   modulus   multiplications and judgments both cost their nominal width
class OpCounter final : public OpSink {
public:
    explicit OpCounter(std::size_t key_bits) : key_bits_(key_bits) {
        if (key_bits_ < 2) {
            throw InvalidArgumentError("OpCounter needs the key width N");
        }
    }

    void record(const OpEvent& event) override { events_.push_back(event); }

    std::size_t key_bits() const noexcept { return key_bits_; }
    const std::vector<OpEvent>& events() const noexcept { return events_; }

    std::size_t count(OpKind kind) const {
        std::size_t c = 0;
        for (const auto& e : events_) {
            c += e.kind == kind ? 1 : 0;
        }
        return c;
    }

    /// Nominal width in units of N/2: 1, 2 or 4.
    std::int64_t nominal_units(std::size_t width_bits) const noexcept {
        if (2 * width_bits <= key_bits_) {
            return 1;
        }
        return width_bits <= key_bits_ ? 2 : 4;
    }

    Fraction shared_weighted_mm() const { return weighted(OpKind::mm, true); }
    Fraction shared_weighted_judgment() const { return weighted(OpKind::judgment, true); }
    Fraction modulus_weighted_mm() const { return weighted(OpKind::mm, false); }
    Fraction modulus_weighted_judgment() const { return weighted(OpKind::judgment, false); }

    void clear() noexcept { events_.clear(); }

private:
    Fraction weighted(OpKind kind, bool shared) const {
        std::int64_t units = 0;
        for (const auto& e : events_) {
            if (e.kind != kind) {
                continue;
            }
            std::int64_t u = nominal_units(e.width_bits);
            if (shared && kind == OpKind::mm && u < 2) {
                u = 2;
            }
            units += u;
        }
        return Fraction(units, 4);
    }

    std::size_t key_bits_;
    std::vector<OpEvent> events_;
};

struct OpReport {
    std::size_t key_bits = 0;
    std::vector<OpEvent> events;
    std::size_t mm_events = 0;
    std::size_t judgment_events = 0;
    Fraction shared_mm;
    Fraction shared_judgment;
    Fraction modulus_mm;
    Fraction modulus_judgment;
};

inline OpReport op_report(const OpCounter& counter) {
    OpReport r;
    r.key_bits = counter.key_bits();
    r.events = counter.events();
    r.mm_events = counter.count(OpKind::mm);
    r.judgment_events = counter.count(OpKind::judgment);
    r.shared_mm = counter.shared_weighted_mm();
    r.shared_judgment = counter.shared_weighted_judgment();
    r.modulus_mm = counter.modulus_weighted_mm();
    r.modulus_judgment = counter.modulus_weighted_judgment();
    return r;
}

/// (1 - improved / baseline) * 100, or 0 when the baseline is empty.
inline Fraction reduction_percent(Fraction baseline, Fraction improved) {
    if (baseline.is_zero()) {
        return Fraction(0);
    }
    return (Fraction(1) - improved / baseline) * Fraction(100);
}

struct OpComparison {
    Fraction mm_reduction_percent;
    Fraction judgment_reduction_percent;
    Fraction modulus_mm_reduction_percent;
    Fraction modulus_judgment_reduction_percent;
};

inline OpComparison compare_reports(const OpReport& baseline, const OpReport& improved) {
    return OpComparison{
        reduction_percent(baseline.shared_mm, improved.shared_mm),
        reduction_percent(baseline.shared_judgment, improved.shared_judgment),
        reduction_percent(baseline.modulus_mm, improved.modulus_mm),
        reduction_percent(baseline.modulus_judgment, improved.modulus_judgment),
    };
}

// ---------------------------------------------------------------------------
// Primes
// ---------------------------------------------------------------------------

namespace detail {

inline const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 2000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (composite[i]) {
                continue;
            }
            out.push_back(i);
            for (std::uint32_t j = i * i; j <= limit; j += i) {
                composite[j] = true;
            }
        }
        return out;
    }();
    return primes;
}

} // namespace detail

/// Trial division by small primes followed by `rounds` Miller-Rabin rounds
/// with random bases.
template <Limb64Generator Rng>
bool is_probable_prime(const Nat& n, Rng& rng, int rounds = 40) {
    if (n < Nat(2)) {
        return false;
    }
    for (const auto sp : detail::small_primes()) {
        if (n == Nat(sp)) {
            return true;
        }
        if (detail::div_rem_limb(n, sp).second == 0) {
            return false;
        }
    }

    const Nat n_minus_1 = n - Nat(1);
    std::size_t s = 0;
    while (!n_minus_1.bit(s)) {
        ++s;
    }
    const Nat d = n_minus_1 >> s;
    const MontCtx ctx(n);
    const Nat range = n - Nat(3); // bases in [2, n-2]

    for (int round = 0; round < rounds; ++round) {
        const Nat base = random_below(rng, range) + Nat(2);
        Nat x = mont_pow(base, d, ctx);
        if (x.is_one() || x == n_minus_1) {
            continue;
        }
        bool witness = true;
        for (std::size_t i = 1; i < s; ++i) {
            x = (x * x) % n;
            if (x == n_minus_1) {
                witness = false;
                break;
            }
        }
        if (witness) {
            return false;
        }
    }
    return true;
}

/// Random prime of exactly `bits` bits with the top two bits set, so the
/// product of two such primes has exactly 2*bits bits.
template <Limb64Generator Rng>
Nat random_prime(std::size_t bits, Rng& rng, int rounds = 40) {
    if (bits < 4) {
        throw InvalidArgumentError("prime width must be at least 4 bits");
    }
    const Nat top = Nat::power_of_two(bits - 1) + Nat::power_of_two(bits - 2);
    const std::size_t attempts = 200 * bits + 10000;
    for (std::size_t i = 0; i < attempts; ++i) {
        Nat candidate = random_bits(rng, bits - 2) + top;
        if (!candidate.is_odd()) {
            candidate = candidate + Nat(1);
        }
        if (candidate.bit_length() != bits) {
            continue;
        }
        if (is_probable_prime(candidate, rng, rounds)) {
            return candidate;
        }
    }
    throw KeygenError("no prime found within the attempt budget");
}

// ---------------------------------------------------------------------------
// Keys
// ---------------------------------------------------------------------------

/// L_d(x) = (x - 1) / d for x = 1 (mod d), computed as floor(x / d).
///
/// Also correct for the redundant input x + d^2, which maps to L_d(x) + d.
inline Nat l_function(const Nat& x, const Nat& d) {
    if (d <= Nat(1)) {
        throw InvalidArgumentError("L function divisor must exceed 1");
    }
    if (x.is_zero()) {
        throw InvalidCiphertextError("L function input must be at least 1");
    }
    auto [quot, rem] = div_rem(x, d);
    if (!rem.is_one()) {
        throw InvalidCiphertextError("L function input is not 1 modulo its divisor");
    }
    return quot;
}

/// Builds a key pair from two primes. g defaults to n + 1.
inline KeyPair make_keypair(const Nat& p, const Nat& q, std::optional<Nat> g = std::nullopt) {
    DefaultRng check_rng(0x5eed);
    if (p == q) {
        throw KeygenError("p and q must differ");
    }
    if (p.bit_length() != q.bit_length()) {
        throw KeygenError("p and q must have the same bit length");
    }
    if (!is_probable_prime(p, check_rng) || !is_probable_prime(q, check_rng)) {
        throw KeygenError("p and q must be prime");
    }
    if (p.bit_length() < 2 || p < Nat(3) || q < Nat(3)) {
        throw KeygenError("p and q must be odd primes");
    }

    PublicKey pk;
    PrivateKey sk;
    sk.p = p;
    sk.q = q;
    pk.n = p * q;
    pk.n_sq = pk.n * pk.n;
    pk.bits = 2 * p.bit_length();
    sk.p_sq = p * p;
    sk.q_sq = q * q;

    const Nat p1 = p - Nat(1);
    const Nat q1 = q - Nat(1);
    if (!gcd(pk.n, p1 * q1).is_one()) {
        throw KeygenError("gcd(pq, (p-1)(q-1)) must be 1");
    }
    sk.lambda = gcd_lcm(p1, q1).second;

    pk.g = g.value_or(pk.n + Nat(1));
    if (pk.g.is_zero() || pk.g >= pk.n_sq || !gcd(pk.g, pk.n).is_one()) {
        throw KeygenError("g must be a unit modulo n^2");
    }
    const MontCtx ctx_n_sq(pk.n_sq);
    const Nat g_lambda = mont_pow(pk.g, sk.lambda, ctx_n_sq);
    try {
        sk.mu = mod_inverse(l_function(g_lambda, pk.n), pk.n);
    } catch (const Error&) {
        throw KeygenError("L(g^lambda mod n^2) is not invertible modulo n");
    }
    return KeyPair{std::move(pk), std::move(sk)};
}

/// Fresh key pair with an N-bit modulus (N even, N >= 16).
template <Limb64Generator Rng>
KeyPair keygen(std::size_t bits, Rng& rng) {
    if (bits % 2 != 0) {
        throw InvalidArgumentError("key width must be even");
    }
    if (bits < 16) {
        throw InvalidArgumentError("key width must be at least 16 bits");
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        Nat p = random_prime(bits / 2, rng);
        Nat q = random_prime(bits / 2, rng);
        if (p == q || !gcd(p * q, (p - Nat(1)) * (q - Nat(1))).is_one()) {
            continue;
        }
        return make_keypair(p, q);
    }
    throw KeygenError("key generation failed after bounded retries");
}

// ---------------------------------------------------------------------------
// Encryption and evaluation
// ---------------------------------------------------------------------------

namespace detail {

inline void check_under_key(const PublicKey& pk, const Ciphertext& c) {
    if (c.value.is_zero() || c.value >= pk.n_sq) {
        throw KeyMismatchError("ciphertext is not an element of Z_{n^2} for this key");
    }
}

inline void check_decryptable(const PublicKey& pk, const Ciphertext& c) {
    if (c.value.is_zero() || c.value >= pk.n_sq) {
        throw InvalidCiphertextError("ciphertext out of range for this key");
    }
    if (!gcd(c.value, pk.n).is_one()) {
        throw InvalidCiphertextError("ciphertext shares a factor with n");
    }
}

inline Nat mod_add(const Nat& a, const Nat& b, const Nat& m) {
    Nat s = a + b;
    return s >= m ? s - m : s;
}

} // namespace detail

/// c = g^m * r^n mod n^2.
inline Ciphertext encrypt(const PublicKey& pk, const Nat& m, const Nat& r) {
    if (m >= pk.n) {
        throw InvalidArgumentError("message must be below n");
    }
    if (r.is_zero() || r >= pk.n || !gcd(r, pk.n).is_one()) {
        throw InvalidArgumentError("r must be a unit modulo n");
    }
    const MontCtx ctx(pk.n_sq);
    // (n + 1)^m = 1 + m*n (mod n^2)
    const Nat gm = pk.g == pk.n + Nat(1) ? (Nat(1) + m * pk.n) % pk.n_sq : mont_pow(pk.g, m, ctx);
    const Nat rn = mont_pow(r, pk.n, ctx);
    return Ciphertext{(gm * rn) % pk.n_sq};
}

template <Limb64Generator Rng>
Ciphertext encrypt(const PublicKey& pk, const Nat& m, Rng& rng) {
    for (;;) {
        Nat r = random_below(rng, pk.n);
        if (!r.is_zero() && gcd(r, pk.n).is_one()) {
            return encrypt(pk, m, r);
        }
    }
}

/// Enc(m1) * Enc(m2) decrypts to m1 + m2 mod n.
inline Ciphertext hom_add(const PublicKey& pk, const Ciphertext& c1, const Ciphertext& c2) {
    detail::check_under_key(pk, c1);
    detail::check_under_key(pk, c2);
    return Ciphertext{(c1.value * c2.value) % pk.n_sq};
}

/// Enc(m)^k decrypts to k * m mod n.
inline Ciphertext hom_scalar_mul(const PublicKey& pk, const Ciphertext& c, const Nat& k) {
    detail::check_under_key(pk, c);
    const MontCtx ctx(pk.n_sq);
    return Ciphertext{cond_sub(ladder_pow(c.value, k, ctx), ctx)};
}

// ---------------------------------------------------------------------------
// Precomputation
// ---------------------------------------------------------------------------

inline CrtParams precompute_crt(const PrivateKey& sk, const PublicKey& pk,
                                unsigned word_bits = kDefaultWordBits) {
    MontCtx ctx_p_sq(sk.p_sq, word_bits);
    MontCtx ctx_q_sq(sk.q_sq, word_bits);
    MontCtx ctx_p(sk.p, word_bits);
    MontCtx ctx_q(sk.q, word_bits);
    MontCtx ctx_n(pk.n, word_bits);

    const auto branch_e = [&pk](const Nat& prime, const MontCtx& ctx_sq) {
        const Nat x = mont_pow(pk.g % ctx_sq.modulus(), prime - Nat(1), ctx_sq);
        return mod_inverse(l_function(x, prime), prime);
    };
    Nat e_p = branch_e(sk.p, ctx_p_sq);
    Nat e_q = branch_e(sk.q, ctx_q_sq);
    Nat l_3 = mod_inverse(sk.q, sk.p) * sk.q;
    Nat l_4 = mod_inverse(sk.p, sk.q) * sk.p;

    Nat y_p = ctx_p_sq.r2_mod_m();
    Nat y_q = ctx_q_sq.r2_mod_m();
    Nat e_p_r = (e_p * ctx_p.r_mod_m()) % sk.p;
    Nat e_q_r = (e_q * ctx_q.r_mod_m()) % sk.q;
    Nat l_3_r = (l_3 * ctx_n.r_mod_m()) % pk.n;
    Nat l_4_r = (l_4 * ctx_n.r_mod_m()) % pk.n;

    return CrtParams{std::move(e_p),   std::move(e_q),   std::move(l_3),      std::move(l_4),
                     std::move(y_p),   std::move(y_q),   std::move(e_p_r),    std::move(e_q_r),
                     std::move(l_3_r), std::move(l_4_r), std::move(ctx_p_sq), std::move(ctx_q_sq),
                     std::move(ctx_p), std::move(ctx_q), std::move(ctx_n)};
}

inline EcrtParams precompute_ecrt(const PrivateKey& sk, const PublicKey& pk, const CrtParams& crt) {
    (void)sk;
    Nat t_p = (crt.e_p * crt.l_3) % pk.n;
    Nat t_q = (crt.e_q * crt.l_4) % pk.n;
    Nat t_p_r = (t_p * crt.ctx_n.r_mod_m()) % pk.n;
    Nat t_q_r = (t_q * crt.ctx_n.r_mod_m()) % pk.n;
    return EcrtParams{std::move(t_p), std::move(t_q), std::move(t_p_r), std::move(t_q_r),
                      crt.y_p,        crt.y_q,        crt.ctx_p_sq,     crt.ctx_q_sq,
                      crt.ctx_n};
}

// ---------------------------------------------------------------------------
// Decryption
// ---------------------------------------------------------------------------

/// Montgomery-domain entry of c for one branch: MM_B(c mod m, R^2 mod m).
inline Nat preprocess_branch(const Nat& c, const MontCtx& ctx_sq, const Nat& y) {
    return mm_radix2(c % ctx_sq.modulus(), y, ctx_sq);
}

/// Full ladder over exponent prime - 1 at width bitlen(prime). Redundant output.
inline Nat exponentiate_branch(const Nat& s_mont, const Nat& prime, const MontCtx& ctx_sq) {
    auto state = ladder_init_mont(s_mont, ctx_sq);
    state = ladder_advance(std::move(state), fixed_width_bits(prime - Nat(1), prime.bit_length()), ctx_sq);
    return ladder_finalize(state, ctx_sq);
}

inline Nat decrypt_traditional(const PrivateKey& sk, const PublicKey& pk, const Ciphertext& c,
                               OpSink* sink = nullptr, unsigned word_bits = kDefaultWordBits) {
    detail::check_decryptable(pk, c);
    const MontCtx ctx_n_sq(pk.n_sq, word_bits);
    const MontCtx ctx_n(pk.n, word_bits);
    const std::size_t width = std::max(pk.bits, sk.lambda.bit_length());
    const Nat x = ladder_pow(c.value, sk.lambda, ctx_n_sq, nullptr, width);
    const Nat l = l_function(x, pk.n);
    const Nat mu_r = (sk.mu * ctx_n.r_mod_m()) % pk.n;
    return cond_sub(mm_radix2(l, mu_r, ctx_n, sink), ctx_n, sink);
}

/// Exponentiation outputs (c^(p-1) mod p^2, c^(q-1) mod q^2) of the CRT
/// paths, in redundant form.
inline std::pair<Nat, Nat> crt_exponentiate(const PrivateKey& sk, const Ciphertext& c, const MontCtx& ctx_p_sq,
                                            const Nat& y_p, const MontCtx& ctx_q_sq, const Nat& y_q) {
    Nat s_p = preprocess_branch(c.value, ctx_p_sq, y_p);
    Nat s_q = preprocess_branch(c.value, ctx_q_sq, y_q);
    return {exponentiate_branch(s_p, sk.p, ctx_p_sq), exponentiate_branch(s_q, sk.q, ctx_q_sq)};
}

inline Nat decrypt_crt_base(const PrivateKey& sk, const PublicKey& pk, const CrtParams& crt, const Ciphertext& c,
                            OpSink* sink = nullptr) {
    detail::check_decryptable(pk, c);
    auto [ce_p, ce_q] = crt_exponentiate(sk, c, crt.ctx_p_sq, crt.y_p, crt.ctx_q_sq, crt.y_q);

    // Judgment on the exponentiation outputs.
    const Nat u_p = cond_sub(ce_p, crt.ctx_p_sq, sink);
    const Nat u_q = cond_sub(ce_q, crt.ctx_q_sq, sink);

    const Nat lc_p = l_function(u_p, sk.p);
    const Nat lc_q = l_function(u_q, sk.q);

    Nat m_p = mm_radix2(lc_p, crt.e_p_r, crt.ctx_p, sink);
    Nat m_q = mm_radix2(lc_q, crt.e_q_r, crt.ctx_q, sink);
    m_p = cond_sub(m_p, crt.ctx_p, sink);
    m_q = cond_sub(m_q, crt.ctx_q, sink);

    Nat big_p = mm_radix2(m_p, crt.l_3_r, crt.ctx_n, sink);
    Nat big_q = mm_radix2(m_q, crt.l_4_r, crt.ctx_n, sink);
    big_p = cond_sub(big_p, crt.ctx_n, sink);
    big_q = cond_sub(big_q, crt.ctx_n, sink);

    return detail::mod_add(big_p, big_q, pk.n);
}

/// eCRT postprocessing on (possibly redundant) exponentiation outputs
/// ce_p < 2p^2 and ce_q < 2q^2.
inline Nat ecrt_postprocess(const PrivateKey& sk, const PublicKey& pk, const EcrtParams& ecrt, const Nat& ce_p,
                            const Nat& ce_q, OpSink* sink = nullptr) {
    const Nat lc_p = l_function(ce_p, sk.p);
    const Nat lc_q = l_function(ce_q, sk.q);

    Nat m_p = mm_radix2(lc_p, ecrt.t_p_r, ecrt.ctx_n, sink);
    Nat m_q = mm_radix2(lc_q, ecrt.t_q_r, ecrt.ctx_n, sink);
    m_p = cond_sub(m_p, ecrt.ctx_n, sink);
    m_q = cond_sub(m_q, ecrt.ctx_n, sink);

    return detail::mod_add(m_p, m_q, pk.n);
}

inline Nat decrypt_ecrt(const PrivateKey& sk, const PublicKey& pk, const EcrtParams& ecrt, const Ciphertext& c,
                        OpSink* sink = nullptr) {
    detail::check_decryptable(pk, c);
    auto [ce_p, ce_q] = crt_exponentiate(sk, c, ecrt.ctx_p_sq, ecrt.y_p, ecrt.ctx_q_sq, ecrt.y_q);
    return ecrt_postprocess(sk, pk, ecrt, ce_p, ce_q, sink);
}

enum class Backend {
    traditional,
    crt,
    ecrt,
};

/// Everything needed to decrypt with any backend.
struct DecryptionKey {
    PublicKey pk;
    PrivateKey sk;
    CrtParams crt;
    EcrtParams ecrt;

    static DecryptionKey from(const KeyPair& kp, unsigned word_bits = kDefaultWordBits) {
        CrtParams crt = precompute_crt(kp.sk, kp.pk, word_bits);
        EcrtParams ecrt = precompute_ecrt(kp.sk, kp.pk, crt);
        return DecryptionKey{kp.pk, kp.sk, std::move(crt), std::move(ecrt)};
    }

    Nat decrypt(const Ciphertext& c, Backend backend, OpSink* sink = nullptr) const {
        switch (backend) {
        case Backend::traditional:
            return decrypt_traditional(sk, pk, c, sink, crt.ctx_n.word_bits());
        case Backend::crt:
            return decrypt_crt_base(sk, pk, crt, c, sink);
        case Backend::ecrt:
            return decrypt_ecrt(sk, pk, ecrt, c, sink);
        }
        throw InvalidArgumentError("unknown backend");
    }
};

} // namespace ecrt

#endif // ECRT_PAILLIER_HPP
