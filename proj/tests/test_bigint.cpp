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

#include <ecrt/bigint.hpp>

#include "gmp_oracle.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using ecrt::Nat;
using ecrt::test::from_mpz;
using ecrt::test::to_mpz;

std::mt19937_64 rng_for(std::uint64_t seed) { return std::mt19937_64(seed); }

Nat random_width(std::mt19937_64& rng, std::size_t max_bits) {
    const std::size_t bits = 1 + rng() % max_bits;
    return ecrt::random_bits(rng, bits);
}

TEST(NatBasics, ZeroIsCanonical) {
    const Nat z;
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.limb_count(), 1u);
    EXPECT_EQ(z.bit_length(), 0u);
    EXPECT_EQ(z.to_hex(), "0");
    EXPECT_EQ(z.to_dec(), "0");
    EXPECT_EQ(Nat(std::vector<ecrt::Limb>{0, 0, 0}), z);
    EXPECT_EQ(Nat(5) - Nat(5), z);
}

TEST(NatBasics, HexAndDecimalParsing) {
    EXPECT_EQ(Nat::from_hex("FF").to_u64(), 255u);
    EXPECT_EQ(Nat::from_hex("00ff"), Nat(255));
    EXPECT_EQ(Nat::from_dec("18446744073709551616"), Nat::power_of_two(64));
    EXPECT_EQ(Nat::power_of_two(64).to_hex(), "10000000000000000");
    EXPECT_THROW(Nat::from_hex(""), ecrt::ParseError);
    EXPECT_THROW(Nat::from_hex("12g"), ecrt::ParseError);
    EXPECT_THROW(Nat::from_dec("12a"), ecrt::ParseError);
}

TEST(NatBasics, ToyValues) {
    EXPECT_EQ(ecrt::mod_inverse(Nat(3), Nat(11)), Nat(4));
    EXPECT_EQ(ecrt::mod_pow_oracle(Nat(2), Nat(10), Nat(1000)), Nat(24));
    const auto [g, l] = ecrt::gcd_lcm(Nat(6), Nat(10));
    EXPECT_EQ(g, Nat(2));
    EXPECT_EQ(l, Nat(30));
}

TEST(NatBasics, ErrorCases) {
    EXPECT_THROW(Nat(3) - Nat(4), ecrt::UnderflowError);
    EXPECT_THROW(Nat(3) / Nat(0), ecrt::DivisionByZeroError);
    EXPECT_THROW(ecrt::mod_inverse(Nat(6), Nat(9)), ecrt::NotInvertibleError);
    EXPECT_THROW(ecrt::mod_inverse(Nat(1), Nat(1)), ecrt::InvalidArgumentError);
    EXPECT_THROW(ecrt::gcd_lcm(Nat(0), Nat(4)), ecrt::InvalidArgumentError);
    EXPECT_THROW(ecrt::mod_pow_oracle(Nat(2), Nat(3), Nat(1)), ecrt::InvalidArgumentError);
    EXPECT_THROW((void)Nat::power_of_two(64).to_u64(), ecrt::InvalidArgumentError);
}

TEST(NatBasics, BitAccess) {
    const Nat v = Nat::from_hex("8000000000000000000000000000000000000001");
    EXPECT_EQ(v.bit_length(), 160u);
    EXPECT_TRUE(v.bit(0));
    EXPECT_TRUE(v.bit(159));
    EXPECT_FALSE(v.bit(1));
    EXPECT_FALSE(v.bit(1000));
    EXPECT_EQ(ecrt::low_bits(v, 1), Nat(1));
}

TEST(NatProperty, ArithmeticMatchesGmp) {
    auto rng = rng_for(11);
    for (int i = 0; i < 3000; ++i) {
        const Nat a = random_width(rng, 700);
        const Nat b = random_width(rng, 700);
        const mpz_class ga = to_mpz(a);
        const mpz_class gb = to_mpz(b);
        ASSERT_EQ(to_mpz(a + b), ga + gb);
        ASSERT_EQ(to_mpz(a * b), ga * gb);
        if (a >= b) {
            ASSERT_EQ(to_mpz(a - b), ga - gb);
        }
        ASSERT_EQ(a < b, ga < gb);
        ASSERT_EQ(a == b, ga == gb);
        const std::size_t sh = rng() % 200;
        ASSERT_EQ(to_mpz(a << sh), ga << sh);
        ASSERT_EQ(to_mpz(a >> sh), ga >> sh);
        if (!b.is_zero()) {
            const auto [q, r] = ecrt::div_rem(a, b);
            ASSERT_EQ(to_mpz(q), mpz_class(ga / gb));
            ASSERT_EQ(to_mpz(r), mpz_class(ga % gb));
        }
    }
}

// Divisors whose top limb is all ones or whose quotient digits need the
// add-back correction.
TEST(NatProperty, DivisionEdgeCases) {
    auto rng = rng_for(12);
    for (int i = 0; i < 2000; ++i) {
        const std::size_t limbs = 2 + rng() % 6;
        std::vector<ecrt::Limb> dl(limbs, ~ecrt::Limb{0});
        dl[rng() % limbs] = rng() & 0xffff;
        const Nat b(dl);
        if (b.is_zero()) {
            continue;
        }
        const Nat a = (b * ecrt::random_bits(rng, 1 + rng() % 256)) + ecrt::random_below(rng, b);
        const auto [q, r] = ecrt::div_rem(a, b);
        ASSERT_EQ(to_mpz(q), mpz_class(to_mpz(a) / to_mpz(b)));
        ASSERT_EQ(to_mpz(r), mpz_class(to_mpz(a) % to_mpz(b)));
        ASSERT_EQ(q * b + r, a);
    }
}

TEST(NatProperty, StringRoundTrip) {
    auto rng = rng_for(13);
    for (int i = 0; i < 500; ++i) {
        const Nat a = random_width(rng, 1500);
        ASSERT_EQ(a.to_dec(), to_mpz(a).get_str(10));
        ASSERT_EQ(a.to_hex(), to_mpz(a).get_str(16));
        ASSERT_EQ(Nat::from_dec(a.to_dec()), a);
        ASSERT_EQ(Nat::from_hex(a.to_hex()), a);
        ASSERT_EQ(from_mpz(to_mpz(a)), a);
    }
}

TEST(NatProperty, NumberTheoryMatchesGmp) {
    auto rng = rng_for(14);
    for (int i = 0; i < 400; ++i) {
        const Nat m = random_width(rng, 300) + Nat(2);
        const Nat a = ecrt::random_below(rng, m);
        const Nat e = random_width(rng, 200);
        const mpz_class gm = to_mpz(m);
        ASSERT_EQ(to_mpz(ecrt::mod_pow_oracle(a, e, m)), ecrt::test::powm(to_mpz(a), to_mpz(e), gm));

        mpz_class g;
        mpz_gcd(g.get_mpz_t(), to_mpz(a).get_mpz_t(), gm.get_mpz_t());
        ASSERT_EQ(to_mpz(ecrt::gcd(a, m)), g);
        if (g == 1) {
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), to_mpz(a).get_mpz_t(), gm.get_mpz_t());
            ASSERT_EQ(to_mpz(ecrt::mod_inverse(a, m)), inv);
        } else {
            ASSERT_THROW(ecrt::mod_inverse(a, m), ecrt::NotInvertibleError);
        }
    }
}

TEST(NatProperty, RandomBelowStaysInRange) {
    auto rng = rng_for(15);
    const Nat bound = Nat::from_dec("1000000000000000000000000000001");
    for (int i = 0; i < 1000; ++i) {
        ASSERT_LT(ecrt::random_below(rng, bound), bound);
    }
    EXPECT_THROW(ecrt::random_below(rng, Nat(0)), ecrt::InvalidArgumentError);
}

} // namespace
