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

#include <ecrt/io.hpp>

#include <gtest/gtest.h>

namespace {

using ecrt::Nat;

const ecrt::DecryptionKey& key_128() {
    static const ecrt::DecryptionKey key = [] {
        ecrt::DefaultRng rng(128);
        return ecrt::DecryptionKey::from(ecrt::keygen(128, rng), 16);
    }();
    return key;
}

TEST(KeyJson, PrivateKeyRoundTrip) {
    const auto& key = key_128();
    const auto j = ecrt::io::private_key_json(key);
    const auto back = ecrt::io::private_key_from_json(ecrt::io::json::parse(j.dump()));
    EXPECT_EQ(back.pk.n, key.pk.n);
    EXPECT_EQ(back.pk.g, key.pk.g);
    EXPECT_EQ(back.pk.bits, key.pk.bits);
    EXPECT_EQ(back.sk.lambda, key.sk.lambda);
    EXPECT_EQ(back.sk.mu, key.sk.mu);
    EXPECT_EQ(back.crt.ctx_n.word_bits(), 16u);
    EXPECT_EQ(back.ecrt.t_p, key.ecrt.t_p);
}

TEST(KeyJson, PublicPartIsReadableFromEitherFile) {
    const auto& key = key_128();
    const auto pub = ecrt::io::public_key_from_json(ecrt::io::public_key_json(key.pk));
    const auto from_priv = ecrt::io::public_key_from_json(ecrt::io::private_key_json(key));
    EXPECT_EQ(pub.n, key.pk.n);
    EXPECT_EQ(pub.n_sq, key.pk.n_sq);
    EXPECT_EQ(from_priv.g, key.pk.g);
    EXPECT_FALSE(ecrt::io::public_key_json(key.pk).contains("p"));
}

TEST(KeyJson, RejectsTamperedOrIncompleteFiles) {
    const auto& key = key_128();
    const auto good = ecrt::io::private_key_json(key);

    auto j = good;
    j["mu"] = (key.sk.mu + Nat(1)).to_hex();
    EXPECT_THROW(ecrt::io::private_key_from_json(j), ecrt::ParseError);

    j = good;
    j["crt"]["l_3"] = "1";
    EXPECT_THROW(ecrt::io::private_key_from_json(j), ecrt::ParseError);

    j = good;
    j.erase("p");
    EXPECT_THROW(ecrt::io::private_key_from_json(j), ecrt::ParseError);

    j = good;
    j["q"] = (key.sk.q + Nat(2)).to_hex();
    EXPECT_THROW(ecrt::io::private_key_from_json(j), ecrt::ParseError);

    j = good;
    j["n"] = "zz";
    EXPECT_THROW(ecrt::io::public_key_from_json(j), ecrt::ParseError);

    j = good;
    j["bits"] = 64;
    EXPECT_THROW(ecrt::io::public_key_from_json(j), ecrt::ParseError);

    EXPECT_THROW(ecrt::io::public_key_from_json(ecrt::io::json::array()), ecrt::ParseError);
}

TEST(CiphertextText, RoundTripAndWhitespace) {
    const std::vector<ecrt::Ciphertext> cs{{Nat(716)}, {Nat::from_hex("abcdef0123456789abcdef")}, {Nat(1)}};
    const std::string text = ecrt::io::format_ciphertexts(cs);
    EXPECT_EQ(text, "2cc\nabcdef0123456789abcdef\n1\n");
    EXPECT_EQ(ecrt::io::parse_ciphertexts(text), cs);
    EXPECT_EQ(ecrt::io::parse_ciphertexts("  2cc\r\n\n\tabcdef0123456789abcdef \n1"), cs);
    EXPECT_THROW(ecrt::io::parse_ciphertexts("2cc\nxyz\n"), ecrt::ParseError);
}

TEST(Files, MissingAndMalformed) {
    EXPECT_THROW(ecrt::io::read_json_file("/nonexistent/key.json"), ecrt::ParseError);
    EXPECT_THROW(ecrt::io::read_ciphertext_file("/nonexistent/ct.txt"), ecrt::ParseError);
    const std::string path = ::testing::TempDir() + "/bad.json";
    ecrt::io::write_text_file(path, "{ not json");
    EXPECT_THROW(ecrt::io::read_json_file(path), ecrt::ParseError);
}

TEST(SimJson, ReportFields) {
    const auto cfg = ecrt::sim::make_config(1024, 12, 100.0);
    const auto j = ecrt::io::sim_report_json(ecrt::sim::timing_report(cfg, 3));
    EXPECT_EQ(j.at("initiation_interval_cycles").get<std::uint64_t>(), 7567u);
    EXPECT_EQ(j.at("trace").size(), 3u);
    EXPECT_EQ(j.at("stage_cycles").size(), 8u);
}

} // namespace
