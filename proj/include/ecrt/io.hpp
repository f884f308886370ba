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
 * io.hpp
 *
 * File formats: JSON key files, line-oriented ciphertext files and JSON
 * simulator reports. All big integers are lowercase hex strings.
 *
 * A private key file is a superset of the public one:
 *
 *   {"bits": N, "n": .., "g": .., "p": .., "q": .., "lambda": .., "mu": ..,
 *    "word_bits": 32, "crt": {...}, "ecrt": {...}}
 */

#ifndef ECRT_IO_HPP
#define ECRT_IO_HPP

#include <ecrt/bigint.hpp>
#include <ecrt/errors.hpp>
#include <ecrt/mesa_sim.hpp>
#include <ecrt/paillier.hpp>

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace ecrt::io {

using json = nlohmann::ordered_json;

namespace detail {

inline Nat hex_field(const json& obj, const char* name) {
    if (!obj.contains(name) || !obj.at(name).is_string()) {
        throw ParseError(std::string("missing hex field '") + name + "'");
    }
    return Nat::from_hex(obj.at(name).get<std::string>());
}

inline std::size_t uint_field(const json& obj, const char* name) {
    if (!obj.contains(name) || !obj.at(name).is_number_unsigned()) {
        throw ParseError(std::string("missing integer field '") + name + "'");
    }
    return obj.at(name).get<std::size_t>();
}

inline void expect_equal(const json& obj, const char* name, const Nat& expected) {
    if (hex_field(obj, name) != expected) {
        throw ParseError(std::string("field '") + name + "' is inconsistent with the key");
    }
}

} // namespace detail

inline json public_key_json(const PublicKey& pk) {
    return json{{"bits", pk.bits}, {"n", pk.n.to_hex()}, {"g", pk.g.to_hex()}};
}

inline json crt_json(const CrtParams& crt) {
    return json{{"e_p", crt.e_p.to_hex()},     {"e_q", crt.e_q.to_hex()},     {"l_3", crt.l_3.to_hex()},
                {"l_4", crt.l_4.to_hex()},     {"y_p", crt.y_p.to_hex()},     {"y_q", crt.y_q.to_hex()},
                {"e_p_r", crt.e_p_r.to_hex()}, {"e_q_r", crt.e_q_r.to_hex()}, {"l_3_r", crt.l_3_r.to_hex()},
                {"l_4_r", crt.l_4_r.to_hex()}};
}

inline json ecrt_json(const EcrtParams& ecrt) {
    return json{{"t_p", ecrt.t_p.to_hex()},     {"t_q", ecrt.t_q.to_hex()}, {"t_p_r", ecrt.t_p_r.to_hex()},
                {"t_q_r", ecrt.t_q_r.to_hex()}, {"y_p", ecrt.y_p.to_hex()}, {"y_q", ecrt.y_q.to_hex()}};
}

inline json private_key_json(const DecryptionKey& key) {
    json j = public_key_json(key.pk);
    j["p"] = key.sk.p.to_hex();
    j["q"] = key.sk.q.to_hex();
    j["lambda"] = key.sk.lambda.to_hex();
    j["mu"] = key.sk.mu.to_hex();
    j["word_bits"] = key.crt.ctx_n.word_bits();
    j["crt"] = crt_json(key.crt);
    j["ecrt"] = ecrt_json(key.ecrt);
    return j;
}

inline PublicKey public_key_from_json(const json& j) {
    if (!j.is_object()) {
        throw ParseError("key file must hold a JSON object");
    }
    PublicKey pk;
    pk.bits = detail::uint_field(j, "bits");
    pk.n = detail::hex_field(j, "n");
    pk.g = detail::hex_field(j, "g");
    if (pk.n < Nat(15) || !pk.n.is_odd()) {
        throw ParseError("public modulus must be an odd composite");
    }
    pk.n_sq = pk.n * pk.n;
    if (pk.g.is_zero() || pk.g >= pk.n_sq) {
        throw ParseError("g must lie in Z_{n^2}");
    }
    if (pk.bits < pk.n.bit_length() || pk.bits > pk.n.bit_length() + 1) {
        throw ParseError("'bits' does not match the modulus");
    }
    return pk;
}

/// Rebuilds every derived value from p, q and g and checks the stored ones
/// against it.
inline DecryptionKey private_key_from_json(const json& j) {
    const PublicKey pk = public_key_from_json(j);
    const Nat p = detail::hex_field(j, "p");
    const Nat q = detail::hex_field(j, "q");
    const std::size_t word_bits = j.contains("word_bits") ? detail::uint_field(j, "word_bits") : kDefaultWordBits;

    KeyPair kp;
    try {
        kp = make_keypair(p, q, pk.g);
    } catch (const KeygenError& e) {
        throw ParseError(std::string("invalid private key: ") + e.what());
    }
    if (kp.pk.n != pk.n || kp.pk.bits != pk.bits) {
        throw ParseError("p * q does not match n");
    }
    detail::expect_equal(j, "lambda", kp.sk.lambda);
    detail::expect_equal(j, "mu", kp.sk.mu);

    DecryptionKey key = DecryptionKey::from(kp, static_cast<unsigned>(word_bits));
    if (j.contains("crt")) {
        const json& c = j.at("crt");
        const json expected = crt_json(key.crt);
        for (const auto& [name, value] : expected.items()) {
            detail::expect_equal(c, name.c_str(), Nat::from_hex(value.get<std::string>()));
        }
    }
    if (j.contains("ecrt")) {
        const json& c = j.at("ecrt");
        const json expected = ecrt_json(key.ecrt);
        for (const auto& [name, value] : expected.items()) {
            detail::expect_equal(c, name.c_str(), Nat::from_hex(value.get<std::string>()));
        }
    }
    return key;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write '" + path + "'");
    }
    out << text;
}

/// One hex value per line; blank lines are skipped.
inline std::vector<Ciphertext> parse_ciphertexts(const std::string& text) {
    std::vector<Ciphertext> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.pop_back();
        }
        const auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos) {
            continue;
        }
        out.push_back(Ciphertext{Nat::from_hex(std::string_view(line).substr(start))});
    }
    return out;
}

inline std::string format_ciphertexts(const std::vector<Ciphertext>& cs) {
    std::string out;
    for (const auto& c : cs) {
        out += c.value.to_hex();
        out += '\n';
    }
    return out;
}

inline std::vector<Ciphertext> read_ciphertext_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ciphertexts(buf.str());
}

inline json sim_report_json(const sim::SimReport& r) {
    json trace = json::array();
    for (const auto& t : r.trace) {
        trace.push_back(json{{"enter_cycle", t.enter_cycle}, {"exit_cycle", t.exit_cycle}});
    }
    return json{{"key_bits", r.key_bits},
                {"num_me", r.num_me},
                {"freq_mhz", r.freq_mhz},
                {"stage_cycles", r.stage_cycles},
                {"initiation_interval_cycles", r.initiation_interval_cycles},
                {"fill_latency_cycles", r.fill_latency_cycles},
                {"latency_ms", r.latency_ms},
                {"throughput_ops_per_sec", r.throughput_ops_per_sec},
                {"tp_kbit_per_sec", r.tp_kbit_per_sec},
                {"me_utilization", r.me_utilization},
                {"post_dominant", r.post_dominant},
                {"trace", trace}};
}

} // namespace ecrt::io

#endif // ECRT_IO_HPP
