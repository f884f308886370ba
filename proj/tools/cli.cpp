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

#include "cli.hpp"

#include <ecrt/ecrt.hpp>
#include <ecrt/io.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace ecrt::cli {
namespace {

using io::json;

/// Thrown for flag combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string key_path;
    std::string out_path;
    std::string pub_out_path;
    std::string in_path;
    std::string in2_path;
    std::vector<std::string> messages;
    std::string scalar;
    std::string op = "add";
    std::string backend = "ecrt";
    std::string format;
    std::optional<std::uint64_t> seed;
    std::size_t bits = 1024;
    std::size_t key_bits = 1024;
    std::size_t num_me = 12;
    std::size_t count = 0;
    unsigned word_bits = kDefaultWordBits;
    double freq_mhz = 100.0;
    std::vector<std::size_t> me_counts{2, 4, 8, 12};
    bool hex = false;
};

DefaultRng make_rng(const std::optional<std::uint64_t>& seed) {
    if (seed) {
        return DefaultRng(*seed);
    }
    std::random_device rd;
    return DefaultRng((std::uint64_t{rd()} << 32) ^ rd());
}

void emit(const Options& opt, std::ostream& out, const std::string& text) {
    if (opt.out_path.empty()) {
        out << text;
    } else {
        io::write_text_file(opt.out_path, text);
    }
}

Nat parse_number(const std::string& text, bool hex) { return hex ? Nat::from_hex(text) : Nat::from_dec(text); }

std::string format_number(const Nat& v, bool hex) { return hex ? v.to_hex() : v.to_dec(); }

Backend parse_backend(const std::string& name) {
    if (name == "traditional") {
        return Backend::traditional;
    }
    if (name == "crt") {
        return Backend::crt;
    }
    return Backend::ecrt;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
            line.pop_back();
        }
        if (!line.empty()) {
            out.push_back(line);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

int cmd_keygen(const Options& opt, std::ostream& out) {
    auto rng = make_rng(opt.seed);
    const KeyPair kp = keygen(opt.bits, rng);
    const DecryptionKey key = DecryptionKey::from(kp, opt.word_bits);
    emit(opt, out, io::private_key_json(key).dump(2) + "\n");
    if (!opt.pub_out_path.empty()) {
        io::write_text_file(opt.pub_out_path, io::public_key_json(key.pk).dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_encrypt(const Options& opt, std::ostream& out) {
    const PublicKey pk = io::public_key_from_json(io::read_json_file(opt.key_path));
    std::vector<std::string> texts = opt.messages;
    if (!opt.in_path.empty()) {
        const auto lines = read_lines(opt.in_path);
        texts.insert(texts.end(), lines.begin(), lines.end());
    }
    auto rng = make_rng(opt.seed);
    std::vector<Ciphertext> cs;
    cs.reserve(texts.size());
    for (const auto& t : texts) {
        const Nat m = parse_number(t, opt.hex);
        if (m >= pk.n) {
            throw InvalidArgumentError("message " + t + " is not below n");
        }
        cs.push_back(encrypt(pk, m, rng));
    }
    emit(opt, out, io::format_ciphertexts(cs));
    return kExitOk;
}

int cmd_eval(const Options& opt, std::ostream& out) {
    const PublicKey pk = io::public_key_from_json(io::read_json_file(opt.key_path));
    const auto a = io::read_ciphertext_file(opt.in_path);
    std::vector<Ciphertext> result;
    if (opt.op == "add") {
        if (opt.in2_path.empty()) {
            throw UsageError("--op add needs --in2");
        }
        const auto b = io::read_ciphertext_file(opt.in2_path);
        if (a.size() != b.size()) {
            throw UsageError("--in and --in2 hold different numbers of ciphertexts");
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            result.push_back(hom_add(pk, a[i], b[i]));
        }
    } else if (opt.op == "sum") {
        if (a.empty()) {
            throw UsageError("--op sum needs at least one ciphertext");
        }
        Ciphertext acc = a.front();
        for (std::size_t i = 1; i < a.size(); ++i) {
            acc = hom_add(pk, acc, a[i]);
        }
        result.push_back(acc);
    } else {
        if (opt.scalar.empty()) {
            throw UsageError("--op scalar needs --scalar");
        }
        const Nat k = parse_number(opt.scalar, opt.hex);
        for (const auto& c : a) {
            result.push_back(hom_scalar_mul(pk, c, k));
        }
    }
    emit(opt, out, io::format_ciphertexts(result));
    return kExitOk;
}

int cmd_decrypt(const Options& opt, std::ostream& out) {
    const DecryptionKey key = io::private_key_from_json(io::read_json_file(opt.key_path));
    const Backend backend = parse_backend(opt.backend);
    std::string text;
    for (const auto& c : io::read_ciphertext_file(opt.in_path)) {
        text += format_number(key.decrypt(c, backend), opt.hex);
        text += '\n';
    }
    emit(opt, out, text);
    return kExitOk;
}

// ---------------------------------------------------------------------------

std::string percent(const Fraction& f) { return f.to_string(2) + "%"; }

int cmd_bench(const Options& opt, std::ostream& out) {
    const DecryptionKey key = io::private_key_from_json(io::read_json_file(opt.key_path));
    const std::size_t count = opt.count == 0 ? 100 : opt.count;
    auto rng = make_rng(opt.seed ? opt.seed : std::optional<std::uint64_t>(1));

    std::vector<Nat> messages;
    std::vector<Ciphertext> cs;
    for (std::size_t i = 0; i < count; ++i) {
        messages.push_back(random_below(rng, key.pk.n));
        cs.push_back(encrypt(key.pk, messages.back(), rng));
    }

    const auto run_backend = [&](Backend b, std::optional<OpReport>& report) {
        const auto start = std::chrono::steady_clock::now();
        for (std::size_t i = 0; i < count; ++i) {
            OpCounter counter(key.pk.bits);
            const Nat m = key.decrypt(cs[i], b, &counter);
            if (m != messages[i]) {
                throw Error("decryption mismatch in benchmark");
            }
            OpReport r = op_report(counter);
            if (!report) {
                report = std::move(r);
            } else if (r.events.size() != report->events.size()) {
                throw Error("operation counts vary between ciphertexts");
            }
        }
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };

    std::optional<OpReport> trad_report;
    std::optional<OpReport> crt_report;
    std::optional<OpReport> ecrt_report;
    const double trad_ms = run_backend(Backend::traditional, trad_report);
    const double crt_ms = run_backend(Backend::crt, crt_report);
    const double ecrt_ms = run_backend(Backend::ecrt, ecrt_report);
    const OpComparison cmp = compare_reports(*crt_report, *ecrt_report);

    if (opt.format == "json") {
        const auto counts = [](const OpReport& r) {
            return json{{"mm_events", r.mm_events},
                        {"judgment_events", r.judgment_events},
                        {"shared_mm", r.shared_mm.to_double()},
                        {"shared_judgment", r.shared_judgment.to_double()},
                        {"modulus_mm", r.modulus_mm.to_double()},
                        {"modulus_judgment", r.modulus_judgment.to_double()}};
        };
        const json j{{"key_bits", key.pk.bits},
                     {"count", count},
                     {"crt", counts(*crt_report)},
                     {"ecrt", counts(*ecrt_report)},
                     {"mm_reduction_percent", cmp.mm_reduction_percent.to_double()},
                     {"judgment_reduction_percent", cmp.judgment_reduction_percent.to_double()},
                     {"modulus_mm_reduction_percent", cmp.modulus_mm_reduction_percent.to_double()},
                     {"modulus_judgment_reduction_percent", cmp.modulus_judgment_reduction_percent.to_double()},
                     {"wall_ms", {{"traditional", trad_ms}, {"crt", crt_ms}, {"ecrt", ecrt_ms}}}};
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    std::ostringstream os;
    os << "Postprocessing counts per decryption, in 2N-bit operations (N = " << key.pk.bits << ")\n";
    os << std::left << std::setw(12) << "algorithm" << std::setw(12) << "mm" << std::setw(12) << "judgments"
       << std::setw(14) << "mm (width)" << "judgments (width)\n";
    const auto row = [&os](const std::string& name, const OpReport& r) {
        os << std::left << std::setw(12) << name << std::setw(12) << r.shared_mm.to_string(4) << std::setw(12)
           << r.shared_judgment.to_string(4) << std::setw(14) << r.modulus_mm.to_string(4)
           << r.modulus_judgment.to_string(4) << "\n";
    };
    row("CRT-base", *crt_report);
    row("eCRT", *ecrt_report);
    os << std::left << std::setw(12) << "reduction" << std::setw(12) << percent(cmp.mm_reduction_percent)
       << std::setw(12) << percent(cmp.judgment_reduction_percent) << std::setw(14)
       << percent(cmp.modulus_mm_reduction_percent) << percent(cmp.modulus_judgment_reduction_percent) << "\n";
    os << "\nmm reduction " << percent(cmp.mm_reduction_percent) << ", judgment reduction "
       << percent(cmp.judgment_reduction_percent) << "\n";
    os << std::fixed << std::setprecision(3);
    os << "\nWall clock for " << count << " decryptions (all verified):\n";
    os << "  traditional  " << trad_ms << " ms\n";
    os << "  crt          " << crt_ms << " ms\n";
    os << "  ecrt         " << ecrt_ms << " ms\n";
    out << os.str();
    return kExitOk;
}

int cmd_simulate(const Options& opt, std::ostream& out) {
    std::optional<DecryptionKey> key;
    auto rng = make_rng(opt.seed ? opt.seed : std::optional<std::uint64_t>(1));
    if (!opt.key_path.empty()) {
        key = io::private_key_from_json(io::read_json_file(opt.key_path));
    } else {
        key = DecryptionKey::from(keygen(opt.key_bits, rng));
    }
    const sim::PipelineConfig cfg = sim::make_config(key->pk.bits, opt.num_me, opt.freq_mhz);
    const std::size_t count = opt.count == 0 ? 16 : opt.count;

    std::vector<Ciphertext> cs;
    for (std::size_t i = 0; i < count; ++i) {
        cs.push_back(encrypt(key->pk, random_below(rng, key->pk.n), rng));
    }
    const auto result = sim::simulate_batch(cfg, key->pk, key->sk, key->ecrt, cs);
    bool functional_ok = true;
    for (std::size_t i = 0; i < count; ++i) {
        functional_ok = functional_ok && result.plaintexts[i] == decrypt_ecrt(key->sk, key->pk, key->ecrt, cs[i]);
    }
    if (!functional_ok) {
        throw Error("staged decryption disagrees with eCRT decryption");
    }

    const auto& r = result.report;
    if (opt.format == "table") {
        std::ostringstream os;
        os << "N = " << r.key_bits << ", ME units = " << r.num_me << ", " << r.freq_mhz << " MHz\n";
        os << "stage cycles:";
        for (const auto c : r.stage_cycles) {
            os << ' ' << c;
        }
        os << "\ninitiation interval: " << r.initiation_interval_cycles << " cycles ("
           << r.latency_ms * 1000.0 << " us)\n";
        os << "fill latency: " << r.fill_latency_cycles << " cycles\n";
        os << "throughput: " << r.throughput_ops_per_sec << " decryptions/s, " << r.tp_kbit_per_sec
           << " kbit/s\n";
        os << "ME utilization: " << r.me_utilization << (r.post_dominant ? " (pre/post dominant)" : "") << "\n";
        os << "baseline single-core cycles: " << sim::baseline_monolithic_cycles(cfg) << "\n";
        os << "functional check: " << count << " ciphertexts match eCRT decryption\n";
        out << os.str();
        return kExitOk;
    }
    json j = io::sim_report_json(r);
    j["baseline_monolithic_cycles"] = sim::baseline_monolithic_cycles(cfg);
    j["functional_check"] = "pass";
    out << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_sweep(const Options& opt, std::ostream& out) {
    const sim::PipelineConfig base = sim::make_config(opt.key_bits, opt.me_counts.front(), opt.freq_mhz);
    const auto rows = sim::sweep_me_count(base, opt.me_counts);
    if (opt.format == "json") {
        json j = json::array();
        for (const auto& r : rows) {
            j.push_back(json{{"num_me", r.num_me},
                             {"ii_cycles", r.ii_cycles},
                             {"fill_cycles", r.fill_cycles},
                             {"ops_per_sec", r.ops_per_sec},
                             {"tp_kbit_s", r.tp_kbit_s},
                             {"post_dominant", r.post_dominant}});
        }
        out << j.dump(2) << "\n";
    } else if (opt.format == "table") {
        std::ostringstream os;
        os << std::left << std::setw(8) << "num_me" << std::setw(12) << "ii" << std::setw(12) << "fill"
           << std::setw(16) << "ops/s" << "note\n";
        for (const auto& r : rows) {
            os << std::left << std::setw(8) << r.num_me << std::setw(12) << r.ii_cycles << std::setw(12)
               << r.fill_cycles << std::setw(16) << r.ops_per_sec << (r.post_dominant ? "pre/post bound" : "")
               << "\n";
        }
        out << os.str();
    } else {
        out << sim::sweep_csv(rows);
    }
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Paillier encryption with CRT and eCRT decryption, plus an accelerator pipeline model"};
    app.require_subcommand(1);
    Options opt;

    auto* keygen_cmd = app.add_subcommand("keygen", "Generate a key pair");
    keygen_cmd->add_option("--bits", opt.bits, "Modulus width N (even, >= 16)")->required();
    keygen_cmd->add_option("--seed", opt.seed, "Seed for deterministic generation");
    keygen_cmd->add_option("--out", opt.out_path, "Private key file (stdout when absent)");
    keygen_cmd->add_option("--pub-out", opt.pub_out_path, "Also write the public key here");
    keygen_cmd->add_option("--word-bits", opt.word_bits, "CIOS word size")->check(CLI::IsMember({8, 16, 32, 64}));

    auto* encrypt_cmd = app.add_subcommand("encrypt", "Encrypt messages");
    encrypt_cmd->add_option("--key", opt.key_path, "Public or private key file")->required();
    auto* msg_opt = encrypt_cmd->add_option("--message", opt.messages, "Message (repeatable)");
    auto* msg_in = encrypt_cmd->add_option("--in", opt.in_path, "File with one message per line");
    encrypt_cmd->add_flag("--hex", opt.hex, "Messages are hexadecimal instead of decimal");
    encrypt_cmd->add_option("--seed", opt.seed, "Seed for the encryption randomness");
    encrypt_cmd->add_option("--out", opt.out_path, "Ciphertext file (stdout when absent)");
    (void)msg_opt;
    (void)msg_in;

    auto* eval_cmd = app.add_subcommand("eval", "Homomorphic evaluation on ciphertext files");
    eval_cmd->add_option("--key", opt.key_path, "Public or private key file")->required();
    eval_cmd->add_option("--op", opt.op, "add (pairwise), sum (all lines) or scalar")
        ->check(CLI::IsMember({"add", "sum", "scalar"}));
    eval_cmd->add_option("--in", opt.in_path, "Ciphertext file")->required();
    eval_cmd->add_option("--in2", opt.in2_path, "Second ciphertext file for --op add");
    eval_cmd->add_option("--scalar", opt.scalar, "Scalar for --op scalar");
    eval_cmd->add_flag("--hex", opt.hex, "Scalar is hexadecimal");
    eval_cmd->add_option("--out", opt.out_path, "Result file (stdout when absent)");

    auto* decrypt_cmd = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
    decrypt_cmd->add_option("--key", opt.key_path, "Private key file")->required();
    decrypt_cmd->add_option("--in", opt.in_path, "Ciphertext file")->required();
    decrypt_cmd->add_option("--backend", opt.backend, "traditional, crt or ecrt")
        ->check(CLI::IsMember({"traditional", "crt", "ecrt"}));
    decrypt_cmd->add_flag("--hex", opt.hex, "Print plaintexts in hexadecimal");
    decrypt_cmd->add_option("--out", opt.out_path, "Plaintext file (stdout when absent)");

    auto* bench_cmd = app.add_subcommand("bench", "Compare postprocessing counts and wall clock of the backends");
    bench_cmd->add_option("--key", opt.key_path, "Private key file")->required();
    bench_cmd->add_option("--count", opt.count, "Number of ciphertexts (default 100)");
    bench_cmd->add_option("--seed", opt.seed, "Seed for messages and randomness (default 1)");
    bench_cmd->add_option("--format", opt.format, "table or json")->check(CLI::IsMember({"table", "json"}));

    auto* sim_cmd = app.add_subcommand("simulate", "Run a batch through the pipeline model");
    sim_cmd->add_option("--key-bits", opt.key_bits, "Key width when no key file is given");
    sim_cmd->add_option("--key", opt.key_path, "Private key file");
    sim_cmd->add_option("--num-me", opt.num_me, "ME units over both branches (even)");
    sim_cmd->add_option("--freq", opt.freq_mhz, "Clock in MHz");
    sim_cmd->add_option("--count", opt.count, "Ciphertexts in the batch (default 16)");
    sim_cmd->add_option("--seed", opt.seed, "Seed for key, messages and randomness (default 1)");
    sim_cmd->add_option("--format", opt.format, "json or table")->check(CLI::IsMember({"json", "table"}));

    auto* sweep_cmd = app.add_subcommand("sweep", "Pipeline timing over several ME counts");
    sweep_cmd->add_option("--key-bits", opt.key_bits, "Key width");
    sweep_cmd->add_option("--me-counts", opt.me_counts, "Comma separated ME counts")->delimiter(',');
    sweep_cmd->add_option("--freq", opt.freq_mhz, "Clock in MHz");
    sweep_cmd->add_option("--format", opt.format, "csv, table or json")
        ->check(CLI::IsMember({"csv", "table", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*keygen_cmd) {
            return cmd_keygen(opt, out);
        }
        if (*encrypt_cmd) {
            if (opt.messages.empty() && opt.in_path.empty()) {
                throw UsageError("encrypt needs --message or --in");
            }
            return cmd_encrypt(opt, out);
        }
        if (*eval_cmd) {
            return cmd_eval(opt, out);
        }
        if (*decrypt_cmd) {
            return cmd_decrypt(opt, out);
        }
        if (*bench_cmd) {
            return cmd_bench(opt, out);
        }
        if (*sim_cmd) {
            return cmd_simulate(opt, out);
        }
        if (opt.me_counts.empty()) {
            throw UsageError("--me-counts must list at least one count");
        }
        return cmd_sweep(opt, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCrypto;
    }
}

} // namespace ecrt::cli
