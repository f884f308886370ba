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

// Encrypt two numbers, add them under encryption, decrypt with each backend
// and print the postprocessing counts of CRT-base and eCRT.

#include <ecrt/ecrt.hpp>

#include <iostream>

int main() {
    ecrt::DefaultRng rng(2026);
    const ecrt::KeyPair kp = ecrt::keygen(512, rng);
    const auto key = ecrt::DecryptionKey::from(kp);

    const auto c1 = ecrt::encrypt(key.pk, ecrt::Nat(1200), rng);
    const auto c2 = ecrt::encrypt(key.pk, ecrt::Nat(34), rng);
    const auto sum = ecrt::hom_add(key.pk, c1, c2);
    const auto scaled = ecrt::hom_scalar_mul(key.pk, sum, ecrt::Nat(3));

    for (const auto backend : {ecrt::Backend::traditional, ecrt::Backend::crt, ecrt::Backend::ecrt}) {
        std::cout << "3 * (1200 + 34) = " << key.decrypt(scaled, backend).to_dec() << "\n";
    }

    ecrt::OpCounter crt_ops(key.pk.bits);
    ecrt::OpCounter ecrt_ops(key.pk.bits);
    key.decrypt(scaled, ecrt::Backend::crt, &crt_ops);
    key.decrypt(scaled, ecrt::Backend::ecrt, &ecrt_ops);
    const auto cmp = ecrt::compare_reports(ecrt::op_report(crt_ops), ecrt::op_report(ecrt_ops));
    std::cout << "CRT-base: " << crt_ops.shared_weighted_mm().to_string(2) << " mm, "
              << crt_ops.shared_weighted_judgment().to_string(2) << " judgments\n";
    std::cout << "eCRT:     " << ecrt_ops.shared_weighted_mm().to_string(2) << " mm, "
              << ecrt_ops.shared_weighted_judgment().to_string(2) << " judgments\n";
    std::cout << "reduction: " << cmp.mm_reduction_percent.to_string(2) << "% mm, "
              << cmp.judgment_reduction_percent.to_string(2) << "% judgments\n";
    return 0;
}
