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

#ifndef ECRT_TOOLS_CLI_HPP
#define ECRT_TOOLS_CLI_HPP

#include <ostream>

namespace ecrt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCrypto = 2;

/// Runs the command line tool. Exit codes: 0 success, 1 usage error,
/// 2 cryptographic or validation error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ecrt::cli

#endif // ECRT_TOOLS_CLI_HPP
