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

#ifndef ECRT_ECRT_HPP
#define ECRT_ECRT_HPP

#include <ecrt/bigint.hpp>
#include <ecrt/errors.hpp>
#include <ecrt/fraction.hpp>
#include <ecrt/mesa_sim.hpp>
#include <ecrt/modexp.hpp>
#include <ecrt/montgomery.hpp>
#include <ecrt/op_sink.hpp>
#include <ecrt/paillier.hpp>

#endif // ECRT_ECRT_HPP
