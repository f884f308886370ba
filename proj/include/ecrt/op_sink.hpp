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

#ifndef ECRT_OP_SINK_HPP
#define ECRT_OP_SINK_HPP

#include <cstddef>

namespace ecrt {

enum class OpKind {
    mm,       ///< one Montgomery multiplication
    judgment, ///< one conditional subtraction of the modulus
};

struct OpEvent {
    OpKind kind;
    std::size_t width_bits; ///< bit width of the modulus the op ran against
};

/// Instrumentation hook. Arithmetic routines take an optional `OpSink*` and
/// report every multiplication and judgment they perform to it.
class OpSink {
public:
    virtual ~OpSink() = default;
    virtual void record(const OpEvent& event) = 0;
};

/// Plain per-kind counter.
class OpTally final : public OpSink {
public:
    void record(const OpEvent& event) override {
        if (event.kind == OpKind::mm) {
            ++mm_;
        } else {
            ++judgment_;
        }
    }

    std::size_t mm() const noexcept { return mm_; }
    std::size_t judgment() const noexcept { return judgment_; }

private:
    std::size_t mm_ = 0;
    std::size_t judgment_ = 0;
};

inline void emit(OpSink* sink, OpKind kind, std::size_t width_bits) {
    if (sink != nullptr) {
        sink->record(OpEvent{kind, width_bits});
    }
}

} // namespace ecrt

#endif // ECRT_OP_SINK_HPP
