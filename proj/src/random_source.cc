// Copyright 2026 The qtele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qtele/random_source.h"

#include <stdexcept>

namespace qtele {

namespace {

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

RandomSource::RandomSource(uint64_t seed, uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), key_(mix64(mix64(seed + kGolden) ^ (stream_id * kGolden + 0x632BE59BD9B4E019ULL))) {
}

uint64_t RandomSource::shot_stream(uint64_t input_index, uint64_t shot_index) {
    return (input_index << 48) ^ shot_index;
}

uint64_t RandomSource::next_u64() {
    counter_++;
    return mix64(key_ + counter_ * kGolden);
}

double RandomSource::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

uint64_t RandomSource::below(uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("below(0)");
    }
    uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
    while (true) {
        uint64_t v = next_u64();
        if (v < limit) {
            return v % n;
        }
    }
}

bool RandomSource::bernoulli(double p) {
    if (p <= 0) {
        return false;
    }
    if (p >= 1) {
        return true;
    }
    return uniform() < p;
}

bool RandomSource::coin() {
    size_t k = coins_drawn_++;
    if (forced_) {
        return k < script_.size() && script_[k] != 0;
    }
    return next_u64() >> 63;
}

void RandomSource::force_coins(std::span<const uint8_t> script) {
    forced_ = true;
    script_.assign(script.begin(), script.end());
    coins_drawn_ = 0;
}

void RandomSource::clear_forced_coins() {
    forced_ = false;
    script_.clear();
}

}  // namespace qtele
