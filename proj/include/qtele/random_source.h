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

#ifndef QTELE_RANDOM_SOURCE_H
#define QTELE_RANDOM_SOURCE_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qtele {

/// Counter-based pseudo random stream keyed by (seed, stream_id).
///
/// The k-th draw is a pure function of (seed, stream_id, k), so any shot can be
/// regenerated in isolation. Measurement coin flips can optionally be taken from
/// a forced script instead; this is how the branch explorer walks every outcome
/// of every random measurement.
class RandomSource {
   public:
    RandomSource(uint64_t seed = 0, uint64_t stream_id = 0);

    /// Stream identifier for shot `shot_index` of input `input_index`.
    static uint64_t shot_stream(uint64_t input_index, uint64_t shot_index);

    uint64_t seed() const {
        return seed_;
    }
    uint64_t stream_id() const {
        return stream_id_;
    }
    uint64_t draws() const {
        return counter_;
    }

    uint64_t next_u64();
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform integer in [0, n). n must be positive.
    uint64_t below(uint64_t n);
    /// True with probability p. p <= 0 and p >= 1 consume no draw.
    bool bernoulli(double p);

    /// Fair coin used for random measurement outcomes.
    bool coin();

    /// Replaces coin() results by `script`; once the script is exhausted coin()
    /// returns false. Noise draws are unaffected.
    void force_coins(std::span<const uint8_t> script);
    void clear_forced_coins();
    bool coins_forced() const {
        return forced_;
    }
    /// Number of coin() calls since construction or the last force_coins().
    size_t coins_drawn() const {
        return coins_drawn_;
    }

   private:
    uint64_t seed_;
    uint64_t stream_id_;
    uint64_t key_;
    uint64_t counter_ = 0;
    bool forced_ = false;
    std::vector<uint8_t> script_;
    size_t coins_drawn_ = 0;
};

}  // namespace qtele

#endif
