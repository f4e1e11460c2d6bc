// Copyright 2026 markov-gauge contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MGAUGE_SEEDING_HPP
#define MGAUGE_SEEDING_HPP

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace mgauge {

// All randomness in the toolkit flows from a single user seed. Sub-seeds are
// derived by stable hashing of (seed, purpose, indices) so that results are
// independent of evaluation order and worker scheduling.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t hash_bytes(std::string_view bytes);
std::uint64_t derive_seed(std::uint64_t base, std::string_view purpose,
                          std::uint64_t a = 0, std::uint64_t b = 0);

// Small deterministic generator. We avoid <random> distributions because
// their output is implementation-defined; this one produces identical
// streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    // Uniform on [0, 1).
    double next_double();
    // Standard normal via Box-Muller; one spare value is cached.
    double next_normal();
    // Uniform on {0, 1, ..., n-1}; n must be positive.
    std::uint32_t next_below(std::uint32_t n);
    bool next_bool();

  private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// k distinct indices drawn uniformly from {0, ..., n-1}, returned ascending.
std::vector<int> sample_without_replacement(int n, int k, Rng& rng);

// Runs fn(i) for i in [0, count). With workers <= 1 this is a plain loop.
// Callers must write results into per-index slots; completion order is not
// specified.
void parallel_for(int count, int workers, const std::function<void(int)>& fn);

// Worker count after applying the MARKOV_GAUGE_THREADS override.
int resolve_workers(int requested);

}  // namespace mgauge

#endif
