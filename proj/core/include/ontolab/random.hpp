// Copyright 2026 The ontolab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ONTOLAB_RANDOM_HPP
#define ONTOLAB_RANDOM_HPP

#include <cstdint>
#include <random>

namespace ontolab {

/// The random stream every sampler draws from. Streams are never shared
/// between workers.
using RandomStream = std::mt19937_64;

/// One step of the splitmix64 generator (Steele, Lea & Flood 2014).
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of substream `index` of a master seed.
///
/// seed_k = splitmix64(splitmix64(master) ^ splitmix64(index + 0x9E3779B97F4A7C15))
///
/// The engine gives batch k the stream `make_stream(master, k)`, so a tally
/// depends only on (master, k) and never on which worker ran the batch.
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index);

RandomStream make_stream(std::uint64_t master, std::uint64_t index);

}  // namespace ontolab

#endif  // ONTOLAB_RANDOM_HPP
