// SPDX-License-Identifier: Apache-2.0
//
// rissec - secrecy analysis of FC-RIS and UAV assisted multiuser downlinks
// Copyright (C) 2026 The rissec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <random>

namespace rissec {

// All samplers take a caller-owned engine; there is no global RNG state.
using Rng = std::mt19937_64;

// Deterministic substream for block `stream` of a run seeded with `seed`.
// Streams depend only on (seed, stream), never on how work is partitioned.
inline Rng make_stream(std::uint64_t seed, std::uint64_t stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      0x5253u};
    return Rng(seq);
}

// Uniform draw on the open interval (0, 1].
inline double uniform_open0(Rng& rng)
{
    return 1.0 - std::generate_canonical<double, 53>(rng);
}

} // namespace rissec
