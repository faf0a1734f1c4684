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

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>

namespace rissec {

enum class SchemeId {
    FcrRs,
    FcrGcsiPfs,
    ScrRs,
    ScrGcsiPfs,
    ScrFcsiPfs,
};

enum class Selection {
    RoundRobin,
    GcsiPfs,
    FcsiPfs,
};

inline constexpr std::array<SchemeId, 5> kAllSchemes = {SchemeId::FcrRs, SchemeId::FcrGcsiPfs, SchemeId::ScrRs,
                                                        SchemeId::ScrGcsiPfs, SchemeId::ScrFcsiPfs};

constexpr bool is_fully_connected(SchemeId id)
{
    return id == SchemeId::FcrRs || id == SchemeId::FcrGcsiPfs;
}

constexpr Selection selection_of(SchemeId id)
{
    switch (id) {
    case SchemeId::FcrRs:
    case SchemeId::ScrRs:
        return Selection::RoundRobin;
    case SchemeId::FcrGcsiPfs:
    case SchemeId::ScrGcsiPfs:
        return Selection::GcsiPfs;
    case SchemeId::ScrFcsiPfs:
        return Selection::FcsiPfs;
    }
    return Selection::RoundRobin;
}

// CLI spelling, e.g. "fcr-gcsi-pfs".
std::string_view to_string(SchemeId id);

// Throws DomainError for unknown names.
SchemeId parse_scheme(std::string_view name);

std::size_t select_round_robin(std::size_t slot, std::size_t N);

// Argmax with lowest-index tie-break; empty input throws DomainError.
std::size_t select_gcsi_pfs(std::span<const double> s_values);
std::size_t select_fcsi_pfs(std::span<const double> normalized_cascaded_gains);

} // namespace rissec
