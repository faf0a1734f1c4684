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

#include "rissec/scheduling.hpp"

#include "rissec/errors.hpp"

namespace rissec {

namespace {

std::size_t argmax_first(std::span<const double> values, const char* who)
{
    if (values.empty())
        throw DomainError(std::string(who) + ": empty candidate list");
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] > values[best])
            best = i;
    return best;
}

} // namespace

std::string_view to_string(SchemeId id)
{
    switch (id) {
    case SchemeId::FcrRs:
        return "fcr-rs";
    case SchemeId::FcrGcsiPfs:
        return "fcr-gcsi-pfs";
    case SchemeId::ScrRs:
        return "scr-rs";
    case SchemeId::ScrGcsiPfs:
        return "scr-gcsi-pfs";
    case SchemeId::ScrFcsiPfs:
        return "scr-fcsi-pfs";
    }
    return "unknown";
}

SchemeId parse_scheme(std::string_view name)
{
    for (SchemeId id : kAllSchemes)
        if (to_string(id) == name)
            return id;
    throw DomainError("unknown scheme '" + std::string(name) + "'");
}

std::size_t select_round_robin(std::size_t slot, std::size_t N)
{
    if (N == 0)
        throw DomainError("select_round_robin: N must be at least 1");
    return slot % N;
}

std::size_t select_gcsi_pfs(std::span<const double> s_values)
{
    return argmax_first(s_values, "select_gcsi_pfs");
}

std::size_t select_fcsi_pfs(std::span<const double> normalized_cascaded_gains)
{
    return argmax_first(normalized_cascaded_gains, "select_fcsi_pfs");
}

} // namespace rissec
