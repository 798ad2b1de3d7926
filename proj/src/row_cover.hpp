// Copyright 2026 The Atlas Authors
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

#ifndef ATLAS_SRC_ROW_COVER_HPP_
#define ATLAS_SRC_ROW_COVER_HPP_

#include <optional>

#include "atlas/solver.hpp"

namespace atlas {

// Row-orbit existence search. nullopt when the order exceeds 64 or the
// pattern count exceeds options.max_row_patterns. `nodes` receives the
// nodes spent either way.
std::optional<SearchOutcome> search_row_patterns(const Isotopism& theta, const SearchOptions& options,
                                                 std::uint64_t& nodes);

}  // namespace atlas

#endif  // ATLAS_SRC_ROW_COVER_HPP_
