// Copyright 2023 The Authors.
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

// Enumeration of all flat families on {0..n-1}. Subsets are decided from the
// top down; a subset equal to the intersection of the flats above it is forced
// to be a flat, and a new flat must pass the partition axiom against the flats
// already placed above it.

#ifndef MATROIDCAT_ENUMERATE_HPP_
#define MATROIDCAT_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "matroidcat/core.hpp"

namespace matroidcat {

struct FlatSearchOptions {
  // allow(X, is_flat) vetoes a decision. Empty means no constraint.
  std::function<bool(Mask, bool)> allow;
  // Maximum number of search nodes; 0 means unlimited.
  std::uint64_t node_budget = 0;
};

struct FlatSearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t emitted = 0;
  bool exhausted = true;  // false when the node budget ran out
};

// emit returns false to stop the search early.
FlatSearchStats EnumerateFlatFamilies(
    int n, const FlatSearchOptions& options,
    const std::function<bool(const std::vector<Mask>&)>& emit);

}  // namespace matroidcat

#endif  // MATROIDCAT_ENUMERATE_HPP_
