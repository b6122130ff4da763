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

#include "matroidcat/enumerate.hpp"

#include <algorithm>

namespace matroidcat {

namespace {

class FlatSearch {
 public:
  FlatSearch(int n, const FlatSearchOptions& options,
             const std::function<bool(const std::vector<Mask>&)>& emit)
      : n_(n), full_(FullMask(n)), options_(options), emit_(emit) {
    for (Mask x = 0; x <= full_; ++x) order_.push_back(x);
    std::sort(order_.begin(), order_.end(), [](Mask a, Mask b) {
      int pa = Popcount(a), pb = Popcount(b);
      return pa != pb ? pa > pb : a > b;
    });
  }

  // Depth-first over order_ with an explicit stack; a ground set of 16
  // elements gives depth 2^16.
  FlatSearchStats Run() {
    struct Frame {
      size_t pos;
      int stage;
      bool forced;
    };
    std::vector<Frame> stack{{0, 0, false}};
    while (!stack.empty() && !stopped_) {
      const size_t top = stack.size() - 1;
      const size_t pos = stack[top].pos;
      if (stack[top].stage == 0) {
        ++stats_.nodes;
        if (options_.node_budget && stats_.nodes > options_.node_budget) {
          stats_.exhausted = false;
          stopped_ = true;
          break;
        }
        if (pos == order_.size()) {
          std::vector<Mask> family = flats_;
          CanonicalSort(family);
          ++stats_.emitted;
          if (!emit_(family)) stopped_ = true;
          stack.pop_back();
          continue;
        }
        const Mask x = order_[pos];
        Mask above = full_;
        for (Mask f : flats_) {
          if (IsSubset(x, f)) above &= f;
        }
        stack[top].forced = above == x;
        stack[top].stage = 1;
        if (Allowed(x, true) && PartitionHolds(x)) {
          flats_.push_back(x);
          stack.push_back({pos + 1, 0, false});
          continue;
        }
        stack[top].stage = 2;
      }
      if (stack[top].stage == 1) {
        flats_.pop_back();
        stack[top].stage = 2;
      }
      if (stack[top].stage == 2) {
        stack[top].stage = 3;
        if (!stack[top].forced && Allowed(order_[pos], false)) {
          stack.push_back({pos + 1, 0, false});
          continue;
        }
      }
      stack.pop_back();
    }
    return stats_;
  }

 private:
  bool Allowed(Mask x, bool flat) const {
    return !options_.allow || options_.allow(x, flat);
  }

  // The minimal placed flats above x must partition the complement of x.
  // flats_ is in decreasing size, so a reverse scan meets every flat after
  // the minimal flats below it.
  bool PartitionHolds(Mask x) const {
    Mask covered = 0;
    minimal_.clear();
    for (auto it = flats_.rbegin(); it != flats_.rend(); ++it) {
      const Mask f = *it;
      if (!IsSubset(x, f) || f == x) continue;
      bool minimal = true;
      for (Mask g : minimal_) {
        if (IsSubset(g, f)) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
      Mask part = f & ~x;
      if (covered & part) return false;
      covered |= part;
      minimal_.push_back(f);
    }
    return covered == (full_ & ~x);
  }

  int n_;
  Mask full_;
  const FlatSearchOptions& options_;
  const std::function<bool(const std::vector<Mask>&)>& emit_;
  std::vector<Mask> order_;
  std::vector<Mask> flats_;
  mutable std::vector<Mask> minimal_;
  FlatSearchStats stats_;
  bool stopped_ = false;
};

}  // namespace

FlatSearchStats EnumerateFlatFamilies(
    int n, const FlatSearchOptions& options,
    const std::function<bool(const std::vector<Mask>&)>& emit) {
  if (n < 0 || n > kMaxGround) {
    throw std::invalid_argument("ground size out of range");
  }
  return FlatSearch(n, options, emit).Run();
}

}  // namespace matroidcat
