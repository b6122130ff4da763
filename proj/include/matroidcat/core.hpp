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

// Finite matroids on at most 16 elements. Subsets are bitmasks over element
// indices. The flat family is the canonical representation; rank, closure and
// independence are cached tables.

#ifndef MATROIDCAT_CORE_HPP_
#define MATROIDCAT_CORE_HPP_

#include <bit>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace matroidcat {

using Mask = std::uint32_t;

inline constexpr int kMaxGround = 16;

inline int Popcount(Mask m) { return std::popcount(m); }
inline bool IsSubset(Mask a, Mask b) { return (a & ~b) == 0; }
inline Mask Bit(int i) { return Mask{1} << i; }
inline Mask FullMask(int n) { return n == 0 ? 0 : (Mask{1} << n) - 1; }

// Sorts by (popcount, value) and removes duplicates.
void CanonicalSort(std::vector<Mask>& family);

// Calls fn(sub) for every subset of mask, starting from 0.
template <typename Fn>
void ForEachSubset(Mask mask, Fn&& fn) {
  Mask sub = 0;
  while (true) {
    fn(sub);
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  // Labels "0", "1", ..., "n-1".
  static GroundSet Range(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  Mask full() const { return FullMask(size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Index of label, or -1.
  int find(std::string_view label) const;
  // Index of label; throws std::invalid_argument when absent.
  int index(std::string_view label) const;
  Mask mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Mask m) const;
  // "{a,b}".
  std::string format(Mask m) const;
  // Concatenated labels in index order, used as rank-table keys.
  std::string key(Mask m) const;

  bool operator==(const GroundSet& other) const = default;

 private:
  std::vector<std::string> labels_;
};

class MatroidError : public std::runtime_error {
 public:
  MatroidError(std::string kind, std::string reason, std::string detail)
      : std::runtime_error(kind + "(" + reason + "): " + detail),
        kind_(std::move(kind)),
        reason_(std::move(reason)),
        detail_(std::move(detail)) {}
  const std::string& kind() const { return kind_; }
  const std::string& reason() const { return reason_; }
  // The witness subsets, formatted.
  const std::string& detail() const { return detail_; }

 private:
  std::string kind_;
  std::string reason_;
  std::string detail_;
};

class InvalidFlats : public MatroidError {
 public:
  InvalidFlats(std::string reason, std::string detail)
      : MatroidError("InvalidFlats", std::move(reason), std::move(detail)) {}
};

class InvalidIndependents : public MatroidError {
 public:
  InvalidIndependents(std::string reason, std::string detail)
      : MatroidError("InvalidIndependents", std::move(reason),
                     std::move(detail)) {}
};

class InvalidRank : public MatroidError {
 public:
  InvalidRank(std::string reason, std::string detail)
      : MatroidError("InvalidRank", std::move(reason), std::move(detail)) {}
};

// Immutable; copies share the cached tables.
class Matroid {
 public:
  // The empty matroid.
  Matroid();

  static Matroid FromFlats(GroundSet ground, std::vector<Mask> flats);
  static Matroid FromIndependents(GroundSet ground,
                                  std::vector<Mask> independents);
  // table[X] for every X in [0, 2^n).
  static Matroid FromRank(GroundSet ground, const std::vector<int>& table);

  static Matroid Free(GroundSet ground);
  static Matroid Cofree(GroundSet ground);
  static Matroid Uniform(int r, GroundSet ground);

  const GroundSet& ground() const { return data_->ground; }
  int size() const { return ground().size(); }
  Mask full() const { return ground().full(); }

  const std::vector<Mask>& flats() const { return data_->flats; }
  const std::vector<Mask>& independents() const { return data_->independents; }
  const std::vector<Mask>& bases() const { return data_->bases; }
  std::vector<Mask> hyperplanes() const;
  std::vector<Mask> circuits() const;
  std::vector<int> rank_table() const;

  int rank(Mask x) const { return data_->rank[x]; }
  int rank() const { return rank(full()); }
  Mask closure(Mask x) const { return data_->closure[x]; }
  bool is_flat(Mask x) const { return closure(x) == x; }
  bool is_independent(Mask x) const { return rank(x) == Popcount(x); }
  Mask loops() const { return closure(0); }

  // Same structure on a new ground set of equal size.
  Matroid relabeled(GroundSet ground) const;
  // Deletion of the complement of keep; elements keep their relative order.
  Matroid restriction(Mask keep) const;

  // Equal labels and equal flat families.
  bool operator==(const Matroid& other) const;
  // Equal flat families, labels ignored.
  bool same_structure(const Matroid& other) const;

  std::string describe() const;

 private:
  struct Data {
    GroundSet ground;
    std::vector<Mask> flats;
    std::vector<Mask> independents;
    std::vector<Mask> bases;
    std::vector<std::uint8_t> rank;
    std::vector<Mask> closure;
  };
  explicit Matroid(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  // Derives every cache from a rank table already known to be valid.
  static Matroid FromValidRank(GroundSet ground,
                               std::vector<std::uint8_t> rank);

  std::shared_ptr<const Data> data_;
};

// A matroid with a distinguished loop.
class PointedMatroid {
 public:
  PointedMatroid(Matroid base, int point);
  PointedMatroid(Matroid base, std::string_view point_label);

  const Matroid& base() const { return base_; }
  int point() const { return point_; }
  Mask point_mask() const { return Bit(point_); }

  bool operator==(const PointedMatroid& other) const = default;

 private:
  Matroid base_;
  int point_;
};

struct Classification {
  Mask loops = 0;
  Mask isthmuses = 0;
  std::vector<Mask> parallel_classes;
  bool is_simple = false;
  bool is_loopless = false;
  bool is_free = false;
  bool is_cofree = false;
};

Classification Classify(const Matroid& m);
// Loop and simplicity conditions ignore the point.
Classification Classify(const PointedMatroid& m);

enum class FibreOrder { kFiner, kCoarser, kEqual, kIncomparable,
                        kDifferentGround };

FibreOrder FibreCompare(const Matroid& m, const Matroid& n);
std::string ToString(FibreOrder order);

// Validators returning the failed axiom, or "" when the input is valid.
std::string CheckFlats(int n, const std::vector<Mask>& flats);
std::string CheckIndependents(int n, const std::vector<Mask>& independents);
std::string CheckRank(int n, const std::vector<int>& table);

// Builds a matroid from labelled flats, e.g. MakeMatroid({"a", "b"},
// {{}, {"a"}, {"b"}, {"a", "b"}}).
Matroid MakeMatroid(std::vector<std::string> ground,
                    const std::vector<std::vector<std::string>>& flats);
PointedMatroid MakePointed(std::vector<std::string> ground,
                           const std::vector<std::vector<std::string>>& flats,
                           std::string_view point);

// Every matroid on the ground set {0..n-1}, in canonical flat-family order.
std::vector<Matroid> AllMatroids(int n);
std::vector<Matroid> AllMatroids(const GroundSet& ground);

}  // namespace matroidcat

#endif  // MATROIDCAT_CORE_HPP_
