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

#include "matroidcat/core.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "matroidcat/enumerate.hpp"

namespace matroidcat {

void CanonicalSort(std::vector<Mask>& family) {
  std::sort(family.begin(), family.end(), [](Mask a, Mask b) {
    int pa = Popcount(a), pb = Popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<size_t>(kMaxGround)) {
    throw std::invalid_argument("ground set has more than 16 elements");
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw std::invalid_argument("empty element label");
    if (!seen.insert(l).second) {
      throw std::invalid_argument("duplicate element label '" + l + "'");
    }
  }
}

GroundSet GroundSet::Range(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

int GroundSet::find(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return -1;
}

int GroundSet::index(std::string_view label) const {
  int i = find(label);
  if (i < 0) {
    throw std::invalid_argument("unknown element '" + std::string(label) + "'");
  }
  return i;
}

Mask GroundSet::mask_of(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= Bit(index(l));
  return m;
}

std::vector<std::string> GroundSet::labels_of(Mask m) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i) {
    if (m & Bit(i)) out.push_back(labels_[i]);
  }
  return out;
}

std::string GroundSet::format(Mask m) const {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (!(m & Bit(i))) continue;
    if (!first) s += ",";
    s += labels_[i];
    first = false;
  }
  return s + "}";
}

std::string GroundSet::key(Mask m) const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (m & Bit(i)) s += labels_[i];
  }
  return s;
}

namespace {

struct Violation {
  std::string reason;
  Mask a = 0;
  Mask b = 0;
};

// cl[X] = intersection of the members of the family containing X.
std::vector<Mask> IntersectionClosure(int n, const std::vector<Mask>& family) {
  const Mask full = FullMask(n);
  std::vector<Mask> cl(size_t{1} << n, full);
  for (Mask f : family) cl[f] = f;
  for (int i = 0; i < n; ++i) {
    for (Mask x = 0; x <= full; ++x) {
      if (!(x & Bit(i))) cl[x] &= cl[x | Bit(i)];
    }
  }
  return cl;
}

void CheckMembers(int n, const std::vector<Mask>& family) {
  if (n < 0 || n > kMaxGround) {
    throw std::invalid_argument("ground size out of range");
  }
  for (Mask m : family) {
    if (!IsSubset(m, FullMask(n))) {
      throw std::invalid_argument("family member outside the ground set");
    }
  }
}

Violation FlatViolation(int n, const std::vector<Mask>& flats,
                        std::vector<Mask>* closure) {
  CheckMembers(n, flats);
  const Mask full = FullMask(n);
  std::vector<char> member(size_t{1} << n, 0);
  for (Mask f : flats) member[f] = 1;
  if (!member[full]) return {"missing-top", full, 0};
  std::vector<Mask> cl = IntersectionClosure(n, flats);
  for (Mask x = 0; x <= full; ++x) {
    if (!member[cl[x]]) {
      // Find two members whose intersection is missing.
      for (Mask f : flats) {
        if (!IsSubset(x, f)) continue;
        for (Mask g : flats) {
          if (IsSubset(x, g) && !member[f & g]) {
            return {"not-intersection-closed", f, g};
          }
        }
      }
      return {"not-intersection-closed", x, 0};
    }
  }
  for (Mask f : flats) {
    for (int i = 0; i < n; ++i) {
      if (f & Bit(i)) continue;
      Mask g = cl[f | Bit(i)];
      for (int j = 0; j < n; ++j) {
        if ((g & ~f & Bit(j)) && cl[f | Bit(j)] != g) {
          return {"partition-violated", f, g};
        }
      }
    }
  }
  if (closure) *closure = std::move(cl);
  return {};
}

std::vector<std::uint8_t> RankFromClosure(int n, const std::vector<Mask>& cl) {
  std::vector<std::uint8_t> rank(size_t{1} << n, 0);
  for (Mask x = 1; x <= FullMask(n); ++x) {
    Mask low = x & (~x + 1);
    Mask rest = x & ~low;
    rank[x] = rank[rest] + ((cl[rest] & low) ? 0 : 1);
  }
  return rank;
}

// Size of the largest member of a downward-closed family inside each X.
std::vector<std::uint8_t> RankFromIndependents(
    int n, const std::vector<char>& member) {
  std::vector<std::uint8_t> rank(size_t{1} << n, 0);
  for (Mask x = 1; x <= FullMask(n); ++x) {
    if (member[x]) {
      rank[x] = static_cast<std::uint8_t>(Popcount(x));
      continue;
    }
    std::uint8_t best = 0;
    for (int i = 0; i < n; ++i) {
      if (x & Bit(i)) best = std::max(best, rank[x & ~Bit(i)]);
    }
    rank[x] = best;
  }
  return rank;
}

Violation IndependentViolation(int n, const std::vector<Mask>& family,
                               std::vector<std::uint8_t>* rank_out) {
  CheckMembers(n, family);
  std::vector<char> member(size_t{1} << n, 0);
  for (Mask m : family) member[m] = 1;
  if (family.empty() || !member[0]) return {"empty-family", 0, 0};
  for (Mask m : family) {
    for (int i = 0; i < n; ++i) {
      if ((m & Bit(i)) && !member[m & ~Bit(i)]) {
        return {"not-downward-closed", m, m & ~Bit(i)};
      }
    }
  }
  std::vector<std::uint8_t> rank = RankFromIndependents(n, member);
  // Augmentation holds iff each independent I is a largest independent
  // subset of I together with every element that cannot extend it.
  for (Mask m : family) {
    Mask span = m;
    for (int i = 0; i < n; ++i) {
      if (!(m & Bit(i)) && !member[m | Bit(i)]) span |= Bit(i);
    }
    if (rank[span] != Popcount(m)) {
      Mask larger = 0;
      ForEachSubset(span, [&](Mask s) {
        if (member[s] && Popcount(s) == rank[span]) larger = s;
      });
      return {"augmentation-violated", m, larger};
    }
  }
  if (rank_out) *rank_out = std::move(rank);
  return {};
}

Violation RankViolation(int n, const std::vector<int>& table) {
  if (n < 0 || n > kMaxGround) {
    throw std::invalid_argument("ground size out of range");
  }
  const Mask full = FullMask(n);
  if (table.size() != (size_t{1} << n)) {
    throw std::invalid_argument("rank table must have 2^n entries");
  }
  if (table[0] != 0) return {"out-of-bounds", 0, 0};
  for (Mask x = 0; x <= full; ++x) {
    if (table[x] < 0 || table[x] > n) return {"out-of-bounds", x, 0};
  }
  for (Mask x = 1; x <= full; ++x) {
    for (int i = 0; i < n; ++i) {
      if ((x & Bit(i)) && table[x & ~Bit(i)] > table[x]) {
        return {"non-monotone", x & ~Bit(i), x};
      }
    }
  }
  for (Mask x = 1; x <= full; ++x) {
    for (int i = 0; i < n; ++i) {
      if ((x & Bit(i)) && table[x] - table[x & ~Bit(i)] > 1) {
        return {"non-unit-increase", x & ~Bit(i), x};
      }
    }
  }
  // Local submodularity is equivalent to submodularity for monotone tables.
  for (Mask x = 0; x <= full; ++x) {
    for (int i = 0; i < n; ++i) {
      if (x & Bit(i)) continue;
      for (int j = i + 1; j < n; ++j) {
        if (x & Bit(j)) continue;
        Mask xi = x | Bit(i), xj = x | Bit(j);
        if (table[xi] + table[xj] < table[xi | xj] + table[x]) {
          return {"non-submodular", xi, xj};
        }
      }
    }
  }
  return {};
}

std::string Detail(const GroundSet& g, const Violation& v) {
  return g.format(v.a) + " " + g.format(v.b);
}

}  // namespace

std::string CheckFlats(int n, const std::vector<Mask>& flats) {
  return FlatViolation(n, flats, nullptr).reason;
}

std::string CheckIndependents(int n, const std::vector<Mask>& independents) {
  return IndependentViolation(n, independents, nullptr).reason;
}

std::string CheckRank(int n, const std::vector<int>& table) {
  return RankViolation(n, table).reason;
}

Matroid::Matroid() : Matroid(FromValidRank(GroundSet(), {0})) {}

Matroid Matroid::FromValidRank(GroundSet ground,
                               std::vector<std::uint8_t> rank) {
  auto data = std::make_shared<Data>();
  const int n = ground.size();
  const Mask full = ground.full();
  data->closure.assign(size_t{1} << n, 0);
  for (Mask x = 0; x <= full; ++x) {
    Mask c = x;
    for (int i = 0; i < n; ++i) {
      if (!(x & Bit(i)) && rank[x | Bit(i)] == rank[x]) c |= Bit(i);
    }
    data->closure[x] = c;
    if (c == x) data->flats.push_back(x);
    if (rank[x] == Popcount(x)) data->independents.push_back(x);
  }
  for (Mask x : data->independents) {
    if (rank[x] == rank[full]) data->bases.push_back(x);
  }
  CanonicalSort(data->flats);
  CanonicalSort(data->independents);
  CanonicalSort(data->bases);
  data->rank = std::move(rank);
  data->ground = std::move(ground);
  return Matroid(std::move(data));
}

Matroid Matroid::FromFlats(GroundSet ground, std::vector<Mask> flats) {
  std::vector<Mask> cl;
  Violation v = FlatViolation(ground.size(), flats, &cl);
  if (!v.reason.empty()) throw InvalidFlats(v.reason, Detail(ground, v));
  int n = ground.size();
  return FromValidRank(std::move(ground), RankFromClosure(n, cl));
}

Matroid Matroid::FromIndependents(GroundSet ground,
                                  std::vector<Mask> independents) {
  std::vector<std::uint8_t> rank;
  Violation v = IndependentViolation(ground.size(), independents, &rank);
  if (!v.reason.empty()) throw InvalidIndependents(v.reason, Detail(ground, v));
  return FromValidRank(std::move(ground), std::move(rank));
}

Matroid Matroid::FromRank(GroundSet ground, const std::vector<int>& table) {
  Violation v = RankViolation(ground.size(), table);
  if (!v.reason.empty()) throw InvalidRank(v.reason, Detail(ground, v));
  std::vector<std::uint8_t> rank(table.begin(), table.end());
  return FromValidRank(std::move(ground), std::move(rank));
}

Matroid Matroid::Free(GroundSet ground) {
  int n = ground.size();
  return Uniform(n, std::move(ground));
}

Matroid Matroid::Cofree(GroundSet ground) {
  return Uniform(0, std::move(ground));
}

Matroid Matroid::Uniform(int r, GroundSet ground) {
  if (r < 0 || r > ground.size()) {
    throw std::invalid_argument("uniform rank out of range");
  }
  std::vector<std::uint8_t> rank(size_t{1} << ground.size());
  for (Mask x = 0; x < rank.size(); ++x) {
    rank[x] = static_cast<std::uint8_t>(std::min(Popcount(x), r));
  }
  return FromValidRank(std::move(ground), std::move(rank));
}

std::vector<Mask> Matroid::hyperplanes() const {
  std::vector<Mask> out;
  for (Mask f : flats()) {
    if (rank(f) + 1 == rank()) out.push_back(f);
  }
  return out;
}

std::vector<Mask> Matroid::circuits() const {
  std::vector<Mask> out;
  for (Mask x = 1; x <= full(); ++x) {
    if (is_independent(x)) continue;
    bool minimal = true;
    for (int i = 0; i < size() && minimal; ++i) {
      if ((x & Bit(i)) && !is_independent(x & ~Bit(i))) minimal = false;
    }
    if (minimal) out.push_back(x);
  }
  CanonicalSort(out);
  return out;
}

std::vector<int> Matroid::rank_table() const {
  return std::vector<int>(data_->rank.begin(), data_->rank.end());
}

Matroid Matroid::relabeled(GroundSet ground) const {
  if (ground.size() != size()) {
    throw std::invalid_argument("relabeling must preserve size");
  }
  return FromValidRank(std::move(ground), data_->rank);
}

Matroid Matroid::restriction(Mask keep) const {
  std::vector<int> index;
  std::vector<std::string> labels;
  for (int i = 0; i < size(); ++i) {
    if (keep & Bit(i)) {
      index.push_back(i);
      labels.push_back(ground().label(i));
    }
  }
  int k = static_cast<int>(index.size());
  std::vector<std::uint8_t> rank(std::size_t{1} << k);
  for (Mask x = 0; x < rank.size(); ++x) {
    Mask y = 0;
    for (int j = 0; j < k; ++j) {
      if (x & Bit(j)) y |= Bit(index[j]);
    }
    rank[x] = data_->rank[y];
  }
  return FromValidRank(GroundSet(std::move(labels)), std::move(rank));
}

bool Matroid::operator==(const Matroid& other) const {
  return ground() == other.ground() && flats() == other.flats();
}

bool Matroid::same_structure(const Matroid& other) const {
  return size() == other.size() && flats() == other.flats();
}

std::string Matroid::describe() const {
  std::ostringstream out;
  out << "ground " << ground().format(full()) << ", rank " << rank()
      << ", flats [";
  for (size_t i = 0; i < flats().size(); ++i) {
    if (i) out << " ";
    out << ground().format(flats()[i]);
  }
  out << "]";
  return out.str();
}

PointedMatroid::PointedMatroid(Matroid base, int point)
    : base_(std::move(base)), point_(point) {
  if (point_ < 0 || point_ >= base_.size()) {
    throw std::invalid_argument("point outside the ground set");
  }
  if (!(base_.loops() & Bit(point_))) {
    throw std::invalid_argument("point is not a loop");
  }
}

PointedMatroid::PointedMatroid(Matroid base, std::string_view point_label)
    : PointedMatroid(base, base.ground().index(point_label)) {}

namespace {

Classification ClassifyIgnoring(const Matroid& m, Mask ignore) {
  Classification c;
  c.loops = m.loops();
  c.isthmuses = m.full();
  for (Mask b : m.bases()) c.isthmuses &= b;
  for (int i = 0; i < m.size(); ++i) {
    if (c.loops & Bit(i)) continue;
    c.parallel_classes.push_back(m.closure(Bit(i)) & ~c.loops);
  }
  CanonicalSort(c.parallel_classes);
  c.is_loopless = (c.loops & ~ignore) == 0;
  c.is_simple = c.is_loopless;
  for (Mask p : c.parallel_classes) {
    if (Popcount(p) > 1) c.is_simple = false;
  }
  c.is_free = m.rank() == Popcount(m.full() & ~ignore);
  c.is_cofree = m.rank() == 0;
  return c;
}

}  // namespace

Classification Classify(const Matroid& m) { return ClassifyIgnoring(m, 0); }

Classification Classify(const PointedMatroid& m) {
  return ClassifyIgnoring(m.base(), m.point_mask());
}

FibreOrder FibreCompare(const Matroid& m, const Matroid& n) {
  if (!(m.ground() == n.ground())) return FibreOrder::kDifferentGround;
  const auto& fm = m.flats();
  const auto& fn = n.flats();
  bool m_in_n = std::includes(fn.begin(), fn.end(), fm.begin(), fm.end(),
                              [](Mask a, Mask b) {
                                int pa = Popcount(a), pb = Popcount(b);
                                return pa != pb ? pa < pb : a < b;
                              });
  bool n_in_m = std::includes(fm.begin(), fm.end(), fn.begin(), fn.end(),
                              [](Mask a, Mask b) {
                                int pa = Popcount(a), pb = Popcount(b);
                                return pa != pb ? pa < pb : a < b;
                              });
  if (m_in_n && n_in_m) return FibreOrder::kEqual;
  if (n_in_m) return FibreOrder::kFiner;
  if (m_in_n) return FibreOrder::kCoarser;
  return FibreOrder::kIncomparable;
}

std::string ToString(FibreOrder order) {
  switch (order) {
    case FibreOrder::kFiner: return "finer";
    case FibreOrder::kCoarser: return "coarser";
    case FibreOrder::kEqual: return "equal";
    case FibreOrder::kIncomparable: return "incomparable";
    case FibreOrder::kDifferentGround: return "different-ground";
  }
  return "";
}

Matroid MakeMatroid(std::vector<std::string> ground,
                    const std::vector<std::vector<std::string>>& flats) {
  GroundSet g(std::move(ground));
  std::vector<Mask> masks;
  for (const auto& f : flats) masks.push_back(g.mask_of(f));
  return Matroid::FromFlats(std::move(g), std::move(masks));
}

PointedMatroid MakePointed(std::vector<std::string> ground,
                           const std::vector<std::vector<std::string>>& flats,
                           std::string_view point) {
  return PointedMatroid(MakeMatroid(std::move(ground), flats), point);
}

std::vector<Matroid> AllMatroids(const GroundSet& ground) {
  std::vector<Matroid> out;
  EnumerateFlatFamilies(ground.size(), {}, [&](const std::vector<Mask>& f) {
    out.push_back(Matroid::FromFlats(ground, f));
    return true;
  });
  std::sort(out.begin(), out.end(), [](const Matroid& a, const Matroid& b) {
    return a.flats().size() != b.flats().size()
               ? a.flats().size() < b.flats().size()
               : a.flats() < b.flats();
  });
  return out;
}

std::vector<Matroid> AllMatroids(int n) {
  return AllMatroids(GroundSet::Range(n));
}

}  // namespace matroidcat
