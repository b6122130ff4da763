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

#include "matroidcat/maps.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace matroidcat {

Mask ImageOf(const std::vector<int>& f, Mask x) {
  Mask out = 0;
  for (size_t i = 0; i < f.size(); ++i) {
    if (x & Bit(static_cast<int>(i))) out |= Bit(f[i]);
  }
  return out;
}

Mask PreimageOf(const std::vector<int>& f, Mask y) {
  Mask out = 0;
  for (size_t i = 0; i < f.size(); ++i) {
    if (y & Bit(f[i])) out |= Bit(static_cast<int>(i));
  }
  return out;
}

namespace {

void CheckTable(const std::vector<int>& f, const Matroid& m,
                const Matroid& n) {
  if (static_cast<int>(f.size()) != m.size()) {
    throw std::invalid_argument("map table size differs from domain size");
  }
  for (int v : f) {
    if (v < 0 || v >= n.size()) {
      throw std::invalid_argument("map value outside the codomain");
    }
  }
}

bool StrongByPreimage(const std::vector<int>& f, const Matroid& m,
                      const Matroid& n) {
  for (Mask g : n.flats()) {
    if (!m.is_flat(PreimageOf(f, g))) return false;
  }
  return true;
}

// Telescoping reduces nested pairs X subset Y to single-element steps.
bool StrongByRank(const std::vector<int>& f, const Matroid& m,
                  const Matroid& n) {
  for (Mask x = 0; x <= m.full(); ++x) {
    int fx = n.rank(ImageOf(f, x));
    for (int i = 0; i < m.size(); ++i) {
      if (x & Bit(i)) continue;
      Mask y = x | Bit(i);
      if (n.rank(ImageOf(f, y)) - fx > m.rank(y) - m.rank(x)) return false;
    }
  }
  return true;
}

bool StrongByLattice(const std::vector<int>& f, const Matroid& m,
                     const Matroid& n) {
  auto lf = [&](Mask x) { return n.closure(ImageOf(f, x)); };
  // L(f) must be a function on L(M): clos(f(X)) depends only on clos(X).
  for (Mask x = 0; x <= m.full(); ++x) {
    if (lf(x) != lf(m.closure(x))) return false;
  }
  if (lf(m.loops()) != n.loops()) return false;
  const auto& flats = m.flats();
  for (Mask x : flats) {
    if (m.rank(x) == 1 && n.rank(lf(x)) > 1) return false;
  }
  for (size_t i = 0; i < flats.size(); ++i) {
    for (size_t j = i + 1; j < flats.size(); ++j) {
      Mask join = m.closure(flats[i] | flats[j]);
      if (lf(join) != n.closure(lf(flats[i]) | lf(flats[j]))) return false;
    }
  }
  return true;
}

}  // namespace

bool IsStrong(const std::vector<int>& f, const Matroid& m, const Matroid& n,
              StrongCriterion criterion) {
  CheckTable(f, m, n);
  switch (criterion) {
    case StrongCriterion::kFlatPreimage: return StrongByPreimage(f, m, n);
    case StrongCriterion::kRankDifference: return StrongByRank(f, m, n);
    case StrongCriterion::kLattice: return StrongByLattice(f, m, n);
  }
  return false;
}

StrongMap::StrongMap(Matroid dom, Matroid cod, std::vector<int> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (!IsStrong(table_, dom_, cod_)) {
    throw NotStrong("function is not a strong map");
  }
}

StrongMap::StrongMap(PointedMatroid dom, PointedMatroid cod,
                     std::vector<int> table)
    : StrongMap(dom.base(), cod.base(), std::move(table)) {
  if (table_[dom.point()] != cod.point()) {
    throw NotStrong("map does not send the point to the point");
  }
  dom_point_ = dom.point();
  cod_point_ = cod.point();
}

StrongMap StrongMap::Identity(const Matroid& m) {
  std::vector<int> t(m.size());
  for (int i = 0; i < m.size(); ++i) t[i] = i;
  return StrongMap(m, m, std::move(t));
}

StrongMap StrongMap::Identity(const PointedMatroid& m) {
  std::vector<int> t(m.base().size());
  for (int i = 0; i < m.base().size(); ++i) t[i] = i;
  return StrongMap(m, m, std::move(t));
}

Mask StrongMap::image(Mask x) const { return ImageOf(table_, x); }
Mask StrongMap::preimage(Mask y) const { return PreimageOf(table_, y); }

bool StrongMap::operator==(const StrongMap& other) const {
  return dom_ == other.dom_ && cod_ == other.cod_ && table_ == other.table_ &&
         dom_point_ == other.dom_point_ && cod_point_ == other.cod_point_;
}

std::string StrongMap::describe() const {
  std::ostringstream out;
  out << "{";
  for (int i = 0; i < dom_.size(); ++i) {
    if (i) out << ", ";
    out << dom_.ground().label(i) << "->" << cod_.ground().label(table_[i]);
  }
  out << "}";
  return out.str();
}

StrongMap Compose(const StrongMap& g, const StrongMap& f) {
  if (!(f.cod() == g.dom())) {
    throw DomainMismatch("codomain of f is not the domain of g");
  }
  std::vector<int> t(f.dom().size());
  for (int i = 0; i < f.dom().size(); ++i) t[i] = g(f(i));
  if (f.pointed() && g.pointed()) {
    return StrongMap(f.pointed_dom(), g.pointed_cod(), std::move(t));
  }
  return StrongMap(f.dom(), g.cod(), std::move(t));
}

namespace {

class HomSearch {
 public:
  HomSearch(const Matroid& m, const Matroid& n, std::vector<int> fixed)
      : m_(m), n_(n), fixed_(std::move(fixed)) {
    const auto& flats = n_.flats();
    containing_.resize(n_.size());
    for (size_t j = 0; j < flats.size(); ++j) {
      for (int y = 0; y < n_.size(); ++y) {
        if (flats[j] & Bit(y)) containing_[y].push_back(static_cast<int>(j));
      }
    }
    pre_.assign(flats.size(), 0);
    table_.assign(m_.size(), 0);
  }

  // Explores every extension with element 0 restricted to first_values.
  void Run(const std::vector<int>& first_values,
           const std::function<bool(const std::vector<int>&)>& fn) {
    fn_ = &fn;
    stopped_ = false;
    if (m_.size() == 0) {
      (*fn_)(table_);
      return;
    }
    for (int v : first_values) {
      if (!Try(0, v)) return;
    }
  }

 private:
  bool Consistent(int i) const {
    Mask assigned = FullMask(i + 1);
    for (Mask p : pre_) {
      if ((m_.closure(p) & assigned) != p) return false;
    }
    return true;
  }

  // Returns false when the callback asked to stop.
  bool Try(int i, int v) {
    table_[i] = v;
    for (int j : containing_[v]) pre_[j] |= Bit(i);
    bool go = true;
    if (Consistent(i)) go = Recurse(i + 1);
    for (int j : containing_[v]) pre_[j] &= ~Bit(i);
    return go;
  }

  bool Recurse(int i) {
    if (i == m_.size()) return (*fn_)(table_);
    if (fixed_[i] >= 0) return Try(i, fixed_[i]);
    for (int v = 0; v < n_.size(); ++v) {
      if (!Try(i, v)) return false;
    }
    return true;
  }

  const Matroid& m_;
  const Matroid& n_;
  std::vector<int> fixed_;
  std::vector<std::vector<int>> containing_;
  std::vector<Mask> pre_;
  std::vector<int> table_;
  const std::function<bool(const std::vector<int>&)>* fn_ = nullptr;
  bool stopped_ = false;
};

// Fixed images per element, or empty when the constraints are contradictory.
std::vector<int> FixedImages(const Matroid& m, const Matroid& n,
                             const HomOptions& options, bool* feasible) {
  std::vector<int> fixed(m.size(), -1);
  *feasible = true;
  if (!options.constraint.empty()) {
    if (static_cast<int>(options.constraint.size()) != m.size()) {
      throw std::invalid_argument("constraint size differs from domain size");
    }
    for (int i = 0; i < m.size(); ++i) {
      int c = options.constraint[i];
      if (c >= n.size()) throw std::invalid_argument("constraint value");
      fixed[i] = c;
    }
  }
  if ((options.dom_point >= 0) != (options.cod_point >= 0)) {
    throw std::invalid_argument("pointed hom search needs both points");
  }
  if (options.dom_point >= 0) {
    int& slot = fixed[options.dom_point];
    if (slot >= 0 && slot != options.cod_point) *feasible = false;
    slot = options.cod_point;
  }
  return fixed;
}

void CheckBudget(const std::vector<int>& fixed, int cod_size,
                 std::uint64_t budget) {
  long double candidates = 1;
  for (int f : fixed) {
    if (f < 0) candidates *= cod_size;
  }
  if (candidates > static_cast<long double>(budget)) {
    std::ostringstream msg;
    msg << "hom search needs " << static_cast<double>(candidates)
        << " candidate functions, budget is " << budget;
    throw BudgetExceeded(msg.str());
  }
}

}  // namespace

void ForEachHom(const Matroid& m, const Matroid& n, const HomOptions& options,
                const std::function<bool(const std::vector<int>&)>& fn) {
  bool feasible;
  std::vector<int> fixed = FixedImages(m, n, options, &feasible);
  CheckBudget(fixed, n.size(), options.budget);
  if (!feasible) return;
  if (m.size() > 0 && n.size() == 0) return;

  std::vector<int> first;
  if (m.size() > 0) {
    if (fixed[0] >= 0) {
      first.push_back(fixed[0]);
    } else {
      for (int v = 0; v < n.size(); ++v) first.push_back(v);
    }
  }
  int threads = std::max(1, options.threads);
  if (threads == 1 || first.size() < 2) {
    HomSearch(m, n, fixed).Run(first, fn);
    return;
  }
  // One bucket per first value keeps the merged order lexicographic.
  std::vector<std::vector<std::vector<int>>> buckets(first.size());
  std::vector<std::thread> workers;
  for (int t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      HomSearch search(m, n, fixed);
      for (size_t k = t; k < first.size(); k += threads) {
        std::function<bool(const std::vector<int>&)> collect =
            [&](const std::vector<int>& table) {
              buckets[k].push_back(table);
              return true;
            };
        search.Run({first[k]}, collect);
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& bucket : buckets) {
    for (const auto& table : bucket) {
      if (!fn(table)) return;
    }
  }
}

std::vector<StrongMap> EnumerateHoms(const Matroid& m, const Matroid& n,
                                     const HomOptions& options) {
  std::vector<StrongMap> out;
  bool pointed = options.dom_point >= 0;
  ForEachHom(m, n, options, [&](const std::vector<int>& t) {
    if (pointed) {
      out.emplace_back(PointedMatroid(m, options.dom_point),
                       PointedMatroid(n, options.cod_point), t);
    } else {
      out.emplace_back(m, n, t);
    }
    return true;
  });
  return out;
}

std::vector<StrongMap> EnumerateHoms(const PointedMatroid& m,
                                     const PointedMatroid& n,
                                     HomOptions options) {
  options.dom_point = m.point();
  options.cod_point = n.point();
  return EnumerateHoms(m.base(), n.base(), options);
}

std::uint64_t CountHoms(const Matroid& m, const Matroid& n,
                        const HomOptions& options) {
  std::uint64_t count = 0;
  ForEachHom(m, n, options, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

std::uint64_t CountHoms(const PointedMatroid& m, const PointedMatroid& n,
                        HomOptions options) {
  options.dom_point = m.point();
  options.cod_point = n.point();
  return CountHoms(m.base(), n.base(), options);
}

std::vector<int> LatticeAction(const std::vector<int>& f, const Matroid& m,
                               const Matroid& n) {
  const auto& cod_flats = n.flats();
  std::vector<int> out;
  for (Mask x : m.flats()) {
    Mask y = n.closure(ImageOf(f, x));
    auto it = std::find(cod_flats.begin(), cod_flats.end(), y);
    out.push_back(static_cast<int>(it - cod_flats.begin()));
  }
  return out;
}

bool InjectiveOnRankOneFlats(const std::vector<int>& f, const Matroid& m) {
  for (Mask x : m.flats()) {
    if (m.rank(x) != 1) continue;
    Mask nonloops = x & ~m.loops();
    if (Popcount(ImageOf(f, nonloops)) != Popcount(nonloops)) return false;
  }
  return true;
}

namespace {

bool IsContractionFor(const StrongMap& f, Mask z) {
  const Matroid& m = f.dom();
  const Matroid& n = f.cod();
  Mask rest = m.full() & ~z;
  if (Popcount(rest) != n.size()) return false;
  if (f.image(rest) != n.full()) return false;
  if (!IsSubset(f.image(z), n.loops())) return false;
  int rz = m.rank(z);
  bool ok = true;
  ForEachSubset(rest, [&](Mask x) {
    if (ok && n.rank(f.image(x)) != m.rank(x | z) - rz) ok = false;
  });
  return ok;
}

// Searches the contracted sets Z compatible with f: each codomain loop keeps
// exactly one preimage outside Z.
bool FindContraction(const StrongMap& f, Mask* z_out) {
  const Matroid& n = f.cod();
  Mask to_loops = f.preimage(n.loops());
  std::vector<std::vector<int>> choices;
  for (int y = 0; y < n.size(); ++y) {
    if (!(n.loops() & Bit(y))) continue;
    std::vector<int> pre;
    for (int i = 0; i < f.dom().size(); ++i) {
      if (f(i) == y) pre.push_back(i);
    }
    if (pre.empty()) return false;
    choices.push_back(pre);
  }
  std::vector<size_t> idx(choices.size(), 0);
  while (true) {
    Mask keep = 0;
    for (size_t k = 0; k < choices.size(); ++k) keep |= Bit(choices[k][idx[k]]);
    Mask z = to_loops & ~keep;
    if (IsContractionFor(f, z)) {
      *z_out = z;
      return true;
    }
    size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == idx.size()) return false;
  }
}

}  // namespace

MorphismClass ClassifyMorphism(const StrongMap& f) {
  const Matroid& m = f.dom();
  const Matroid& n = f.cod();
  MorphismClass c;
  c.mono = Popcount(f.image(m.full())) == m.size();
  c.epi = f.image(m.full()) == n.full();
  bool bijective = c.mono && c.epi;
  c.quotient = bijective;
  if (bijective) {
    c.iso = true;
    for (Mask x : m.flats()) {
      if (!n.is_flat(f.image(x))) c.iso = false;
    }
  }
  if (c.mono) {
    c.embedding = true;
    for (Mask x = 0; x <= m.full() && c.embedding; ++x) {
      if (m.rank(x) != n.rank(f.image(x))) c.embedding = false;
    }
  }
  std::vector<int> action = LatticeAction(f.table(), m, n);
  std::vector<int> sorted = action;
  std::sort(sorted.begin(), sorted.end());
  bool lattice_bijective =
      m.flats().size() == n.flats().size() &&
      std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (lattice_bijective) {
    c.lattice_preserving = true;
    for (size_t i = 0; i < action.size(); ++i) {
      if (m.rank(m.flats()[i]) != n.rank(n.flats()[action[i]])) {
        c.lattice_preserving = false;
      }
    }
  }
  c.contraction_shaped = FindContraction(f, &c.contracted);
  return c;
}

}  // namespace matroidcat
