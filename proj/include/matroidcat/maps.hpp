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

// Strong maps: functions whose preimages of flats are flats.

#ifndef MATROIDCAT_MAPS_HPP_
#define MATROIDCAT_MAPS_HPP_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matroidcat/core.hpp"

namespace matroidcat {

class NotStrong : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// table[i] is the image of element i. Points are -1 for unpointed maps.
class StrongMap {
 public:
  // Validates strength; throws NotStrong.
  StrongMap(Matroid dom, Matroid cod, std::vector<int> table);
  // Also requires the point to go to the point.
  StrongMap(PointedMatroid dom, PointedMatroid cod, std::vector<int> table);

  static StrongMap Identity(const Matroid& m);
  static StrongMap Identity(const PointedMatroid& m);

  const Matroid& dom() const { return dom_; }
  const Matroid& cod() const { return cod_; }
  const std::vector<int>& table() const { return table_; }
  int operator()(int i) const { return table_[i]; }
  bool pointed() const { return dom_point_ >= 0; }
  int dom_point() const { return dom_point_; }
  int cod_point() const { return cod_point_; }
  PointedMatroid pointed_dom() const { return {dom_, dom_point_}; }
  PointedMatroid pointed_cod() const { return {cod_, cod_point_}; }

  Mask image(Mask x) const;
  Mask preimage(Mask y) const;

  bool operator==(const StrongMap& other) const;
  std::string describe() const;

 private:
  Matroid dom_;
  Matroid cod_;
  std::vector<int> table_;
  int dom_point_ = -1;
  int cod_point_ = -1;
};

enum class StrongCriterion { kFlatPreimage, kRankDifference, kLattice };

Mask ImageOf(const std::vector<int>& f, Mask x);
Mask PreimageOf(const std::vector<int>& f, Mask y);

bool IsStrong(const std::vector<int>& f, const Matroid& m, const Matroid& n,
              StrongCriterion criterion = StrongCriterion::kFlatPreimage);

// g after f. Throws DomainMismatch when cod(f) != dom(g).
StrongMap Compose(const StrongMap& g, const StrongMap& f);

inline constexpr std::uint64_t kDefaultHomBudget = 100000000;

struct HomOptions {
  // Point indices; both set means pointed maps only.
  int dom_point = -1;
  int cod_point = -1;
  // Partial function: constraint[i] >= 0 fixes the image of i.
  std::vector<int> constraint;
  // Maximum number of candidate functions.
  std::uint64_t budget = kDefaultHomBudget;
  int threads = 1;
};

// Calls fn on every strong map table in lexicographic order (threads == 1).
// fn returns false to stop. Throws BudgetExceeded.
void ForEachHom(const Matroid& m, const Matroid& n, const HomOptions& options,
                const std::function<bool(const std::vector<int>&)>& fn);

std::vector<StrongMap> EnumerateHoms(const Matroid& m, const Matroid& n,
                                     const HomOptions& options = {});
std::vector<StrongMap> EnumerateHoms(const PointedMatroid& m,
                                     const PointedMatroid& n,
                                     HomOptions options = {});
std::uint64_t CountHoms(const Matroid& m, const Matroid& n,
                        const HomOptions& options = {});
std::uint64_t CountHoms(const PointedMatroid& m, const PointedMatroid& n,
                        HomOptions options = {});

struct MorphismClass {
  bool mono = false;
  bool epi = false;
  bool iso = false;
  bool embedding = false;
  bool contraction_shaped = false;
  bool lattice_preserving = false;
  bool quotient = false;
  // Contracted set when contraction_shaped.
  Mask contracted = 0;
};

MorphismClass ClassifyMorphism(const StrongMap& f);

// L(f) as a table over dom flats: flat index -> cod flat index.
std::vector<int> LatticeAction(const std::vector<int>& f, const Matroid& m,
                               const Matroid& n);

// True iff the function is injective on the nonloop elements of every rank-1
// flat of m.
bool InjectiveOnRankOneFlats(const std::vector<int>& f, const Matroid& m);

}  // namespace matroidcat

#endif  // MATROIDCAT_MAPS_HPP_
