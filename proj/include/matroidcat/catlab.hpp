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

// Limit and colimit search, factorization systems, Higgs factorization,
// adjunction checks and the counterexample registry.

#ifndef MATROIDCAT_CATLAB_HPP_
#define MATROIDCAT_CATLAB_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "matroidcat/core.hpp"
#include "matroidcat/io.hpp"
#include "matroidcat/maps.hpp"

namespace matroidcat {

class NotBijectiveStrong : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownPair : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The full subcategory a search ranges over. With points, kLoopless and
// kSimple mean that the point is the only loop.
enum class Category { kMatr, kLoopless, kSimple };

std::optional<Category> ParseCategory(std::string_view name);
std::string ToString(Category c);
bool InCategory(const Matroid& m, Category c, int point = -1);

struct DiagramArrow {
  int from;
  int to;
  std::vector<int> table;
};

struct Diagram {
  Category category = Category::kMatr;
  std::vector<Matroid> objects;
  // One point per object, or empty for unpointed diagrams.
  std::vector<int> points;
  std::vector<DiagramArrow> arrows;

  bool pointed() const { return !points.empty(); }
};

// Throws std::invalid_argument for bad indices or objects outside the
// category, and NotStrong for arrows that are not (pointed) strong maps.
void Validate(const Diagram& d);

// { "category": "matr", "objects": [<matroid>, ...],
//   "arrows": [{"from": 0, "to": 1, "table": {...}}, ...] }. Objects carry
// a point when the diagram is pointed.
Diagram DiagramFromJson(const Json& doc);
Json ToJson(const Diagram& d);

enum class Verdict {
  kExistsWithWitness,
  kNotExistsExhaustive,
  kNotExistsWithinBound,
  kBudgetExceeded
};
std::string ToString(Verdict v);

// A candidate structure on the carrier and a competitor (co)cone showing it
// is not universal: k is the comparison function, which is not strong.
struct Certificate {
  std::vector<Mask> candidate;
  Matroid competitor;
  int competitor_point = -1;
  // Colimits: carrier -> competitor. Limits: competitor -> carrier.
  std::vector<int> comparison;
};

struct SearchReport {
  Verdict verdict = Verdict::kNotExistsWithinBound;
  // The FinSet (co)limit and its legs: for colimits legs[i] maps object i
  // into the carrier, for limits it maps the carrier onto object i.
  GroundSet carrier;
  int carrier_point = -1;
  std::vector<std::vector<int>> legs;
  std::optional<Matroid> witness;
  std::uint64_t candidates_examined = 0;
  std::vector<Certificate> certificates;
  // True when every structure on the carrier was enumerated.
  bool enumeration_complete = false;
  // Number of flat-family search nodes visited.
  std::uint64_t nodes = 0;
};

struct SearchOptions {
  // Carriers up to this size get exhaustive verdicts.
  int max_ground = 6;
  // Node budget for carriers above max_ground.
  std::uint64_t node_budget = 2000000;
  // Largest competitor carrier tried when re-verifying a witness.
  int verify_size = 3;
  std::uint64_t hom_budget = kDefaultHomBudget;
};

SearchReport ColimitSearch(const Diagram& d, const SearchOptions& options = {});
SearchReport LimitSearch(const Diagram& d, const SearchOptions& options = {});

// Whether the cocone (competitor, k o legs) refutes the colimit candidate:
// every k o leg is strong and k is not strong from the candidate.
bool RefutesColimitCandidate(const Diagram& d, const SearchReport& report,
                             const std::vector<Mask>& candidate,
                             const Matroid& competitor,
                             const std::vector<int>& k);

struct Factorization {
  StrongMap l;
  StrongMap r;
};

// l onto the restriction of cod to the image, r the inclusion.
Factorization FactorEpiEmbedding(const StrongMap& f);

// l in kLatticeLeft, r in kParallelRight.
// The middle object has cod's loops plus a copy (i, y) of each y in
// f(F_i minus loops) for every rank-1 flat F_i of dom.
Factorization FactorLatticeParallel(const StrongMap& f);

struct TripleFactorization {
  // Lattice-preserving.
  StrongMap lattice;
  // Surjective and injective on rank-1 flats.
  StrongMap epi;
  // Embedding.
  StrongMap embedding;
};
TripleFactorization FactorTriple(const StrongMap& f);

enum class MapClass {
  kEpi,
  kEmbedding,
  kLatticePreserving,
  kRankOneInjective,
  // The orthogonal pair of the lattice-parallel system: lattice-preserving
  // and onto every nonloop; injective on the nonloops of each rank-1 flat and
  // a bijection of loops.
  kLatticeLeft,
  kParallelRight
};
bool InClass(const StrongMap& f, MapClass c);

// Every h : l.cod -> u.cod with h o l = u and r o h = v. Pointed when l is.
std::vector<StrongMap> FillIns(const StrongMap& l, const StrongMap& r,
                               const StrongMap& u, const StrongMap& v);

// Some S containing the image such that f corestricted to cod | S is
// lattice-preserving.
bool FactorsAsLatticeThenEmbedding(const StrongMap& f);

struct HiggsFactorization {
  int nullity = 0;
  // dom plus nullity new elements S.
  Matroid major;
  // The added elements, as a mask of major.
  Mask added = 0;
  // dom -> major, the identity on dom.
  StrongMap embedding;
  // major -> cod, f on dom; S goes to the point, or to the least loop of
  // cod. Absent when cod is loopless and unpointed.
  std::optional<StrongMap> contraction;
  // lifts[k] = Q_k on the ground of major; lifts[0] is cod plus S as loops
  // and lifts[nullity] is major. Each identity lifts[k] -> lifts[k-1] is
  // strong.
  std::vector<Matroid> lifts;
};
// f must be a bijective strong map. Throws NotBijectiveStrong.
HiggsFactorization FactorHiggs(const StrongMap& f);

struct CoequalizerCheck {
  // The contraction map N -> N / Z.
  StrongMap contraction;
  // Cocones h : N -> P with h(Z) = point, over the sampled P.
  std::uint64_t cocones = 0;
  // Cocones with no strong factorization, or more than one.
  std::uint64_t failures = 0;
};
// The pair id, g : F -> N, where F is the free pointed matroid on |N| and g
// sends Z to the point, is coequalized by N -> N/Z. Checks the universal
// property against every pointed P with at most max_target elements.
CoequalizerCheck CheckContractionCoequalizer(const PointedMatroid& n, Mask z,
                                             int max_target = 3);

struct AdjunctionReport {
  std::string left;
  std::string right;
  std::uint64_t pairs = 0;
  std::uint64_t morphisms = 0;
  // Pairs with |hom(LX, Y)| != |hom(X, RY)|.
  std::uint64_t count_mismatches = 0;
  // Pairs where g -> R(g) o unit is not a bijection.
  std::uint64_t transpose_failures = 0;
  std::uint64_t naturality_failures = 0;
  std::vector<std::string> notes;

  bool ok() const {
    return pairs > 0 && count_mismatches == 0 && transpose_failures == 0 &&
           naturality_failures == 0;
  }
};

// Names of the checked adjunctions as (left, right).
std::vector<std::pair<std::string, std::string>> KnownAdjunctions();
// Samples every object with at most max_left and max_right elements.
// Throws UnknownPair.
AdjunctionReport VerifyAdjunction(std::string_view left,
                                  std::string_view right, int max_left = 3,
                                  int max_right = 3);

struct Quantity {
  std::string name;
  std::int64_t expected;
  std::int64_t computed;
  // The claim is a lower bound: computed >= expected.
  bool at_least = false;

  bool holds() const {
    return at_least ? computed >= expected : computed == expected;
  }
};

struct CaseResult {
  std::string id;
  std::string claim;
  std::vector<Quantity> quantities;
  bool pass() const;
};

std::vector<std::string> PaperCaseIds();
// The fixture document of a case: named matroids and maps.
Json PaperCaseFixtures(std::string_view id);
// Throws UnknownCase.
CaseResult PaperVerify(std::string_view id);

}  // namespace matroidcat

#endif  // MATROIDCAT_CATLAB_HPP_
