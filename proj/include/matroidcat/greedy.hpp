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

// Independence systems, the greedy algorithm with exact rational weights,
// and the greedy characterization of matroids.

#ifndef MATROIDCAT_GREEDY_HPP_
#define MATROIDCAT_GREEDY_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matroidcat/core.hpp"
#include "matroidcat/io.hpp"

namespace matroidcat {

using Rational = boost::multiprecision::cpp_rational;

class InvalidSystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotSquare : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A nonempty downward-closed family of subsets.
class IndependenceSystem {
 public:
  // Throws InvalidSystem when the family misses the empty set or is not
  // downward closed.
  IndependenceSystem(GroundSet ground, std::vector<Mask> family);
  static IndependenceSystem FromMatroid(const Matroid& m);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  // Sorted by mask.
  const std::vector<Mask>& family() const { return family_; }
  bool contains(Mask x) const { return member_[x] != 0; }
  std::vector<Mask> maximal_members() const;

 private:
  GroundSet ground_;
  std::vector<Mask> family_;
  std::vector<char> member_;
};

// Every nonempty downward-closed family on n elements, sorted by family.
std::vector<IndependenceSystem> AllIndependenceSystems(int n);

struct WeightFn {
  std::vector<Rational> w;

  Rational operator()(Mask x) const;
};

struct GreedyRun {
  // Elements in the order chosen.
  std::vector<int> trace;
  Mask result = 0;
  Rational weight;
};

// Among the heaviest addable elements the earliest in tie_break is chosen.
// An empty tie_break means index order.
GreedyRun RunGreedy(const IndependenceSystem& s, const WeightFn& w,
                    const std::vector<int>& tie_break = {});

// One run per reachable outcome, branching on every set of tied heaviest
// elements, in result order. Throws BudgetExceeded past max_runs outcomes.
std::vector<GreedyRun> AllGreedyRuns(const IndependenceSystem& s,
                                     const WeightFn& w,
                                     std::size_t max_runs = 100000);

struct Optimum {
  // The least mask among heaviest maximal members.
  Mask set = 0;
  Rational weight;
};
Optimum BruteOptimum(const IndependenceSystem& s, const WeightFn& w);

struct GreedyWitness {
  // The violating pair: |a| < |b|, and no element of b - a extends a.
  Mask a = 0;
  Mask b = 0;
  WeightFn weights;
  GreedyRun run;
  Optimum optimum;
  // Every greedy run under weights falls short of the optimum.
  bool all_runs_suboptimal = false;
};

struct GreedyCertificate {
  bool is_matroid = false;
  std::optional<GreedyWitness> witness;
};

// Weights 1 + 1/(2|E|) on a, 1 on b - a and 0 elsewhere.
WeightFn ViolationWeights(int n, Mask a, Mask b);

// is_matroid iff the family satisfies augmentation; a witness otherwise.
GreedyCertificate CertifyMatroidByGreedy(const IndependenceSystem& s);

// A node at height h covers h + kSquareCoverOffset nodes, as in the powerset.
inline constexpr int kSquareCoverOffset = 0;

// A finite poset with least element and a set for each node. covers[k] is
// (lo, hi) with hi covering lo.
struct SquareFunctor {
  GroundSet ground;
  std::vector<std::string> nodes;
  std::vector<Mask> sets;
  std::vector<std::pair<int, int>> covers;

  // The poset of members of a system under inclusion.
  static SquareFunctor FromSystem(const IndependenceSystem& s);
};

// Throws NotSquare naming the failed condition.
void ValidateSquare(const SquareFunctor& f);

struct ChainCheck {
  IndependenceSystem induced;
  // Lengths of the maximal chains, each reported once, ascending.
  std::vector<int> chain_lengths;
  bool equal_chains = false;
  // Augmentation on the induced system. Equal chains is necessary but not
  // sufficient: {ab, cd} and their subsets have equal chains.
  bool is_matroid = false;
};
ChainCheck EqualChainCheck(const SquareFunctor& f);

// { "ground": [...], "independents": [[...], ...] }.
IndependenceSystem SystemFromJson(const Json& doc);
Json ToJson(const IndependenceSystem& s);
// { "a": 3, "b": "5/2" }; unlisted elements weigh 0.
WeightFn WeightsFromJson(const GroundSet& ground, const Json& doc);
Json ToJson(const GroundSet& ground, const WeightFn& w);
// { "ground": [...], "nodes": [{"id": "0", "set": [...]}, ...],
//   "covers": [["0", "1"], ...] }.
SquareFunctor SquareFromJson(const Json& doc);
Json ToJson(const SquareFunctor& f);

}  // namespace matroidcat

#endif  // MATROIDCAT_GREEDY_HPP_
