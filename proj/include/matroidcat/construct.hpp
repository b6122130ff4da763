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

// Unary and binary matroid constructions and the functors between
// subcategories of matroids.

#ifndef MATROIDCAT_CONSTRUCT_HPP_
#define MATROIDCAT_CONSTRUCT_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "matroidcat/core.hpp"
#include "matroidcat/maps.hpp"

namespace matroidcat {

class OverlappingInstruction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotParallel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class WrongCategory : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RankZeroTruncation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GroundMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// base, followed by primes until it is not a label of ground.
std::string FreshLabel(const GroundSet& ground, std::string base);

// Bases are the complements of bases.
Matroid Dual(const Matroid& m);

Matroid Delete(const Matroid& m, Mask y);

struct Contraction {
  Matroid matroid;
  // Z goes to the least-indexed loop of M/Z, the rest to itself. Absent when
  // Z is nonempty and M/Z has no loop.
  std::optional<StrongMap> map;
};
Contraction Contract(const Matroid& m, Mask z);

struct PointedContraction {
  PointedMatroid matroid;
  // Z goes to the point.
  StrongMap map;
};
// The point must lie outside z.
PointedContraction Contract(const PointedMatroid& m, Mask z);

// M/Z on the original ground set, with Z turned into loops. The identity is
// a strong map M -> result.
Matroid ContractInPlace(const Matroid& m, Mask z);

struct MinorStep {
  enum Kind { kDelete, kContract };
  Kind kind;
  std::vector<std::string> labels;
};
// Left fold; throws OverlappingInstruction when a label is already removed
// or unknown.
Matroid Minor(const Matroid& m, const std::vector<MinorStep>& steps);

// Ground sets with pairwise-disjoint marked subsets Z_1..Z_n.
struct MarkedMatroid {
  Matroid base;
  std::vector<Mask> marks;
};
// Throws std::invalid_argument when marks overlap or leave the ground set.
void Validate(const MarkedMatroid& m);
// f is a marked map when each dom mark is the preimage of the cod mark.
bool IsMarkedMap(const StrongMap& f, const MarkedMatroid& dom,
                 const MarkedMatroid& cod);
// The last mark is deleted (D) or contracted (C); the rest are reindexed.
MarkedMatroid DeleteLast(const MarkedMatroid& m);
MarkedMatroid ContractLast(const MarkedMatroid& m);
// Restriction of a marked map to the minors. Throws std::invalid_argument
// when f is not a marked map.
StrongMap DeleteLast(const StrongMap& f, const MarkedMatroid& dom,
                     const MarkedMatroid& cod);
StrongMap ContractLast(const StrongMap& f, const MarkedMatroid& dom,
                       const MarkedMatroid& cod);

// Left labels are kept and right labels get a prime suffix.
struct Coproduct {
  Matroid sum;
  StrongMap inj1;
  StrongMap inj2;
};
Coproduct Sum(const Matroid& m, const Matroid& n);
// The unique map M+N -> P restricting to f and g.
StrongMap Cotuple(const Coproduct& c, const StrongMap& f, const StrongMap& g);

struct Equalizer {
  Matroid eq;
  StrongMap inclusion;
};
// Pointed inputs give a pointed inclusion. Throws NotParallel.
Equalizer Equalize(const StrongMap& f, const StrongMap& g);

// Flats {K in F(M) minus |M|} u {K + p : K in F(M) minus hyperplanes}.
Matroid FreeExtension(const Matroid& m, std::string_view p);
// Free extension by a fresh element followed by contracting it.
Matroid Truncation(const Matroid& m);

struct Erection {
  Matroid erection;
  // False when only the trivial erection exists.
  bool proper = false;
  // Number of inclusion-maximal proper erections found.
  int maximal = 0;
  // False when the candidate search was cut short.
  bool exhaustive = true;
};
// The erection whose independent sets are maximal among matroids of rank one
// higher whose truncation is m; m itself when none exists.
Erection FreeErection(const Matroid& m);

// Independent sets are unions of independent sets. Grounds are aligned by
// label; throws GroundMismatch when the label sets differ.
Matroid Union(const Matroid& m, const Matroid& n);
// (M* u N*)*.
Matroid Intersection(const Matroid& m, const Matroid& n);
// M u N*.
Matroid HalfDualUnion(const Matroid& m, const Matroid& n);

// A matroid with a distinguished element, which need not be a loop.
struct BipointedMatroid {
  Matroid base;
  int basepoint;
};
// Basepoints identified as the left basepoint; flats are F u G with F, G
// flats that agree on the basepoint.
BipointedMatroid ParallelConnection(const BipointedMatroid& m,
                                    const BipointedMatroid& n);
// (M* || N*)*.
BipointedMatroid SeriesConnection(const BipointedMatroid& m,
                                  const BipointedMatroid& n);
struct SeriesProjection {
  // Tables MN -> M and MN -> N collapsing the other side onto the basepoint.
  std::vector<int> to_m;
  std::vector<int> to_n;
  // Present when the table is a strong map.
  std::optional<StrongMap> strong_m;
  std::optional<StrongMap> strong_n;
};
SeriesProjection SeriesProjections(const BipointedMatroid& m,
                                   const BipointedMatroid& n);

// Finite sets and functions, for the functors through FinSet.
struct FinMap {
  GroundSet dom;
  GroundSet cod;
  std::vector<int> table;
};

using Object = std::variant<GroundSet, Matroid, PointedMatroid>;
using Arrow = std::variant<FinMap, StrongMap>;

enum class FunctorName {
  kFree,
  kCofree,
  kUnderlying,
  kZeroFlat,
  kV,
  kH,
  kU,
  kJ,
  kAddPoint,
  kAddIsthmus
};

// "F_free", "C_cofree", "underlying", "zeroflat", "V", "H", "U", "J",
// "add_point", "add_isthmus".
std::optional<FunctorName> ParseFunctor(std::string_view name);
std::string ToString(FunctorName name);

// Throws WrongCategory when the argument is outside the functor's domain.
Object ApplyFunctor(FunctorName name, const Object& x);
Arrow ApplyFunctor(FunctorName name, const Arrow& f);

}  // namespace matroidcat

#endif  // MATROIDCAT_CONSTRUCT_HPP_
