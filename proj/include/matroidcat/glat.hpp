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

// Finite lattices, geometric lattices, and the functors between them and
// pointed matroids.

#ifndef MATROIDCAT_GLAT_HPP_
#define MATROIDCAT_GLAT_HPP_

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matroidcat/core.hpp"
#include "matroidcat/maps.hpp"

namespace matroidcat {

class NotALattice : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotGeometric : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAMorphism : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GeometricLattice;
GeometricLattice LObject(const Matroid& m);

// A finite lattice with explicit join and meet tables. Elements are 0..n-1.
class Lattice {
 public:
  // leq[x][y] must be a partial order; throws NotALattice otherwise or when
  // some pair lacks a join or meet.
  static Lattice FromLeq(std::vector<std::string> names,
                         const std::vector<std::vector<bool>>& leq);
  // Order is the reflexive-transitive closure of the (lo, hi) pairs.
  static Lattice FromCovers(std::vector<std::string> names,
                            const std::vector<std::pair<int, int>>& covers);

  int size() const { return static_cast<int>(data_->names.size()); }
  const std::string& name(int x) const { return data_->names[x]; }
  const std::vector<std::string>& names() const { return data_->names; }
  // Index of name, or -1.
  int find(std::string_view name) const;
  int join(int x, int y) const { return data_->join[x * size() + y]; }
  int meet(int x, int y) const { return data_->meet[x * size() + y]; }
  bool leq(int x, int y) const { return join(x, y) == y; }
  int bottom() const { return data_->bottom; }
  int top() const { return data_->top; }
  // Length of the longest chain from the bottom.
  int height(int x) const { return data_->height[x]; }
  int height() const { return height(top()); }
  const std::vector<int>& atoms() const { return data_->atoms; }
  std::vector<std::pair<int, int>> covers() const;
  // Join of a list; the bottom for the empty list.
  int join_all(const std::vector<int>& xs) const;

  // Same names and the same order.
  bool operator==(const Lattice& other) const;

 protected:
  struct Data {
    std::vector<std::string> names;
    std::vector<int> join;
    std::vector<int> meet;
    std::vector<int> height;
    std::vector<int> atoms;
    int bottom = 0;
    int top = 0;
  };
  Lattice() = default;
  // Tables are trusted; derives bottom, top, heights and atoms.
  static Lattice FromTables(std::vector<std::string> names,
                            std::vector<int> join, std::vector<int> meet);

  std::shared_ptr<const Data> data_;

  friend GeometricLattice LObject(const Matroid& m);
};

// Atomistic and semimodular.
bool IsGeometric(const Lattice& l);

class GeometricLattice : public Lattice {
 public:
  // Throws NotGeometric.
  explicit GeometricLattice(Lattice l);

 private:
  struct Trusted {};
  GeometricLattice(Lattice l, Trusted) : Lattice(std::move(l)) {}

  friend GeometricLattice LObject(const Matroid& m);
};

// An order isomorphism a -> b, if one exists.
std::optional<std::vector<int>> FindIsomorphism(const Lattice& a,
                                                const Lattice& b);

// Preserves binary joins and the least element, and sends atoms to atoms or
// to the least element.
class GLatMorphism {
 public:
  // Throws NotAMorphism.
  GLatMorphism(GeometricLattice dom, GeometricLattice cod,
               std::vector<int> table);
  // Extends an assignment on atoms by joins. Throws NotAMorphism.
  static GLatMorphism FromAtoms(GeometricLattice dom, GeometricLattice cod,
                                const std::vector<int>& atom_images);
  static GLatMorphism Identity(const GeometricLattice& l);

  const GeometricLattice& dom() const { return dom_; }
  const GeometricLattice& cod() const { return cod_; }
  const std::vector<int>& table() const { return table_; }
  int operator()(int x) const { return table_[x]; }

  bool operator==(const GLatMorphism& other) const {
    return table_ == other.table_;
  }

 private:
  GeometricLattice dom_;
  GeometricLattice cod_;
  std::vector<int> table_;
};

bool IsGLatMorphism(const GeometricLattice& dom, const GeometricLattice& cod,
                    const std::vector<int>& table);

// g after f. Throws DomainMismatch when the sizes disagree.
GLatMorphism Compose(const GLatMorphism& g, const GLatMorphism& f);

std::vector<GLatMorphism> EnumerateGLatHoms(const GeometricLattice& a,
                                            const GeometricLattice& b);

bool IsSurjective(const GLatMorphism& g);
// Corestriction to [0, g(1)] is an isomorphism.
bool IsEmbedding(const GLatMorphism& g);
// Restriction to [join of g^-1(0), 1] is an isomorphism onto the codomain.
bool IsContraction(const GLatMorphism& g);

// Flats ordered by inclusion; element i is m.flats()[i].
GeometricLattice LObject(const Matroid& m);
// X -> clos(f(X)).
GLatMorphism LMorphism(const StrongMap& f);

// Label given to the added loop of S(G).
inline constexpr std::string_view kPointLabel = "*";

// Atoms of G plus a loop, listed first. Atom labels are element names.
PointedMatroid SObject(const GeometricLattice& g);
StrongMap SMorphism(const GLatMorphism& g);

// Only loop is the point, and no two nonloops are parallel.
bool IsPointedSimple(const PointedMatroid& m);

struct Simplification {
  PointedMatroid si;
  // Each element to the representative of its closure, loops to the point.
  StrongMap unit;
};

// Keeps the point and the least-indexed nonloop of each rank-1 flat.
Simplification Simplify(const PointedMatroid& m);
// si(f) : si(dom) -> si(cod) for a pointed map f.
StrongMap SimplifyMap(const StrongMap& f);
// Multiplication si(si(M)) -> si(M).
StrongMap SimplifyMultiplication(const PointedMatroid& m);

struct GLatFactorization {
  GLatMorphism embedding;
  GLatMorphism contraction;
  // Extra atoms added to the middle lattice beyond the atoms of dom and cod.
  int lift = 0;
  // Elements X of dom with X = join g^-1(g(X)) or h(g(X)) = h(X).
  std::vector<int> candidate;
  // The candidate is a geometric lattice under the induced order that is
  // isomorphic to the middle object.
  bool candidate_matches = false;
};

// g = contraction o embedding. The middle object is the lattice of a Higgs
// major of the quotient induced by g; see the source for the construction.
GLatFactorization GLatFactor(const GLatMorphism& g);

}  // namespace matroidcat

#endif  // MATROIDCAT_GLAT_HPP_
