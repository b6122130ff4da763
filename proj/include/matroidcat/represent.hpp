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

// Column matroids over finite fields and the rationals, cycle matroids of
// graphs, and the strong maps induced by linear maps.

#ifndef MATROIDCAT_REPRESENT_HPP_
#define MATROIDCAT_REPRESENT_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "matroidcat/core.hpp"
#include "matroidcat/maps.hpp"

namespace matroidcat {

using Rational = boost::multiprecision::cpp_rational;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SupportViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotLinear : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// GF(p) for a prime p <= 13, GF(4), or the rationals. GF(4) elements are
// 0, 1, 2 = w, 3 = w^2 = w + 1.
class Field {
 public:
  static Field Prime(int p);
  static Field GF4();
  static Field Rationals();
  // "gf2", "gf3", ..., "gf13", "gf4", "q".
  static Field Parse(const std::string& name);

  bool finite() const { return order_ > 0; }
  // Number of elements; 0 for the rationals.
  int order() const { return order_; }
  std::string name() const;

  // Canonical representative: reduced mod p for prime fields, checked to be
  // in range for GF(4).
  Rational normalize(const Rational& x) const;
  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  // Throws std::domain_error on zero.
  Rational inv(const Rational& a) const;
  // All elements, for finite fields.
  std::vector<Rational> elements() const;

  bool operator==(const Field& other) const = default;

 private:
  Field(int order, bool gf4) : order_(order), gf4_(gf4) {}
  int order_;
  bool gf4_;
};

using Vector = std::vector<Rational>;
// Row-major; rows[i][j].
using MatrixRows = std::vector<std::vector<Rational>>;

// A multiset of labelled columns of a fixed dimension.
struct LinearRep {
  Field field = Field::Prime(2);
  int dim = 0;
  std::vector<Vector> columns;
  std::vector<std::string> labels;
};

// Throws DimensionMismatch when columns differ in length or labels are
// missing, and std::invalid_argument on a duplicate label.
void Validate(const LinearRep& a);
int MatrixRank(const Field& field, std::vector<Vector> columns);
Matroid ColumnMatroid(const LinearRep& a);

// Every vector of field^dim as a column, in lexicographic order. Labels are
// the coordinates; a one-dimensional space uses the element itself.
LinearRep FullSpace(const Field& field, int dim);
// M(V) pointed at the zero vector.
PointedMatroid VectorSpaceMatroid(const Field& field, int dim);

// f is dim(b) x dim(a). Column i of a goes to the first column of b equal to
// f times it; throws SupportViolation when there is none and NotStrong when
// the resulting function is not strong.
StrongMap LinearStrongMap(const MatrixRows& f, const LinearRep& a,
                          const LinearRep& b);
// f times v.
Vector Apply(const Field& field, const MatrixRows& f, const Vector& v);

// r(A[J]) - r(A[I]) <= r(B[J]) - r(B[I]) for all I within J, where the
// columns of a and b correspond by position.
bool RankInequalityHolds(const LinearRep& a, const LinearRep& b);

struct StrongVsLinear {
  int strong = 0;
  int linear = 0;
  // Strong self-maps of M(V) that are not linear, as tables over the
  // columns of FullSpace.
  std::vector<std::vector<int>> witnesses;
};
StrongVsLinear StrongnessVsLinearity(const Field& field, int dim);
// The matrix of a function on FullSpace(field, dim), if it is linear.
std::optional<MatrixRows> AsLinearMap(const Field& field, int dim,
                                      const std::vector<int>& table);

struct ScalarTest {
  bool equal_lattice_action = false;
  // Some beta with g = beta f.
  std::optional<Rational> scalar;
};
// f, g: field^n -> field^m over a finite field, compared through
// L(M(f)) and L(M(g)) on the full spaces.
ScalarTest LatticeScalarTest(const Field& field, const MatrixRows& f,
                             const MatrixRows& g);

struct Edge {
  std::string id;
  // One vertex for a loop edge, two otherwise.
  std::vector<int> ends;
};

struct Graph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
};

// Independent sets are the acyclic edge sets.
Matroid CycleMatroid(const Graph& g);
Graph DisjointUnion(const Graph& g, const Graph& h);
// f o theta = theta' o g and |theta'(g e)| <= |theta e|.
bool IsGraphMorphism(const Graph& g, const Graph& h,
                     const std::vector<int>& on_vertices,
                     const std::vector<int>& on_edges);

// { "field": "gf2", "columns": [[...], ...], "labels": [...] }. Entries are
// integers or "p/q" strings.
LinearRep MatrixFromJson(const nlohmann::ordered_json& doc);
nlohmann::ordered_json ToJson(const LinearRep& a);
// { "vertices": [...], "edges": [{"id": "e1", "ends": ["u", "v"]}, ...] }.
Graph GraphFromJson(const nlohmann::ordered_json& doc);
nlohmann::ordered_json ToJson(const Graph& g);

}  // namespace matroidcat

#endif  // MATROIDCAT_REPRESENT_HPP_
