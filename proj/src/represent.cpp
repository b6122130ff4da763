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

#include "matroidcat/represent.hpp"

#include <numeric>
#include <set>

#include "matroidcat/glat.hpp"
#include "matroidcat/io.hpp"

namespace matroidcat {

namespace {

bool IsPrime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int ToInt(const Rational& x) {
  return static_cast<int>(boost::multiprecision::numerator(x));
}

constexpr int kGF4Log[4] = {-1, 0, 1, 2};
constexpr int kGF4Exp[3] = {1, 2, 3};

std::string ElementName(const Rational& x) {
  return x.str();
}

}  // namespace

Field Field::Prime(int p) {
  if (p > 13 || !IsPrime(p)) {
    throw std::invalid_argument("prime fields are GF(p) for primes p <= 13");
  }
  return Field(p, false);
}

Field Field::GF4() { return Field(4, true); }

Field Field::Rationals() { return Field(0, false); }

Field Field::Parse(const std::string& name) {
  if (name == "q") return Rationals();
  if (name == "gf4") return GF4();
  if (name.size() > 2 && name.compare(0, 2, "gf") == 0) {
    std::string digits = name.substr(2);
    if (digits.find_first_not_of("0123456789") == std::string::npos) {
      return Prime(std::stoi(digits));
    }
  }
  throw std::invalid_argument("unknown field '" + name + "'");
}

std::string Field::name() const {
  if (!finite()) return "q";
  return "gf" + std::to_string(order_);
}

Rational Field::normalize(const Rational& x) const {
  if (!finite()) return x;
  if (boost::multiprecision::denominator(x) != 1) {
    throw std::invalid_argument("finite field entries must be integers");
  }
  if (gf4_) {
    int v = ToInt(x);
    if (v < 0 || v > 3) throw std::invalid_argument("GF(4) entries are 0..3");
    return v;
  }
  boost::multiprecision::cpp_int n = boost::multiprecision::numerator(x);
  n %= order_;
  if (n < 0) n += order_;
  return Rational(n);
}

Rational Field::add(const Rational& a, const Rational& b) const {
  if (gf4_) return ToInt(a) ^ ToInt(b);
  return normalize(a + b);
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  if (gf4_) return ToInt(a) ^ ToInt(b);
  return normalize(a - b);
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  if (gf4_) {
    int x = ToInt(a), y = ToInt(b);
    if (x == 0 || y == 0) return 0;
    return kGF4Exp[(kGF4Log[x] + kGF4Log[y]) % 3];
  }
  return normalize(a * b);
}

Rational Field::inv(const Rational& a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (!finite()) return 1 / a;
  if (gf4_) return kGF4Exp[(3 - kGF4Log[ToInt(a)]) % 3];
  int x = ToInt(a);
  for (int y = 1; y < order_; ++y) {
    if ((x * y) % order_ == 1) return y;
  }
  throw std::domain_error("no inverse");
}

std::vector<Rational> Field::elements() const {
  std::vector<Rational> out;
  for (int i = 0; i < order_; ++i) out.push_back(i);
  return out;
}

void Validate(const LinearRep& a) {
  if (a.labels.size() != a.columns.size()) {
    throw DimensionMismatch("one label per column is required");
  }
  if (a.columns.size() > static_cast<size_t>(kMaxGround)) {
    throw DimensionMismatch("more than 16 columns");
  }
  for (const Vector& c : a.columns) {
    if (static_cast<int>(c.size()) != a.dim) {
      throw DimensionMismatch("column length differs from the dimension");
    }
  }
  std::set<std::string> seen(a.labels.begin(), a.labels.end());
  if (seen.size() != a.labels.size()) {
    throw std::invalid_argument("duplicate column label");
  }
}

int MatrixRank(const Field& field, std::vector<Vector> columns) {
  if (columns.empty()) return 0;
  const int dim = static_cast<int>(columns[0].size());
  int rank = 0;
  // Eliminate on rows of the transpose: each column is a row here.
  for (int j = 0; j < dim && rank < static_cast<int>(columns.size()); ++j) {
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(columns.size()); ++i) {
      if (columns[i][j] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(columns[rank], columns[pivot]);
    Rational inv = field.inv(columns[rank][j]);
    for (int i = rank + 1; i < static_cast<int>(columns.size()); ++i) {
      if (columns[i][j] == 0) continue;
      Rational factor = field.mul(columns[i][j], inv);
      for (int k = j; k < dim; ++k) {
        columns[i][k] = field.sub(columns[i][k],
                                  field.mul(factor, columns[rank][k]));
      }
    }
    ++rank;
  }
  return rank;
}

Matroid ColumnMatroid(const LinearRep& a) {
  Validate(a);
  const int n = static_cast<int>(a.columns.size());
  std::vector<Vector> cols;
  for (const Vector& c : a.columns) {
    Vector v;
    for (const Rational& x : c) v.push_back(a.field.normalize(x));
    cols.push_back(std::move(v));
  }
  std::vector<int> rank(size_t{1} << n, 0);
  for (Mask x = 1; x <= FullMask(n); ++x) {
    std::vector<Vector> sel;
    for (int i = 0; i < n; ++i) {
      if (x & Bit(i)) sel.push_back(cols[i]);
    }
    rank[x] = MatrixRank(a.field, std::move(sel));
  }
  return Matroid::FromRank(GroundSet(a.labels), rank);
}

LinearRep FullSpace(const Field& field, int dim) {
  if (!field.finite()) throw std::invalid_argument("full space needs a finite field");
  LinearRep out;
  out.field = field;
  out.dim = dim;
  long long count = 1;
  for (int i = 0; i < dim; ++i) count *= field.order();
  if (count > kMaxGround) throw DimensionMismatch("more than 16 vectors");
  for (long long k = 0; k < count; ++k) {
    Vector v(dim);
    long long r = k;
    for (int i = dim - 1; i >= 0; --i) {
      v[i] = static_cast<int>(r % field.order());
      r /= field.order();
    }
    std::string label;
    for (int i = 0; i < dim; ++i) {
      if (i > 0 && field.order() > 10) label += ",";
      label += ElementName(v[i]);
    }
    if (dim == 0) label = "0";
    out.columns.push_back(std::move(v));
    out.labels.push_back(std::move(label));
  }
  return out;
}

PointedMatroid VectorSpaceMatroid(const Field& field, int dim) {
  return PointedMatroid(ColumnMatroid(FullSpace(field, dim)), 0);
}

Vector Apply(const Field& field, const MatrixRows& f, const Vector& v) {
  Vector out;
  for (const auto& row : f) {
    if (row.size() != v.size()) throw DimensionMismatch("matrix shape");
    Rational s = 0;
    for (size_t j = 0; j < v.size(); ++j) {
      s = field.add(s, field.mul(field.normalize(row[j]), v[j]));
    }
    out.push_back(s);
  }
  return out;
}

StrongMap LinearStrongMap(const MatrixRows& f, const LinearRep& a,
                          const LinearRep& b) {
  Validate(a);
  Validate(b);
  if (!(a.field == b.field)) throw DimensionMismatch("fields differ");
  if (static_cast<int>(f.size()) != b.dim) {
    throw DimensionMismatch("matrix rows must equal the codomain dimension");
  }
  std::vector<Vector> bcols;
  for (const Vector& c : b.columns) {
    Vector v;
    for (const Rational& x : c) v.push_back(b.field.normalize(x));
    bcols.push_back(std::move(v));
  }
  std::vector<int> table;
  for (size_t i = 0; i < a.columns.size(); ++i) {
    Vector v;
    for (const Rational& x : a.columns[i]) v.push_back(a.field.normalize(x));
    Vector image = b.dim == 0 ? Vector{} : Apply(a.field, f, v);
    auto it = std::find(bcols.begin(), bcols.end(), image);
    if (it == bcols.end()) {
      throw SupportViolation("image of column '" + a.labels[i] +
                             "' is not a column of the codomain");
    }
    table.push_back(static_cast<int>(it - bcols.begin()));
  }
  return StrongMap(ColumnMatroid(a), ColumnMatroid(b), std::move(table));
}

bool RankInequalityHolds(const LinearRep& a, const LinearRep& b) {
  if (a.columns.size() != b.columns.size()) {
    throw DimensionMismatch("column counts differ");
  }
  Matroid ma = ColumnMatroid(a);
  Matroid mb = ColumnMatroid(b);
  for (Mask j = 0; j <= ma.full(); ++j) {
    bool ok = true;
    ForEachSubset(j, [&](Mask i) {
      if (ma.rank(j) - ma.rank(i) > mb.rank(j) - mb.rank(i)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::optional<MatrixRows> AsLinearMap(const Field& field, int dim,
                                      const std::vector<int>& table) {
  LinearRep v = FullSpace(field, dim);
  auto index_of = [&](const Vector& x) {
    return static_cast<int>(std::find(v.columns.begin(), v.columns.end(), x) -
                            v.columns.begin());
  };
  // Column j of the matrix is the image of the j-th unit vector.
  MatrixRows f(dim, std::vector<Rational>(dim, 0));
  for (int j = 0; j < dim; ++j) {
    Vector e(dim, 0);
    e[j] = 1;
    const Vector& img = v.columns[table[index_of(e)]];
    for (int i = 0; i < dim; ++i) f[i][j] = img[i];
  }
  for (size_t k = 0; k < v.columns.size(); ++k) {
    if (index_of(Apply(field, f, v.columns[k])) != table[k]) return std::nullopt;
  }
  return f;
}

StrongVsLinear StrongnessVsLinearity(const Field& field, int dim) {
  PointedMatroid m = VectorSpaceMatroid(field, dim);
  StrongVsLinear out;
  std::set<std::vector<int>> linear_tables;
  // Every matrix over the field.
  const int q = field.order();
  long long count = 1;
  for (int i = 0; i < dim * dim; ++i) count *= q;
  LinearRep v = FullSpace(field, dim);
  for (long long k = 0; k < count; ++k) {
    MatrixRows f(dim, std::vector<Rational>(dim, 0));
    long long r = k;
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        f[i][j] = static_cast<int>(r % q);
        r /= q;
      }
    }
    std::vector<int> table;
    for (const Vector& c : v.columns) {
      Vector img = Apply(field, f, c);
      table.push_back(static_cast<int>(
          std::find(v.columns.begin(), v.columns.end(), img) -
          v.columns.begin()));
    }
    linear_tables.insert(table);
  }
  out.linear = static_cast<int>(linear_tables.size());
  for (const StrongMap& f : EnumerateHoms(m.base(), m.base())) {
    ++out.strong;
    if (!linear_tables.count(f.table())) out.witnesses.push_back(f.table());
  }
  return out;
}

ScalarTest LatticeScalarTest(const Field& field, const MatrixRows& f,
                             const MatrixRows& g) {
  if (f.size() != g.size() || f.empty() || f[0].size() != g[0].size()) {
    throw DimensionMismatch("maps must have the same shape");
  }
  const int m = static_cast<int>(f.size());
  const int n = static_cast<int>(f[0].size());
  LinearRep v = FullSpace(field, n);
  LinearRep w = FullSpace(field, m);
  StrongMap mf = LinearStrongMap(f, v, w);
  StrongMap mg = LinearStrongMap(g, v, w);
  ScalarTest out;
  out.equal_lattice_action = LMorphism(mf).table() == LMorphism(mg).table();
  for (const Rational& beta : field.elements()) {
    if (beta == 0) continue;
    bool same = true;
    for (int i = 0; i < m && same; ++i) {
      for (int j = 0; j < n && same; ++j) {
        same = field.normalize(g[i][j]) ==
               field.mul(beta, field.normalize(f[i][j]));
      }
    }
    if (same) {
      out.scalar = beta;
      break;
    }
  }
  return out;
}

Matroid CycleMatroid(const Graph& g) {
  const int n = static_cast<int>(g.edges.size());
  if (n > kMaxGround) throw DimensionMismatch("more than 16 edges");
  std::vector<std::string> labels;
  for (const Edge& e : g.edges) {
    if (e.ends.empty() || e.ends.size() > 2) {
      throw std::invalid_argument("edges have one or two ends");
    }
    for (int v : e.ends) {
      if (v < 0 || v >= static_cast<int>(g.vertices.size())) {
        throw std::invalid_argument("edge end out of range");
      }
    }
    labels.push_back(e.id);
  }
  std::vector<int> rank(size_t{1} << n, 0);
  for (Mask x = 1; x <= FullMask(n); ++x) {
    std::vector<int> parent(g.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    int r = 0;
    for (int i = 0; i < n; ++i) {
      if (!(x & Bit(i)) || g.edges[i].ends.size() < 2) continue;
      int a = find(g.edges[i].ends[0]), b = find(g.edges[i].ends[1]);
      if (a != b) {
        parent[a] = b;
        ++r;
      }
    }
    rank[x] = r;
  }
  return Matroid::FromRank(GroundSet(labels), rank);
}

Graph DisjointUnion(const Graph& g, const Graph& h) {
  Graph out = g;
  const int offset = static_cast<int>(g.vertices.size());
  std::set<std::string> vnames(g.vertices.begin(), g.vertices.end());
  for (std::string v : h.vertices) {
    while (vnames.count(v)) v += "'";
    vnames.insert(v);
    out.vertices.push_back(v);
  }
  std::set<std::string> enames;
  for (const Edge& e : g.edges) enames.insert(e.id);
  for (Edge e : h.edges) {
    while (enames.count(e.id)) e.id += "'";
    enames.insert(e.id);
    for (int& v : e.ends) v += offset;
    out.edges.push_back(e);
  }
  return out;
}

bool IsGraphMorphism(const Graph& g, const Graph& h,
                     const std::vector<int>& on_vertices,
                     const std::vector<int>& on_edges) {
  if (on_vertices.size() != g.vertices.size() ||
      on_edges.size() != g.edges.size()) {
    return false;
  }
  for (size_t i = 0; i < g.edges.size(); ++i) {
    int target = on_edges[i];
    if (target < 0 || target >= static_cast<int>(h.edges.size())) return false;
    std::set<int> image;
    for (int v : g.edges[i].ends) image.insert(on_vertices[v]);
    std::set<int> ends(h.edges[target].ends.begin(),
                       h.edges[target].ends.end());
    if (image != ends) return false;
    if (ends.size() > std::set<int>(g.edges[i].ends.begin(),
                                    g.edges[i].ends.end()).size()) {
      return false;
    }
  }
  return true;
}

LinearRep MatrixFromJson(const Json& doc) {
  LinearRep out;
  try {
    out.field = Field::Parse(doc.at("field").get<std::string>());
  } catch (const Json::exception& e) {
    throw ParseError("matrix needs a string 'field'");
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (!doc.contains("columns") || !doc.at("columns").is_array()) {
    throw ParseError("matrix needs a 'columns' array");
  }
  for (const Json& col : doc.at("columns")) {
    if (!col.is_array()) throw ParseError("columns must be arrays");
    Vector v;
    for (const Json& x : col) {
      if (x.is_number_integer()) {
        v.push_back(Rational(x.get<long long>()));
      } else if (x.is_string()) {
        try {
          v.push_back(Rational(x.get<std::string>()));
        } catch (const std::exception&) {
          throw ParseError("bad entry '" + x.get<std::string>() + "'");
        }
      } else {
        throw ParseError("entries are integers or \"p/q\" strings");
      }
    }
    out.columns.push_back(std::move(v));
  }
  out.dim = out.columns.empty() ? 0 : static_cast<int>(out.columns[0].size());
  if (doc.contains("dim")) out.dim = doc.at("dim").get<int>();
  if (doc.contains("labels")) {
    for (const Json& l : doc.at("labels")) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      out.labels.push_back(l.get<std::string>());
    }
  } else {
    for (size_t i = 0; i < out.columns.size(); ++i) {
      out.labels.push_back(std::to_string(i));
    }
  }
  try {
    Validate(out);
    for (Vector& c : out.columns) {
      for (Rational& x : c) x = out.field.normalize(x);
    }
  } catch (const std::invalid_argument& e) {
    throw ValidationError("matrix", e.what());
  }
  return out;
}

Json ToJson(const LinearRep& a) {
  Json out;
  out["kind"] = "matrix";
  out["field"] = a.field.name();
  Json cols = Json::array();
  for (const Vector& c : a.columns) {
    Json col = Json::array();
    for (const Rational& x : c) {
      if (boost::multiprecision::denominator(x) == 1) {
        col.push_back(boost::multiprecision::numerator(x).convert_to<long long>());
      } else {
        col.push_back(x.str());
      }
    }
    cols.push_back(col);
  }
  out["columns"] = cols;
  out["labels"] = a.labels;
  return out;
}

Graph GraphFromJson(const Json& doc) {
  Graph g;
  if (!doc.contains("vertices") || !doc.at("vertices").is_array() ||
      !doc.contains("edges") || !doc.at("edges").is_array()) {
    throw ParseError("graph needs 'vertices' and 'edges' arrays");
  }
  for (const Json& v : doc.at("vertices")) {
    if (!v.is_string()) throw ParseError("vertices must be strings");
    g.vertices.push_back(v.get<std::string>());
  }
  for (const Json& e : doc.at("edges")) {
    if (!e.is_object() || !e.contains("id") || !e.contains("ends")) {
      throw ParseError("edges need 'id' and 'ends'");
    }
    Edge edge;
    edge.id = e.at("id").get<std::string>();
    std::set<int> ends;
    for (const Json& v : e.at("ends")) {
      auto it = std::find(g.vertices.begin(), g.vertices.end(),
                          v.get<std::string>());
      if (it == g.vertices.end()) {
        throw ParseError("unknown vertex '" + v.get<std::string>() + "'");
      }
      ends.insert(static_cast<int>(it - g.vertices.begin()));
    }
    if (ends.empty() || ends.size() > 2) {
      throw ParseError("edges have one or two ends");
    }
    edge.ends.assign(ends.begin(), ends.end());
    g.edges.push_back(std::move(edge));
  }
  return g;
}

Json ToJson(const Graph& g) {
  Json out;
  out["kind"] = "graph";
  out["vertices"] = g.vertices;
  Json edges = Json::array();
  for (const Edge& e : g.edges) {
    Json ends = Json::array();
    for (int v : e.ends) ends.push_back(g.vertices[v]);
    edges.push_back({{"id", e.id}, {"ends", ends}});
  }
  out["edges"] = edges;
  return out;
}

}  // namespace matroidcat
