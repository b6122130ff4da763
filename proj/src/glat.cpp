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

#include "matroidcat/glat.hpp"

#include <algorithm>
#include <numeric>

namespace matroidcat {

namespace {

// Least element of candidates under leq, or -1.
int Least(const std::vector<int>& candidates,
          const std::vector<std::vector<bool>>& leq) {
  for (int u : candidates) {
    bool least = true;
    for (int v : candidates) {
      if (!leq[u][v]) {
        least = false;
        break;
      }
    }
    if (least) return u;
  }
  return -1;
}

}  // namespace

Lattice Lattice::FromTables(std::vector<std::string> names,
                            std::vector<int> join, std::vector<int> meet) {
  auto data = std::make_shared<Data>();
  int n = static_cast<int>(names.size());
  data->names = std::move(names);
  data->join = std::move(join);
  data->meet = std::move(meet);
  int bottom = 0, top = 0;
  for (int x = 1; x < n; ++x) {
    bottom = data->meet[bottom * n + x];
    top = data->join[top * n + x];
  }
  data->bottom = bottom;
  data->top = top;
  // Process elements by the size of their down-set.
  std::vector<int> below(n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (data->join[y * n + x] == x) ++below[x];
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return below[a] < below[b]; });
  data->height.assign(n, 0);
  for (int x : order) {
    for (int y = 0; y < n; ++y) {
      if (y != x && data->join[y * n + x] == x) {
        data->height[x] = std::max(data->height[x], data->height[y] + 1);
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    if (data->height[x] == 1) data->atoms.push_back(x);
  }
  Lattice l;
  l.data_ = std::move(data);
  return l;
}

Lattice Lattice::FromLeq(std::vector<std::string> names,
                         const std::vector<std::vector<bool>>& leq) {
  int n = static_cast<int>(names.size());
  if (n == 0) throw NotALattice("a lattice has at least one element");
  if (static_cast<int>(leq.size()) != n) {
    throw NotALattice("order matrix size differs from element count");
  }
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(leq[x].size()) != n) {
      throw NotALattice("order matrix is not square");
    }
    if (!leq[x][x]) throw NotALattice("order is not reflexive");
    for (int y = 0; y < n; ++y) {
      if (x != y && leq[x][y] && leq[y][x]) {
        throw NotALattice("order is not antisymmetric");
      }
      for (int z = 0; z < n; ++z) {
        if (leq[x][y] && leq[y][z] && !leq[x][z]) {
          throw NotALattice("order is not transitive");
        }
      }
    }
  }
  std::vector<int> join(n * n), meet(n * n);
  std::vector<std::vector<bool>> geq(n, std::vector<bool>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) geq[x][y] = leq[y][x];
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      std::vector<int> upper, lower;
      for (int z = 0; z < n; ++z) {
        if (leq[x][z] && leq[y][z]) upper.push_back(z);
        if (leq[z][x] && leq[z][y]) lower.push_back(z);
      }
      int j = Least(upper, leq);
      int m = Least(lower, geq);
      if (j < 0 || m < 0) {
        throw NotALattice("elements " + names[x] + " and " + names[y] +
                          " lack a join or meet");
      }
      join[x * n + y] = j;
      meet[x * n + y] = m;
    }
  }
  return FromTables(std::move(names), std::move(join), std::move(meet));
}

Lattice Lattice::FromCovers(std::vector<std::string> names,
                            const std::vector<std::pair<int, int>>& covers) {
  int n = static_cast<int>(names.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) leq[x][x] = true;
  for (auto [lo, hi] : covers) {
    if (lo < 0 || hi < 0 || lo >= n || hi >= n) {
      throw NotALattice("cover refers to an unknown element");
    }
    leq[lo][hi] = true;
  }
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      if (!leq[x][k]) continue;
      for (int y = 0; y < n; ++y) {
        if (leq[k][y]) leq[x][y] = true;
      }
    }
  }
  return FromLeq(std::move(names), leq);
}

int Lattice::find(std::string_view name) const {
  for (int x = 0; x < size(); ++x) {
    if (data_->names[x] == name) return x;
  }
  return -1;
}

std::vector<std::pair<int, int>> Lattice::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size(); ++x) {
    for (int y = 0; y < size(); ++y) {
      if (x == y || !leq(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < size() && cover; ++z) {
        if (z != x && z != y && leq(x, z) && leq(z, y)) cover = false;
      }
      if (cover) out.emplace_back(x, y);
    }
  }
  return out;
}

int Lattice::join_all(const std::vector<int>& xs) const {
  int out = bottom();
  for (int x : xs) out = join(out, x);
  return out;
}

bool Lattice::operator==(const Lattice& other) const {
  return data_ == other.data_ ||
         (names() == other.names() && data_->join == other.data_->join);
}

bool IsGeometric(const Lattice& l) {
  for (int x = 0; x < l.size(); ++x) {
    int j = l.bottom();
    for (int a : l.atoms()) {
      if (l.leq(a, x)) j = l.join(j, a);
    }
    if (j != x) return false;
  }
  for (auto [x, y] : l.covers()) {
    if (l.height(y) != l.height(x) + 1) return false;
  }
  for (int x = 0; x < l.size(); ++x) {
    for (int y = 0; y < l.size(); ++y) {
      if (l.height(x) + l.height(y) <
          l.height(l.join(x, y)) + l.height(l.meet(x, y))) {
        return false;
      }
    }
  }
  return true;
}

GeometricLattice::GeometricLattice(Lattice l) : Lattice(std::move(l)) {
  if (!IsGeometric(*this)) {
    throw NotGeometric("lattice is not atomistic and semimodular");
  }
}

namespace {

bool ExtendIsomorphism(const Lattice& a, const Lattice& b,
                       const std::vector<int>& order, size_t pos,
                       std::vector<int>& phi, std::vector<bool>& used) {
  if (pos == order.size()) return true;
  int x = order[pos];
  for (int y = 0; y < b.size(); ++y) {
    if (used[y] || b.height(y) != a.height(x)) continue;
    bool ok = true;
    for (size_t k = 0; k < pos && ok; ++k) {
      int w = order[k];
      if (a.leq(w, x) != b.leq(phi[w], y) || a.leq(x, w) != b.leq(y, phi[w])) {
        ok = false;
      }
    }
    if (!ok) continue;
    phi[x] = y;
    used[y] = true;
    if (ExtendIsomorphism(a, b, order, pos + 1, phi, used)) return true;
    used[y] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> FindIsomorphism(const Lattice& a,
                                                const Lattice& b) {
  if (a.size() != b.size() || a.atoms().size() != b.atoms().size() ||
      a.height() != b.height()) {
    return std::nullopt;
  }
  std::vector<int> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a.height(x) < a.height(y); });
  std::vector<int> phi(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  if (!ExtendIsomorphism(a, b, order, 0, phi, used)) return std::nullopt;
  return phi;
}

bool IsGLatMorphism(const GeometricLattice& dom, const GeometricLattice& cod,
                    const std::vector<int>& table) {
  if (static_cast<int>(table.size()) != dom.size()) return false;
  for (int v : table) {
    if (v < 0 || v >= cod.size()) return false;
  }
  if (table[dom.bottom()] != cod.bottom()) return false;
  for (int a : dom.atoms()) {
    if (cod.height(table[a]) > 1) return false;
  }
  for (int x = 0; x < dom.size(); ++x) {
    for (int y = x + 1; y < dom.size(); ++y) {
      if (table[dom.join(x, y)] != cod.join(table[x], table[y])) return false;
    }
  }
  return true;
}

GLatMorphism::GLatMorphism(GeometricLattice dom, GeometricLattice cod,
                           std::vector<int> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (!IsGLatMorphism(dom_, cod_, table_)) {
    throw NotAMorphism("function does not preserve joins, bottom and atoms");
  }
}

GLatMorphism GLatMorphism::FromAtoms(GeometricLattice dom,
                                     GeometricLattice cod,
                                     const std::vector<int>& atom_images) {
  if (atom_images.size() != dom.atoms().size()) {
    throw NotAMorphism("one image per atom is required");
  }
  for (int v : atom_images) {
    if (v < 0 || v >= cod.size()) {
      throw NotAMorphism("atom image outside the codomain");
    }
  }
  std::vector<int> table(dom.size(), cod.bottom());
  for (int x = 0; x < dom.size(); ++x) {
    for (size_t k = 0; k < dom.atoms().size(); ++k) {
      if (dom.leq(dom.atoms()[k], x)) {
        table[x] = cod.join(table[x], atom_images[k]);
      }
    }
  }
  return GLatMorphism(std::move(dom), std::move(cod), std::move(table));
}

GLatMorphism GLatMorphism::Identity(const GeometricLattice& l) {
  std::vector<int> table(l.size());
  std::iota(table.begin(), table.end(), 0);
  return GLatMorphism(l, l, std::move(table));
}

GLatMorphism Compose(const GLatMorphism& g, const GLatMorphism& f) {
  if (!(f.cod() == g.dom())) {
    throw DomainMismatch("codomain of f is not the domain of g");
  }
  std::vector<int> table(f.dom().size());
  for (int x = 0; x < f.dom().size(); ++x) table[x] = g(f(x));
  return GLatMorphism(f.dom(), g.cod(), std::move(table));
}

std::vector<GLatMorphism> EnumerateGLatHoms(const GeometricLattice& a,
                                            const GeometricLattice& b) {
  std::vector<int> targets = {b.bottom()};
  for (int y : b.atoms()) targets.push_back(y);
  size_t k = a.atoms().size();
  std::vector<size_t> idx(k, 0);
  std::vector<GLatMorphism> out;
  std::vector<int> images(k);
  while (true) {
    for (size_t i = 0; i < k; ++i) images[i] = targets[idx[i]];
    std::vector<int> table(a.size(), b.bottom());
    for (int x = 0; x < a.size(); ++x) {
      for (size_t i = 0; i < k; ++i) {
        if (a.leq(a.atoms()[i], x)) table[x] = b.join(table[x], images[i]);
      }
    }
    if (IsGLatMorphism(a, b, table)) out.emplace_back(a, b, std::move(table));
    size_t i = 0;
    while (i < k && ++idx[i] == targets.size()) idx[i++] = 0;
    if (i == k) break;
  }
  return out;
}

bool IsSurjective(const GLatMorphism& g) {
  std::vector<bool> hit(g.cod().size(), false);
  for (int v : g.table()) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

bool IsEmbedding(const GLatMorphism& g) {
  const GeometricLattice& b = g.cod();
  int top = g(g.dom().top());
  std::vector<int> seen(b.size(), 0);
  for (int v : g.table()) {
    if (seen[v]++) return false;
  }
  for (int y = 0; y < b.size(); ++y) {
    if (b.leq(y, top) && !seen[y]) return false;
  }
  return true;
}

bool IsContraction(const GLatMorphism& g) {
  const GeometricLattice& a = g.dom();
  const GeometricLattice& b = g.cod();
  int z = a.bottom();
  for (int x = 0; x < a.size(); ++x) {
    if (g(x) == b.bottom()) z = a.join(z, x);
  }
  std::vector<int> seen(b.size(), 0);
  for (int x = 0; x < a.size(); ++x) {
    if (a.leq(z, x) && seen[g(x)]++) return false;
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

GeometricLattice LObject(const Matroid& m) {
  const std::vector<Mask>& flats = m.flats();
  int n = static_cast<int>(flats.size());
  std::vector<int> index(std::size_t{1} << m.size(), -1);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    index[flats[i]] = i;
    names.push_back(m.ground().format(flats[i]));
  }
  std::vector<int> join(n * n), meet(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      join[i * n + j] = index[m.closure(flats[i] | flats[j])];
      meet[i * n + j] = index[flats[i] & flats[j]];
    }
  }
  return GeometricLattice(
      Lattice::FromTables(std::move(names), std::move(join), std::move(meet)),
      GeometricLattice::Trusted{});
}

GLatMorphism LMorphism(const StrongMap& f) {
  return GLatMorphism(LObject(f.dom()), LObject(f.cod()),
                      LatticeAction(f.table(), f.dom(), f.cod()));
}

PointedMatroid SObject(const GeometricLattice& g) {
  std::string point(kPointLabel);
  auto clash = [&]() {
    for (int a : g.atoms()) {
      if (g.name(a) == point) return true;
    }
    return false;
  };
  while (clash()) point += "'";
  std::vector<std::string> labels = {point};
  for (int a : g.atoms()) labels.push_back(g.name(a));
  std::vector<Mask> flats;
  for (int x = 0; x < g.size(); ++x) {
    Mask f = Bit(0);
    for (size_t k = 0; k < g.atoms().size(); ++k) {
      if (g.leq(g.atoms()[k], x)) f |= Bit(static_cast<int>(k) + 1);
    }
    flats.push_back(f);
  }
  return PointedMatroid(
      Matroid::FromFlats(GroundSet(std::move(labels)), std::move(flats)), 0);
}

StrongMap SMorphism(const GLatMorphism& g) {
  PointedMatroid dom = SObject(g.dom());
  PointedMatroid cod = SObject(g.cod());
  const auto& cod_atoms = g.cod().atoms();
  std::vector<int> table = {0};
  for (int a : g.dom().atoms()) {
    int y = g(a);
    auto it = std::find(cod_atoms.begin(), cod_atoms.end(), y);
    table.push_back(it == cod_atoms.end()
                        ? 0
                        : static_cast<int>(it - cod_atoms.begin()) + 1);
  }
  return StrongMap(dom, cod, std::move(table));
}

bool IsPointedSimple(const PointedMatroid& m) {
  const Matroid& b = m.base();
  if (b.loops() != m.point_mask()) return false;
  for (int i = 0; i < b.size(); ++i) {
    for (int j = i + 1; j < b.size(); ++j) {
      if (i != m.point() && j != m.point() && b.rank(Bit(i) | Bit(j)) < 2) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Kept elements of the simplification, and for each element of m the index
// of its image in the simplification.
struct Collapse {
  Mask keep = 0;
  std::vector<int> image;
};

Collapse CollapseOf(const PointedMatroid& m) {
  const Matroid& b = m.base();
  Collapse c;
  c.keep = m.point_mask();
  std::vector<int> rep(b.size(), -1);
  for (int i = 0; i < b.size(); ++i) {
    if (b.loops() & Bit(i)) {
      rep[i] = m.point();
      continue;
    }
    for (int j = 0; j < i; ++j) {
      if (rep[j] == j && b.closure(Bit(j)) == b.closure(Bit(i))) rep[i] = j;
    }
    if (rep[i] < 0) {
      rep[i] = i;
      c.keep |= Bit(i);
    }
  }
  // Position of each kept element inside the restriction.
  std::vector<int> position(b.size(), -1);
  int next = 0;
  for (int i = 0; i < b.size(); ++i) {
    if (c.keep & Bit(i)) position[i] = next++;
  }
  for (int i = 0; i < b.size(); ++i) c.image.push_back(position[rep[i]]);
  return c;
}

}  // namespace

Simplification Simplify(const PointedMatroid& m) {
  Collapse c = CollapseOf(m);
  PointedMatroid si(m.base().restriction(c.keep), c.image[m.point()]);
  return {si, StrongMap(m, si, c.image)};
}

StrongMap SimplifyMap(const StrongMap& f) {
  if (!f.pointed()) {
    throw std::invalid_argument("simplification acts on pointed maps");
  }
  PointedMatroid dom = f.pointed_dom();
  PointedMatroid cod = f.pointed_cod();
  Collapse cd = CollapseOf(dom);
  Collapse cc = CollapseOf(cod);
  PointedMatroid si_dom(dom.base().restriction(cd.keep), cd.image[dom.point()]);
  PointedMatroid si_cod(cod.base().restriction(cc.keep), cc.image[cod.point()]);
  std::vector<int> table;
  for (int i = 0; i < dom.base().size(); ++i) {
    if (cd.keep & Bit(i)) table.push_back(cc.image[f(i)]);
  }
  return StrongMap(si_dom, si_cod, std::move(table));
}

StrongMap SimplifyMultiplication(const PointedMatroid& m) {
  PointedMatroid si = Simplify(m).si;
  PointedMatroid si_si = Simplify(si).si;
  std::vector<int> table(si.base().size());
  std::iota(table.begin(), table.end(), 0);
  return StrongMap(si_si, si, std::move(table));
}

namespace {

// Height of the join of the atoms of l selected by bits of x.
int JoinHeight(const Lattice& l, const std::vector<int>& atoms, Mask x,
               int extra = -1) {
  int j = extra < 0 ? l.bottom() : extra;
  for (size_t k = 0; k < atoms.size(); ++k) {
    if (x & Bit(static_cast<int>(k))) j = l.join(j, atoms[k]);
  }
  return l.height(j);
}

bool CandidateMatches(const GeometricLattice& dom,
                      const std::vector<int>& candidate,
                      const GeometricLattice& middle) {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(candidate.size(),
                                     std::vector<bool>(candidate.size()));
  for (size_t i = 0; i < candidate.size(); ++i) {
    names.push_back(dom.name(candidate[i]));
    for (size_t j = 0; j < candidate.size(); ++j) {
      leq[i][j] = dom.leq(candidate[i], candidate[j]);
    }
  }
  try {
    Lattice l = Lattice::FromLeq(std::move(names), leq);
    return IsGeometric(l) && FindIsomorphism(l, middle).has_value();
  } catch (const NotALattice&) {
    return false;
  }
}

}  // namespace

// Writes dom atoms as a simple matroid M, the codomain atoms missed by g as
// N, and the matroid Q on the union whose flats are preimages of flats of the
// codomain. The identity M + N -> Q is a quotient of nullity n, and
//   r_P(X u W) = min(r_{M+N}(X) + |W|, r_Q(X) + k),  W subset Z, |Z| = k >= n
// defines a major P with P|(M+N) = M+N and P/Z = Q. The lift k is raised
// until dom becomes a flat of P; k = h(dom) + 1 always suffices.
GLatFactorization GLatFactor(const GLatMorphism& g) {
  const GeometricLattice& a = g.dom();
  const GeometricLattice& b = g.cod();

  std::vector<int> candidate;
  for (int x = 0; x < a.size(); ++x) {
    int j = a.bottom();
    for (int y = 0; y < a.size(); ++y) {
      if (g(y) == g(x)) j = a.join(j, y);
    }
    if (j == x || b.height(g(x)) == a.height(x)) candidate.push_back(x);
  }

  auto finish = [&](GLatMorphism e, GLatMorphism c, int lift) {
    bool matches = CandidateMatches(a, candidate, e.cod());
    return GLatFactorization{std::move(e), std::move(c), lift, candidate,
                             matches};
  };
  if (IsEmbedding(g)) return finish(g, GLatMorphism::Identity(b), 0);
  if (IsContraction(g)) return finish(GLatMorphism::Identity(a), g, 0);

  const std::vector<int>& atoms_a = a.atoms();
  std::vector<int> missed;
  for (int y : b.atoms()) {
    bool hit = false;
    for (int x : atoms_a) hit = hit || g(x) == y;
    if (!hit) missed.push_back(y);
  }
  int ka = static_cast<int>(atoms_a.size());
  int kb = static_cast<int>(missed.size());
  int nullity = a.height() + JoinHeight(b, missed, FullMask(kb)) - b.height();
  for (int k = nullity; k <= a.height() + 1; ++k) {
    int size = ka + kb + k;
    if (size > kMaxGround) {
      throw std::invalid_argument("lattices too large to factor");
    }
    std::vector<std::string> labels;
    for (int x : atoms_a) labels.push_back("d" + a.name(x));
    for (int y : missed) labels.push_back("c" + b.name(y));
    for (int i = 0; i < k; ++i) labels.push_back("z" + std::to_string(i));
    Mask a_part = FullMask(ka);
    std::vector<int> rank(std::size_t{1} << size);
    for (Mask x = 0; x < rank.size(); ++x) {
      Mask xa = x & a_part;
      Mask xb = (x >> ka) & FullMask(kb);
      int w = Popcount(x >> (ka + kb));
      int sum = JoinHeight(a, atoms_a, xa) + JoinHeight(b, missed, xb);
      int image = b.bottom();
      for (int i = 0; i < ka; ++i) {
        if (xa & Bit(i)) image = b.join(image, g(atoms_a[i]));
      }
      int quotient = JoinHeight(b, missed, xb, image);
      rank[x] = std::min(sum + w, quotient + k);
    }
    Matroid p = Matroid::FromRank(GroundSet(std::move(labels)), rank);
    if (!p.is_flat(a_part)) continue;
    GeometricLattice middle = LObject(p);
    const std::vector<Mask>& flats = p.flats();
    auto flat_index = [&](Mask f) {
      return static_cast<int>(std::find(flats.begin(), flats.end(), f) -
                              flats.begin());
    };
    std::vector<int> e_atoms;
    for (int i = 0; i < ka; ++i) e_atoms.push_back(flat_index(p.closure(Bit(i))));
    std::vector<int> c_atoms;
    for (int m : middle.atoms()) {
      int y = b.bottom();
      for (int i = 0; i < size; ++i) {
        if (!(flats[m] & Bit(i))) continue;
        if (i < ka) {
          y = b.join(y, g(atoms_a[i]));
        } else if (i < ka + kb) {
          y = b.join(y, missed[i - ka]);
        }
      }
      c_atoms.push_back(y);
    }
    GLatMorphism e = GLatMorphism::FromAtoms(a, middle, e_atoms);
    GLatMorphism c = GLatMorphism::FromAtoms(middle, b, c_atoms);
    if (IsEmbedding(e) && IsContraction(c) && Compose(c, e) == g) {
      return finish(std::move(e), std::move(c), k);
    }
  }
  throw std::logic_error("no factorization found within the lift bound");
}

}  // namespace matroidcat
