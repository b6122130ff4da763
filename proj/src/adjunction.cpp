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

// Hom-set bijections for the named adjunctions. Morphisms are tables; each
// adjunction supplies hom sets on both sides, the unit, and the functors on
// arrows.

#include <algorithm>
#include <functional>
#include <set>

#include "matroidcat/catlab.hpp"
#include "matroidcat/construct.hpp"
#include "matroidcat/glat.hpp"

namespace matroidcat {

namespace {

using Table = std::vector<int>;
using Tables = std::vector<Table>;

// Endomorphisms used for naturality squares, per object.
constexpr size_t kNaturalityArrows = 3;
// Hom elements per pair pushed through the naturality squares.
constexpr size_t kNaturalityMaps = 4;

Table Then(const Table& g, const Table& f) {
  Table out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

Tables AllFunctions(int m, int n) {
  Tables out;
  if (m > 0 && n == 0) return out;
  Table t(m, 0);
  while (true) {
    out.push_back(t);
    int i = m - 1;
    while (i >= 0 && ++t[i] == n) t[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

Tables Homs(const Matroid& a, const Matroid& b) {
  Tables out;
  for (const StrongMap& f : EnumerateHoms(a, b)) out.push_back(f.table());
  return out;
}

Tables Homs(const PointedMatroid& a, const PointedMatroid& b) {
  Tables out;
  for (const StrongMap& f : EnumerateHoms(a, b)) out.push_back(f.table());
  return out;
}

Tables Homs(const GeometricLattice& a, const GeometricLattice& b) {
  Tables out;
  for (const GLatMorphism& f : EnumerateGLatHoms(a, b)) out.push_back(f.table());
  return out;
}

Table Identity(int n) {
  Table t(n);
  for (int i = 0; i < n; ++i) t[i] = i;
  return t;
}

Tables First(Tables t, size_t k) {
  if (t.size() > k) t.resize(k);
  return t;
}

// Type-erased adjunction L -| R between categories C (left objects X) and
// D (right objects Y).
struct Spec {
  int left_count = 0;
  int right_count = 0;
  std::function<Tables(int x, int y)> hom_lx_y;
  std::function<Tables(int x, int y)> hom_x_ry;
  // X -> R L X.
  std::function<Table(int x)> unit;
  // R(g) : R L X -> R Y for g : L X -> Y.
  std::function<Table(int x, int y, const Table& g)> r_arrow;
  std::function<Tables(int x)> endo_x;
  // L(a) : L X -> L X.
  std::function<Table(int x, const Table& a)> l_endo;
  std::function<Tables(int y)> endo_y;
  // R(b) : R Y -> R Y.
  std::function<Table(int y, const Table& b)> r_endo;
};

AdjunctionReport Run(const Spec& s, std::string left, std::string right) {
  AdjunctionReport rep;
  rep.left = std::move(left);
  rep.right = std::move(right);
  for (int x = 0; x < s.left_count; ++x) {
    const Table eta = s.unit(x);
    const Tables ax = First(s.endo_x(x), kNaturalityArrows);
    for (int y = 0; y < s.right_count; ++y) {
      ++rep.pairs;
      const Tables h1 = s.hom_lx_y(x, y);
      const Tables h2 = s.hom_x_ry(x, y);
      rep.morphisms += h1.size();
      if (h1.size() != h2.size()) ++rep.count_mismatches;
      auto transpose = [&](const Table& g) {
        return Then(s.r_arrow(x, y, g), eta);
      };
      std::set<Table> target(h2.begin(), h2.end());
      std::set<Table> seen;
      bool bad = false;
      for (const Table& g : h1) {
        Table t = transpose(g);
        if (!target.count(t) || !seen.insert(t).second) bad = true;
      }
      if (bad || seen.size() != target.size()) ++rep.transpose_failures;
      const Tables by = First(s.endo_y(y), kNaturalityArrows);
      for (const Table& g : First(h1, kNaturalityMaps)) {
        const Table tg = transpose(g);
        for (const Table& a : ax) {
          if (transpose(Then(g, s.l_endo(x, a))) != Then(tg, a)) {
            ++rep.naturality_failures;
          }
        }
        for (const Table& b : by) {
          if (transpose(Then(b, g)) != Then(s.r_endo(y, b), tg)) {
            ++rep.naturality_failures;
          }
        }
      }
    }
  }
  return rep;
}

std::vector<GroundSet> Sets(int max) {
  std::vector<GroundSet> out;
  for (int n = 0; n <= max; ++n) out.push_back(GroundSet::Range(n));
  return out;
}

std::vector<Matroid> Matroids(int max, const std::function<bool(const Matroid&)>&
                                           keep = nullptr) {
  std::vector<Matroid> out;
  for (int n = 0; n <= max; ++n) {
    for (const Matroid& m : AllMatroids(n)) {
      if (!keep || keep(m)) out.push_back(m);
    }
  }
  return out;
}

// Pointed matroids with element 0 as the point.
std::vector<PointedMatroid> Pointed(
    int max, const std::function<bool(const PointedMatroid&)>& keep = nullptr) {
  std::vector<PointedMatroid> out;
  for (int n = 1; n <= max; ++n) {
    for (const Matroid& m : AllMatroids(n)) {
      if (!(m.loops() & 1)) continue;
      PointedMatroid p(m, 0);
      if (!keep || keep(p)) out.push_back(p);
    }
  }
  return out;
}

bool FreeUnpointed(const Matroid& m) { return m.rank() == m.size(); }
bool Loopless(const Matroid& m) { return m.loops() == 0; }
bool FreePointedObject(const PointedMatroid& p) {
  return p.base().loops() == p.point_mask() &&
         p.base().rank() == p.base().size() - 1;
}
bool LooplessPointed(const PointedMatroid& p) {
  return p.base().loops() == p.point_mask();
}

PointedMatroid FreePointedOn(const PointedMatroid& p) {
  return std::get<PointedMatroid>(
      ApplyFunctor(FunctorName::kFree, Object(p)));
}

PointedMatroid Apply(FunctorName f, const PointedMatroid& p) {
  return std::get<PointedMatroid>(ApplyFunctor(f, Object(p)));
}

// Position of each element of mask among the elements of mask.
Table Positions(int n, Mask mask) {
  Table out(n, -1);
  int j = 0;
  for (int i = 0; i < n; ++i) {
    if (mask & Bit(i)) out[i] = j++;
  }
  return out;
}

// Endomorphisms of a pointed matroid.
Tables PointedEndos(const PointedMatroid& p) { return Homs(p, p); }

Spec FreeUnderlying(int ml, int mr) {
  auto xs = std::make_shared<std::vector<GroundSet>>(Sets(ml));
  auto ys = std::make_shared<std::vector<Matroid>>(Matroids(mr));
  Spec s;
  s.left_count = static_cast<int>(xs->size());
  s.right_count = static_cast<int>(ys->size());
  s.hom_lx_y = [=](int x, int y) {
    return Homs(Matroid::Free((*xs)[x]), (*ys)[y]);
  };
  s.hom_x_ry = [=](int x, int y) {
    return AllFunctions((*xs)[x].size(), (*ys)[y].size());
  };
  s.unit = [=](int x) { return Identity((*xs)[x].size()); };
  s.r_arrow = [](int, int, const Table& g) { return g; };
  s.endo_x = [=](int x) {
    return AllFunctions((*xs)[x].size(), (*xs)[x].size());
  };
  s.l_endo = [](int, const Table& a) { return a; };
  s.endo_y = [=](int y) { return Homs((*ys)[y], (*ys)[y]); };
  s.r_endo = [](int, const Table& b) { return b; };
  return s;
}

Spec UnderlyingCofree(int ml, int mr) {
  auto xs = std::make_shared<std::vector<Matroid>>(Matroids(ml));
  auto ys = std::make_shared<std::vector<GroundSet>>(Sets(mr));
  Spec s;
  s.left_count = static_cast<int>(xs->size());
  s.right_count = static_cast<int>(ys->size());
  s.hom_lx_y = [=](int x, int y) {
    return AllFunctions((*xs)[x].size(), (*ys)[y].size());
  };
  s.hom_x_ry = [=](int x, int y) {
    return Homs((*xs)[x], Matroid::Cofree((*ys)[y]));
  };
  s.unit = [=](int x) { return Identity((*xs)[x].size()); };
  s.r_arrow = [](int, int, const Table& g) { return g; };
  s.endo_x = [=](int x) { return Homs((*xs)[x], (*xs)[x]); };
  s.l_endo = [](int, const Table& a) { return a; };
  s.endo_y = [=](int y) {
    return AllFunctions((*ys)[y].size(), (*ys)[y].size());
  };
  s.r_endo = [](int, const Table& b) { return b; };
  return s;
}

// C -| zeroflat: maps C(X) -> M are functions into the loops of M.
Spec CofreeZeroFlat(int ml, int mr) {
  auto xs = std::make_shared<std::vector<GroundSet>>(Sets(ml));
  auto ys = std::make_shared<std::vector<Matroid>>(Matroids(mr));
  Spec s;
  s.left_count = static_cast<int>(xs->size());
  s.right_count = static_cast<int>(ys->size());
  s.hom_lx_y = [=](int x, int y) {
    return Homs(Matroid::Cofree((*xs)[x]), (*ys)[y]);
  };
  s.hom_x_ry = [=](int x, int y) {
    return AllFunctions((*xs)[x].size(), Popcount((*ys)[y].loops()));
  };
  s.unit = [=](int x) { return Identity((*xs)[x].size()); };
  s.r_arrow = [=](int, int y, const Table& g) {
    Table pos = Positions((*ys)[y].size(), (*ys)[y].loops());
    Table out(g.size());
    for (size_t i = 0; i < g.size(); ++i) out[i] = pos[g[i]];
    return out;
  };
  s.endo_x = [=](int x) {
    return AllFunctions((*xs)[x].size(), (*xs)[x].size());
  };
  s.l_endo = [](int, const Table& a) { return a; };
  s.endo_y = [=](int y) { return Homs((*ys)[y], (*ys)[y]); };
  s.r_endo = [=](int y, const Table& b) {
    const Matroid& m = (*ys)[y];
    Table pos = Positions(m.size(), m.loops());
    Table out;
    for (int i = 0; i < m.size(); ++i) {
      if (m.loops() & Bit(i)) out.push_back(pos[b[i]]);
    }
    return out;
  };
  return s;
}

// Inclusion FMatr. -> Matr. -| F: F(M) keeps the ground set and makes every
// set containing the point a flat.
Spec InclusionFreePointed(int ml, int mr) {
  auto xs = std::make_shared<std::vector<PointedMatroid>>(
      Pointed(ml, FreePointedObject));
  auto ys = std::make_shared<std::vector<PointedMatroid>>(Pointed(mr));
  Spec s;
  s.left_count = static_cast<int>(xs->size());
  s.right_count = static_cast<int>(ys->size());
  s.hom_lx_y = [=](int x, int y) { return Homs((*xs)[x], (*ys)[y]); };
  s.hom_x_ry = [=](int x, int y) {
    return Homs((*xs)[x], FreePointedOn((*ys)[y]));
  };
  s.unit = [=](int x) { return Identity((*xs)[x].base().size()); };
  s.r_arrow = [](int, int, const Table& g) { return g; };
  s.endo_x = [=](int x) { return PointedEndos((*xs)[x]); };
  s.l_endo = [](int, const Table& a) { return a; };
  s.endo_y = [=](int y) { return PointedEndos((*ys)[y]); };
  s.r_endo = [](int, const Table& b) { return b; };
  return s;
}

// F : Matr. -> FMatr. -| V : FMatr. -> Matr. (cofree on the same set).
Spec FreeV(int ml, int mr) {
  auto xs = std::make_shared<std::vector<PointedMatroid>>(Pointed(ml));
  auto ys = std::make_shared<std::vector<PointedMatroid>>(
      Pointed(mr, FreePointedObject));
  Spec s;
  s.left_count = static_cast<int>(xs->size());
  s.right_count = static_cast<int>(ys->size());
  s.hom_lx_y = [=](int x, int y) {
    return Homs(FreePointedOn((*xs)[x]), (*ys)[y]);
  };
  s.hom_x_ry = [=](int x, int y) {
    return Homs((*xs)[x], Apply(FunctorName::kV, (*ys)[y]));
  };
  s.unit = [=](int x) { return Identity((*xs)[x].base().size()); };
  s.r_arrow = [](int, int, const Table& g) { return g; };
  s.endo_x = [=](int x) { return PointedEndos((*xs)[x]); };
  s.l_endo = [](int, const Table& a) { return a; };
  s.endo_y = [=](int y) { return PointedEndos((*ys)[y]); };
  s.r_endo = [](int, const Table& b) { return b; };
  return s;
}

// V -| H, with H(M) free on the loops of M.
Spec VH(int ml, int mr) {
  auto xs = std::make_shared<std::vector<PointedMatroid>>(
      Pointed(ml, FreePointedObject));
  auto ys = std::make_shared<std::vector<PointedMatroid>>(Pointed(mr));
  Spec s;
  s.left_count = static_cast<int>(xs->size());
  s.right_count = static_cast<int>(ys->size());
  s.hom_lx_y = [=](int x, int y) {
    return Homs(Apply(FunctorName::kV, (*xs)[x]), (*ys)[y]);
  };
  s.hom_x_ry = [=](int x, int y) {
    return Homs((*xs)[x], Apply(FunctorName::kH, (*ys)[y]));
  };
  // H(V(X)) is X again, since every element of V(X) is a loop.
  s.unit = [=](int x) { return Identity((*xs)[x].base().size()); };
  s.r_arrow = [=](int, int y, const Table& g) {
    const Matroid& m = (*ys)[y].base();
    Table pos = Positions(m.size(), m.loops());
    Table out(g.size());
    for (size_t i = 0; i < g.size(); ++i) out[i] = pos[g[i]];
    return out;
  };
  s.endo_x = [=](int x) { return PointedEndos((*xs)[x]); };
  s.l_endo = [](int, const Table& a) { return a; };
  s.endo_y = [=](int y) { return PointedEndos((*ys)[y]); };
  s.r_endo = [=](int y, const Table& b) {
    StrongMap f((*ys)[y], (*ys)[y], b);
    return std::get<StrongMap>(ApplyFunctor(FunctorName::kH, Arrow(f)))
        .table();
  };
  return s;
}

// F : LMatr -> FMatr -| U, with U(M) having flats {empty, |M|}.
Spec FreeU(int ml, int mr) {
  auto xs = std::make_shared<std::vector<Matroid>>(Matroids(ml, Loopless));
  auto ys = std::make_shared<std::vector<Matroid>>(
      Matroids(mr, FreeUnpointed));
  Spec s;
  s.left_count = static_cast<int>(xs->size());
  s.right_count = static_cast<int>(ys->size());
  s.hom_lx_y = [=](int x, int y) {
    return Homs(Matroid::Free((*xs)[x].ground()), (*ys)[y]);
  };
  s.hom_x_ry = [=](int x, int y) {
    return Homs((*xs)[x], std::get<Matroid>(ApplyFunctor(
                              FunctorName::kU, Object((*ys)[y]))));
  };
  s.unit = [=](int x) { return Identity((*xs)[x].size()); };
  s.r_arrow = [](int, int, const Table& g) { return g; };
  s.endo_x = [=](int x) { return Homs((*xs)[x], (*xs)[x]); };
  s.l_endo = [](int, const Table& a) { return a; };
  s.endo_y = [=](int y) { return Homs((*ys)[y], (*ys)[y]); };
  s.r_endo = [](int, const Table& b) { return b; };
  return s;
}

// si -| inclusion of pointed simple matroids.
Spec SimplifyInclusion(int ml, int mr) {
  auto xs = std::make_shared<std::vector<PointedMatroid>>(Pointed(ml));
  auto ys = std::make_shared<std::vector<PointedMatroid>>(
      Pointed(mr, IsPointedSimple));
  auto si = std::make_shared<std::vector<Simplification>>();
  for (const PointedMatroid& p : *xs) si->push_back(Simplify(p));
  Spec s;
  s.left_count = static_cast<int>(xs->size());
  s.right_count = static_cast<int>(ys->size());
  s.hom_lx_y = [=](int x, int y) { return Homs((*si)[x].si, (*ys)[y]); };
  s.hom_x_ry = [=](int x, int y) { return Homs((*xs)[x], (*ys)[y]); };
  s.unit = [=](int x) { return (*si)[x].unit.table(); };
  s.r_arrow = [](int, int, const Table& g) { return g; };
  s.endo_x = [=](int x) { return PointedEndos((*xs)[x]); };
  s.l_endo = [=](int x, const Table& a) {
    return SimplifyMap(StrongMap((*xs)[x], (*xs)[x], a)).table();
  };
  s.endo_y = [=](int y) { return PointedEndos((*ys)[y]); };
  s.r_endo = [](int, const Table& b) { return b; };
  return s;
}

// J -| inclusion of pointed loopless matroids.
Spec JInclusion(int ml, int mr) {
  auto xs = std::make_shared<std::vector<PointedMatroid>>(Pointed(ml));
  auto ys = std::make_shared<std::vector<PointedMatroid>>(
      Pointed(mr, LooplessPointed));
  Spec s;
  s.left_count = static_cast<int>(xs->size());
  s.right_count = static_cast<int>(ys->size());
  s.hom_lx_y = [=](int x, int y) {
    return Homs(Apply(FunctorName::kJ, (*xs)[x]), (*ys)[y]);
  };
  s.hom_x_ry = [=](int x, int y) { return Homs((*xs)[x], (*ys)[y]); };
  s.unit = [=](int x) {
    const PointedMatroid& p = (*xs)[x];
    const Matroid& m = p.base();
    const Mask keep = (m.full() & ~m.loops()) | p.point_mask();
    Table pos = Positions(m.size(), keep);
    Table out(m.size());
    for (int i = 0; i < m.size(); ++i) {
      out[i] = (keep & Bit(i)) ? pos[i] : pos[p.point()];
    }
    return out;
  };
  s.r_arrow = [](int, int, const Table& g) { return g; };
  s.endo_x = [=](int x) { return PointedEndos((*xs)[x]); };
  s.l_endo = [=](int x, const Table& a) {
    StrongMap f((*xs)[x], (*xs)[x], a);
    return std::get<StrongMap>(ApplyFunctor(FunctorName::kJ, Arrow(f)))
        .table();
  };
  s.endo_y = [=](int y) { return PointedEndos((*ys)[y]); };
  s.r_endo = [](int, const Table& b) { return b; };
  return s;
}

// L -| S between pointed matroids and geometric lattices.
Spec LatticeS(int ml, int mr) {
  auto xs = std::make_shared<std::vector<PointedMatroid>>(Pointed(ml));
  auto ys = std::make_shared<std::vector<GeometricLattice>>();
  for (const PointedMatroid& p : Pointed(mr)) {
    GeometricLattice g = LObject(p.base());
    bool seen = false;
    for (const GeometricLattice& h : *ys) {
      if (FindIsomorphism(g, h)) seen = true;
    }
    if (!seen) ys->push_back(g);
  }
  auto lx = std::make_shared<std::vector<GeometricLattice>>();
  for (const PointedMatroid& p : *xs) lx->push_back(LObject(p.base()));
  Spec s;
  s.left_count = static_cast<int>(xs->size());
  s.right_count = static_cast<int>(ys->size());
  s.hom_lx_y = [=](int x, int y) { return Homs((*lx)[x], (*ys)[y]); };
  s.hom_x_ry = [=](int x, int y) {
    return Homs((*xs)[x], SObject((*ys)[y]));
  };
  // x goes to its closure, an atom of L(M), or to the point when a loop.
  s.unit = [=](int x) {
    const Matroid& m = (*xs)[x].base();
    const GeometricLattice& l = (*lx)[x];
    Table out(m.size());
    for (int i = 0; i < m.size(); ++i) {
      out[i] = 0;
      if (m.loops() & Bit(i)) continue;
      const Mask c = m.closure(Bit(i));
      for (size_t a = 0; a < l.atoms().size(); ++a) {
        if (m.flats()[l.atoms()[a]] == c) out[i] = static_cast<int>(a) + 1;
      }
    }
    return out;
  };
  s.r_arrow = [=](int x, int y, const Table& g) {
    return SMorphism(GLatMorphism((*lx)[x], (*ys)[y], g)).table();
  };
  s.endo_x = [=](int x) { return PointedEndos((*xs)[x]); };
  s.l_endo = [=](int x, const Table& a) {
    return LMorphism(StrongMap((*xs)[x], (*xs)[x], a)).table();
  };
  s.endo_y = [=](int y) { return Homs((*ys)[y], (*ys)[y]); };
  s.r_endo = [=](int y, const Table& b) {
    return SMorphism(GLatMorphism((*ys)[y], (*ys)[y], b)).table();
  };
  return s;
}

// (-). -| forget: M goes to M plus a loop.
Spec AddPointForget(int ml, int mr) {
  auto xs = std::make_shared<std::vector<Matroid>>(Matroids(ml));
  auto ys = std::make_shared<std::vector<PointedMatroid>>(Pointed(mr));
  Spec s;
  s.left_count = static_cast<int>(xs->size());
  s.right_count = static_cast<int>(ys->size());
  s.hom_lx_y = [=](int x, int y) {
    return Homs(std::get<PointedMatroid>(
                    ApplyFunctor(FunctorName::kAddPoint, Object((*xs)[x]))),
                (*ys)[y]);
  };
  s.hom_x_ry = [=](int x, int y) { return Homs((*xs)[x], (*ys)[y].base()); };
  s.unit = [=](int x) { return Identity((*xs)[x].size()); };
  s.r_arrow = [](int, int, const Table& g) { return g; };
  s.endo_x = [=](int x) { return Homs((*xs)[x], (*xs)[x]); };
  s.l_endo = [](int, const Table& a) {
    Table t = a;
    t.push_back(static_cast<int>(a.size()));
    return t;
  };
  s.endo_y = [=](int y) { return PointedEndos((*ys)[y]); };
  s.r_endo = [](int, const Table& b) { return b; };
  return s;
}

// Adding an empty mark -| deleting the last mark, with one mark.
Spec Deletion(int ml, int mr) {
  auto xs = std::make_shared<std::vector<Matroid>>(Matroids(ml));
  auto ys = std::make_shared<std::vector<MarkedMatroid>>();
  for (const Matroid& m : Matroids(mr)) {
    ForEachSubset(m.full(), [&](Mask w) { ys->push_back({m, {w}}); });
  }
  auto marked_homs = [](const MarkedMatroid& a, const MarkedMatroid& b) {
    Tables out;
    for (const StrongMap& f : EnumerateHoms(a.base, b.base)) {
      if (IsMarkedMap(f, a, b)) out.push_back(f.table());
    }
    return out;
  };
  Spec s;
  s.left_count = static_cast<int>(xs->size());
  s.right_count = static_cast<int>(ys->size());
  s.hom_lx_y = [=](int x, int y) {
    return marked_homs({(*xs)[x], {0}}, (*ys)[y]);
  };
  s.hom_x_ry = [=](int x, int y) {
    return Homs((*xs)[x], DeleteLast((*ys)[y]).base);
  };
  s.unit = [=](int x) { return Identity((*xs)[x].size()); };
  s.r_arrow = [=](int x, int y, const Table& g) {
    MarkedMatroid dom{(*xs)[x], {0}};
    return DeleteLast(StrongMap(dom.base, (*ys)[y].base, g), dom, (*ys)[y])
        .table();
  };
  s.endo_x = [=](int x) { return Homs((*xs)[x], (*xs)[x]); };
  s.l_endo = [](int, const Table& a) { return a; };
  s.endo_y = [=](int y) { return marked_homs((*ys)[y], (*ys)[y]); };
  s.r_endo = [=](int y, const Table& b) {
    const MarkedMatroid& m = (*ys)[y];
    return DeleteLast(StrongMap(m.base, m.base, b), m, m).table();
  };
  return s;
}

struct Entry {
  const char* left;
  const char* right;
  Spec (*make)(int, int);
};

constexpr Entry kAdjunctions[] = {
    {"F_free", "underlying", FreeUnderlying},
    {"underlying", "C_cofree", UnderlyingCofree},
    {"C_cofree", "zeroflat", CofreeZeroFlat},
    {"inclusion_free_pointed", "F_free", InclusionFreePointed},
    {"F_free", "V", FreeV},
    {"V", "H", VH},
    {"F_free_loopless", "U", FreeU},
    {"si", "inclusion_simple", SimplifyInclusion},
    {"J", "inclusion_loopless", JInclusion},
    {"L", "S", LatticeS},
    {"add_point", "forget", AddPointForget},
    {"empty_mark", "delete_last", Deletion},
};

}  // namespace

std::vector<std::pair<std::string, std::string>> KnownAdjunctions() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Entry& e : kAdjunctions) out.emplace_back(e.left, e.right);
  return out;
}

AdjunctionReport VerifyAdjunction(std::string_view left,
                                  std::string_view right, int max_left,
                                  int max_right) {
  for (const Entry& e : kAdjunctions) {
    if (left == e.left && right == e.right) {
      return Run(e.make(max_left, max_right), e.left, e.right);
    }
  }
  throw UnknownPair(std::string(left) + " -| " + std::string(right));
}

}  // namespace matroidcat
