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

#include "matroidcat/construct.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace matroidcat {
namespace {

// Bits of x inside keep, renumbered to 0..|keep|-1.
Mask Compress(Mask x, Mask keep) {
  Mask out = 0;
  int j = 0;
  for (int i = 0; keep >> i; ++i) {
    if (!(keep & Bit(i))) continue;
    if (x & Bit(i)) out |= Bit(j);
    ++j;
  }
  return out;
}

// Inverse of Compress.
Mask Expand(Mask x, Mask keep) {
  Mask out = 0;
  int j = 0;
  for (int i = 0; keep >> i; ++i) {
    if (!(keep & Bit(i))) continue;
    if (x & Bit(j)) out |= Bit(i);
    ++j;
  }
  return out;
}

// New index of each kept element, -1 for the rest.
std::vector<int> Reindex(int n, Mask keep) {
  std::vector<int> out(n, -1);
  int j = 0;
  for (int i = 0; i < n; ++i) {
    if (keep & Bit(i)) out[i] = j++;
  }
  return out;
}

void CheckMask(const Matroid& m, Mask x) {
  if (!IsSubset(x, m.full())) {
    throw std::invalid_argument("subset outside the ground set");
  }
}

// Labels of n appended to taken, each primed until unused.
std::vector<std::string> AppendLabels(std::vector<std::string> taken,
                                      const std::vector<std::string>& extra) {
  std::set<std::string> used(taken.begin(), taken.end());
  for (const std::string& label : extra) {
    std::string name = label + "'";
    while (used.count(name)) name += "'";
    used.insert(name);
    taken.push_back(name);
  }
  return taken;
}

// Direct sum on an explicit ground set; n's elements follow m's.
Matroid DirectSum(const Matroid& m, const Matroid& n, GroundSet ground) {
  const int a = m.size();
  std::vector<int> rank(std::size_t{1} << ground.size());
  for (Mask x = 0; x < rank.size(); ++x) {
    rank[x] = m.rank(x & m.full()) + n.rank(x >> a);
  }
  return Matroid::FromRank(std::move(ground), rank);
}

// Appends one element, a loop or an isthmus.
Matroid AppendElement(const Matroid& m, const std::string& label,
                      bool isthmus) {
  std::vector<std::string> labels = m.ground().labels();
  labels.push_back(label);
  GroundSet one({label});
  return DirectSum(m, isthmus ? Matroid::Free(one) : Matroid::Cofree(one),
                   GroundSet(std::move(labels)));
}

// Rank table of n with elements ordered as in m. Throws GroundMismatch.
std::vector<int> AlignedRank(const Matroid& m, const Matroid& n) {
  const int size = m.size();
  std::vector<int> perm(size);
  bool ok = n.size() == size;
  for (int i = 0; ok && i < size; ++i) {
    perm[i] = n.ground().find(m.ground().label(i));
    ok = perm[i] >= 0;
  }
  if (!ok) {
    throw GroundMismatch("ground sets " + m.ground().format(m.full()) +
                         " and " + n.ground().format(n.full()) + " differ");
  }
  std::vector<int> rank(std::size_t{1} << size);
  for (Mask x = 0; x < rank.size(); ++x) {
    Mask y = 0;
    for (int i = 0; i < size; ++i) {
      if (x & Bit(i)) y |= Bit(perm[i]);
    }
    rank[x] = n.rank(y);
  }
  return rank;
}

bool IsFreePointed(const PointedMatroid& m) {
  const Matroid& b = m.base();
  return b.loops() == m.point_mask() &&
         b.rank() == b.size() - 1;
}

PointedMatroid FreePointed(const GroundSet& ground, int point) {
  std::vector<int> rank(std::size_t{1} << ground.size());
  for (Mask x = 0; x < rank.size(); ++x) rank[x] = Popcount(x & ~Bit(point));
  return {Matroid::FromRank(ground, rank), point};
}

PointedMatroid CofreePointed(const GroundSet& ground, int point) {
  return {Matroid::Cofree(ground), point};
}

PointedMatroid AsPointed(const Object& x, FunctorName name) {
  if (const auto* p = std::get_if<PointedMatroid>(&x)) return *p;
  throw WrongCategory(ToString(name) + " expects a pointed matroid");
}

Matroid AsMatroid(const Object& x, FunctorName name) {
  if (const auto* m = std::get_if<Matroid>(&x)) return *m;
  throw WrongCategory(ToString(name) + " expects a matroid");
}

const StrongMap& AsStrong(const Arrow& f, FunctorName name) {
  if (const auto* s = std::get_if<StrongMap>(&f)) return *s;
  throw WrongCategory(ToString(name) + " expects a strong map");
}

const StrongMap& AsPointedStrong(const Arrow& f, FunctorName name) {
  const StrongMap& s = AsStrong(f, name);
  if (!s.pointed()) {
    throw WrongCategory(ToString(name) + " expects a pointed map");
  }
  return s;
}

const StrongMap& AsUnpointedStrong(const Arrow& f, FunctorName name) {
  const StrongMap& s = AsStrong(f, name);
  if (s.pointed()) {
    throw WrongCategory(ToString(name) + " expects an unpointed map");
  }
  return s;
}

}  // namespace

std::string FreshLabel(const GroundSet& ground, std::string base) {
  while (ground.find(base) >= 0) base += "'";
  return base;
}

Matroid Dual(const Matroid& m) {
  const Mask full = m.full();
  std::vector<int> rank(std::size_t{1} << m.size());
  for (Mask x = 0; x < rank.size(); ++x) {
    rank[x] = Popcount(x) - m.rank() + m.rank(full & ~x);
  }
  return Matroid::FromRank(m.ground(), rank);
}

Matroid Delete(const Matroid& m, Mask y) {
  CheckMask(m, y);
  return m.restriction(m.full() & ~y);
}

Contraction Contract(const Matroid& m, Mask z) {
  CheckMask(m, z);
  const Mask keep = m.full() & ~z;
  std::vector<std::string> labels = m.ground().labels_of(keep);
  std::vector<int> rank(std::size_t{1} << labels.size());
  for (Mask x = 0; x < rank.size(); ++x) {
    rank[x] = m.rank(Expand(x, keep) | z) - m.rank(z);
  }
  Matroid minor = Matroid::FromRank(GroundSet(std::move(labels)), rank);
  Contraction out{minor, std::nullopt};
  const Mask loops = minor.loops();
  if (z != 0 && loops == 0) return out;
  const int target = z == 0 ? -1 : std::countr_zero(loops);
  std::vector<int> index = Reindex(m.size(), keep);
  for (int& i : index) {
    if (i < 0) i = target;
  }
  out.map.emplace(m, minor, std::move(index));
  return out;
}

PointedContraction Contract(const PointedMatroid& m, Mask z) {
  if (z & m.point_mask()) {
    throw std::invalid_argument("cannot contract the point");
  }
  Matroid minor = Contract(m.base(), z).matroid;
  const Mask keep = m.base().full() & ~z;
  std::vector<int> index = Reindex(m.base().size(), keep);
  PointedMatroid cod(minor, index[m.point()]);
  for (int& i : index) {
    if (i < 0) i = cod.point();
  }
  return {cod, StrongMap(m, cod, std::move(index))};
}

Matroid ContractInPlace(const Matroid& m, Mask z) {
  CheckMask(m, z);
  std::vector<int> rank(std::size_t{1} << m.size());
  for (Mask x = 0; x < rank.size(); ++x) rank[x] = m.rank(x | z) - m.rank(z);
  return Matroid::FromRank(m.ground(), rank);
}

Matroid Minor(const Matroid& m, const std::vector<MinorStep>& steps) {
  Matroid cur = m;
  for (const MinorStep& step : steps) {
    Mask x = 0;
    for (const std::string& label : step.labels) {
      const int i = cur.ground().find(label);
      if (i < 0) {
        throw OverlappingInstruction(
            m.ground().find(label) >= 0
                ? "element " + label + " was already removed"
                : "unknown element " + label);
      }
      x |= Bit(i);
    }
    cur = step.kind == MinorStep::kDelete ? Delete(cur, x)
                                          : Contract(cur, x).matroid;
  }
  return cur;
}

void Validate(const MarkedMatroid& m) {
  Mask seen = 0;
  for (Mask z : m.marks) {
    if (!IsSubset(z, m.base.full())) {
      throw std::invalid_argument("mark outside the ground set");
    }
    if (z & seen) throw std::invalid_argument("marks overlap");
    seen |= z;
  }
}

bool IsMarkedMap(const StrongMap& f, const MarkedMatroid& dom,
                 const MarkedMatroid& cod) {
  if (!(f.dom() == dom.base) || !(f.cod() == cod.base) ||
      dom.marks.size() != cod.marks.size()) {
    return false;
  }
  for (std::size_t k = 0; k < dom.marks.size(); ++k) {
    if (f.preimage(cod.marks[k]) != dom.marks[k]) return false;
  }
  return true;
}

namespace {

MarkedMatroid DropLast(const MarkedMatroid& m, bool contract) {
  Validate(m);
  if (m.marks.empty()) throw std::invalid_argument("no marks left");
  const Mask z = m.marks.back();
  const Mask keep = m.base.full() & ~z;
  MarkedMatroid out{contract ? Contract(m.base, z).matroid : Delete(m.base, z),
                    {}};
  for (std::size_t k = 0; k + 1 < m.marks.size(); ++k) {
    out.marks.push_back(Compress(m.marks[k], keep));
  }
  return out;
}

StrongMap DropLast(const StrongMap& f, const MarkedMatroid& dom,
                   const MarkedMatroid& cod, bool contract) {
  if (!IsMarkedMap(f, dom, cod) || dom.marks.empty()) {
    throw std::invalid_argument("not a marked map");
  }
  MarkedMatroid a = DropLast(dom, contract);
  MarkedMatroid b = DropLast(cod, contract);
  const Mask keep_a = dom.base.full() & ~dom.marks.back();
  const Mask keep_b = cod.base.full() & ~cod.marks.back();
  std::vector<int> ib = Reindex(cod.base.size(), keep_b);
  std::vector<int> table;
  for (int i = 0; i < dom.base.size(); ++i) {
    if (keep_a & Bit(i)) table.push_back(ib[f(i)]);
  }
  return StrongMap(a.base, b.base, std::move(table));
}

}  // namespace

MarkedMatroid DeleteLast(const MarkedMatroid& m) { return DropLast(m, false); }
MarkedMatroid ContractLast(const MarkedMatroid& m) { return DropLast(m, true); }

StrongMap DeleteLast(const StrongMap& f, const MarkedMatroid& dom,
                     const MarkedMatroid& cod) {
  return DropLast(f, dom, cod, false);
}

StrongMap ContractLast(const StrongMap& f, const MarkedMatroid& dom,
                       const MarkedMatroid& cod) {
  return DropLast(f, dom, cod, true);
}

Coproduct Sum(const Matroid& m, const Matroid& n) {
  GroundSet ground(AppendLabels(m.ground().labels(), n.ground().labels()));
  Matroid sum = DirectSum(m, n, std::move(ground));
  std::vector<int> t1(m.size()), t2(n.size());
  for (int i = 0; i < m.size(); ++i) t1[i] = i;
  for (int j = 0; j < n.size(); ++j) t2[j] = m.size() + j;
  return {sum, StrongMap(m, sum, std::move(t1)),
          StrongMap(n, sum, std::move(t2))};
}

StrongMap Cotuple(const Coproduct& c, const StrongMap& f, const StrongMap& g) {
  if (!(f.dom() == c.inj1.dom()) || !(g.dom() == c.inj2.dom()) ||
      !(f.cod() == g.cod())) {
    throw DomainMismatch("cotuple arguments do not match the coproduct");
  }
  std::vector<int> table = f.table();
  table.insert(table.end(), g.table().begin(), g.table().end());
  return StrongMap(c.sum, f.cod(), std::move(table));
}

Equalizer Equalize(const StrongMap& f, const StrongMap& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()) ||
      f.dom_point() != g.dom_point() || f.cod_point() != g.cod_point()) {
    throw NotParallel("maps do not share domain and codomain");
  }
  Mask keep = 0;
  for (int i = 0; i < f.dom().size(); ++i) {
    if (f(i) == g(i)) keep |= Bit(i);
  }
  Matroid eq = f.dom().restriction(keep);
  std::vector<int> table;
  for (int i = 0; i < f.dom().size(); ++i) {
    if (keep & Bit(i)) table.push_back(i);
  }
  if (!f.pointed()) return {eq, StrongMap(eq, f.dom(), std::move(table))};
  const int point = Reindex(f.dom().size(), keep)[f.dom_point()];
  return {eq, StrongMap(PointedMatroid(eq, point), f.pointed_dom(),
                        std::move(table))};
}

Matroid FreeExtension(const Matroid& m, std::string_view p) {
  if (m.ground().find(p) >= 0) {
    throw std::invalid_argument("label " + std::string(p) + " already used");
  }
  if (m.size() + 1 > kMaxGround) {
    throw std::invalid_argument("ground set too large");
  }
  std::vector<std::string> labels = m.ground().labels();
  labels.emplace_back(p);
  const Mask pbit = Bit(m.size());
  std::vector<Mask> hyper = m.hyperplanes();
  std::vector<Mask> flats;
  for (Mask k : m.flats()) {
    if (k != m.full()) flats.push_back(k);
    if (std::find(hyper.begin(), hyper.end(), k) == hyper.end()) {
      flats.push_back(k | pbit);
    }
  }
  return Matroid::FromFlats(GroundSet(std::move(labels)), std::move(flats));
}

Matroid Truncation(const Matroid& m) {
  if (m.rank() == 0) throw RankZeroTruncation("rank-0 matroid");
  Matroid ext = FreeExtension(m, FreshLabel(m.ground(), "p"));
  return Contract(ext, Bit(m.size())).matroid;
}

namespace {

inline constexpr int kMaxErectionCandidates = 20;

}  // namespace

Erection FreeErection(const Matroid& m) {
  const int n = m.size();
  const int r = m.rank();
  Erection out{m};
  // Candidate bases: (r+1)-sets whose r-subsets are all bases of m.
  std::vector<Mask> cand;
  if (r < n) {
    for (Mask s = 0; s <= m.full(); ++s) {
      if (Popcount(s) != r + 1) continue;
      bool ok = true;
      for (Mask t = s; t && ok; t &= t - 1) {
        ok = m.is_independent(s & ~(t & -t));
      }
      if (ok) cand.push_back(s);
    }
  }
  const int c = static_cast<int>(cand.size());
  if (c == 0) return out;

  // cover[b]: candidates containing basis b. exchange[i][j]: for each x in
  // C_i - C_j, candidates C_i - x + y with y in C_j - C_i.
  std::vector<std::uint32_t> cover;
  for (Mask b : m.bases()) {
    std::uint32_t bits = 0;
    for (int i = 0; i < c; ++i) {
      if (IsSubset(b, cand[i])) bits |= std::uint32_t{1} << i;
    }
    cover.push_back(bits);
  }
  auto index_of = [&](Mask s) {
    auto it = std::find(cand.begin(), cand.end(), s);
    return it == cand.end() ? -1 : static_cast<int>(it - cand.begin());
  };
  std::vector<std::vector<std::vector<std::uint32_t>>> exchange(
      c, std::vector<std::vector<std::uint32_t>>(c));
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < c; ++j) {
      for (Mask xs = cand[i] & ~cand[j]; xs; xs &= xs - 1) {
        const Mask x = xs & -xs;
        std::uint32_t bits = 0;
        for (Mask ys = cand[j] & ~cand[i]; ys; ys &= ys - 1) {
          const int k = index_of((cand[i] & ~x) | (ys & -ys));
          if (k >= 0) bits |= std::uint32_t{1} << k;
        }
        exchange[i][j].push_back(bits);
      }
    }
  }
  auto valid = [&](std::uint32_t fam) {
    for (std::uint32_t bits : cover) {
      if (!(bits & fam)) return false;
    }
    for (int i = 0; i < c; ++i) {
      if (!(fam >> i & 1)) continue;
      for (int j = 0; j < c; ++j) {
        if (!(fam >> j & 1)) continue;
        for (std::uint32_t bits : exchange[i][j]) {
          if (!(bits & fam)) return false;
        }
      }
    }
    return true;
  };

  std::vector<std::uint32_t> found;
  const std::uint32_t all =
      c == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << c) - 1;
  if (c <= kMaxErectionCandidates) {
    for (std::uint32_t fam = all; fam; --fam) {
      if (valid(fam)) found.push_back(fam);
    }
  } else {
    // Families with at most two candidates removed, stopping at the first
    // level that has a valid one.
    out.exhaustive = false;
    for (int drop = 0; drop <= 2 && found.empty(); ++drop) {
      for (int i = 0; i < c; ++i) {
        for (int j = i; j < c; ++j) {
          if ((drop == 0 && (i || j)) || (drop == 1 && i != j) ||
              (drop == 2 && i == j)) {
            continue;
          }
          const std::uint32_t fam =
              all & ~(std::uint32_t{1} << i) & ~(std::uint32_t{1} << j);
          if (drop == 0 ? valid(all) : valid(fam)) {
            found.push_back(drop == 0 ? all : fam);
          }
        }
      }
    }
  }
  std::vector<std::uint32_t> maximal;
  for (std::uint32_t a : found) {
    bool dominated = false;
    for (std::uint32_t b : found) {
      if (a != b && (a & ~b) == 0) dominated = true;
    }
    if (!dominated) maximal.push_back(a);
  }
  if (maximal.empty()) return out;
  // Most bases first, then the lexicographically least candidate set.
  std::sort(maximal.begin(), maximal.end(), [](std::uint32_t a,
                                               std::uint32_t b) {
    if (std::popcount(a) != std::popcount(b)) {
      return std::popcount(a) > std::popcount(b);
    }
    return a < b;
  });
  std::vector<int> rank(std::size_t{1} << n);
  for (Mask x = 0; x < rank.size(); ++x) {
    int best = 0;
    for (int i = 0; i < c; ++i) {
      if (maximal[0] >> i & 1) best = std::max(best, Popcount(x & cand[i]));
    }
    rank[x] = best;
  }
  out.erection = Matroid::FromRank(m.ground(), rank);
  out.proper = true;
  out.maximal = static_cast<int>(maximal.size());
  return out;
}

Matroid Union(const Matroid& m, const Matroid& n) {
  std::vector<int> rn = AlignedRank(m, n);
  std::vector<int> rank(std::size_t{1} << m.size());
  for (Mask x = 0; x < rank.size(); ++x) {
    int best = Popcount(x);
    ForEachSubset(x, [&](Mask y) {
      best = std::min(best, m.rank(y) + rn[y] + Popcount(x & ~y));
    });
    rank[x] = best;
  }
  return Matroid::FromRank(m.ground(), rank);
}

Matroid Intersection(const Matroid& m, const Matroid& n) {
  return Dual(Union(Dual(m), Dual(n)));
}

Matroid HalfDualUnion(const Matroid& m, const Matroid& n) {
  return Union(m, Dual(n));
}

BipointedMatroid ParallelConnection(const BipointedMatroid& m,
                                    const BipointedMatroid& n) {
  const int a = m.base.size();
  const int b = n.base.size();
  if (m.basepoint < 0 || m.basepoint >= a || n.basepoint < 0 ||
      n.basepoint >= b) {
    throw std::invalid_argument("basepoint outside the ground set");
  }
  if (a + b - 1 > kMaxGround) {
    throw std::invalid_argument("ground set too large");
  }
  const Mask q = Bit(n.basepoint);
  const Mask rest = n.base.full() & ~q;
  GroundSet ground(
      AppendLabels(m.base.ground().labels(), n.base.ground().labels_of(rest)));
  std::vector<Mask> flats;
  for (Mask f : m.base.flats()) {
    for (Mask g : n.base.flats()) {
      const bool fp = f & Bit(m.basepoint);
      const bool gq = g & q;
      if (fp != gq) continue;
      flats.push_back(f | (Compress(g, rest) << a));
    }
  }
  return {Matroid::FromFlats(std::move(ground), std::move(flats)),
          m.basepoint};
}

BipointedMatroid SeriesConnection(const BipointedMatroid& m,
                                  const BipointedMatroid& n) {
  BipointedMatroid p = ParallelConnection({Dual(m.base), m.basepoint},
                                          {Dual(n.base), n.basepoint});
  return {Dual(p.base), p.basepoint};
}

SeriesProjection SeriesProjections(const BipointedMatroid& m,
                                   const BipointedMatroid& n) {
  BipointedMatroid s = SeriesConnection(m, n);
  const int a = m.base.size();
  const Mask rest = n.base.full() & ~Bit(n.basepoint);
  std::vector<int> n_index;
  for (int j = 0; j < n.base.size(); ++j) {
    if (rest & Bit(j)) n_index.push_back(j);
  }
  SeriesProjection out;
  for (int i = 0; i < s.base.size(); ++i) {
    out.to_m.push_back(i < a ? i : m.basepoint);
    out.to_n.push_back(i < a ? n.basepoint : n_index[i - a]);
  }
  if (IsStrong(out.to_m, s.base, m.base)) {
    out.strong_m.emplace(s.base, m.base, out.to_m);
  }
  if (IsStrong(out.to_n, s.base, n.base)) {
    out.strong_n.emplace(s.base, n.base, out.to_n);
  }
  return out;
}

namespace {

constexpr std::pair<FunctorName, std::string_view> kFunctorNames[] = {
    {FunctorName::kFree, "F_free"},
    {FunctorName::kCofree, "C_cofree"},
    {FunctorName::kUnderlying, "underlying"},
    {FunctorName::kZeroFlat, "zeroflat"},
    {FunctorName::kV, "V"},
    {FunctorName::kH, "H"},
    {FunctorName::kU, "U"},
    {FunctorName::kJ, "J"},
    {FunctorName::kAddPoint, "add_point"},
    {FunctorName::kAddIsthmus, "add_isthmus"},
};

// J(M): the point and every nonloop.
Mask JKeep(const PointedMatroid& m) {
  return (m.base().full() & ~m.base().loops()) | m.point_mask();
}

PointedMatroid JObject(const PointedMatroid& m) {
  const Mask keep = JKeep(m);
  return {m.base().restriction(keep),
          Reindex(m.base().size(), keep)[m.point()]};
}

PointedMatroid HObject(const PointedMatroid& m) {
  const Mask loops = m.base().loops();
  GroundSet ground(m.base().ground().labels_of(loops));
  return FreePointed(ground, Reindex(m.base().size(), loops)[m.point()]);
}

PointedMatroid AddPointObject(const Matroid& m) {
  Matroid base = AppendElement(m, FreshLabel(m.ground(), "*"), false);
  return {base, m.size()};
}

Matroid AddIsthmusObject(const Matroid& m) {
  return AppendElement(m, FreshLabel(m.ground(), "*"), true);
}

}  // namespace

std::optional<FunctorName> ParseFunctor(std::string_view name) {
  for (const auto& [f, s] : kFunctorNames) {
    if (s == name) return f;
  }
  return std::nullopt;
}

std::string ToString(FunctorName name) {
  for (const auto& [f, s] : kFunctorNames) {
    if (f == name) return std::string(s);
  }
  return "?";
}

Object ApplyFunctor(FunctorName name, const Object& x) {
  switch (name) {
    case FunctorName::kFree:
    case FunctorName::kCofree: {
      const bool free = name == FunctorName::kFree;
      if (const auto* g = std::get_if<GroundSet>(&x)) {
        return free ? Matroid::Free(*g) : Matroid::Cofree(*g);
      }
      if (const auto* m = std::get_if<Matroid>(&x)) {
        return free ? Matroid::Free(m->ground())
                    : Matroid::Cofree(m->ground());
      }
      const auto& p = std::get<PointedMatroid>(x);
      return free ? FreePointed(p.base().ground(), p.point())
                  : CofreePointed(p.base().ground(), p.point());
    }
    case FunctorName::kUnderlying:
      if (const auto* m = std::get_if<Matroid>(&x)) return m->ground();
      if (const auto* p = std::get_if<PointedMatroid>(&x)) {
        return p->base().ground();
      }
      throw WrongCategory("underlying expects a matroid");
    case FunctorName::kZeroFlat: {
      Matroid m = std::holds_alternative<PointedMatroid>(x)
                      ? std::get<PointedMatroid>(x).base()
                      : AsMatroid(x, name);
      return GroundSet(m.ground().labels_of(m.loops()));
    }
    case FunctorName::kV: {
      PointedMatroid p = AsPointed(x, name);
      if (!IsFreePointed(p)) throw WrongCategory("V expects a free matroid");
      return CofreePointed(p.base().ground(), p.point());
    }
    case FunctorName::kH:
      return HObject(AsPointed(x, name));
    case FunctorName::kU: {
      Matroid m = AsMatroid(x, name);
      if (m.rank() != m.size()) throw WrongCategory("U expects a free matroid");
      std::vector<Mask> flats{0, m.full()};
      return Matroid::FromFlats(m.ground(), std::move(flats));
    }
    case FunctorName::kJ:
      return JObject(AsPointed(x, name));
    case FunctorName::kAddPoint:
      return AddPointObject(AsMatroid(x, name));
    case FunctorName::kAddIsthmus:
      return AddIsthmusObject(AsMatroid(x, name));
  }
  throw WrongCategory("unknown functor");
}

Arrow ApplyFunctor(FunctorName name, const Arrow& f) {
  switch (name) {
    case FunctorName::kFree:
    case FunctorName::kCofree: {
      const bool free = name == FunctorName::kFree;
      if (const auto* g = std::get_if<FinMap>(&f)) {
        return free ? StrongMap(Matroid::Free(g->dom), Matroid::Free(g->cod),
                                g->table)
                    : StrongMap(Matroid::Cofree(g->dom),
                                Matroid::Cofree(g->cod), g->table);
      }
      const StrongMap& s = std::get<StrongMap>(f);
      if (s.pointed()) {
        auto lift = free ? FreePointed : CofreePointed;
        return StrongMap(lift(s.dom().ground(), s.dom_point()),
                         lift(s.cod().ground(), s.cod_point()), s.table());
      }
      return free ? StrongMap(Matroid::Free(s.dom().ground()),
                              Matroid::Free(s.cod().ground()), s.table())
                  : StrongMap(Matroid::Cofree(s.dom().ground()),
                              Matroid::Cofree(s.cod().ground()), s.table());
    }
    case FunctorName::kUnderlying: {
      const StrongMap& s = AsStrong(f, name);
      return FinMap{s.dom().ground(), s.cod().ground(), s.table()};
    }
    case FunctorName::kZeroFlat: {
      const StrongMap& s = AsStrong(f, name);
      const Mask a = s.dom().loops();
      const Mask b = s.cod().loops();
      std::vector<int> ib = Reindex(s.cod().size(), b);
      std::vector<int> table;
      for (int i = 0; i < s.dom().size(); ++i) {
        if (a & Bit(i)) table.push_back(ib[s(i)]);
      }
      return FinMap{GroundSet(s.dom().ground().labels_of(a)),
                    GroundSet(s.cod().ground().labels_of(b)),
                    std::move(table)};
    }
    case FunctorName::kV: {
      const StrongMap& s = AsPointedStrong(f, name);
      return StrongMap(
          std::get<PointedMatroid>(ApplyFunctor(name, Object(s.pointed_dom()))),
          std::get<PointedMatroid>(ApplyFunctor(name, Object(s.pointed_cod()))),
          s.table());
    }
    case FunctorName::kH: {
      const StrongMap& s = AsPointedStrong(f, name);
      const Mask a = s.dom().loops();
      std::vector<int> ib = Reindex(s.cod().size(), s.cod().loops());
      std::vector<int> table;
      for (int i = 0; i < s.dom().size(); ++i) {
        if (a & Bit(i)) table.push_back(ib[s(i)]);
      }
      return StrongMap(HObject(s.pointed_dom()), HObject(s.pointed_cod()),
                       std::move(table));
    }
    case FunctorName::kU: {
      const StrongMap& s = AsUnpointedStrong(f, name);
      return StrongMap(std::get<Matroid>(ApplyFunctor(name, Object(s.dom()))),
                       std::get<Matroid>(ApplyFunctor(name, Object(s.cod()))),
                       s.table());
    }
    case FunctorName::kJ: {
      const StrongMap& s = AsPointedStrong(f, name);
      PointedMatroid dom = JObject(s.pointed_dom());
      PointedMatroid cod = JObject(s.pointed_cod());
      const Mask keep = JKeep(s.pointed_dom());
      std::vector<int> ib = Reindex(s.cod().size(), JKeep(s.pointed_cod()));
      std::vector<int> table;
      for (int i = 0; i < s.dom().size(); ++i) {
        if (!(keep & Bit(i))) continue;
        table.push_back(ib[s(i)] >= 0 ? ib[s(i)] : cod.point());
      }
      return StrongMap(dom, cod, std::move(table));
    }
    case FunctorName::kAddPoint: {
      const StrongMap& s = AsUnpointedStrong(f, name);
      std::vector<int> table = s.table();
      table.push_back(s.cod().size());
      return StrongMap(AddPointObject(s.dom()), AddPointObject(s.cod()),
                       std::move(table));
    }
    case FunctorName::kAddIsthmus: {
      const StrongMap& s = AsUnpointedStrong(f, name);
      std::vector<int> table = s.table();
      table.push_back(s.cod().size());
      return StrongMap(AddIsthmusObject(s.dom()), AddIsthmusObject(s.cod()),
                       std::move(table));
    }
  }
  throw WrongCategory("unknown functor");
}

}  // namespace matroidcat
