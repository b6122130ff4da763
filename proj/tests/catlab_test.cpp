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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "matroidcat/catlab.hpp"
#include "matroidcat/construct.hpp"
#include "matroidcat/glat.hpp"

namespace matroidcat {
namespace {

GroundSet G(std::vector<std::string> labels) { return GroundSet(labels); }

std::vector<Matroid> UpTo(int n) {
  std::vector<Matroid> out;
  for (int k = 0; k <= n; ++k) {
    for (const Matroid& m : AllMatroids(k)) out.push_back(m);
  }
  return out;
}

// Pointed matroids with element 0 as the point.
std::vector<PointedMatroid> PointedUpTo(int n) {
  std::vector<PointedMatroid> out;
  for (int k = 1; k <= n; ++k) {
    for (const Matroid& m : AllMatroids(k)) {
      if (m.loops() & 1) out.emplace_back(m, 0);
    }
  }
  return out;
}

std::vector<StrongMap> MapsUpTo(int n) {
  std::vector<StrongMap> out;
  std::vector<Matroid> ms = UpTo(n);
  for (const Matroid& a : ms) {
    for (const Matroid& b : ms) {
      for (StrongMap& f : EnumerateHoms(a, b)) out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<StrongMap> PointedMapsUpTo(int n) {
  std::vector<StrongMap> out;
  std::vector<PointedMatroid> ps = PointedUpTo(n);
  for (const PointedMatroid& a : ps) {
    for (const PointedMatroid& b : ps) {
      for (StrongMap& f : EnumerateHoms(a, b)) out.push_back(std::move(f));
    }
  }
  return out;
}

Diagram Discrete(const Matroid& m, const Matroid& n) {
  Diagram d;
  d.objects = {m, n};
  return d;
}

Diagram Parallel(const StrongMap& f, const StrongMap& g) {
  Diagram d;
  d.objects = {f.dom(), f.cod()};
  d.arrows = {{0, 1, f.table()}, {0, 1, g.table()}};
  return d;
}

std::vector<Mask> Sorted(std::vector<Mask> f) {
  std::sort(f.begin(), f.end());
  return f;
}

TEST(Category, Membership) {
  EXPECT_EQ(ParseCategory("loopless"), Category::kLoopless);
  EXPECT_EQ(ParseCategory("simple"), Category::kSimple);
  EXPECT_EQ(ParseCategory("matr"), Category::kMatr);
  EXPECT_FALSE(ParseCategory("free").has_value());
  Matroid u12 = Matroid::Uniform(1, G({"a", "b"}));
  EXPECT_TRUE(InCategory(u12, Category::kLoopless));
  EXPECT_FALSE(InCategory(u12, Category::kSimple));
  Matroid c = Matroid::Cofree(G({"*"}));
  EXPECT_FALSE(InCategory(c, Category::kLoopless));
  EXPECT_TRUE(InCategory(c, Category::kSimple, 0));
}

TEST(Diagram, JsonRoundTripAndValidation) {
  Json doc = PaperCaseFixtures("coequalizer").at("diagram");
  Diagram d = DiagramFromJson(doc);
  EXPECT_TRUE(d.pointed());
  EXPECT_EQ(d.category, Category::kLoopless);
  ASSERT_EQ(d.arrows.size(), 2u);
  Diagram e = DiagramFromJson(ToJson(d));
  EXPECT_EQ(e.objects, d.objects);
  EXPECT_EQ(e.points, d.points);
  EXPECT_EQ(e.arrows[1].table, d.arrows[1].table);

  Json bad = ParseJsonText(R"({"objects": [
      {"ground": ["a", "b"], "flats": [[], ["a"], ["b"], ["a", "b"]]},
      {"ground": ["x", "y"], "flats": [[], ["x", "y"]]}],
      "arrows": [{"from": 0, "to": 1, "table": {"a": "x", "b": "y"}}]})");
  EXPECT_NO_THROW(DiagramFromJson(bad));
  bad["arrows"][0]["from"] = 1;
  bad["arrows"][0]["to"] = 0;
  bad["arrows"][0]["table"] = Json{{"x", "a"}, {"y", "b"}};
  EXPECT_THROW(DiagramFromJson(bad), ValidationError);
  bad["arrows"][0]["to"] = 2;
  EXPECT_THROW(DiagramFromJson(bad), ParseError);
}

TEST(ColimitSearch, DiscreteDiagramIsCoproduct) {
  std::vector<Matroid> ms = UpTo(2);
  for (const Matroid& m : ms) {
    for (const Matroid& n : ms) {
      SearchReport r = ColimitSearch(Discrete(m, n));
      ASSERT_EQ(r.verdict, Verdict::kExistsWithWitness);
      ASSERT_TRUE(r.witness.has_value());
      EXPECT_TRUE(r.witness->same_structure(Sum(m, n).sum));
    }
  }
}

TEST(ColimitSearch, CoequalizerCandidatesAndRefutations) {
  Diagram d = DiagramFromJson(PaperCaseFixtures("coequalizer").at("diagram"));
  SearchReport r = ColimitSearch(d);
  EXPECT_EQ(r.verdict, Verdict::kNotExistsExhaustive);
  EXPECT_TRUE(r.enumeration_complete);
  EXPECT_EQ(r.carrier.size(), 4);
  EXPECT_EQ(r.carrier_point, 0);
  EXPECT_EQ(r.legs[1], (std::vector<int>{0, 1, 1, 2, 3}));
  EXPECT_EQ(r.candidates_examined, 3u);
  // Carrier order: point, [12], [3], [4].
  std::set<std::vector<Mask>> expected = {
      {0b0001, 0b1111},
      {0b0001, 0b0011, 0b1101, 0b1111},
      {0b0001, 0b0011, 0b0101, 0b1001, 0b1111}};
  std::set<std::vector<Mask>> certified;
  ASSERT_EQ(r.certificates.size(), 3u);
  for (const Certificate& c : r.certificates) {
    certified.insert(Sorted(c.candidate));
    EXPECT_TRUE(RefutesColimitCandidate(d, r, c.candidate, c.competitor,
                                        c.comparison));
  }
  std::set<std::vector<Mask>> sorted_expected;
  for (const auto& e : expected) sorted_expected.insert(Sorted(e));
  EXPECT_EQ(certified, sorted_expected);

  // The competitors named in the argument.
  const std::vector<Mask> c1 = {0b0001, 0b1111};
  const std::vector<Mask> c2 = {0b0001, 0b0011, 0b1101, 0b1111};
  const std::vector<Mask> c3 = {0b0001, 0b0011, 0b0101, 0b1001, 0b1111};
  Matroid p2 = Matroid::FromFlats(GroundSet::Range(4), c2);
  EXPECT_TRUE(RefutesColimitCandidate(d, r, c1, p2, {0, 1, 2, 3}));
  Matroid p3 = MakeMatroid({"[*4]", "[12]", "[3]"},
                           {{"[*4]"}, {"[*4]", "[12]", "[3]"}});
  EXPECT_TRUE(RefutesColimitCandidate(d, r, c2, p3, {0, 1, 2, 0}));
  Matroid p4 = MakeMatroid({"[*34]", "[12]"}, {{"[*34]"}, {"[*34]", "[12]"}});
  EXPECT_TRUE(RefutesColimitCandidate(d, r, c3, p4, {0, 1, 0, 0}));
  // A competitor that does not refute: the candidate maps to itself.
  EXPECT_FALSE(RefutesColimitCandidate(
      d, r, c3, Matroid::FromFlats(GroundSet::Range(4), c3), {0, 1, 2, 3}));
}

TEST(ColimitSearch, CofreePushout) {
  SearchReport r =
      ColimitSearch(DiagramFromJson(PaperCaseFixtures("cofree-pushout")
                                        .at("diagram")));
  ASSERT_EQ(r.verdict, Verdict::kExistsWithWitness);
  EXPECT_EQ(*r.witness, Matroid::Cofree(r.carrier));
  EXPECT_EQ(r.carrier.size(), 2);

  // Wider cofree spans: the witness is C of the set pushout.
  Matroid cx = Matroid::Cofree(G({"x", "y"}));
  Matroid cm = Matroid::Cofree(G({"p", "q", "r"}));
  Matroid cn = Matroid::Cofree(G({"s", "t"}));
  Diagram d;
  d.objects = {cx, cm, cn};
  d.arrows = {{0, 1, {0, 0}}, {0, 2, {0, 1}}};
  SearchReport s = ColimitSearch(d);
  ASSERT_EQ(s.verdict, Verdict::kExistsWithWitness);
  EXPECT_EQ(s.carrier.size(), 3);
  EXPECT_EQ(s.witness->loops(), s.witness->full());
}

// A cocone on a parallel pair is h : N -> P with h f = h g; the comparison
// from the witness is forced by the carrier.
TEST(ColimitSearch, WitnessesSatisfyUniversalProperty) {
  std::vector<Matroid> targets = UpTo(3);
  int witnesses = 0;
  int refuted = 0;
  std::vector<Matroid> ms = UpTo(2);
  for (const Matroid& m : ms) {
    for (const Matroid& n : ms) {
      std::vector<StrongMap> homs = EnumerateHoms(m, n);
      for (size_t i = 0; i < homs.size(); ++i) {
        for (size_t j = i; j < homs.size(); ++j) {
          Diagram d = Parallel(homs[i], homs[j]);
          SearchReport r = ColimitSearch(d);
          if (r.verdict != Verdict::kExistsWithWitness) {
            ++refuted;
            EXPECT_EQ(r.verdict, Verdict::kNotExistsExhaustive);
            EXPECT_FALSE(r.certificates.empty());
            continue;
          }
          ++witnesses;
          const Matroid& w = *r.witness;
          for (size_t k = 0; k < 2; ++k) {
            EXPECT_TRUE(IsStrong(r.legs[k], d.objects[k], w));
          }
          for (const Matroid& p : targets) {
            for (const StrongMap& h : EnumerateHoms(n, p)) {
              if (Compose(h, homs[i]) != Compose(h, homs[j])) continue;
              std::vector<int> k(w.size(), -1);
              for (int y = 0; y < n.size(); ++y) k[r.legs[1][y]] = h(y);
              EXPECT_TRUE(IsStrong(k, w, p));
            }
          }
        }
      }
    }
  }
  EXPECT_GT(witnesses, 0);
  EXPECT_EQ(refuted, 0);
}

TEST(LimitSearch, EqualizerAgreesWithConstruction) {
  std::vector<Matroid> ms = UpTo(3);
  std::mt19937 rng(5);
  int checked = 0;
  for (const Matroid& m : ms) {
    for (const Matroid& n : ms) {
      if (m.size() + n.size() > 5) continue;
      std::vector<StrongMap> homs = EnumerateHoms(m, n);
      if (homs.size() < 2) continue;
      std::uniform_int_distribution<size_t> pick(0, homs.size() - 1);
      for (int t = 0; t < 3; ++t) {
        const StrongMap& f = homs[pick(rng)];
        const StrongMap& g = homs[pick(rng)];
        SearchReport r = LimitSearch(Parallel(f, g));
        Equalizer e = Equalize(f, g);
        ASSERT_EQ(r.verdict, Verdict::kExistsWithWitness);
        EXPECT_TRUE(r.witness->same_structure(e.eq));
        for (size_t k = 0; k < 2; ++k) {
          EXPECT_TRUE(IsStrong(r.legs[k], *r.witness,
                               k == 0 ? f.dom() : f.cod()));
        }
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(LimitSearch, CofreeProduct) {
  Diagram d = Discrete(Matroid::Cofree(G({"a", "b"})),
                       Matroid::Cofree(G({"x", "y"})));
  SearchReport r = LimitSearch(d);
  ASSERT_EQ(r.verdict, Verdict::kExistsWithWitness);
  EXPECT_EQ(r.carrier.size(), 4);
  EXPECT_EQ(r.carrier.label(1), "(a,y)");
  EXPECT_EQ(*r.witness, Matroid::Cofree(r.carrier));
}

TEST(LimitSearch, UniformProductWithinBound) {
  Matroid u24 = Matroid::Uniform(2, G({"a", "b", "c", "d"}));
  SearchOptions o;
  o.node_budget = 50000;
  SearchReport r = LimitSearch(Discrete(u24, u24), o);
  EXPECT_EQ(r.carrier.size(), 16);
  EXPECT_EQ(r.verdict, Verdict::kNotExistsWithinBound);
  EXPECT_FALSE(r.enumeration_complete);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_LE(r.nodes, 50001u);
}

TEST(ColimitSearch, PushoutWithinBound) {
  Diagram d = DiagramFromJson(PaperCaseFixtures("pushout").at("diagram"));
  SearchOptions o;
  o.node_budget = 50000;
  SearchReport r = ColimitSearch(d, o);
  EXPECT_EQ(r.carrier.size(), 8);
  EXPECT_NE(r.verdict, Verdict::kExistsWithWitness);
  EXPECT_NE(r.verdict, Verdict::kNotExistsExhaustive);
}

TEST(ColimitSearch, CarrierOverflow) {
  Matroid big = Matroid::Free(GroundSet::Range(9));
  SearchReport r = ColimitSearch(Discrete(big, big));
  EXPECT_EQ(r.verdict, Verdict::kBudgetExceeded);
}

TEST(EpiEmbedding, Examples) {
  PointedMatroid u = MakePointed({"*", "a", "b"}, {{"*"}, {"*", "a", "b"}},
                                 "*");
  PointedMatroid f = MakePointed(
      {"*", "x", "y"}, {{"*"}, {"*", "x"}, {"*", "y"}, {"*", "x", "y"}}, "*");
  StrongMap hit_x(u, f, {0, 1, 1});
  Factorization e = FactorEpiEmbedding(hit_x);
  EXPECT_EQ(e.l.cod().ground().labels(), (std::vector<std::string>{"*", "x"}));
  EXPECT_TRUE(InClass(e.l, MapClass::kEpi));
  EXPECT_TRUE(InClass(e.r, MapClass::kEmbedding));
  EXPECT_EQ(Compose(e.r, e.l), hit_x);

  StrongMap to_point(u, f, {0, 0, 0});
  Factorization c = FactorEpiEmbedding(to_point);
  EXPECT_EQ(c.l.cod().size(), 1);
  EXPECT_EQ(c.l.cod().loops(), c.l.cod().full());

  StrongMap iso(f, f, {0, 2, 1});
  Factorization i = FactorEpiEmbedding(iso);
  EXPECT_EQ(i.r.table(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(i.l, iso);
}

TEST(EpiEmbedding, AllMapsUpToThree) {
  for (const StrongMap& f : MapsUpTo(3)) {
    Factorization e = FactorEpiEmbedding(f);
    EXPECT_TRUE(InClass(e.l, MapClass::kEpi));
    EXPECT_TRUE(InClass(e.r, MapClass::kEmbedding));
    EXPECT_EQ(Compose(e.r, e.l).table(), f.table());
  }
}

TEST(LatticeParallel, Examples) {
  // Collapsing a parallel pair: l keeps the lattice, r does the collapse
  // only across rank-1 flats.
  PointedMatroid par = MakePointed({"*", "a", "b"}, {{"*"}, {"*", "a", "b"}},
                                   "*");
  PointedMatroid line = MakePointed({"*", "x"}, {{"*"}, {"*", "x"}}, "*");
  StrongMap collapse(par, line, {0, 1, 1});
  Factorization p = FactorLatticeParallel(collapse);
  EXPECT_TRUE(InClass(p.l, MapClass::kLatticeLeft));
  EXPECT_TRUE(InClass(p.r, MapClass::kParallelRight));
  EXPECT_EQ(Compose(p.r, p.l), collapse);
  EXPECT_EQ(p.l.cod().size(), 2);

  // Already injective on rank-1 flats: l is an isomorphism.
  StrongMap id = StrongMap::Identity(par);
  Factorization q = FactorLatticeParallel(id);
  EXPECT_TRUE(ClassifyMorphism(q.l).iso);
}

TEST(LatticeParallel, AllPointedMapsUpToThree) {
  for (const StrongMap& f : PointedMapsUpTo(3)) {
    Factorization p = FactorLatticeParallel(f);
    EXPECT_TRUE(InClass(p.l, MapClass::kLatticeLeft));
    EXPECT_TRUE(InClass(p.r, MapClass::kParallelRight));
    EXPECT_EQ(Compose(p.r, p.l).table(), f.table());
    EXPECT_EQ(Popcount(p.l.cod().loops()), Popcount(f.cod().loops()));
    EXPECT_TRUE(FindIsomorphism(LObject(p.l.cod()), LObject(f.dom())));
  }
}

TEST(TripleFactorization, AllPointedMapsUpToThree) {
  for (const StrongMap& f : PointedMapsUpTo(3)) {
    TripleFactorization t = FactorTriple(f);
    EXPECT_TRUE(InClass(t.lattice, MapClass::kLatticePreserving));
    EXPECT_TRUE(InClass(t.epi, MapClass::kEpi));
    EXPECT_TRUE(InClass(t.epi, MapClass::kRankOneInjective));
    EXPECT_TRUE(InClass(t.embedding, MapClass::kEmbedding));
    EXPECT_EQ(Compose(t.embedding, Compose(t.epi, t.lattice)).table(),
              f.table());
  }
}

// Every commuting square l, r, u, v with r u = v l has exactly one
// diagonal.
void CheckFillIns(const std::vector<StrongMap>& ls,
                  const std::vector<StrongMap>& rs, int* squares) {
  for (const StrongMap& l : ls) {
    for (const StrongMap& r : rs) {
      const bool pointed = l.pointed();
      auto homs = [&](const Matroid& a, int pa, const Matroid& b, int pb) {
        return pointed ? EnumerateHoms(PointedMatroid(a, pa),
                                       PointedMatroid(b, pb))
                       : EnumerateHoms(a, b);
      };
      const int lp = pointed ? l.dom_point() : -1;
      const int lc = pointed ? l.cod_point() : -1;
      const int rp = pointed ? r.dom_point() : -1;
      const int rc = pointed ? r.cod_point() : -1;
      for (const StrongMap& u : homs(l.dom(), lp, r.dom(), rp)) {
        for (const StrongMap& v : homs(l.cod(), lc, r.cod(), rc)) {
          if (Compose(r, u) != Compose(v, l)) continue;
          ++*squares;
          EXPECT_EQ(FillIns(l, r, u, v).size(), 1u);
        }
      }
    }
  }
}

TEST(FillIns, EpiEmbeddingSquaresUpToThree) {
  std::vector<StrongMap> epis, embeddings;
  for (const StrongMap& f : MapsUpTo(3)) {
    if (InClass(f, MapClass::kEpi)) epis.push_back(f);
    if (InClass(f, MapClass::kEmbedding)) embeddings.push_back(f);
  }
  int squares = 0;
  CheckFillIns(epis, embeddings, &squares);
  EXPECT_EQ(squares, 500672);
}

TEST(FillIns, LatticeParallelSquaresUpToThree) {
  std::vector<StrongMap> ls, rs;
  for (const StrongMap& f : PointedMapsUpTo(3)) {
    if (InClass(f, MapClass::kLatticeLeft)) ls.push_back(f);
    if (InClass(f, MapClass::kParallelRight)) rs.push_back(f);
    const bool both = InClass(f, MapClass::kLatticeLeft) &&
                      InClass(f, MapClass::kParallelRight);
    EXPECT_EQ(both, ClassifyMorphism(f).iso) << f.describe();
  }
  int squares = 0;
  CheckFillIns(ls, rs, &squares);
  EXPECT_EQ(squares, 7071);
}

// With the literal classes the lift fails: the inclusion U(1,1) -> U(1,2)
// is lattice-preserving and injective, and a loop-only codomain may gain
// loops.
TEST(FillIns, LiteralClassesAreNotOrthogonal) {
  PointedMatroid one = MakePointed({"*", "a"}, {{"*"}, {"*", "a"}}, "*");
  PointedMatroid two =
      MakePointed({"*", "a", "b"}, {{"*"}, {"*", "a", "b"}}, "*");
  StrongMap inc(one, two, {0, 1});
  EXPECT_TRUE(InClass(inc, MapClass::kLatticePreserving));
  EXPECT_TRUE(InClass(inc, MapClass::kRankOneInjective));
  EXPECT_FALSE(InClass(inc, MapClass::kLatticeLeft));
  EXPECT_TRUE(InClass(inc, MapClass::kParallelRight));
  StrongMap id = StrongMap::Identity(two);
  EXPECT_TRUE(FillIns(inc, inc, StrongMap::Identity(one), id).empty());

  PointedMatroid point = MakePointed({"*"}, {{"*"}}, "*");
  PointedMatroid loops = MakePointed({"*", "x"}, {{"*", "x"}}, "*");
  StrongMap l(point, loops, {0});
  EXPECT_TRUE(InClass(l, MapClass::kLatticePreserving));
  EXPECT_FALSE(InClass(l, MapClass::kParallelRight));
  EXPECT_TRUE(FillIns(l, l, StrongMap::Identity(point),
                      StrongMap::Identity(loops))
                  .empty());
}

TEST(FillIns, RejectsMismatchedSquare) {
  StrongMap a = StrongMap::Identity(Matroid::Free(G({"a"})));
  StrongMap b = StrongMap::Identity(Matroid::Free(G({"a", "b"})));
  EXPECT_THROW(FillIns(a, a, b, a), DomainMismatch);
}

TEST(Quillen, TwoOutOfThreeFails) {
  CaseResult r = PaperVerify("quillen");
  EXPECT_TRUE(r.pass());
  PointedMatroid m2 = MakePointed({"*", "x"}, {{"*"}, {"*", "x"}}, "*");
  PointedMatroid m3 = MakePointed({"*", "x"}, {{"*", "x"}}, "*");
  EXPECT_FALSE(FactorsAsLatticeThenEmbedding(StrongMap(m2, m3, {0, 1})));
  EXPECT_TRUE(FactorsAsLatticeThenEmbedding(StrongMap::Identity(m2)));
}

void CheckHiggs(const StrongMap& f) {
  HiggsFactorization h = FactorHiggs(f);
  const Matroid& m = f.dom();
  const Matroid& n = f.cod();
  const int size = m.size();
  ASSERT_EQ(h.nullity, m.rank() - n.rank());
  ASSERT_EQ(static_cast<int>(h.lifts.size()), h.nullity + 1);
  EXPECT_EQ(h.lifts.back(), h.major);
  EXPECT_EQ(Popcount(h.added), h.nullity);
  const Mask dom = FullMask(size);
  EXPECT_TRUE(h.major.restriction(dom).same_structure(m));
  std::vector<int> id(h.major.size());
  for (int i = 0; i < h.major.size(); ++i) id[i] = i;
  for (int k = 1; k <= h.nullity; ++k) {
    EXPECT_TRUE(IsStrong(id, h.lifts[k], h.lifts[k - 1]));
  }
  // r_{Q_k}(X u W) = min(r_M(X) + |W|, r_N(f X) + k).
  for (int k = 0; k <= h.nullity; ++k) {
    for (Mask y = 0; y <= h.major.full(); ++y) {
      const Mask x = y & dom;
      const int w = Popcount(y & h.added);
      EXPECT_EQ(h.lifts[k].rank(y),
                std::min(m.rank(x) + w, n.rank(f.image(x)) + k));
    }
  }
  EXPECT_EQ(h.embedding.table(), std::vector<int>(id.begin(),
                                                  id.begin() + size));
  if (h.contraction) {
    EXPECT_EQ(Compose(*h.contraction, h.embedding).table(), f.table());
  } else {
    EXPECT_GT(h.nullity, 0);
    EXPECT_EQ(n.loops(), 0u);
  }
  Matroid q = Contract(h.major, h.added).matroid;
  std::vector<int> onto(size), back(size);
  for (int i = 0; i < size; ++i) {
    onto[i] = f(i);
    back[f(i)] = i;
  }
  EXPECT_TRUE(IsStrong(onto, q, n) && IsStrong(back, n, q));
}

TEST(Higgs, Examples) {
  Matroid f3 = Matroid::Free(G({"a", "b", "c"}));
  Matroid u23 = Matroid::Uniform(2, G({"a", "b", "c"}));
  HiggsFactorization h = FactorHiggs(StrongMap(f3, u23, {0, 1, 2}));
  EXPECT_EQ(h.nullity, 1);
  EXPECT_EQ(h.major.size(), 4);
  EXPECT_TRUE(h.major.restriction(f3.full()).same_structure(f3));
  EXPECT_FALSE(h.contraction.has_value());
  CheckHiggs(StrongMap(f3, u23, {0, 1, 2}));

  HiggsFactorization z = FactorHiggs(StrongMap::Identity(u23));
  EXPECT_EQ(z.nullity, 0);
  EXPECT_EQ(z.major, u23);
  ASSERT_TRUE(z.contraction.has_value());
  EXPECT_EQ(z.contraction->table(), (std::vector<int>{0, 1, 2}));

  EXPECT_THROW(FactorHiggs(StrongMap(f3, u23, {0, 0, 2})),
               NotBijectiveStrong);
}

TEST(Higgs, AllBijectiveMapsUpToFour) {
  int checked = 0;
  for (int n = 0; n <= 4; ++n) {
    std::vector<Matroid> ms = AllMatroids(n);
    for (const Matroid& m : ms) {
      for (const Matroid& q : ms) {
        std::vector<int> id(n);
        for (int i = 0; i < n; ++i) id[i] = i;
        if (!IsStrong(id, m, q)) continue;
        CheckHiggs(StrongMap(m, q, id));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(Higgs, PointedContractionHitsThePoint) {
  for (const PointedMatroid& p : PointedUpTo(3)) {
    for (const PointedMatroid& q : PointedUpTo(3)) {
      if (q.base().size() != p.base().size()) continue;
      std::vector<int> id(p.base().size());
      for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
      if (!IsStrong(id, p.base(), q.base())) continue;
      StrongMap f(p, q, id);
      HiggsFactorization h = FactorHiggs(f);
      ASSERT_TRUE(h.contraction.has_value());
      EXPECT_TRUE(h.contraction->pointed());
      for (int x = p.base().size(); x < h.major.size(); ++x) {
        EXPECT_EQ((*h.contraction)(x), q.point());
      }
    }
  }
}

TEST(ContractionCoequalizer, EveryContractionUpToFour) {
  int checked = 0;
  for (const PointedMatroid& n : PointedUpTo(4)) {
    ForEachSubset(n.base().full() & ~n.point_mask(), [&](Mask z) {
      CoequalizerCheck c = CheckContractionCoequalizer(n, z, 3);
      EXPECT_EQ(c.failures, 0u);
      EXPECT_GT(c.cocones, 0u);
      ++checked;
    });
  }
  EXPECT_GT(checked, 100);
  PointedMatroid p = MakePointed({"*", "a"}, {{"*"}, {"*", "a"}}, "*");
  EXPECT_THROW(CheckContractionCoequalizer(p, Bit(0)), std::invalid_argument);
}

TEST(Adjunctions, AllKnownPairsHold) {
  std::vector<std::pair<std::string, std::string>> pairs = KnownAdjunctions();
  EXPECT_EQ(pairs.size(), 12u);
  for (const auto& [l, r] : pairs) {
    AdjunctionReport rep = VerifyAdjunction(l, r);
    EXPECT_TRUE(rep.ok()) << l << " -| " << r;
    EXPECT_GT(rep.morphisms, 0u) << l << " -| " << r;
  }
  EXPECT_THROW(VerifyAdjunction("V", "F_free"), UnknownPair);
}

TEST(Adjunctions, FreeUnderlyingCounts) {
  // |Matr(F(X), M)| = |M|^|X| on every pair up to three elements.
  for (int x = 0; x <= 3; ++x) {
    for (const Matroid& m : UpTo(3)) {
      std::uint64_t expect = 1;
      for (int i = 0; i < x; ++i) expect *= m.size();
      EXPECT_EQ(CountHoms(Matroid::Free(GroundSet::Range(x)), m), expect);
    }
  }
}

TEST(Adjunctions, LatticeSUpToFour) {
  AdjunctionReport rep = VerifyAdjunction("L", "S", 4, 4);
  EXPECT_TRUE(rep.ok());
  EXPECT_GT(rep.pairs, 100u);
}

TEST(Registry, CasesAndKnownMismatches) {
  std::vector<std::string> ids = PaperCaseIds();
  EXPECT_GE(ids.size(), 15u);
  // Printed counts that enumeration does not reproduce.
  const std::map<std::string, std::map<std::string, std::int64_t>> known = {
      {"F-no-right-adjoint", {{"hom(M, V3)", 9}}},
      {"SM-no-right-adjoint", {{"hom(S, R(M)) free option", 13}}},
      {"LM-no-right-adjoint",
       {{"epi(D, N(M)) second option", 8}, {"epi(D, M)", 4}}}};
  for (const std::string& id : ids) {
    CaseResult r = PaperVerify(id);
    EXPECT_FALSE(r.quantities.empty()) << id;
    EXPECT_FALSE(r.claim.empty()) << id;
    auto it = known.find(id);
    if (it == known.end()) {
      EXPECT_TRUE(r.pass()) << id;
      continue;
    }
    EXPECT_FALSE(r.pass()) << id;
    for (const Quantity& q : r.quantities) {
      auto m = it->second.find(q.name);
      if (m == it->second.end()) {
        EXPECT_TRUE(q.holds()) << id << ": " << q.name;
      } else {
        EXPECT_EQ(q.computed, m->second) << id << ": " << q.name;
      }
    }
  }
  EXPECT_THROW(PaperVerify("no-such-case"), UnknownCase);
  EXPECT_THROW(PaperCaseFixtures("no-such-case"), UnknownCase);
}

TEST(Registry, SelectedCounts) {
  CaseResult sm = PaperVerify("SM-no-right-adjoint");
  EXPECT_EQ(sm.quantities[0].computed, 25);
  CaseResult lm = PaperVerify("LMatr-in-Matr-no-right-adjoint");
  std::vector<std::int64_t> counts;
  for (const Quantity& q : lm.quantities) counts.push_back(q.computed);
  EXPECT_EQ(counts, (std::vector<std::int64_t>{27, 15, 9, 9, 15, 9}));
  Quantity bound{"x", 2, 5, true};
  EXPECT_TRUE(bound.holds());
  bound.computed = 1;
  EXPECT_FALSE(bound.holds());
}

// Categorical mono and epi, tested against every probe object up to two
// (mono) or three (epi) elements, agree with injective and surjective.
TEST(MonoEpi, UnderlyingFunctorReflects) {
  std::vector<Matroid> probes2 = UpTo(2);
  std::vector<Matroid> probes3 = UpTo(3);
  for (const StrongMap& f : MapsUpTo(2)) {
    bool mono = true;
    for (const Matroid& x : probes2) {
      std::vector<StrongMap> gs = EnumerateHoms(x, f.dom());
      for (size_t i = 0; i < gs.size() && mono; ++i) {
        for (size_t j = i + 1; j < gs.size() && mono; ++j) {
          if (Compose(f, gs[i]) == Compose(f, gs[j])) mono = false;
        }
      }
    }
    bool epi = true;
    for (const Matroid& y : probes3) {
      std::vector<StrongMap> gs = EnumerateHoms(f.cod(), y);
      for (size_t i = 0; i < gs.size() && epi; ++i) {
        for (size_t j = i + 1; j < gs.size() && epi; ++j) {
          if (Compose(gs[i], f) == Compose(gs[j], f)) epi = false;
        }
      }
    }
    MorphismClass c = ClassifyMorphism(f);
    std::set<int> image(f.table().begin(), f.table().end());
    const bool injective = static_cast<int>(image.size()) == f.dom().size();
    const bool surjective = static_cast<int>(image.size()) == f.cod().size();
    EXPECT_EQ(mono, injective);
    EXPECT_EQ(epi, surjective);
    EXPECT_EQ(c.mono, injective);
    EXPECT_EQ(c.epi, surjective);
  }
}

}  // namespace
}  // namespace matroidcat
