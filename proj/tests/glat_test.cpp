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

#include <random>

#include "matroidcat/glat.hpp"

namespace matroidcat {
namespace {

Lattice Boolean2() {
  return Lattice::FromCovers({"0", "a", "b", "ab"},
                             {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

Lattice Diamond() {
  return Lattice::FromCovers({"0", "x", "y", "z", "1"},
                             {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

Lattice Pentagon() {
  return Lattice::FromCovers({"0", "a", "b", "c", "1"},
                             {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

// Matroids on n elements in which element 0 is a loop, pointed at 0.
std::vector<PointedMatroid> AllPointed(int max_size) {
  std::vector<PointedMatroid> out;
  const std::vector<std::string> labels = {"*", "a", "b", "c", "d"};
  for (int n = 1; n <= max_size; ++n) {
    GroundSet ground(std::vector<std::string>(labels.begin(),
                                              labels.begin() + n));
    for (const Matroid& m : AllMatroids(ground)) {
      if (m.loops() & Bit(0)) out.emplace_back(m, 0);
    }
  }
  return out;
}

// Geometric lattices of all matroids on at most max_size elements, one per
// isomorphism class.
std::vector<GeometricLattice> SmallLattices(int max_size) {
  std::vector<GeometricLattice> out;
  for (int n = 0; n <= max_size; ++n) {
    for (const Matroid& m : AllMatroids(n)) {
      GeometricLattice l = LObject(m);
      bool seen = false;
      for (const auto& k : out) {
        if (FindIsomorphism(k, l)) seen = true;
      }
      if (!seen) out.push_back(l);
    }
  }
  return out;
}

TEST(Lattice, GeometricExamples) {
  EXPECT_TRUE(IsGeometric(Boolean2()));
  EXPECT_TRUE(IsGeometric(Diamond()));
  EXPECT_FALSE(IsGeometric(Pentagon()));
  EXPECT_THROW(GeometricLattice{Pentagon()}, NotGeometric);
  // Two maximal elements: no join for them.
  EXPECT_THROW(Lattice::FromCovers({"0", "a", "b"}, {{0, 1}, {0, 2}}),
               NotALattice);
  EXPECT_THROW(Lattice::FromCovers({"a", "b"}, {{0, 1}, {1, 0}}), NotALattice);
}

TEST(Lattice, TablesAndHeights) {
  Lattice d = Diamond();
  EXPECT_EQ(d.bottom(), 0);
  EXPECT_EQ(d.top(), 4);
  EXPECT_EQ(d.join(1, 2), 4);
  EXPECT_EQ(d.meet(1, 2), 0);
  EXPECT_EQ(d.height(), 2);
  EXPECT_EQ(d.atoms(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(d.covers().size(), 6u);
  EXPECT_EQ(Pentagon().height(2), 2);
}

TEST(LObject, Examples) {
  GeometricLattice free2 = LObject(Matroid::Free(GroundSet({"a", "b"})));
  EXPECT_TRUE(FindIsomorphism(free2, Boolean2()).has_value());
  GeometricLattice u23 = LObject(Matroid::Uniform(2, GroundSet({"a", "b", "c"})));
  EXPECT_TRUE(FindIsomorphism(u23, Diamond()).has_value());
  EXPECT_FALSE(FindIsomorphism(u23, Pentagon()).has_value());
  EXPECT_EQ(u23.name(u23.top()), "{a,b,c}");
}

TEST(LMorphism, NotFaithful) {
  Matroid m = MakeMatroid({"0", "1", "2"}, {{"0"}, {"0", "1", "2"}});
  StrongMap swap(m, m, {0, 2, 1});
  EXPECT_FALSE(swap == StrongMap::Identity(m));
  EXPECT_EQ(LMorphism(swap), LMorphism(StrongMap::Identity(m)));
  EXPECT_EQ(LMorphism(swap), GLatMorphism::Identity(LObject(m)));
}

TEST(LMorphism, FunctorLaws) {
  std::vector<Matroid> all;
  for (int n = 0; n <= 3; ++n) {
    for (const Matroid& m : AllMatroids(n)) all.push_back(m);
  }
  std::mt19937 rng(3);
  int tested = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Matroid& a = all[rng() % all.size()];
    const Matroid& b = all[rng() % all.size()];
    const Matroid& c = all[rng() % all.size()];
    auto fs = EnumerateHoms(a, b);
    auto gs = EnumerateHoms(b, c);
    if (fs.empty() || gs.empty()) continue;
    const StrongMap& f = fs[rng() % fs.size()];
    const StrongMap& g = gs[rng() % gs.size()];
    EXPECT_EQ(LMorphism(Compose(g, f)), Compose(LMorphism(g), LMorphism(f)));
    EXPECT_EQ(LMorphism(StrongMap::Identity(a)),
              GLatMorphism::Identity(LObject(a)));
    ++tested;
  }
  EXPECT_GT(tested, 100);
}

TEST(SObject, Examples) {
  PointedMatroid s = SObject(GeometricLattice(Diamond()));
  PointedMatroid u23 = MakePointed(
      {"*", "x", "y", "z"},
      {{"*"}, {"*", "x"}, {"*", "y"}, {"*", "z"}, {"*", "x", "y", "z"}}, "*");
  EXPECT_EQ(s, u23);

  Lattice one = Lattice::FromCovers({"0"}, {});
  PointedMatroid loop = SObject(GeometricLattice(one));
  EXPECT_EQ(loop.base().size(), 1);
  EXPECT_EQ(loop.base().loops(), Bit(0));

  PointedMatroid free3 =
      SObject(LObject(Matroid::Free(GroundSet({"a", "b", "c"}))));
  EXPECT_EQ(free3.base().flats().size(), 8u);
  EXPECT_EQ(free3.base().rank(), 3);
  EXPECT_TRUE(IsPointedSimple(free3));
}

TEST(SObject, FullAndFaithfulOnSmallLattices) {
  std::vector<GeometricLattice> lattices = SmallLattices(3);
  for (const auto& g : lattices) {
    for (const auto& h : lattices) {
      auto homs = EnumerateGLatHoms(g, h);
      EXPECT_EQ(homs.size(), CountHoms(SObject(g), SObject(h)));
      std::vector<std::vector<int>> tables;
      for (const auto& k : homs) tables.push_back(SMorphism(k).table());
      std::sort(tables.begin(), tables.end());
      EXPECT_EQ(std::adjacent_find(tables.begin(), tables.end()),
                tables.end());
    }
  }
}

TEST(Reflection, CounitIsIsomorphismUpToFiveAtoms) {
  int checked = 0;
  for (int n = 0; n <= 5; ++n) {
    for (const Matroid& m : AllMatroids(n)) {
      GeometricLattice g = LObject(m);
      EXPECT_TRUE(
          FindIsomorphism(LObject(SObject(g).base()), g).has_value());
      ++checked;
    }
  }
  EXPECT_EQ(checked, 1 + 2 + 5 + 16 + 68 + 406);
}

TEST(Reflection, HomBijection) {
  std::vector<GeometricLattice> lattices = SmallLattices(3);
  for (const PointedMatroid& m : AllPointed(4)) {
    GeometricLattice lm = LObject(m.base());
    for (const auto& g : lattices) {
      ASSERT_EQ(CountHoms(m, SObject(g)), EnumerateGLatHoms(lm, g).size());
    }
  }
}

TEST(Simplify, ParallelPair) {
  PointedMatroid m = MakePointed({"*", "a", "b"}, {{"*"}, {"*", "a", "b"}}, "*");
  Simplification s = Simplify(m);
  EXPECT_EQ(s.si.base().ground().labels(),
            (std::vector<std::string>{"*", "a"}));
  EXPECT_EQ(s.unit.table(), (std::vector<int>{0, 1, 1}));
  EXPECT_TRUE(IsPointedSimple(s.si));
  EXPECT_FALSE(IsPointedSimple(m));
}

TEST(Simplify, AgreesWithSOfL) {
  for (const PointedMatroid& m : AllPointed(4)) {
    Simplification s = Simplify(m);
    EXPECT_TRUE(IsPointedSimple(s.si));
    EXPECT_TRUE(FindIsomorphism(LObject(s.si.base()),
                                LObject(SObject(LObject(m.base())).base()))
                    .has_value());
    bool unit_iso = ClassifyMorphism(s.unit).iso;
    EXPECT_EQ(unit_iso, IsPointedSimple(m));
  }
}

TEST(Simplify, MonadLaws) {
  for (const PointedMatroid& m : AllPointed(4)) {
    Simplification s = Simplify(m);
    StrongMap mu = SimplifyMultiplication(m);
    StrongMap mu_si = SimplifyMultiplication(s.si);
    // mu o si(mu) = mu o mu_si.
    EXPECT_EQ(Compose(mu, SimplifyMap(mu)), Compose(mu, mu_si));
    // mu o eta_si = id = mu o si(eta).
    StrongMap eta_si = Simplify(s.si).unit;
    EXPECT_EQ(Compose(mu, eta_si), StrongMap::Identity(s.si));
    EXPECT_EQ(Compose(mu, SimplifyMap(s.unit)), StrongMap::Identity(s.si));
  }
}

TEST(Simplify, NaturalityOfUnit) {
  std::vector<PointedMatroid> all = AllPointed(3);
  for (const auto& m : all) {
    for (const auto& n : all) {
      for (const StrongMap& f : EnumerateHoms(m, n)) {
        EXPECT_EQ(Compose(SimplifyMap(f), Simplify(m).unit),
                  Compose(Simplify(n).unit, f));
      }
    }
  }
}

TEST(Simplify, AlgebrasAreSimpleMatroids) {
  for (const PointedMatroid& m : AllPointed(4)) {
    Simplification s = Simplify(m);
    int algebras = 0;
    for (const StrongMap& a : EnumerateHoms(s.si, m)) {
      if (Compose(a, s.unit) == StrongMap::Identity(m)) {
        ++algebras;
        std::vector<int> id(m.base().size());
        std::iota(id.begin(), id.end(), 0);
        EXPECT_EQ(a.table(), id);
      }
    }
    EXPECT_EQ(algebras, IsPointedSimple(m) ? 1 : 0);
  }
}

TEST(GLat, EpisAreSurjective) {
  std::vector<GeometricLattice> lattices = SmallLattices(3);
  for (const auto& a : lattices) {
    for (const auto& b : lattices) {
      for (const GLatMorphism& g : EnumerateGLatHoms(a, b)) {
        bool epi = true;
        for (const auto& c : lattices) {
          auto hs = EnumerateGLatHoms(b, c);
          for (size_t i = 0; i < hs.size() && epi; ++i) {
            for (size_t j = i + 1; j < hs.size() && epi; ++j) {
              if (Compose(hs[i], g) == Compose(hs[j], g)) epi = false;
            }
          }
        }
        EXPECT_EQ(epi, IsSurjective(g));
      }
    }
  }
}

TEST(GLat, QuotientsMapToSurjections) {
  int quotients = 0;
  for (int n = 0; n <= 4; ++n) {
    std::vector<Matroid> all = AllMatroids(n);
    for (const Matroid& m : all) {
      for (const Matroid& k : all) {
        for (const StrongMap& f : EnumerateHoms(m, k)) {
          if (!ClassifyMorphism(f).quotient) continue;
          EXPECT_TRUE(IsSurjective(LMorphism(f)));
          ++quotients;
        }
      }
    }
  }
  EXPECT_GT(quotients, 0);
}

TEST(GLatFactor, Identity) {
  GeometricLattice d(Diamond());
  GLatFactorization f = GLatFactor(GLatMorphism::Identity(d));
  EXPECT_EQ(f.embedding, GLatMorphism::Identity(d));
  EXPECT_EQ(f.contraction, GLatMorphism::Identity(d));
  EXPECT_TRUE(f.candidate_matches);
}

TEST(GLatFactor, FreeOntoUniform) {
  GroundSet abc({"a", "b", "c"});
  StrongMap q(Matroid::Free(abc), Matroid::Uniform(2, abc), {0, 1, 2});
  GLatMorphism g = LMorphism(q);
  GLatFactorization f = GLatFactor(g);
  EXPECT_EQ(Compose(f.contraction, f.embedding), g);
  EXPECT_TRUE(IsEmbedding(f.embedding));
  EXPECT_TRUE(IsContraction(f.contraction));
  EXPECT_EQ(f.lift, 2);
  // The fibre/rank candidate is all of dom here, which is not a valid middle.
  EXPECT_EQ(f.candidate.size(), 8u);
  EXPECT_FALSE(f.candidate_matches);
}

TEST(GLatFactor, CollapseDiamondToOneAtom) {
  GeometricLattice d(Diamond());
  GeometricLattice line(Lattice::FromCovers({"0", "p"}, {{0, 1}}));
  GLatMorphism g = GLatMorphism::FromAtoms(d, line, {1, 1, 1});
  GLatFactorization f = GLatFactor(g);
  EXPECT_EQ(Compose(f.contraction, f.embedding), g);
  EXPECT_TRUE(IsEmbedding(f.embedding));
  EXPECT_TRUE(IsContraction(f.contraction));
}

TEST(GLatFactor, AllSmallMorphisms) {
  std::vector<GeometricLattice> lattices = SmallLattices(3);
  int factored = 0;
  for (const auto& a : lattices) {
    for (const auto& b : lattices) {
      for (const GLatMorphism& g : EnumerateGLatHoms(a, b)) {
        GLatFactorization f = GLatFactor(g);
        ASSERT_EQ(Compose(f.contraction, f.embedding), g);
        ASSERT_TRUE(IsEmbedding(f.embedding));
        ASSERT_TRUE(IsContraction(f.contraction));
        ++factored;
      }
    }
  }
  EXPECT_GT(factored, 100);
}

}  // namespace
}  // namespace matroidcat
