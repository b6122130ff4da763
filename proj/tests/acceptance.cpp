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

// Acceptance suite: one PASS/FAIL line per criterion, with detail lines
// indented below. Exits nonzero when any gating criterion fails.

#include <fmt/core.h>

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "matroidcat/catlab.hpp"
#include "matroidcat/construct.hpp"
#include "matroidcat/glat.hpp"
#include "matroidcat/greedy.hpp"
#include "oracles.hpp"

namespace matroidcat {
namespace {

// Wall-clock limits in seconds.
constexpr double kHomCountLimit = 60.0;
constexpr double kCoequalizerLimit = 10.0;
constexpr double kPropertyLimit = 300.0;

// Seed and sample size for the greedy forward check.
constexpr std::uint64_t kGreedySeed = 2023;
constexpr int kGreedyWeights = 200;

// Node budgets for the non-gating searches. The product carrier has 16
// elements and 50000 nodes take a few seconds.
constexpr std::uint64_t kProductBudget = 50000;
constexpr std::uint64_t kPushoutBudget = 2000000;

class Criterion {
 public:
  explicit Criterion(std::string title)
      : title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

  void Check(bool ok, const std::string& what) {
    if (!ok) {
      ++failures_;
      if (failures_ <= 10) details_.push_back("FAILED " + what);
    }
  }
  void Note(const std::string& s) { details_.push_back(s); }
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }
  void Limit(double seconds) {
    const double t = Seconds();
    Check(t < seconds, fmt::format("took {:.1f} s, limit {:.0f} s", t, seconds));
  }
  // Prints the result line and returns whether it passed.
  bool Report(int id) const {
    const bool ok = failures_ == 0;
    fmt::print("{} {} {} ({:.1f} s)\n", ok ? "PASS" : "FAIL", id, title_,
               Seconds());
    for (const std::string& d : details_) fmt::print("    {}\n", d);
    if (failures_ > 10) fmt::print("    ... {} failures\n", failures_);
    return ok;
  }

 private:
  std::string title_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::string> details_;
  int failures_ = 0;
};

std::vector<Matroid> UpTo(int n) {
  std::vector<Matroid> out;
  for (int k = 0; k <= n; ++k) {
    for (const Matroid& m : AllMatroids(k)) out.push_back(m);
  }
  return out;
}

// Element 0 is the point.
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

std::vector<Mask> Sorted(std::vector<Mask> f) {
  std::sort(f.begin(), f.end());
  return f;
}

void RegistryCases(Criterion& c, const std::vector<std::string>& ids) {
  for (const std::string& id : ids) {
    CaseResult r = PaperVerify(id);
    for (const Quantity& q : r.quantities) {
      c.Check(q.holds(), fmt::format("{}: {} expected {}{} computed {}", id,
                                     q.name, q.at_least ? ">=" : "",
                                     q.expected, q.computed));
    }
    c.Note(fmt::format("{}: {}/{} quantities match", id,
                       std::count_if(r.quantities.begin(), r.quantities.end(),
                                     [](const Quantity& q) {
                                       return q.holds();
                                     }),
                       r.quantities.size()));
  }
}

bool HomCounts() {
  Criterion c("hom-count regression");
  RegistryCases(c, {"F-no-right-adjoint", "SM-no-right-adjoint",
                    "LM-no-right-adjoint", "LMatr-in-Matr-no-right-adjoint",
                    "FMatr-no-left-adjoint"});
  c.Limit(kHomCountLimit);
  return c.Report(1);
}

bool Coequalizer() {
  Criterion c("coequalizer non-existence");
  Diagram d = DiagramFromJson(PaperCaseFixtures("coequalizer").at("diagram"));
  SearchReport r = ColimitSearch(d);
  c.Check(r.verdict == Verdict::kNotExistsExhaustive,
          "verdict " + ToString(r.verdict));
  c.Check(r.carrier.size() == 4, "carrier size");
  c.Check(r.candidates_examined == 3,
          fmt::format("{} candidates", r.candidates_examined));
  // Carrier order: point, [12], [3], [4].
  const std::vector<Mask> c1 = {0b0001, 0b1111};
  const std::vector<Mask> c2 = {0b0001, 0b0011, 0b1101, 0b1111};
  const std::vector<Mask> c3 = {0b0001, 0b0011, 0b0101, 0b1001, 0b1111};
  std::set<std::vector<Mask>> expected = {c1, c2, c3};
  std::set<std::vector<Mask>> certified;
  for (const Certificate& cert : r.certificates) {
    certified.insert(Sorted(cert.candidate));
    c.Check(RefutesColimitCandidate(d, r, cert.candidate, cert.competitor,
                                    cert.comparison),
            "certificate does not refute its candidate");
  }
  c.Check(certified == expected, "candidate families differ");
  Matroid p2 = Matroid::FromFlats(GroundSet::Range(4), c2);
  Matroid p3 = MakeMatroid({"[*4]", "[12]", "[3]"},
                           {{"[*4]"}, {"[*4]", "[12]", "[3]"}});
  Matroid p4 = MakeMatroid({"[*34]", "[12]"}, {{"[*34]"}, {"[*34]", "[12]"}});
  c.Check(RefutesColimitCandidate(d, r, c1, p2, {0, 1, 2, 3}),
          "first competitor");
  c.Check(RefutesColimitCandidate(d, r, c2, p3, {0, 1, 2, 0}),
          "second competitor");
  c.Check(RefutesColimitCandidate(d, r, c3, p4, {0, 1, 0, 0}),
          "third competitor");
  c.Note(fmt::format("verdict {}, {} candidates, {} certificates",
                     ToString(r.verdict), r.candidates_examined,
                     r.certificates.size()));
  c.Limit(kCoequalizerLimit);
  return c.Report(2);
}

bool ZeroHoms() {
  Criterion c("counterexample zero-hom checks");
  RegistryCases(c, {"free-extension", "erection", "union", "intersection",
                    "half-dual", "dual"});
  return c.Report(3);
}

void Axiomatizations(Criterion& c) {
  int matroids = 0;
  for (int n = 0; n <= 4; ++n) {
    const Mask full = FullMask(n);
    const std::uint64_t families = std::uint64_t{1} << (full + 1);
    int flat_count = 0, indep_count = 0;
    for (std::uint64_t code = 0; code < families; ++code) {
      std::vector<Mask> fam;
      for (Mask x = 0; x <= full; ++x) {
        if (code >> x & 1) fam.push_back(x);
      }
      const bool flats_ok = CheckFlats(n, fam).empty();
      const bool indep_ok = CheckIndependents(n, fam).empty();
      c.Check(flats_ok == oracle::FlatsValid(n, fam), "flat validator");
      c.Check(indep_ok == oracle::IndependentsValid(fam),
              "independence validator");
      if (flats_ok) {
        ++flat_count;
        Matroid m = Matroid::FromFlats(GroundSet::Range(n), fam);
        c.Check(CheckRank(n, m.rank_table()).empty() &&
                    oracle::RankValid(n, m.rank_table()),
                "rank of a flat family");
        c.Check(Matroid::FromRank(m.ground(), m.rank_table()) == m &&
                    Matroid::FromIndependents(m.ground(), m.independents()) ==
                        m,
                "conversions from flats");
      }
      if (indep_ok) {
        ++indep_count;
        Matroid m = Matroid::FromIndependents(GroundSet::Range(n), fam);
        for (Mask x = 0; x <= full; ++x) {
          c.Check(m.rank(x) == oracle::RankFromIndependents(fam, x),
                  "rank from independents");
        }
        c.Check(Matroid::FromFlats(m.ground(), m.flats()) == m,
                "conversions from independents");
      }
    }
    c.Check(flat_count == indep_count, fmt::format("counts at n={}", n));
    matroids += flat_count;
  }
  c.Note(fmt::format("axiomatizations: {} matroids on <=4 elements",
                     matroids));
}

void StrongCriteria(Criterion& c) {
  std::vector<Matroid> all = UpTo(3);
  std::uint64_t checked = 0;
  for (const Matroid& m : all) {
    for (const Matroid& n : all) {
      for (const auto& f : oracle::AllFunctions(m.size(), n.size())) {
        const bool expected = oracle::StrongByFlats(f, m.flats(), n.flats());
        c.Check(oracle::StrongByRank(f, m.size(), m.rank_table(),
                                     n.rank_table()) == expected,
                "rank oracle");
        c.Check(IsStrong(f, m, n, StrongCriterion::kFlatPreimage) == expected &&
                    IsStrong(f, m, n, StrongCriterion::kRankDifference) ==
                        expected &&
                    IsStrong(f, m, n, StrongCriterion::kLattice) == expected,
                "strong-map criteria");
        ++checked;
      }
    }
  }
  c.Note(fmt::format("strong-map criteria: {} functions", checked));
}

void GreedyEquivalence(Criterion& c) {
  int families = 0;
  for (const IndependenceSystem& s : AllIndependenceSystems(4)) {
    GreedyCertificate cert = CertifyMatroidByGreedy(s);
    c.Check(cert.is_matroid == CheckIndependents(4, s.family()).empty(),
            "greedy certification vs augmentation");
    if (cert.witness) {
      c.Check(cert.witness->all_runs_suboptimal &&
                  BruteOptimum(s, cert.witness->weights).weight >
                      cert.witness->run.weight,
              "greedy witness");
    }
    ++families;
  }
  // The empty family is downward closed but not an independence system.
  bool rejected = false;
  try {
    IndependenceSystem(GroundSet::Range(4), {});
  } catch (const InvalidSystem&) {
    rejected = true;
  }
  c.Check(rejected && !CheckIndependents(4, {}).empty(), "empty family");
  ++families;
  c.Check(families == 168, fmt::format("{} down-sets", families));
  c.Note(fmt::format("greedy: {} down-sets on 4 elements", families));
}

void MonadAndReflection(Criterion& c) {
  int objects = 0;
  for (const PointedMatroid& m : PointedUpTo(4)) {
    Simplification s = Simplify(m);
    StrongMap mu = SimplifyMultiplication(m);
    StrongMap mu_si = SimplifyMultiplication(s.si);
    c.Check(Compose(mu, SimplifyMap(mu)) == Compose(mu, mu_si),
            "associativity");
    c.Check(Compose(mu, Simplify(s.si).unit) == StrongMap::Identity(s.si) &&
                Compose(mu, SimplifyMap(s.unit)) == StrongMap::Identity(s.si),
            "unit laws");
    ++objects;
  }
  AdjunctionReport rep = VerifyAdjunction("L", "S", 4, 4);
  c.Check(rep.ok(), "L -| S hom bijection");
  c.Note(fmt::format("monad laws on {} pointed matroids, L -| S on {} pairs",
                     objects, rep.pairs));
}

// Every commuting square r u = v l has exactly one diagonal.
int CheckFillIns(Criterion& c, const std::vector<StrongMap>& ls,
                 const std::vector<StrongMap>& rs) {
  int squares = 0;
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
          ++squares;
          c.Check(FillIns(l, r, u, v).size() == 1, "unique fill-in");
        }
      }
    }
  }
  return squares;
}

void FactorizationSystems(Criterion& c) {
  std::vector<StrongMap> epis, embeddings;
  for (const StrongMap& f : MapsUpTo(3)) {
    Factorization e = FactorEpiEmbedding(f);
    c.Check(InClass(e.l, MapClass::kEpi) &&
                InClass(e.r, MapClass::kEmbedding) &&
                Compose(e.r, e.l).table() == f.table(),
            "epi/embedding recomposition");
    if (InClass(f, MapClass::kEpi)) epis.push_back(f);
    if (InClass(f, MapClass::kEmbedding)) embeddings.push_back(f);
  }
  const int epi_squares = CheckFillIns(c, epis, embeddings);

  std::vector<StrongMap> ls, rs;
  for (const StrongMap& f : PointedMapsUpTo(3)) {
    Factorization p = FactorLatticeParallel(f);
    c.Check(InClass(p.l, MapClass::kLatticeLeft) &&
                InClass(p.r, MapClass::kParallelRight) &&
                Compose(p.r, p.l).table() == f.table(),
            "lattice/parallel recomposition");
    if (InClass(f, MapClass::kLatticeLeft)) ls.push_back(f);
    if (InClass(f, MapClass::kParallelRight)) rs.push_back(f);
  }
  const int lattice_squares = CheckFillIns(c, ls, rs);
  c.Note(fmt::format(
      "factorization systems: {} epi/embedding squares, {} lattice/parallel "
      "squares",
      epi_squares, lattice_squares));
}

void SmallConstructions(Criterion& c) {
  std::vector<Matroid> all = UpTo(3);
  for (const Matroid& m : all) {
    c.Check(Dual(Dual(m)) == m, "dual involution");
    ForEachSubset(m.full(), [&](Mask z) {
      ForEachSubset(m.full() & ~z, [&](Mask y) {
        std::vector<std::string> ys = m.ground().labels_of(y);
        std::vector<std::string> zs = m.ground().labels_of(z);
        c.Check(Minor(m, {{MinorStep::kDelete, ys},
                          {MinorStep::kContract, zs}}) ==
                    Minor(m, {{MinorStep::kContract, zs},
                              {MinorStep::kDelete, ys}}),
                "minor exchange");
      });
    });
  }
  int cotuples = 0;
  for (const Matroid& m : UpTo(2)) {
    for (const Matroid& n : UpTo(2)) {
      if (m.size() + n.size() > 3) continue;
      Coproduct sum = Sum(m, n);
      for (const Matroid& p : all) {
        std::vector<StrongMap> fs = EnumerateHoms(m, p);
        std::vector<StrongMap> gs = EnumerateHoms(n, p);
        std::set<std::vector<int>> seen;
        for (const StrongMap& f : fs) {
          for (const StrongMap& g : gs) {
            StrongMap h = Cotuple(sum, f, g);
            c.Check(Compose(h, sum.inj1) == f && Compose(h, sum.inj2) == g,
                    "cotuple");
            seen.insert(h.table());
            ++cotuples;
          }
        }
        c.Check(seen.size() == CountHoms(sum.sum, p), "coproduct hom count");
      }
    }
  }
  c.Note(fmt::format("dual, minors and coproducts: {} matroids, {} cotuples",
                     all.size(), cotuples));
}

bool Exhaustive() {
  Criterion c("exhaustive oracle equivalences");
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>>
      parts = {{"axiomatizations", Axiomatizations},
               {"strong criteria", StrongCriteria},
               {"greedy", GreedyEquivalence},
               {"monad and reflection", MonadAndReflection},
               {"factorization systems", FactorizationSystems},
               {"constructions", SmallConstructions}};
  for (const auto& [name, fn] : parts) {
    const double before = c.Seconds();
    fn(c);
    const double t = c.Seconds() - before;
    c.Check(t < kPropertyLimit,
            fmt::format("{} took {:.1f} s, limit {:.0f} s", name, t,
                        kPropertyLimit));
  }
  return c.Report(4);
}

bool Higgs() {
  Criterion c("Higgs factorization");
  int maps = 0, steps = 0;
  for (int n = 0; n <= 4; ++n) {
    std::vector<Matroid> ms = AllMatroids(n);
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    for (const Matroid& m : ms) {
      for (const Matroid& q : ms) {
        if (!IsStrong(id, m, q)) continue;
        StrongMap f(m, q, id);
        HiggsFactorization h = FactorHiggs(f);
        ++maps;
        const Mask dom = m.full();
        const Mask all = h.major.full();
        c.Check(h.nullity == m.rank() - q.rank() &&
                    static_cast<int>(h.lifts.size()) == h.nullity + 1 &&
                    h.lifts.back() == h.major && Popcount(h.added) == h.nullity,
                "chain shape");
        // Recomposition: dom embeds, and contracting S gives cod.
        c.Check(h.major.restriction(dom).same_structure(m), "embedding");
        Matroid contracted = Contract(h.major, h.added).matroid;
        c.Check(IsStrong(id, contracted, q) && IsStrong(id, q, contracted),
                "contraction onto cod");
        if (h.contraction) {
          c.Check(Compose(*h.contraction, h.embedding).table() == f.table(),
                  "composite");
        }
        // Q_0 is cod plus S as loops.
        for (Mask y = 0; y <= all; ++y) {
          c.Check(h.lifts[0].rank(y) == q.rank(y & dom), "Q_0");
        }
        // I(Q_k) = I(M_1) n I(first Higgs lift of Q_{k-1}), where M_1 is
        // dom plus S as free elements.
        for (int k = 1; k <= h.nullity; ++k) {
          const Matroid& prev = h.lifts[k - 1];
          for (Mask y = 0; y <= all; ++y) {
            const int size = Popcount(y);
            const bool in_m1 = m.rank(y & dom) == Popcount(y & dom);
            const bool in_lift = prev.rank(y) >= size - 1;
            c.Check((h.lifts[k].rank(y) == size) == (in_m1 && in_lift),
                    "intersection of independents");
          }
          std::vector<int> ident(h.major.size());
          for (int i = 0; i < h.major.size(); ++i) ident[i] = i;
          c.Check(IsStrong(ident, h.lifts[k], prev), "contraction step");
          ++steps;
        }
      }
    }
  }
  c.Note(fmt::format("{} bijective strong maps, {} lift steps", maps, steps));
  return c.Report(5);
}

Rational RandomRational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 6);
  return Rational(num(rng), den(rng));
}

bool GreedyForward() {
  Criterion c("greedy forward direction");
  std::mt19937_64 rng(kGreedySeed);
  int checked = 0;
  int runs = 0;
  for (int n = 0; n <= 5; ++n) {
    for (const Matroid& m : AllMatroids(n)) {
      IndependenceSystem s = IndependenceSystem::FromMatroid(m);
      for (int t = 0; t < kGreedyWeights; ++t) {
        WeightFn w;
        for (int e = 0; e < n; ++e) w.w.push_back(RandomRational(rng));
        const Rational best = BruteOptimum(s, w).weight;
        for (const GreedyRun& r : AllGreedyRuns(s, w)) {
          c.Check(r.weight == best,
                  fmt::format("{}: greedy {} optimum {}", m.describe(),
                              r.weight.str(), best.str()));
          ++runs;
        }
        ++checked;
      }
    }
  }
  c.Note(fmt::format("{} matroid-weight pairs, {} greedy runs", checked, runs));
  return c.Report(6);
}

void PrintBounded(const std::string& name, const SearchReport& r,
                  double seconds) {
  fmt::print(
      "INFO {}: {}, {} candidates, {} certificates, {} nodes, enumeration "
      "{} ({:.1f} s)\n",
      name, ToString(r.verdict), r.candidates_examined, r.certificates.size(),
      r.nodes, r.enumeration_complete ? "complete" : "stopped by budget",
      seconds);
}

// Non-gating: reports verdicts and candidate counts only.
void BoundedSearches() {
  using Clock = std::chrono::steady_clock;
  auto since = [](Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
  };
  SearchOptions o;
  o.node_budget = kProductBudget;
  Matroid u24 = Matroid::Uniform(2, GroundSet({"a", "b", "c", "d"}));
  Diagram product;
  product.objects = {u24, u24};
  auto start = Clock::now();
  SearchReport p = LimitSearch(product, o);
  PrintBounded("product U(2,4) x U(2,4)", p, since(start));

  o.node_budget = kPushoutBudget;
  start = Clock::now();
  SearchReport q = ColimitSearch(
      DiagramFromJson(PaperCaseFixtures("pushout").at("diagram")), o);
  PrintBounded("pushout of two U(3,6) extensions", q, since(start));
}

}  // namespace
}  // namespace matroidcat

int main() {
  using namespace matroidcat;
  bool ok = true;
  ok &= HomCounts();
  ok &= Coequalizer();
  ok &= ZeroHoms();
  ok &= Exhaustive();
  ok &= Higgs();
  ok &= GreedyForward();
  BoundedSearches();
  return ok ? 0 : 1;
}
