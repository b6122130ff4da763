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

#include "matroidcat/greedy.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace matroidcat {

namespace {

using boost::multiprecision::cpp_int;

std::vector<char> MemberTable(int n, const std::vector<Mask>& family) {
  std::vector<char> member(std::size_t{1} << n, 0);
  for (Mask x : family) member[x] = 1;
  return member;
}

std::string RationalToString(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational ParseRational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(cpp_int(text));
    cpp_int den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in weight " + text);
    return Rational(cpp_int(text.substr(0, slash)), den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const ParseError*>(&e)) throw;
    throw ParseError("bad rational weight " + text);
  }
}

// The first pair (a, b) with |b| = |a| + 1 where no element of b - a
// extends a. Scans a, then b, in mask order.
std::optional<std::pair<Mask, Mask>> Violation(const IndependenceSystem& s) {
  for (Mask a : s.family()) {
    for (Mask b : s.family()) {
      if (Popcount(b) != Popcount(a) + 1) continue;
      bool extends = false;
      for (int e = 0; e < s.size() && !extends; ++e) {
        if ((b & ~a) & Bit(e)) extends = s.contains(a | Bit(e));
      }
      if (!extends) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

}  // namespace

IndependenceSystem::IndependenceSystem(GroundSet ground,
                                       std::vector<Mask> family)
    : ground_(std::move(ground)) {
  const int n = ground_.size();
  if (n > kMaxGround) throw InvalidSystem("ground set too large");
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  for (Mask x : family) {
    if (x & ~ground_.full()) throw InvalidSystem("subset outside the ground");
  }
  member_ = MemberTable(n, family);
  if (!member_[0]) throw InvalidSystem("nontrivial: the empty set is missing");
  for (Mask x : family) {
    for (int e = 0; e < n; ++e) {
      if ((x & Bit(e)) && !member_[x & ~Bit(e)]) {
        throw InvalidSystem("downward closed: " + ground_.format(x) +
                            " contains " + ground_.format(x & ~Bit(e)) +
                            ", which is missing");
      }
    }
  }
  family_ = std::move(family);
}

IndependenceSystem IndependenceSystem::FromMatroid(const Matroid& m) {
  return IndependenceSystem(m.ground(), m.independents());
}

std::vector<Mask> IndependenceSystem::maximal_members() const {
  std::vector<Mask> out;
  for (Mask x : family_) {
    bool maximal = true;
    for (int e = 0; e < size() && maximal; ++e) {
      if (!(x & Bit(e)) && contains(x | Bit(e))) maximal = false;
    }
    if (maximal) out.push_back(x);
  }
  return out;
}

std::vector<IndependenceSystem> AllIndependenceSystems(int n) {
  if (n < 0 || n > 5) throw std::invalid_argument("ground size out of range");
  std::vector<Mask> order;
  for (Mask x = 0; x < (Mask{1} << n); ++x) order.push_back(x);
  std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) {
    return Popcount(a) < Popcount(b);
  });
  std::vector<char> member(order.size(), 0);
  std::vector<std::vector<Mask>> families;
  std::vector<Mask> chosen;
  std::function<void(size_t)> rec = [&](size_t pos) {
    if (pos == order.size()) {
      if (member[0]) families.push_back(chosen);
      return;
    }
    const Mask x = order[pos];
    bool allowed = true;
    for (int e = 0; e < n && allowed; ++e) {
      if (x & Bit(e)) allowed = member[x & ~Bit(e)];
    }
    if (allowed) {
      member[x] = 1;
      chosen.push_back(x);
      rec(pos + 1);
      chosen.pop_back();
      member[x] = 0;
    }
    rec(pos + 1);
  };
  rec(0);
  for (std::vector<Mask>& f : families) std::sort(f.begin(), f.end());
  std::sort(families.begin(), families.end());
  std::vector<IndependenceSystem> out;
  const GroundSet ground = GroundSet::Range(n);
  for (std::vector<Mask>& f : families) out.emplace_back(ground, std::move(f));
  return out;
}

Rational WeightFn::operator()(Mask x) const {
  Rational total = 0;
  for (size_t e = 0; e < w.size(); ++e) {
    if (x & Bit(static_cast<int>(e))) total += w[e];
  }
  return total;
}

GreedyRun RunGreedy(const IndependenceSystem& s, const WeightFn& w,
                    const std::vector<int>& tie_break) {
  const int n = s.size();
  if (static_cast<int>(w.w.size()) != n) {
    throw std::invalid_argument("weight vector size differs from the ground");
  }
  std::vector<int> order = tie_break;
  if (order.empty()) {
    for (int e = 0; e < n; ++e) order.push_back(e);
  }
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int e = 0; e < n; ++e) {
    if (static_cast<int>(sorted.size()) != n || sorted[e] != e) {
      throw std::invalid_argument("tie_break is not a permutation");
    }
  }
  GreedyRun run;
  while (true) {
    int best = -1;
    for (int e : order) {
      if ((run.result & Bit(e)) || !s.contains(run.result | Bit(e))) continue;
      if (best < 0 || w.w[e] > w.w[best]) best = e;
    }
    if (best < 0) break;
    run.trace.push_back(best);
    run.result |= Bit(best);
  }
  run.weight = w(run.result);
  return run;
}

std::vector<GreedyRun> AllGreedyRuns(const IndependenceSystem& s,
                                     const WeightFn& w, std::size_t max_runs) {
  const int n = s.size();
  if (static_cast<int>(w.w.size()) != n) {
    throw std::invalid_argument("weight vector size differs from the ground");
  }
  // Runs through the same state continue identically, so each reachable
  // state is expanded once and each final set is reported with the first
  // trace reaching it.
  std::map<Mask, std::vector<int>> finals;
  std::set<Mask> seen{0};
  std::vector<std::pair<Mask, std::vector<int>>> frontier{{0, {}}};
  while (!frontier.empty()) {
    std::vector<std::pair<Mask, std::vector<int>>> next;
    for (auto& [x, trace] : frontier) {
      std::vector<int> best;
      for (int e = 0; e < n; ++e) {
        if ((x & Bit(e)) || !s.contains(x | Bit(e))) continue;
        if (best.empty() || w.w[e] > w.w[best[0]]) {
          best = {e};
        } else if (w.w[e] == w.w[best[0]]) {
          best.push_back(e);
        }
      }
      if (best.empty()) {
        finals.emplace(x, trace);
        if (finals.size() > max_runs) {
          throw BudgetExceeded("more than max_runs greedy outcomes");
        }
        continue;
      }
      for (int e : best) {
        if (!seen.insert(x | Bit(e)).second) continue;
        std::vector<int> t = trace;
        t.push_back(e);
        next.emplace_back(x | Bit(e), std::move(t));
      }
    }
    frontier = std::move(next);
  }
  std::vector<GreedyRun> out;
  for (auto& [x, trace] : finals) {
    GreedyRun r;
    r.trace = trace;
    r.result = x;
    r.weight = w(x);
    out.push_back(std::move(r));
  }
  return out;
}

Optimum BruteOptimum(const IndependenceSystem& s, const WeightFn& w) {
  std::optional<Optimum> best;
  for (Mask x : s.maximal_members()) {
    Rational v = w(x);
    if (!best || v > best->weight) best = Optimum{x, v};
  }
  return *best;
}

WeightFn ViolationWeights(int n, Mask a, Mask b) {
  WeightFn w;
  w.w.assign(n, Rational(0));
  const Rational delta(1, 2 * std::max(n, 1));
  for (int e = 0; e < n; ++e) {
    if (a & Bit(e)) {
      w.w[e] = 1 + delta;
    } else if (b & Bit(e)) {
      w.w[e] = 1;
    }
  }
  return w;
}

GreedyCertificate CertifyMatroidByGreedy(const IndependenceSystem& s) {
  GreedyCertificate c;
  std::optional<std::pair<Mask, Mask>> v = Violation(s);
  c.is_matroid = !v.has_value();
  if (!v) return c;
  GreedyWitness wit;
  wit.a = v->first;
  wit.b = v->second;
  wit.weights = ViolationWeights(s.size(), wit.a, wit.b);
  wit.run = RunGreedy(s, wit.weights);
  wit.optimum = BruteOptimum(s, wit.weights);
  wit.all_runs_suboptimal = true;
  for (const GreedyRun& r : AllGreedyRuns(s, wit.weights)) {
    if (r.weight >= wit.optimum.weight) wit.all_runs_suboptimal = false;
  }
  c.witness = std::move(wit);
  return c;
}

SquareFunctor SquareFunctor::FromSystem(const IndependenceSystem& s) {
  SquareFunctor f;
  f.ground = s.ground();
  std::map<Mask, int> index;
  for (Mask x : s.family()) {
    index[x] = static_cast<int>(f.sets.size());
    f.nodes.push_back(s.ground().format(x));
    f.sets.push_back(x);
  }
  for (Mask x : s.family()) {
    for (int e = 0; e < s.size(); ++e) {
      if (x & Bit(e)) f.covers.emplace_back(index.at(x & ~Bit(e)), index.at(x));
    }
  }
  return f;
}

void ValidateSquare(const SquareFunctor& f) {
  const int k = static_cast<int>(f.sets.size());
  if (k == 0) throw NotSquare("poset: no elements");
  if (static_cast<int>(f.nodes.size()) != k) {
    throw NotSquare("poset: node and set counts differ");
  }
  if (std::set<Mask>(f.sets.begin(), f.sets.end()).size() !=
      static_cast<size_t>(k)) {
    throw NotSquare("functor: not injective on objects");
  }
  for (Mask x : f.sets) {
    if (x & ~f.ground.full()) throw NotSquare("functor: set outside ground");
  }
  std::vector<int> below(k, 0);
  std::set<std::pair<int, int>> distinct;
  for (auto [lo, hi] : f.covers) {
    if (lo < 0 || hi < 0 || lo >= k || hi >= k) {
      throw NotSquare("poset: cover names an unknown node");
    }
    if (!distinct.insert({lo, hi}).second) {
      throw NotSquare("poset: repeated cover");
    }
    const Mask a = f.sets[lo];
    const Mask b = f.sets[hi];
    if ((a & ~b) || Popcount(b) != Popcount(a) + 1) {
      throw NotSquare("functor: cover " + f.nodes[lo] + " < " + f.nodes[hi] +
                      " is not an inclusion adding one element");
    }
    ++below[hi];
  }
  int bottom = -1;
  for (int i = 0; i < k; ++i) {
    if (below[i] > 0) continue;
    if (bottom >= 0) throw NotSquare("poset: no least element");
    bottom = i;
  }
  const Mask zero = f.sets[bottom];
  for (int i = 0; i < k; ++i) {
    if ((zero & ~f.sets[i])) throw NotSquare("poset: no least element");
    const int height = Popcount(f.sets[i]) - Popcount(zero);
    const int want = i == bottom ? 0 : height + kSquareCoverOffset;
    if (below[i] != want) {
      throw NotSquare("square: " + f.nodes[i] + " covers " +
                      std::to_string(below[i]) + " elements, expected " +
                      std::to_string(want));
    }
  }
}

ChainCheck EqualChainCheck(const SquareFunctor& f) {
  ValidateSquare(f);
  const int k = static_cast<int>(f.sets.size());
  std::vector<char> has_above(k, 0);
  std::vector<char> has_below(k, 0);
  for (auto [lo, hi] : f.covers) {
    has_above[lo] = 1;
    has_below[hi] = 1;
  }
  int bottom = 0;
  while (has_below[bottom]) ++bottom;
  const Mask zero = f.sets[bottom];
  Mask e = 0;
  for (Mask x : f.sets) e |= x;
  // The induced ground set E, in the order of the functor's ground.
  std::vector<std::string> labels;
  std::vector<int> pos(f.ground.size(), -1);
  for (int i = 0; i < f.ground.size(); ++i) {
    if (e & Bit(i)) {
      pos[i] = static_cast<int>(labels.size());
      labels.push_back(f.ground.label(i));
    }
  }
  auto compress = [&](Mask x) {
    Mask out = 0;
    for (int i = 0; i < f.ground.size(); ++i) {
      if (x & Bit(i)) out |= Bit(pos[i]);
    }
    return out;
  };
  std::vector<Mask> family;
  std::set<int> lengths;
  for (int i = 0; i < k; ++i) {
    family.push_back(compress(f.sets[i] & ~zero));
    if (!has_above[i]) lengths.insert(Popcount(f.sets[i]) - Popcount(zero));
  }
  std::optional<IndependenceSystem> induced;
  try {
    induced.emplace(GroundSet(labels), family);
  } catch (const InvalidSystem& err) {
    throw NotSquare(std::string("induced family: ") + err.what());
  }
  const bool matroid = CertifyMatroidByGreedy(*induced).is_matroid;
  return ChainCheck{*induced, {lengths.begin(), lengths.end()},
                    lengths.size() == 1, matroid};
}

IndependenceSystem SystemFromJson(const Json& doc) {
  if (!doc.is_object() || !doc.contains("ground") ||
      !doc.contains("independents")) {
    throw ParseError("independence system needs ground and independents");
  }
  std::vector<std::string> labels;
  for (const Json& l : doc.at("ground")) {
    if (!l.is_string()) throw ParseError("ground labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  if (std::set<std::string>(labels.begin(), labels.end()).size() !=
      labels.size()) {
    throw ParseError("duplicate ground label");
  }
  GroundSet ground(labels);
  std::vector<Mask> family;
  if (!doc.at("independents").is_array()) {
    throw ParseError("independents must be an array");
  }
  for (const Json& x : doc.at("independents")) {
    family.push_back(SubsetFromJson(ground, x));
  }
  try {
    return IndependenceSystem(ground, family);
  } catch (const InvalidSystem& e) {
    throw ValidationError("independence-system", e.what());
  }
}

Json ToJson(const IndependenceSystem& s) {
  Json out;
  out["ground"] = s.ground().labels();
  Json fam = Json::array();
  for (Mask x : s.family()) fam.push_back(SubsetToJson(s.ground(), x));
  out["independents"] = fam;
  return out;
}

WeightFn WeightsFromJson(const GroundSet& ground, const Json& doc) {
  if (!doc.is_object()) throw ParseError("weights must be an object");
  WeightFn w;
  w.w.assign(ground.size(), Rational(0));
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const int e = ground.find(it.key());
    if (e < 0) throw ParseError("unknown element in weights: " + it.key());
    const Json& v = it.value();
    if (v.is_number_integer()) {
      w.w[e] = Rational(cpp_int(v.get<std::int64_t>()));
    } else if (v.is_string()) {
      w.w[e] = ParseRational(v.get<std::string>());
    } else {
      throw ParseError("weight of " + it.key() +
                       " must be an integer or a \"p/q\" string");
    }
  }
  return w;
}

Json ToJson(const GroundSet& ground, const WeightFn& w) {
  Json out = Json::object();
  for (int e = 0; e < ground.size(); ++e) {
    out[ground.label(e)] = RationalToString(w.w[e]);
  }
  return out;
}

SquareFunctor SquareFromJson(const Json& doc) {
  if (!doc.is_object() || !doc.contains("ground") || !doc.contains("nodes") ||
      !doc.contains("covers")) {
    throw ParseError("square functor needs ground, nodes and covers");
  }
  SquareFunctor f;
  std::vector<std::string> labels;
  for (const Json& l : doc.at("ground")) {
    if (!l.is_string()) throw ParseError("ground labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  f.ground = GroundSet(labels);
  std::map<std::string, int> index;
  for (const Json& node : doc.at("nodes")) {
    if (!node.is_object() || !node.contains("id") || !node.contains("set") ||
        !node.at("id").is_string()) {
      throw ParseError("node needs a string id and a set");
    }
    const std::string id = node.at("id").get<std::string>();
    if (!index.emplace(id, static_cast<int>(f.nodes.size())).second) {
      throw ParseError("duplicate node id " + id);
    }
    f.nodes.push_back(id);
    f.sets.push_back(SubsetFromJson(f.ground, node.at("set")));
  }
  for (const Json& c : doc.at("covers")) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() ||
        !c[1].is_string()) {
      throw ParseError("cover must be a pair of node ids");
    }
    auto lo = index.find(c[0].get<std::string>());
    auto hi = index.find(c[1].get<std::string>());
    if (lo == index.end() || hi == index.end()) {
      throw ParseError("cover names an unknown node");
    }
    f.covers.emplace_back(lo->second, hi->second);
  }
  return f;
}

Json ToJson(const SquareFunctor& f) {
  Json out;
  out["ground"] = f.ground.labels();
  Json nodes = Json::array();
  for (size_t i = 0; i < f.nodes.size(); ++i) {
    nodes.push_back({{"id", f.nodes[i]},
                     {"set", SubsetToJson(f.ground, f.sets[i])}});
  }
  out["nodes"] = nodes;
  Json covers = Json::array();
  for (auto [lo, hi] : f.covers) covers.push_back({f.nodes[lo], f.nodes[hi]});
  out["covers"] = covers;
  return out;
}

}  // namespace matroidcat
