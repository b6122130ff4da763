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

#include "matroidcat/catlab.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "matroidcat/construct.hpp"
#include "matroidcat/enumerate.hpp"

namespace matroidcat {

namespace {

// Stored candidates per report.
constexpr size_t kMaxStoredCandidates = 16;
// Largest FinSet (co)limit carrier whose tuples are generated.
constexpr std::uint64_t kMaxTupleProduct = std::uint64_t{1} << 22;

std::vector<int> ComposeTables(const std::vector<int>& g,
                               const std::vector<int>& f) {
  std::vector<int> out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

int LeastElement(Mask m) { return m ? std::countr_zero(m) : -1; }

// Flats of a category structure forced by the category: the loop set.
Mask ForcedLoopSet(Category c, int point) {
  if (c == Category::kMatr) return ~Mask{0};
  return point >= 0 ? Bit(point) : 0;
}

FlatSearchOptions CategoryOptions(Category c, int point,
                                  std::function<bool(Mask, bool)> inner) {
  const Mask forced = ForcedLoopSet(c, point);
  FlatSearchOptions o;
  o.allow = [=](Mask x, bool flat) {
    if (flat && point >= 0 && !(x & Bit(point))) return false;
    if (!flat && x == forced) return false;
    return inner(x, flat);
  };
  return o;
}

std::vector<Mask> FamilyOf(const std::vector<char>& member) {
  std::vector<Mask> out;
  for (Mask x = 0; x < member.size(); ++x) {
    if (member[x]) out.push_back(x);
  }
  CanonicalSort(out);
  return out;
}

bool Contains(const std::vector<Mask>& sorted, Mask x) {
  return std::binary_search(sorted.begin(), sorted.end(), x,
                            [](Mask a, Mask b) {
                              int pa = Popcount(a), pb = Popcount(b);
                              return pa != pb ? pa < pb : a < b;
                            });
}

// Calls fn on every set partition of {0..n-1} as a block index per element.
template <typename Fn>
void ForEachPartition(int n, Fn&& fn) {
  std::vector<int> block(n, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      fn(block, used);
      return;
    }
    for (int b = 0; b <= used && b < n; ++b) {
      block[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  if (n == 0) {
    fn(block, 0);
    return;
  }
  rec(0, 0);
}

// Every matroid with at most max_size elements in the category. Pointed
// samples use element 0 as the point.
std::vector<Matroid> CategorySamples(Category c, bool pointed, int max_size) {
  std::vector<Matroid> out;
  for (int n = pointed ? 1 : 0; n <= max_size; ++n) {
    for (const Matroid& m : AllMatroids(n)) {
      if (pointed && !(m.loops() & 1)) continue;
      if (InCategory(m, c, pointed ? 0 : -1)) out.push_back(m);
    }
  }
  return out;
}

struct Carrier {
  GroundSet ground;
  int point = -1;
  std::vector<std::vector<int>> legs;
};

}  // namespace

std::optional<Category> ParseCategory(std::string_view name) {
  if (name == "matr") return Category::kMatr;
  if (name == "loopless") return Category::kLoopless;
  if (name == "simple") return Category::kSimple;
  return std::nullopt;
}

std::string ToString(Category c) {
  switch (c) {
    case Category::kMatr: return "matr";
    case Category::kLoopless: return "loopless";
    case Category::kSimple: return "simple";
  }
  return "";
}

bool InCategory(const Matroid& m, Category c, int point) {
  if (point >= 0 && !(m.loops() & Bit(point))) return false;
  if (c == Category::kMatr) return true;
  const Mask allowed_loops = point >= 0 ? Bit(point) : 0;
  if (m.loops() != allowed_loops) return false;
  if (c == Category::kLoopless) return true;
  for (Mask f : m.flats()) {
    if (m.rank(f) == 1 && Popcount(f & ~allowed_loops) != 1) return false;
  }
  return true;
}

void Validate(const Diagram& d) {
  const int n = static_cast<int>(d.objects.size());
  if (d.pointed() && static_cast<int>(d.points.size()) != n) {
    throw std::invalid_argument("diagram needs one point per object");
  }
  for (int i = 0; i < n; ++i) {
    int p = d.pointed() ? d.points[i] : -1;
    if (d.pointed() && (p < 0 || p >= d.objects[i].size())) {
      throw std::invalid_argument("point out of range");
    }
    if (!InCategory(d.objects[i], d.category, p)) {
      throw std::invalid_argument("object " + std::to_string(i) +
                                  " is not in category " +
                                  ToString(d.category));
    }
  }
  for (const DiagramArrow& a : d.arrows) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n) {
      throw std::invalid_argument("arrow index out of range");
    }
    const Matroid& dom = d.objects[a.from];
    const Matroid& cod = d.objects[a.to];
    if (static_cast<int>(a.table.size()) != dom.size()) {
      throw std::invalid_argument("arrow table has the wrong length");
    }
    for (int y : a.table) {
      if (y < 0 || y >= cod.size()) {
        throw std::invalid_argument("arrow value out of range");
      }
    }
    if (d.pointed()) {
      StrongMap(PointedMatroid(dom, d.points[a.from]),
                PointedMatroid(cod, d.points[a.to]), a.table);
    } else {
      StrongMap(dom, cod, a.table);
    }
  }
}

Diagram DiagramFromJson(const Json& doc) {
  if (!doc.is_object()) throw ParseError("diagram must be an object");
  Diagram d;
  if (doc.contains("category")) {
    if (!doc.at("category").is_string()) {
      throw ParseError("'category' must be a string");
    }
    auto c = ParseCategory(doc.at("category").get<std::string>());
    if (!c) throw ParseError("unknown category");
    d.category = *c;
  }
  if (!doc.contains("objects") || !doc.at("objects").is_array()) {
    throw ParseError("'objects' must be an array");
  }
  std::vector<MatroidDoc> objects;
  for (const Json& o : doc.at("objects")) objects.push_back(MatroidFromJson(o));
  bool pointed = !objects.empty();
  for (const MatroidDoc& o : objects) pointed = pointed && o.point.has_value();
  if (doc.contains("pointed")) {
    if (!doc.at("pointed").is_boolean()) {
      throw ParseError("'pointed' must be a boolean");
    }
    pointed = doc.at("pointed").get<bool>();
  }
  for (const MatroidDoc& o : objects) {
    d.objects.push_back(o.matroid);
    if (pointed) {
      if (!o.point) throw ParseError("pointed diagram object lacks a point");
      d.points.push_back(*o.point);
    }
  }
  if (doc.contains("arrows")) {
    if (!doc.at("arrows").is_array()) {
      throw ParseError("'arrows' must be an array");
    }
    for (const Json& a : doc.at("arrows")) {
      if (!a.is_object() || !a.contains("from") || !a.contains("to") ||
          !a.contains("table")) {
        throw ParseError("arrows need 'from', 'to' and 'table'");
      }
      if (!a.at("from").is_number_integer() ||
          !a.at("to").is_number_integer()) {
        throw ParseError("arrow ends must be object indices");
      }
      DiagramArrow arrow;
      arrow.from = a.at("from").get<int>();
      arrow.to = a.at("to").get<int>();
      const int n = static_cast<int>(d.objects.size());
      if (arrow.from < 0 || arrow.from >= n || arrow.to < 0 ||
          arrow.to >= n) {
        throw ParseError("arrow index out of range");
      }
      arrow.table = TableFromJson(d.objects[arrow.from].ground(),
                                  d.objects[arrow.to].ground(), a.at("table"));
      for (int y : arrow.table) {
        if (y < 0) throw ParseError("arrow table is not total");
      }
      d.arrows.push_back(std::move(arrow));
    }
  }
  try {
    Validate(d);
  } catch (const NotStrong& e) {
    throw ValidationError("strong-map", e.what());
  } catch (const std::invalid_argument& e) {
    throw ValidationError("diagram", e.what());
  }
  return d;
}

Json ToJson(const Diagram& d) {
  Json out;
  out["category"] = ToString(d.category);
  out["pointed"] = d.pointed();
  Json objects = Json::array();
  for (size_t i = 0; i < d.objects.size(); ++i) {
    objects.push_back(ToJson(d.objects[i], MatroidKind::kFlats,
                             d.pointed() ? std::optional<int>(d.points[i])
                                         : std::nullopt));
  }
  out["objects"] = objects;
  Json arrows = Json::array();
  for (const DiagramArrow& a : d.arrows) {
    Json j;
    j["from"] = a.from;
    j["to"] = a.to;
    j["table"] = TableToJson(d.objects[a.from].ground(),
                             d.objects[a.to].ground(), a.table);
    arrows.push_back(j);
  }
  out["arrows"] = arrows;
  return out;
}

std::string ToString(Verdict v) {
  switch (v) {
    case Verdict::kExistsWithWitness: return "exists-with-witness";
    case Verdict::kNotExistsExhaustive: return "not-exists-exhaustive";
    case Verdict::kNotExistsWithinBound: return "not-exists-within-bound";
    case Verdict::kBudgetExceeded: return "budget-exceeded";
  }
  return "";
}

namespace {

// Disjoint union modulo x ~ a(x) for every arrow a, with points identified.
std::optional<Carrier> ColimitCarrier(const Diagram& d) {
  const int n = static_cast<int>(d.objects.size());
  std::vector<int> offset(n + 1, 0);
  for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + d.objects[i].size();
  std::vector<int> parent(offset[n]);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (const DiagramArrow& a : d.arrows) {
    for (size_t x = 0; x < a.table.size(); ++x) {
      unite(offset[a.from] + static_cast<int>(x), offset[a.to] + a.table[x]);
    }
  }
  if (d.pointed()) {
    for (int i = 1; i < n; ++i) unite(offset[0] + d.points[0],
                                      offset[i] + d.points[i]);
  }
  std::vector<int> cls(offset[n], -1);
  std::vector<std::string> labels;
  std::set<std::string> used;
  Carrier c;
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < d.objects[i].size(); ++x) {
      int g = offset[i] + x;
      int r = find(g);
      if (cls[r] < 0) {
        if (static_cast<int>(labels.size()) == kMaxGround) return std::nullopt;
        cls[r] = static_cast<int>(labels.size());
        std::string name = d.objects[i].ground().label(x) + std::string(i, '\'');
        while (used.count(name)) name += "'";
        used.insert(name);
        labels.push_back(name);
      }
    }
  }
  c.ground = GroundSet(labels);
  for (int i = 0; i < n; ++i) {
    std::vector<int> leg(d.objects[i].size());
    for (int x = 0; x < d.objects[i].size(); ++x) {
      leg[x] = cls[find(offset[i] + x)];
    }
    c.legs.push_back(std::move(leg));
  }
  if (d.pointed() && n > 0) c.point = c.legs[0][d.points[0]];
  return c;
}

// Tuples consistent with every arrow, in lexicographic order.
std::optional<Carrier> LimitCarrier(const Diagram& d) {
  const int n = static_cast<int>(d.objects.size());
  std::uint64_t product = 1;
  for (const Matroid& m : d.objects) {
    product *= static_cast<std::uint64_t>(std::max(m.size(), 1));
    if (product > kMaxTupleProduct) return std::nullopt;
  }
  std::vector<std::vector<int>> tuples;
  std::vector<int> t(n, 0);
  bool overflow = false;
  std::function<void(int)> rec = [&](int i) {
    if (overflow) return;
    if (i == n) {
      if (static_cast<int>(tuples.size()) == kMaxGround) {
        overflow = true;
        return;
      }
      tuples.push_back(t);
      return;
    }
    for (int x = 0; x < d.objects[i].size(); ++x) {
      t[i] = x;
      bool ok = true;
      for (const DiagramArrow& a : d.arrows) {
        int hi = std::max(a.from, a.to);
        if (hi == i && a.table[t[a.from]] != t[a.to]) {
          ok = false;
          break;
        }
      }
      if (ok) rec(i + 1);
    }
  };
  rec(0);
  if (overflow) return std::nullopt;
  Carrier c;
  std::vector<std::string> labels;
  std::set<std::string> used;
  for (const std::vector<int>& tu : tuples) {
    std::string name;
    if (n == 1) {
      name = d.objects[0].ground().label(tu[0]);
    } else {
      name = "(";
      for (int i = 0; i < n; ++i) {
        if (i) name += ",";
        name += d.objects[i].ground().label(tu[i]);
      }
      name += ")";
    }
    while (used.count(name)) name += "'";
    used.insert(name);
    labels.push_back(name);
  }
  c.ground = GroundSet(labels);
  c.legs.assign(n, std::vector<int>(tuples.size()));
  for (size_t k = 0; k < tuples.size(); ++k) {
    for (int i = 0; i < n; ++i) c.legs[i][k] = tuples[k][i];
  }
  if (d.pointed()) {
    for (size_t k = 0; k < tuples.size(); ++k) {
      bool all = true;
      for (int i = 0; i < n; ++i) all = all && tuples[k][i] == d.points[i];
      if (all) c.point = static_cast<int>(k);
    }
  }
  return c;
}

struct Enumeration {
  std::uint64_t count = 0;
  bool complete = true;
  std::uint64_t nodes = 0;
};

// Enumerates category structures on n elements passing allow, filtered by
// InCategory. fn returns false to stop.
Enumeration EnumerateStructures(
    int n, Category c, int point, std::function<bool(Mask, bool)> allow,
    std::uint64_t budget,
    const std::function<bool(const std::vector<Mask>&, const Matroid&)>& fn) {
  FlatSearchOptions o = CategoryOptions(c, point, std::move(allow));
  o.node_budget = budget;
  Enumeration e;
  const GroundSet ground = GroundSet::Range(n);
  bool stopped = false;
  FlatSearchStats s = EnumerateFlatFamilies(
      n, o, [&](const std::vector<Mask>& flats) {
        Matroid m = Matroid::FromFlats(ground, flats);
        if (!InCategory(m, c, point)) return true;
        ++e.count;
        if (!fn(flats, m)) {
          stopped = true;
          return false;
        }
        return true;
      });
  e.complete = s.exhausted && !stopped;
  e.nodes = s.nodes;
  return e;
}

// Some surjective competitor P in the category with k : N -> P not strong,
// where k o leg_i is strong for every object.
std::optional<Certificate> PartitionCompetitor(
    const Carrier& carrier, Category c, const std::vector<char>& allowed,
    const std::vector<Mask>& candidate, const Matroid& n) {
  const int k = carrier.ground.size();
  std::optional<Certificate> found;
  ForEachPartition(k, [&](const std::vector<int>& block, int blocks) {
    if (found || blocks == k) return;
    std::vector<int> q = block;
    std::vector<std::string> labels(blocks, "[");
    for (int x = 0; x < k; ++x) labels[q[x]] += carrier.ground.label(x);
    for (std::string& l : labels) l += "]";
    const int point = carrier.point >= 0 ? q[carrier.point] : -1;
    EnumerateStructures(
        blocks, c, point,
        [&](Mask g, bool flat) {
          return !flat || allowed[PreimageOf(q, g)];
        },
        0,
        [&](const std::vector<Mask>& flats, const Matroid& p) {
          for (Mask g : flats) {
            if (!n.is_flat(PreimageOf(q, g))) {
              found = Certificate{candidate,
                                  p.relabeled(GroundSet(labels)), point, q};
              return false;
            }
          }
          return true;
        });
  });
  return found;
}

// First structure on the carrier passing allow and the category, if any.
std::optional<Matroid> FirstStructure(int n, Category c, int point,
                                      std::function<bool(Mask, bool)> allow,
                                      const GroundSet& ground) {
  std::optional<Matroid> out;
  EnumerateStructures(n, c, point, std::move(allow), 0,
                      [&](const std::vector<Mask>&, const Matroid& m) {
                        out = m.relabeled(ground);
                        return false;
                      });
  return out;
}

void FinishVerdict(SearchReport& r, const SearchOptions& o) {
  if (r.witness) {
    r.verdict = Verdict::kExistsWithWitness;
  } else if (r.enumeration_complete &&
             r.carrier.size() <= o.max_ground) {
    r.verdict = Verdict::kNotExistsExhaustive;
  } else {
    r.verdict = Verdict::kNotExistsWithinBound;
  }
}

}  // namespace

SearchReport ColimitSearch(const Diagram& d, const SearchOptions& options) {
  Validate(d);
  SearchReport r;
  std::optional<Carrier> carrier = ColimitCarrier(d);
  if (!carrier) {
    r.verdict = Verdict::kBudgetExceeded;
    return r;
  }
  r.carrier = carrier->ground;
  r.carrier_point = carrier->point;
  r.legs = carrier->legs;
  const int k = r.carrier.size();
  const Mask full = FullMask(k);

  // S is allowed when every leg pulls it back to a flat.
  std::vector<char> allowed(std::size_t{1} << k, 1);
  for (Mask s = 0; s <= full; ++s) {
    for (size_t i = 0; i < d.objects.size() && allowed[s]; ++i) {
      if (!d.objects[i].is_flat(PreimageOf(r.legs[i], s))) allowed[s] = 0;
    }
  }
  auto allow = [&](Mask x, bool flat) { return !flat || allowed[x]; };

  std::vector<char> in_union(allowed.size(), 0);
  std::vector<std::vector<Mask>> stored;
  const std::uint64_t budget = k > options.max_ground ? options.node_budget : 0;
  Enumeration e = EnumerateStructures(
      k, d.category, r.carrier_point, allow, budget,
      [&](const std::vector<Mask>& flats, const Matroid&) {
        for (Mask f : flats) in_union[f] = 1;
        if (stored.size() < kMaxStoredCandidates) stored.push_back(flats);
        return true;
      });
  r.candidates_examined = e.count;
  r.enumeration_complete = e.complete;
  r.nodes = e.nodes;

  std::optional<std::vector<Mask>> finest;
  if (e.complete && e.count > 0) {
    std::vector<Mask> u = FamilyOf(in_union);
    if (CheckFlats(k, u).empty() &&
        InCategory(Matroid::FromFlats(GroundSet::Range(k), u), d.category,
                   r.carrier_point)) {
      finest = u;
    }
  }
  const GroundSet range = GroundSet::Range(k);
  for (const std::vector<Mask>& cand : stored) {
    Matroid n = Matroid::FromFlats(range, cand);
    if (finest && cand == *finest) {
      if (d.category == Category::kMatr) {
        r.witness = n.relabeled(r.carrier);
        continue;
      }
      auto cert = PartitionCompetitor(*carrier, d.category, allowed, cand, n);
      if (cert) {
        r.certificates.push_back(*cert);
      } else {
        r.witness = n.relabeled(r.carrier);
      }
      continue;
    }
    // A same-carrier candidate with a flat outside cand refutes it.
    std::optional<Mask> extra;
    for (Mask s = 0; s <= full; ++s) {
      if (in_union[s] && !Contains(cand, s)) {
        extra = s;
        break;
      }
    }
    if (!extra) continue;
    std::optional<Matroid> other = FirstStructure(
        k, d.category, r.carrier_point,
        [&](Mask x, bool flat) {
          if (x == *extra && !flat) return false;
          return !flat || allowed[x];
        },
        r.carrier);
    if (other) {
      std::vector<int> id(k);
      std::iota(id.begin(), id.end(), 0);
      r.certificates.push_back(Certificate{cand, *other, r.carrier_point, id});
    }
  }
  // The finest candidate may not be among the stored ones.
  if (finest && !r.witness &&
      std::find(stored.begin(), stored.end(), *finest) == stored.end()) {
    Matroid n = Matroid::FromFlats(range, *finest);
    if (d.category == Category::kMatr) {
      r.witness = n.relabeled(r.carrier);
    } else {
      auto cert =
          PartitionCompetitor(*carrier, d.category, allowed, *finest, n);
      if (cert) {
        r.certificates.push_back(*cert);
      } else {
        r.witness = n.relabeled(r.carrier);
      }
    }
  }
  FinishVerdict(r, options);
  return r;
}

bool RefutesColimitCandidate(const Diagram& d, const SearchReport& report,
                             const std::vector<Mask>& candidate,
                             const Matroid& competitor,
                             const std::vector<int>& k) {
  if (static_cast<int>(k.size()) != report.carrier.size()) return false;
  for (int y : k) {
    if (y < 0 || y >= competitor.size()) return false;
  }
  const int point = report.carrier_point >= 0 ? k[report.carrier_point] : -1;
  if (!InCategory(competitor, d.category, point)) return false;
  for (size_t i = 0; i < d.objects.size(); ++i) {
    if (!IsStrong(ComposeTables(k, report.legs[i]), d.objects[i],
                  competitor)) {
      return false;
    }
  }
  if (!CheckFlats(report.carrier.size(), candidate).empty()) return false;
  Matroid n = Matroid::FromFlats(report.carrier, candidate);
  return !IsStrong(k, n, competitor);
}

SearchReport LimitSearch(const Diagram& d, const SearchOptions& options) {
  Validate(d);
  SearchReport r;
  std::optional<Carrier> carrier = LimitCarrier(d);
  if (!carrier) {
    r.verdict = Verdict::kBudgetExceeded;
    return r;
  }
  r.carrier = carrier->ground;
  r.carrier_point = carrier->point;
  r.legs = carrier->legs;
  const int k = r.carrier.size();

  // Preimages of flats along the legs must be flats.
  std::vector<char> required(std::size_t{1} << k, 0);
  for (size_t i = 0; i < d.objects.size(); ++i) {
    for (Mask g : d.objects[i].flats()) {
      required[PreimageOf(r.legs[i], g)] = 1;
    }
  }
  auto allow = [&](Mask x, bool flat) { return flat || !required[x]; };

  std::vector<char> in_all(required.size(), 1);
  std::vector<std::vector<Mask>> stored;
  const std::uint64_t budget = k > options.max_ground ? options.node_budget : 0;
  Enumeration e = EnumerateStructures(
      k, d.category, r.carrier_point, allow, budget,
      [&](const std::vector<Mask>& flats, const Matroid&) {
        std::vector<char> member(in_all.size(), 0);
        for (Mask f : flats) member[f] = 1;
        for (size_t s = 0; s < in_all.size(); ++s) {
          in_all[s] = in_all[s] && member[s];
        }
        if (stored.size() < kMaxStoredCandidates) stored.push_back(flats);
        return true;
      });
  r.candidates_examined = e.count;
  r.enumeration_complete = e.complete;
  r.nodes = e.nodes;

  std::optional<std::vector<Mask>> coarsest;
  if (e.complete && e.count > 0) {
    std::vector<Mask> c = FamilyOf(in_all);
    if (CheckFlats(k, c).empty() &&
        InCategory(Matroid::FromFlats(GroundSet::Range(k), c), d.category,
                   r.carrier_point)) {
      coarsest = c;
    }
  }
  if (coarsest) {
    // Re-verify against small cones (P, u) with every leg o u strong.
    Matroid n = Matroid::FromFlats(r.carrier, *coarsest);
    const bool pointed = d.pointed();
    std::optional<Certificate> cert;
    const int max_p = std::min(k, options.verify_size);
    for (const Matroid& p : CategorySamples(d.category, pointed, max_p)) {
      const int m = p.size();
      std::vector<int> u(m, 0);
      std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == m) {
          for (size_t j = 0; j < d.objects.size(); ++j) {
            if (!IsStrong(ComposeTables(r.legs[j], u), p, d.objects[j])) {
              return true;
            }
          }
          if (!IsStrong(u, p, n)) {
            cert = Certificate{*coarsest, p, pointed ? 0 : -1, u};
            return false;
          }
          return true;
        }
        if (pointed && i == 0) {
          u[0] = r.carrier_point;
          return rec(1);
        }
        for (int y = 0; y < k; ++y) {
          u[i] = y;
          if (!rec(i + 1)) return false;
        }
        return true;
      };
      if (!rec(0)) break;
    }
    if (cert) {
      r.certificates.push_back(*cert);
    } else {
      r.witness = n;
    }
  }
  for (const std::vector<Mask>& cand : stored) {
    if (coarsest && cand == *coarsest) continue;
    // A same-carrier candidate missing a flat of cand refutes it.
    std::optional<Mask> extra;
    for (Mask s : cand) {
      if (!in_all[s]) {
        extra = s;
        break;
      }
    }
    if (!extra) continue;
    std::optional<Matroid> other = FirstStructure(
        k, d.category, r.carrier_point,
        [&](Mask x, bool flat) {
          if (x == *extra && flat) return false;
          return flat || !required[x];
        },
        r.carrier);
    if (other) {
      std::vector<int> id(k);
      std::iota(id.begin(), id.end(), 0);
      r.certificates.push_back(Certificate{cand, *other, r.carrier_point, id});
    }
  }
  FinishVerdict(r, options);
  return r;
}

Factorization FactorEpiEmbedding(const StrongMap& f) {
  const Mask image = f.image(f.dom().full());
  Matroid mid = f.cod().restriction(image);
  std::vector<int> pos(f.cod().size(), -1);
  std::vector<int> incl;
  for (int y = 0; y < f.cod().size(); ++y) {
    if (image & Bit(y)) {
      pos[y] = static_cast<int>(incl.size());
      incl.push_back(y);
    }
  }
  std::vector<int> l(f.dom().size());
  for (int x = 0; x < f.dom().size(); ++x) l[x] = pos[f(x)];
  if (f.pointed()) {
    PointedMatroid pm(mid, pos[f.cod_point()]);
    return {StrongMap(f.pointed_dom(), pm, l),
            StrongMap(pm, f.pointed_cod(), incl)};
  }
  return {StrongMap(f.dom(), mid, l), StrongMap(mid, f.cod(), incl)};
}

Factorization FactorLatticeParallel(const StrongMap& f) {
  const Matroid& m = f.dom();
  const Matroid& n = f.cod();
  const Mask mloops = m.loops();
  const Mask nloops = n.loops();
  std::vector<Mask> atoms;
  for (Mask x : m.flats()) {
    if (m.rank(x) == 1) atoms.push_back(x);
  }
  std::vector<std::string> labels;
  std::vector<int> r;
  std::vector<int> loop_pos(n.size(), -1);
  for (int y = 0; y < n.size(); ++y) {
    if (nloops & Bit(y)) {
      loop_pos[y] = static_cast<int>(labels.size());
      labels.push_back(n.ground().label(y));
      r.push_back(y);
    }
  }
  // copy_pos[i][y]: the copy (i, y).
  std::vector<std::vector<int>> copy_pos(atoms.size(),
                                         std::vector<int>(n.size(), -1));
  std::vector<Mask> atom_copies(atoms.size(), 0);
  std::set<std::string> used(labels.begin(), labels.end());
  for (size_t i = 0; i < atoms.size(); ++i) {
    const Mask nonloops = atoms[i] & ~mloops;
    const std::string tag = m.ground().label(LeastElement(nonloops));
    const Mask img = f.image(nonloops);
    for (int y = 0; y < n.size(); ++y) {
      if (!(img & Bit(y))) continue;
      std::string name = n.ground().label(y) + "/" + tag;
      while (used.count(name)) name += "'";
      used.insert(name);
      copy_pos[i][y] = static_cast<int>(labels.size());
      atom_copies[i] |= Bit(static_cast<int>(labels.size()));
      labels.push_back(name);
      r.push_back(y);
    }
  }
  Mask loop_mask = 0;
  for (int y = 0; y < n.size(); ++y) {
    if (loop_pos[y] >= 0) loop_mask |= Bit(loop_pos[y]);
  }
  std::vector<Mask> flats;
  for (Mask g : m.flats()) {
    Mask h = loop_mask;
    for (size_t i = 0; i < atoms.size(); ++i) {
      if (IsSubset(atoms[i], g)) h |= atom_copies[i];
    }
    flats.push_back(h);
  }
  Matroid mid = Matroid::FromFlats(GroundSet(labels), flats);
  std::vector<int> l(m.size());
  for (int x = 0; x < m.size(); ++x) {
    if (mloops & Bit(x)) {
      l[x] = loop_pos[f(x)];
      continue;
    }
    for (size_t i = 0; i < atoms.size(); ++i) {
      if (atoms[i] & Bit(x)) l[x] = copy_pos[i][f(x)];
    }
  }
  if (f.pointed()) {
    PointedMatroid pm(mid, loop_pos[f.cod_point()]);
    return {StrongMap(f.pointed_dom(), pm, l),
            StrongMap(pm, f.pointed_cod(), r)};
  }
  return {StrongMap(m, mid, l), StrongMap(mid, n, r)};
}

TripleFactorization FactorTriple(const StrongMap& f) {
  Factorization lp = FactorLatticeParallel(f);
  Factorization ee = FactorEpiEmbedding(lp.r);
  return {lp.l, ee.l, ee.r};
}

bool InClass(const StrongMap& f, MapClass c) {
  switch (c) {
    case MapClass::kEpi:
      return f.image(f.dom().full()) == f.cod().full();
    case MapClass::kEmbedding:
      return ClassifyMorphism(f).embedding;
    case MapClass::kLatticePreserving:
      return ClassifyMorphism(f).lattice_preserving;
    case MapClass::kRankOneInjective:
      return InjectiveOnRankOneFlats(f.table(), f.dom());
    case MapClass::kLatticeLeft:
      return ClassifyMorphism(f).lattice_preserving &&
             (f.image(f.dom().full()) | f.cod().loops()) == f.cod().full();
    case MapClass::kParallelRight: {
      const Mask loops = f.dom().loops();
      return InjectiveOnRankOneFlats(f.table(), f.dom()) &&
             f.image(loops) == f.cod().loops() &&
             Popcount(f.image(loops)) == Popcount(loops);
    }
  }
  return false;
}

std::vector<StrongMap> FillIns(const StrongMap& l, const StrongMap& r,
                               const StrongMap& u, const StrongMap& v) {
  if (!(l.dom() == u.dom()) || !(r.cod() == v.cod()) ||
      !(l.cod() == v.dom()) || !(u.cod() == r.dom())) {
    throw DomainMismatch("square does not match");
  }
  HomOptions o;
  o.constraint.assign(l.cod().size(), -1);
  for (int a = 0; a < l.dom().size(); ++a) {
    int b = l(a);
    if (o.constraint[b] >= 0 && o.constraint[b] != u(a)) return {};
    o.constraint[b] = u(a);
  }
  if (l.pointed()) {
    o.dom_point = l.cod_point();
    o.cod_point = u.cod_point();
  }
  std::vector<StrongMap> out;
  ForEachHom(l.cod(), u.cod(), o, [&](const std::vector<int>& h) {
    for (int b = 0; b < l.cod().size(); ++b) {
      if (r(h[b]) != v(b)) return true;
    }
    if (l.pointed()) {
      out.emplace_back(PointedMatroid(l.cod(), l.cod_point()),
                       PointedMatroid(u.cod(), u.cod_point()), h);
    } else {
      out.emplace_back(l.cod(), u.cod(), h);
    }
    return true;
  });
  return out;
}

bool FactorsAsLatticeThenEmbedding(const StrongMap& f) {
  const Mask image = f.image(f.dom().full());
  const Mask rest = f.cod().full() & ~image;
  bool found = false;
  ForEachSubset(rest, [&](Mask extra) {
    if (found) return;
    Mask s = image | extra;
    Matroid sub = f.cod().restriction(s);
    std::vector<int> pos(f.cod().size(), -1);
    int j = 0;
    for (int y = 0; y < f.cod().size(); ++y) {
      if (s & Bit(y)) pos[y] = j++;
    }
    std::vector<int> t(f.dom().size());
    for (int x = 0; x < f.dom().size(); ++x) t[x] = pos[f(x)];
    StrongMap c(f.dom(), sub, t);
    if (ClassifyMorphism(c).lattice_preserving) found = true;
  });
  return found;
}

HiggsFactorization FactorHiggs(const StrongMap& f) {
  const Matroid& m = f.dom();
  const Matroid& n = f.cod();
  const MorphismClass cls = ClassifyMorphism(f);
  if (!cls.quotient) throw NotBijectiveStrong("map is not bijective");
  const int size = m.size();
  const int nullity = m.rank() - n.rank();
  // N pulled back onto the ground of M.
  std::vector<int> nrank(std::size_t{1} << size);
  for (Mask x = 0; x < nrank.size(); ++x) nrank[x] = n.rank(f.image(x));
  if (size + nullity > kMaxGround) {
    throw std::invalid_argument("Higgs major exceeds 16 elements");
  }
  std::vector<std::string> labels = m.ground().labels();
  std::set<std::string> used(labels.begin(), labels.end());
  for (int i = 1; i <= nullity; ++i) {
    std::string s = "s" + std::to_string(i);
    while (used.count(s)) s += "'";
    used.insert(s);
    labels.push_back(s);
  }
  const GroundSet ground(labels);
  const int total = size + nullity;
  const Mask dom_mask = FullMask(size);
  const Mask added = FullMask(total) & ~dom_mask;

  // Q_0: N plus the added elements as loops.
  std::vector<Matroid> lifts;
  std::vector<int> q0(std::size_t{1} << total);
  for (Mask x = 0; x < q0.size(); ++x) q0[x] = nrank[x & dom_mask];
  lifts.push_back(Matroid::FromRank(ground, q0));
  for (int k = 1; k <= nullity; ++k) {
    const Matroid& prev = lifts.back();
    // Independent in M plus free S, and of nullity at most one in Q_{k-1}.
    std::vector<Mask> ind;
    for (Mask a = 0; a <= FullMask(total); ++a) {
      if (!m.is_independent(a & dom_mask)) continue;
      if (prev.rank(a) >= Popcount(a) - 1) ind.push_back(a);
    }
    lifts.push_back(Matroid::FromIndependents(ground, ind));
  }
  const Matroid major = lifts.back();
  std::vector<int> emb(size);
  std::iota(emb.begin(), emb.end(), 0);
  std::vector<int> con(total);
  for (int x = 0; x < size; ++x) con[x] = f(x);
  if (f.pointed()) {
    const PointedMatroid pm(major, f.dom_point());
    for (int x = size; x < total; ++x) con[x] = f.cod_point();
    return {nullity, major, added, StrongMap(f.pointed_dom(), pm, emb),
            StrongMap(pm, f.pointed_cod(), con), lifts};
  }
  std::optional<StrongMap> contraction;
  const int loop = LeastElement(n.loops());
  if (nullity == 0 || loop >= 0) {
    for (int x = size; x < total; ++x) con[x] = loop;
    contraction.emplace(major, n, con);
  }
  return {nullity, major, added, StrongMap(m, major, emb), contraction, lifts};
}

CoequalizerCheck CheckContractionCoequalizer(const PointedMatroid& n, Mask z,
                                             int max_target) {
  if (z & n.point_mask()) {
    throw std::invalid_argument("the contracted set contains the point");
  }
  PointedContraction c = Contract(n, z);
  CoequalizerCheck out{c.map, 0, 0};
  const Matroid& nb = n.base();
  // The pair f = id, g collapsing z, from the free pointed matroid.
  PointedMatroid free = std::get<PointedMatroid>(
      ApplyFunctor(FunctorName::kFree, Object(n)));
  std::vector<int> id(nb.size()), g(nb.size());
  for (int x = 0; x < nb.size(); ++x) {
    id[x] = x;
    g[x] = (z & Bit(x)) ? n.point() : x;
  }
  StrongMap fmap(free, n, id);
  StrongMap gmap(free, n, g);
  if (!(Compose(c.map, fmap) == Compose(c.map, gmap))) ++out.failures;
  const Matroid& q = c.matroid.base();
  for (const Matroid& pb : CategorySamples(Category::kMatr, true, max_target)) {
    const PointedMatroid p(pb, 0);
    HomOptions o;
    o.constraint.assign(nb.size(), -1);
    for (int x = 0; x < nb.size(); ++x) {
      if (z & Bit(x)) o.constraint[x] = p.point();
    }
    for (const StrongMap& h : EnumerateHoms(n, p, o)) {
      ++out.cocones;
      std::vector<int> k(q.size(), -1);
      bool ok = true;
      for (int x = 0; x < nb.size(); ++x) {
        int cx = c.map(x);
        if (k[cx] >= 0 && k[cx] != h(x)) ok = false;
        k[cx] = h(x);
      }
      if (!ok || !IsStrong(k, q, p.base()) ||
          k[c.matroid.point()] != p.point()) {
        ++out.failures;
      }
    }
  }
  return out;
}

}  // namespace matroidcat
