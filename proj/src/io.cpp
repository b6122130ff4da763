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

#include "matroidcat/io.hpp"

#include <map>
#include <set>

#include "matroidcat/represent.hpp"

namespace matroidcat {

namespace {

const Json& Member(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw ParseError(std::string("missing field '") + name + "'");
  }
  return doc.at(name);
}

std::string AsString(const Json& v, const char* what) {
  if (!v.is_string()) throw ParseError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

GroundSet GroundFromJson(const Json& doc) {
  const Json& g = Member(doc, "ground");
  if (!g.is_array()) throw ParseError("'ground' must be an array");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const Json& l : g) {
    std::string s = AsString(l, "ground label");
    if (!seen.insert(s).second) throw ParseError("duplicate label '" + s + "'");
    labels.push_back(s);
  }
  if (static_cast<int>(labels.size()) > kMaxGround) {
    throw ParseError("ground set larger than " + std::to_string(kMaxGround));
  }
  return GroundSet(std::move(labels));
}

std::vector<Mask> FamilyFromJson(const GroundSet& ground, const Json& family,
                                 const char* what) {
  if (!family.is_array()) {
    throw ParseError(std::string("'") + what + "' must be an array");
  }
  std::vector<Mask> out;
  for (const Json& s : family) out.push_back(SubsetFromJson(ground, s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> RankFromJson(const GroundSet& ground, const Json& table) {
  if (!table.is_object()) throw ParseError("'rank' must be an object");
  std::map<std::string, Mask> by_key;
  for (Mask x = 0; x <= ground.full(); ++x) {
    if (!by_key.emplace(ground.key(x), x).second) {
      throw ParseError("rank keys are ambiguous for these labels");
    }
  }
  std::vector<int> out(size_t{1} << ground.size(), -1);
  for (const auto& [key, value] : table.items()) {
    auto it = by_key.find(key);
    if (it == by_key.end()) throw ParseError("unknown rank key '" + key + "'");
    if (!value.is_number_integer()) throw ParseError("rank values must be integers");
    out[it->second] = value.get<int>();
  }
  for (Mask x = 0; x < out.size(); ++x) {
    if (out[x] < 0) {
      throw ParseError("rank table misses '" + ground.key(x) + "'");
    }
  }
  return out;
}

template <typename Build>
Matroid Validated(Build&& build) {
  try {
    return build();
  } catch (const MatroidError& e) {
    throw ValidationError(e.reason(), e.detail());
  }
}

}  // namespace

PointedMatroid MatroidDoc::pointed() const {
  if (!point) throw ParseError("matroid has no point");
  return PointedMatroid(matroid, *point);
}

std::optional<MatroidKind> ParseKind(std::string_view kind) {
  if (kind == "flats") return MatroidKind::kFlats;
  if (kind == "independents") return MatroidKind::kIndependents;
  if (kind == "rank") return MatroidKind::kRank;
  return std::nullopt;
}

std::string ToString(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kFlats: return "flats";
    case MatroidKind::kIndependents: return "independents";
    case MatroidKind::kRank: return "rank";
  }
  return "";
}

Mask SubsetFromJson(const GroundSet& ground, const Json& labels) {
  if (!labels.is_array()) throw ParseError("subsets must be label arrays");
  Mask m = 0;
  for (const Json& l : labels) {
    std::string s = AsString(l, "subset label");
    int i = ground.find(s);
    if (i < 0) throw ParseError("unknown element '" + s + "'");
    m |= Bit(i);
  }
  return m;
}

Json SubsetToJson(const GroundSet& ground, Mask m) {
  Json out = Json::array();
  for (const std::string& l : ground.labels_of(m)) out.push_back(l);
  return out;
}

MatroidDoc MatroidFromJson(const Json& doc) {
  if (!doc.is_object()) throw ParseError("matroid document must be an object");
  std::string kind = doc.contains("kind") ? AsString(doc.at("kind"), "kind")
                                          : std::string("flats");
  MatroidDoc out;
  if (kind == "matrix") {
    out.matroid = Validated([&] { return ColumnMatroid(MatrixFromJson(doc)); });
  } else if (kind == "graph") {
    out.matroid = Validated([&] { return CycleMatroid(GraphFromJson(doc)); });
  } else {
    GroundSet ground = GroundFromJson(doc);
    if (kind == "flats") {
      std::vector<Mask> flats = FamilyFromJson(ground, Member(doc, "flats"),
                                               "flats");
      out.matroid = Validated([&] { return Matroid::FromFlats(ground, flats); });
    } else if (kind == "independents") {
      std::vector<Mask> ind = FamilyFromJson(
          ground, Member(doc, "independents"), "independents");
      out.matroid = Validated(
          [&] { return Matroid::FromIndependents(ground, ind); });
    } else if (kind == "rank") {
      std::vector<int> table = RankFromJson(ground, Member(doc, "rank"));
      out.matroid = Validated([&] { return Matroid::FromRank(ground, table); });
    } else {
      throw ParseError("unknown kind '" + kind + "'");
    }
  }
  if (doc.contains("point")) {
    std::string p = AsString(doc.at("point"), "point");
    int i = out.matroid.ground().find(p);
    if (i < 0) throw ParseError("unknown point '" + p + "'");
    if (!(out.matroid.loops() & Bit(i))) {
      throw ValidationError("point-not-loop", "{" + p + "}");
    }
    out.point = i;
  }
  return out;
}

Json ToJson(const Matroid& m, MatroidKind kind, std::optional<int> point) {
  const GroundSet& g = m.ground();
  Json out;
  out["ground"] = g.labels();
  out["kind"] = ToString(kind);
  switch (kind) {
    case MatroidKind::kFlats: {
      Json flats = Json::array();
      for (Mask f : m.flats()) flats.push_back(SubsetToJson(g, f));
      out["flats"] = flats;
      break;
    }
    case MatroidKind::kIndependents: {
      Json ind = Json::array();
      for (Mask i : m.independents()) ind.push_back(SubsetToJson(g, i));
      out["independents"] = ind;
      break;
    }
    case MatroidKind::kRank: {
      std::vector<Mask> all;
      for (Mask x = 0; x <= m.full(); ++x) all.push_back(x);
      CanonicalSort(all);
      Json rank = Json::object();
      for (Mask x : all) rank[g.key(x)] = m.rank(x);
      out["rank"] = rank;
      break;
    }
  }
  if (point) out["point"] = g.label(*point);
  return out;
}

Json ToJson(const PointedMatroid& m) {
  return ToJson(m.base(), MatroidKind::kFlats, m.point());
}

std::vector<int> TableFromJson(const GroundSet& dom, const GroundSet& cod,
                               const Json& table) {
  if (!table.is_object()) throw ParseError("'table' must be an object");
  std::vector<int> out(dom.size(), -1);
  for (const auto& [key, value] : table.items()) {
    int i = dom.find(key);
    if (i < 0) throw ParseError("unknown domain element '" + key + "'");
    std::string v = AsString(value, "table value");
    int j = cod.find(v);
    if (j < 0) throw ParseError("unknown codomain element '" + v + "'");
    out[i] = j;
  }
  return out;
}

Json TableToJson(const GroundSet& dom, const GroundSet& cod,
                 const std::vector<int>& table) {
  Json out = Json::object();
  for (int i = 0; i < dom.size(); ++i) {
    if (table[i] >= 0) out[dom.label(i)] = cod.label(table[i]);
  }
  return out;
}

StrongMap MapFromJson(const Json& doc) {
  MatroidDoc dom = MatroidFromJson(Member(doc, "dom"));
  MatroidDoc cod = MatroidFromJson(Member(doc, "cod"));
  std::vector<int> table = TableFromJson(dom.matroid.ground(),
                                         cod.matroid.ground(),
                                         Member(doc, "table"));
  for (int i = 0; i < dom.matroid.size(); ++i) {
    if (table[i] < 0) {
      throw ParseError("table misses '" + dom.matroid.ground().label(i) + "'");
    }
  }
  try {
    if (dom.point && cod.point) {
      return StrongMap(dom.pointed(), cod.pointed(), table);
    }
    return StrongMap(dom.matroid, cod.matroid, table);
  } catch (const NotStrong& e) {
    throw ValidationError("strong-map", e.what());
  }
}

Json ToJson(const StrongMap& f) {
  Json out;
  out["dom"] = ToJson(f.dom(), MatroidKind::kFlats,
                      f.pointed() ? std::optional<int>(f.dom_point())
                                  : std::nullopt);
  out["cod"] = ToJson(f.cod(), MatroidKind::kFlats,
                      f.pointed() ? std::optional<int>(f.cod_point())
                                  : std::nullopt);
  out["table"] = TableToJson(f.dom().ground(), f.cod().ground(), f.table());
  return out;
}

Lattice LatticeFromJson(const Json& doc) {
  const Json& elems = Member(doc, "elements");
  if (!elems.is_array()) throw ParseError("'elements' must be an array");
  std::vector<std::string> names;
  for (const Json& e : elems) names.push_back(AsString(e, "element"));
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) {
    if (!index.emplace(names[i], i).second) {
      throw ParseError("duplicate element '" + names[i] + "'");
    }
  }
  std::vector<std::pair<int, int>> covers;
  const Json& cs = Member(doc, "covers");
  if (!cs.is_array()) throw ParseError("'covers' must be an array");
  for (const Json& c : cs) {
    if (!c.is_array() || c.size() != 2) throw ParseError("covers are pairs");
    auto lo = index.find(AsString(c[0], "cover"));
    auto hi = index.find(AsString(c[1], "cover"));
    if (lo == index.end() || hi == index.end()) {
      throw ParseError("cover names an unknown element");
    }
    covers.emplace_back(lo->second, hi->second);
  }
  try {
    return Lattice::FromCovers(names, covers);
  } catch (const NotALattice& e) {
    throw ValidationError("lattice", e.what());
  }
}

Json ToJson(const Lattice& l) {
  Json out;
  out["elements"] = l.names();
  Json covers = Json::array();
  for (auto [lo, hi] : l.covers()) {
    covers.push_back(Json::array({l.name(lo), l.name(hi)}));
  }
  out["covers"] = covers;
  return out;
}

Json ParseJsonText(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace matroidcat
