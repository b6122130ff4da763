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

#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "matroidcat/catlab.hpp"
#include "matroidcat/construct.hpp"
#include "matroidcat/glat.hpp"
#include "matroidcat/greedy.hpp"
#include "matroidcat/io.hpp"

namespace matroidcat::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string input;
  std::string format = "text";
  bool pointed = false;
  bool count_only = false;
  std::string extend;
  int max_ground = 6;
  std::uint64_t hom_budget = kDefaultHomBudget;
  int threads = 1;
  std::vector<std::string> args;
};

struct Context {
  const Options& opt;
  std::istream& in;
  std::ostream& out;

  bool json() const { return opt.format == "json"; }
};

Json ReadDoc(Context& c, const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream s;
    s << c.in.rdbuf();
    text = s.str();
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot read " + path);
    std::ostringstream s;
    s << f.rdbuf();
    text = s.str();
  }
  return ParseJsonText(text);
}

// --input supplies the first input; the positional arguments follow.
std::vector<std::string> Inputs(const Options& o, size_t skip = 0) {
  std::vector<std::string> files;
  if (!o.input.empty()) files.push_back(o.input);
  for (size_t i = skip; i < o.args.size(); ++i) files.push_back(o.args[i]);
  return files;
}

std::string Need(const std::vector<std::string>& v, size_t i,
                 const std::string& what) {
  if (i >= v.size()) throw UsageError("missing " + what);
  return v[i];
}

enum class DocType { kMatroid, kMap, kDiagram, kSquare, kSystem };

DocType Classify(const Json& doc) {
  if (!doc.is_object()) throw ParseError("document must be an object");
  if (doc.contains("dom")) return DocType::kMap;
  if (doc.contains("objects")) return DocType::kDiagram;
  if (doc.contains("nodes")) return DocType::kSquare;
  if (!doc.contains("kind") && doc.contains("independents")) {
    return DocType::kSystem;
  }
  return DocType::kMatroid;
}

Json Labels(const GroundSet& g, Mask m) { return SubsetToJson(g, m); }

Json Family(const GroundSet& g, const std::vector<Mask>& f) {
  Json out = Json::array();
  for (Mask x : f) out.push_back(Labels(g, x));
  return out;
}

std::string YesNo(bool b) { return b ? "yes" : "no"; }

std::string FamilyText(const GroundSet& g, const std::vector<Mask>& f) {
  std::string s;
  for (size_t i = 0; i < f.size(); ++i) s += (i ? " " : "") + g.format(f[i]);
  return s.empty() ? "-" : s;
}

std::string TableText(const StrongMap& f) {
  std::string s;
  for (int i = 0; i < f.dom().size(); ++i) {
    if (i) s += " ";
    s += f.dom().ground().label(i) + "->" + f.cod().ground().label(f(i));
  }
  return s.empty() ? "(empty map)" : s;
}

Json MatroidSummary(const Matroid& m, std::optional<int> point) {
  matroidcat::Classification k =
      point ? matroidcat::Classify(PointedMatroid(m, *point))
            : matroidcat::Classify(m);
  const GroundSet& g = m.ground();
  Json out;
  out["valid"] = true;
  out["type"] = "matroid";
  out["ground"] = g.labels();
  if (point) out["point"] = g.label(*point);
  out["rank"] = m.rank();
  out["counts"] = {{"flats", m.flats().size()},
                   {"independents", m.independents().size()},
                   {"bases", m.bases().size()},
                   {"circuits", m.circuits().size()},
                   {"hyperplanes", m.hyperplanes().size()}};
  out["loops"] = Labels(g, k.loops);
  out["isthmuses"] = Labels(g, k.isthmuses);
  out["parallel_classes"] = Family(g, k.parallel_classes);
  out["simple"] = k.is_simple;
  out["loopless"] = k.is_loopless;
  out["free"] = k.is_free;
  out["cofree"] = k.is_cofree;
  out["bases"] = Family(g, m.bases());
  out["circuits"] = Family(g, m.circuits());
  return out;
}

void PrintMatroidSummary(Context& c, const Json& s) {
  std::ostream& o = c.out;
  o << "matroid on " << s["ground"].size() << " elements, rank "
    << s["rank"].get<int>();
  if (s.contains("point")) o << ", point " << s["point"].get<std::string>();
  o << "\n";
  const Json& n = s["counts"];
  o << "flats " << n["flats"] << ", independents " << n["independents"]
    << ", bases " << n["bases"] << ", circuits " << n["circuits"]
    << ", hyperplanes " << n["hyperplanes"] << "\n";
  auto set = [](const Json& a) {
    std::string r = "{";
    for (size_t i = 0; i < a.size(); ++i) {
      r += (i ? "," : "") + a[i].get<std::string>();
    }
    return r + "}";
  };
  auto fam = [&](const Json& a) {
    std::string r;
    for (size_t i = 0; i < a.size(); ++i) r += (i ? " " : "") + set(a[i]);
    return r.empty() ? std::string("-") : r;
  };
  o << "loops " << set(s["loops"]) << ", isthmuses " << set(s["isthmuses"])
    << "\n";
  o << "parallel classes " << fam(s["parallel_classes"]) << "\n";
  o << "bases " << fam(s["bases"]) << "\n";
  o << "circuits " << fam(s["circuits"]) << "\n";
  o << "simple " << YesNo(s["simple"]) << ", loopless "
    << YesNo(s["loopless"]) << ", free " << YesNo(s["free"]) << ", cofree "
    << YesNo(s["cofree"]) << "\n";
}

Json CertificateJson(const IndependenceSystem& s, const GreedyCertificate& c) {
  Json out;
  out["is_matroid"] = c.is_matroid;
  if (c.witness) {
    const GreedyWitness& w = *c.witness;
    const GroundSet& g = s.ground();
    Json trace = Json::array();
    for (int e : w.run.trace) trace.push_back(g.label(e));
    out["witness"] = {
        {"a", Labels(g, w.a)},
        {"b", Labels(g, w.b)},
        {"weights", ToJson(g, w.weights)},
        {"greedy", {{"trace", trace}, {"weight", w.run.weight.str()}}},
        {"optimum",
         {{"set", Labels(g, w.optimum.set)}, {"weight", w.optimum.weight.str()}}},
        {"all_runs_suboptimal", w.all_runs_suboptimal}};
  }
  return out;
}

// check

int Check(Context& c) {
  const std::vector<std::string> files = Inputs(c.opt);
  Json doc = ReadDoc(c, Need(files, 0, "input"));
  Json report;
  switch (Classify(doc)) {
    case DocType::kMatroid: {
      MatroidDoc d = MatroidFromJson(doc);
      if (c.opt.pointed && !d.point) {
        throw ValidationError("pointed", "--pointed needs a point");
      }
      report = MatroidSummary(d.matroid, d.point);
      if (!c.json()) {
        PrintMatroidSummary(c, report);
        return kExitOk;
      }
      break;
    }
    case DocType::kMap: {
      StrongMap f = MapFromJson(doc);
      MorphismClass k = ClassifyMorphism(f);
      report = {{"valid", true},
                {"type", "strong-map"},
                {"pointed", f.pointed()},
                {"mono", k.mono},
                {"epi", k.epi},
                {"iso", k.iso},
                {"embedding", k.embedding},
                {"lattice_preserving", k.lattice_preserving},
                {"quotient", k.quotient},
                {"rank_one_injective",
                 InClass(f, MapClass::kRankOneInjective)}};
      if (!c.json()) {
        c.out << "strong map " << TableText(f) << "\n";
        for (const char* key : {"mono", "epi", "iso", "embedding",
                                "lattice_preserving", "quotient",
                                "rank_one_injective"}) {
          c.out << key << " " << YesNo(report[key]) << "\n";
        }
        return kExitOk;
      }
      break;
    }
    case DocType::kSystem: {
      IndependenceSystem s = SystemFromJson(doc);
      report = CertificateJson(s, CertifyMatroidByGreedy(s));
      report["valid"] = true;
      report["type"] = "independence-system";
      if (!c.json()) {
        c.out << "independence system with " << s.family().size()
              << " members, matroid " << YesNo(report["is_matroid"]) << "\n";
        return kExitOk;
      }
      break;
    }
    case DocType::kDiagram: {
      Diagram d = DiagramFromJson(doc);
      report = {{"valid", true},
                {"type", "diagram"},
                {"category", ToString(d.category)},
                {"objects", d.objects.size()},
                {"arrows", d.arrows.size()},
                {"pointed", d.pointed()}};
      if (!c.json()) {
        c.out << "diagram in " << ToString(d.category) << " with "
              << d.objects.size() << " objects and " << d.arrows.size()
              << " arrows\n";
        return kExitOk;
      }
      break;
    }
    case DocType::kSquare: {
      ChainCheck k = EqualChainCheck(SquareFromJson(doc));
      report = {{"valid", true},
                {"type", "square-functor"},
                {"chain_lengths", k.chain_lengths},
                {"equal_chains", k.equal_chains},
                {"is_matroid", k.is_matroid}};
      if (!c.json()) {
        c.out << "square functor, equal chains " << YesNo(k.equal_chains)
              << ", matroid " << YesNo(k.is_matroid) << "\n";
        return kExitOk;
      }
      break;
    }
  }
  c.out << report.dump(2) << "\n";
  return kExitOk;
}

// convert KIND FILE

int Convert(Context& c) {
  const std::string kind_name = Need(c.opt.args, 0, "target kind");
  std::optional<MatroidKind> kind = ParseKind(kind_name);
  if (!kind) throw UsageError("unknown kind " + kind_name);
  const std::vector<std::string> files = Inputs(c.opt, 1);
  MatroidDoc d = MatroidFromJson(ReadDoc(c, Need(files, 0, "input")));
  c.out << ToJson(d.matroid, *kind, d.point).dump(2) << "\n";
  return kExitOk;
}

// hom M N

int Hom(Context& c) {
  const std::vector<std::string> files = Inputs(c.opt);
  MatroidDoc m = MatroidFromJson(ReadDoc(c, Need(files, 0, "domain")));
  MatroidDoc n = MatroidFromJson(ReadDoc(c, Need(files, 1, "codomain")));
  HomOptions o;
  o.budget = c.opt.hom_budget;
  o.threads = c.opt.threads;
  if (c.opt.pointed) {
    if (!m.point || !n.point) {
      throw ValidationError("pointed", "--pointed needs a point on both sides");
    }
    o.dom_point = *m.point;
    o.cod_point = *n.point;
  }
  if (!c.opt.extend.empty()) {
    Json e = ReadDoc(c, c.opt.extend);
    if (e.is_object() && e.contains("table")) e = e.at("table");
    o.constraint = TableFromJson(m.matroid.ground(), n.matroid.ground(), e);
  }
  if (c.opt.count_only) {
    const std::uint64_t count = CountHoms(m.matroid, n.matroid, o);
    if (c.json()) {
      c.out << Json{{"count", count}}.dump(2) << "\n";
    } else {
      c.out << count << "\n";
    }
    return kExitOk;
  }
  std::vector<StrongMap> homs = EnumerateHoms(m.matroid, n.matroid, o);
  if (c.json()) {
    Json maps = Json::array();
    for (const StrongMap& f : homs) {
      maps.push_back(TableToJson(f.dom().ground(), f.cod().ground(),
                                 f.table()));
    }
    c.out << Json{{"count", homs.size()}, {"maps", maps}}.dump(2) << "\n";
  } else {
    for (const StrongMap& f : homs) c.out << TableText(f) << "\n";
    c.out << "count " << homs.size() << "\n";
  }
  return kExitOk;
}

// op NAME FILE [FILE | LABELS]

Json ObjectJson(const Object& x) {
  if (const auto* g = std::get_if<GroundSet>(&x)) {
    return Json{{"ground", g->labels()}};
  }
  if (const auto* m = std::get_if<Matroid>(&x)) return ToJson(*m);
  return ToJson(std::get<PointedMatroid>(x));
}

Mask LabelList(const GroundSet& g, const std::string& csv) {
  Mask out = 0;
  std::stringstream s(csv);
  std::string label;
  while (std::getline(s, label, ',')) {
    if (label.empty()) continue;
    const int i = g.find(label);
    if (i < 0) throw ParseError("unknown label " + label);
    out |= Bit(i);
  }
  return out;
}

int Op(Context& c) {
  const std::string name = Need(c.opt.args, 0, "operation name");
  const std::vector<std::string> files = Inputs(c.opt, 1);
  auto matroid = [&](size_t i) {
    return MatroidFromJson(ReadDoc(c, Need(files, i, "input")));
  };
  Json result;
  if (name == "dual") {
    result = ToJson(Dual(matroid(0).matroid));
  } else if (name == "truncation") {
    result = ToJson(Truncation(matroid(0).matroid));
  } else if (name == "delete" || name == "contract") {
    MatroidDoc d = matroid(0);
    const Mask z = LabelList(d.matroid.ground(), Need(files, 1, "labels"));
    if (name == "delete") {
      result = ToJson(Delete(d.matroid, z));
    } else if (c.opt.pointed) {
      if (!d.point) throw ValidationError("pointed", "--pointed needs a point");
      PointedContraction p = Contract(d.pointed(), z);
      result = {{"matroid", ToJson(p.matroid)}, {"map", ToJson(p.map)}};
    } else {
      Contraction p = Contract(d.matroid, z);
      result = {{"matroid", ToJson(p.matroid)}};
      if (p.map) result["map"] = ToJson(*p.map);
    }
  } else if (name == "free-extension") {
    const std::string label = files.size() > 1 ? files[1] : "p";
    result = ToJson(FreeExtension(matroid(0).matroid, label));
  } else if (name == "free-erection") {
    Erection e = FreeErection(matroid(0).matroid);
    result = {{"erection", ToJson(e.erection)},
              {"proper", e.proper},
              {"maximal", e.maximal},
              {"exhaustive", e.exhaustive}};
  } else if (name == "sum") {
    Coproduct s = Sum(matroid(0).matroid, matroid(1).matroid);
    result = {{"sum", ToJson(s.sum)},
              {"inj1", ToJson(s.inj1)},
              {"inj2", ToJson(s.inj2)}};
  } else if (name == "union") {
    result = ToJson(Union(matroid(0).matroid, matroid(1).matroid));
  } else if (name == "intersection") {
    result = ToJson(Intersection(matroid(0).matroid, matroid(1).matroid));
  } else if (name == "half-dual-union") {
    result = ToJson(HalfDualUnion(matroid(0).matroid, matroid(1).matroid));
  } else if (name == "simplify") {
    MatroidDoc d = matroid(0);
    if (!d.point) throw ValidationError("pointed", "simplify needs a point");
    Simplification s = Simplify(d.pointed());
    result = {{"si", ToJson(s.si)}, {"unit", ToJson(s.unit)}};
  } else if (name == "equalize") {
    StrongMap f = MapFromJson(ReadDoc(c, Need(files, 0, "first map")));
    StrongMap g = MapFromJson(ReadDoc(c, Need(files, 1, "second map")));
    Equalizer e = Equalize(f, g);
    result = {{"eq", ToJson(e.eq)}, {"inclusion", ToJson(e.inclusion)}};
  } else if (name == "parallel-connection" || name == "series-connection") {
    MatroidDoc a = matroid(0);
    MatroidDoc b = matroid(1);
    if (!a.point || !b.point) {
      throw ValidationError("bipointed", "both inputs need a basepoint");
    }
    BipointedMatroid m{a.matroid, *a.point};
    BipointedMatroid n{b.matroid, *b.point};
    BipointedMatroid r = name == "parallel-connection"
                             ? ParallelConnection(m, n)
                             : SeriesConnection(m, n);
    result = ToJson(r.base);
    result["basepoint"] = r.base.ground().label(r.basepoint);
  } else if (name == "functor") {
    const std::string fname = Need(files, 0, "functor name");
    std::optional<FunctorName> fn = ParseFunctor(fname);
    if (!fn) throw UsageError("unknown functor " + fname);
    Json doc = ReadDoc(c, Need(files, 1, "input"));
    Object x;
    if (doc.is_object() && doc.contains("ground") && doc.size() == 1) {
      std::vector<std::string> labels;
      for (const Json& l : doc.at("ground")) labels.push_back(l.get<std::string>());
      x = GroundSet(labels);
    } else {
      MatroidDoc d = MatroidFromJson(doc);
      if (d.point) {
        x = d.pointed();
      } else {
        x = d.matroid;
      }
    }
    result = ObjectJson(ApplyFunctor(*fn, x));
  } else {
    throw UsageError("unknown operation " + name);
  }
  // Results are documents, so both formats print JSON.
  c.out << result.dump(2) << "\n";
  return kExitOk;
}

// limits {colimit|limit} FILE

int Limits(Context& c) {
  const std::string which = Need(c.opt.args, 0, "colimit or limit");
  if (which != "colimit" && which != "limit") {
    throw UsageError("limits takes colimit or limit");
  }
  const std::vector<std::string> files = Inputs(c.opt, 1);
  Diagram d = DiagramFromJson(ReadDoc(c, Need(files, 0, "diagram")));
  SearchOptions o;
  o.max_ground = c.opt.max_ground;
  o.hom_budget = c.opt.hom_budget;
  SearchReport r = which == "colimit" ? ColimitSearch(d, o) : LimitSearch(d, o);
  const GroundSet& g = r.carrier;
  Json out;
  out["search"] = which;
  out["verdict"] = ToString(r.verdict);
  out["carrier"] = g.labels();
  if (r.carrier_point >= 0) out["carrier_point"] = g.label(r.carrier_point);
  out["candidates_examined"] = r.candidates_examined;
  out["enumeration_complete"] = r.enumeration_complete;
  out["nodes"] = r.nodes;
  if (r.witness) out["witness"] = ToJson(*r.witness);
  Json certs = Json::array();
  for (const Certificate& k : r.certificates) {
    Json comparison = Json::array();
    for (int y : k.comparison) comparison.push_back(y);
    certs.push_back({{"candidate", Family(g, k.candidate)},
                     {"competitor", ToJson(k.competitor)},
                     {"comparison", comparison}});
  }
  out["certificates"] = certs;
  if (c.json()) {
    c.out << out.dump(2) << "\n";
  } else {
    c.out << which << " search: " << ToString(r.verdict) << "\n";
    c.out << "carrier " << g.format(g.full()) << "\n";
    c.out << "candidates " << r.candidates_examined << ", certificates "
          << r.certificates.size() << ", nodes " << r.nodes
          << ", complete " << YesNo(r.enumeration_complete) << "\n";
    for (const Certificate& k : r.certificates) {
      c.out << "refuted " << FamilyText(g, k.candidate) << "\n";
    }
    if (r.witness) {
      c.out << "witness flats " << FamilyText(g, r.witness->flats()) << "\n";
    }
  }
  return r.verdict == Verdict::kBudgetExceeded ? kExitFailure : kExitOk;
}

// greedy SYSTEM [WEIGHTS]

int Greedy(Context& c) {
  const std::vector<std::string> files = Inputs(c.opt);
  Json doc = ReadDoc(c, Need(files, 0, "system"));
  Json out;
  if (Classify(doc) == DocType::kSquare) {
    ChainCheck k = EqualChainCheck(SquareFromJson(doc));
    out = {{"type", "square-functor"},
           {"induced", ToJson(k.induced)},
           {"chain_lengths", k.chain_lengths},
           {"equal_chains", k.equal_chains},
           {"is_matroid", k.is_matroid}};
    if (c.json()) {
      c.out << out.dump(2) << "\n";
    } else {
      c.out << "chain lengths";
      for (int l : k.chain_lengths) c.out << " " << l;
      c.out << "\nequal chains " << YesNo(k.equal_chains) << ", matroid "
            << YesNo(k.is_matroid) << "\n";
    }
    return kExitOk;
  }
  IndependenceSystem s = Classify(doc) == DocType::kSystem
                             ? SystemFromJson(doc)
                             : IndependenceSystem::FromMatroid(
                                   MatroidFromJson(doc).matroid);
  const GroundSet& g = s.ground();
  GreedyCertificate cert = CertifyMatroidByGreedy(s);
  out = CertificateJson(s, cert);
  std::optional<WeightFn> w;
  if (files.size() > 1) w = WeightsFromJson(g, ReadDoc(c, files[1]));
  bool all_optimal = true;
  if (w) {
    GreedyRun run = RunGreedy(s, *w);
    Optimum best = BruteOptimum(s, *w);
    for (const GreedyRun& r : AllGreedyRuns(s, *w)) {
      all_optimal = all_optimal && r.weight == best.weight;
    }
    Json trace = Json::array();
    for (int e : run.trace) trace.push_back(g.label(e));
    out["run"] = {{"weights", ToJson(g, *w)},
                  {"trace", trace},
                  {"greedy_set", Labels(g, run.result)},
                  {"greedy_weight", run.weight.str()},
                  {"optimum_set", Labels(g, best.set)},
                  {"optimum_weight", best.weight.str()},
                  {"greedy_optimal", run.weight == best.weight},
                  {"all_runs_optimal", all_optimal}};
  }
  if (c.json()) {
    c.out << out.dump(2) << "\n";
  } else {
    c.out << "matroid " << YesNo(cert.is_matroid) << "\n";
    if (cert.witness) {
      const GreedyWitness& k = *cert.witness;
      c.out << "violating pair " << g.format(k.a) << " " << g.format(k.b)
            << "\n";
      c.out << "witness weights";
      for (int e = 0; e < g.size(); ++e) {
        c.out << " " << g.label(e) << "=" << k.weights.w[e].str();
      }
      c.out << "\ngreedy " << g.format(k.run.result) << " weight "
            << k.run.weight.str() << ", optimum " << g.format(k.optimum.set)
            << " weight " << k.optimum.weight.str() << "\n";
    }
    if (w) {
      const Json& r = out["run"];
      c.out << "trace";
      for (const Json& e : r["trace"]) c.out << " " << e.get<std::string>();
      c.out << "\ngreedy weight " << r["greedy_weight"].get<std::string>()
            << ", optimum " << r["optimum_weight"].get<std::string>()
            << ", optimal " << YesNo(r["greedy_optimal"]) << "\n";
    }
  }
  return kExitOk;
}

// paper-verify [CASE]

int PaperVerifyCmd(Context& c) {
  std::vector<std::string> ids = c.opt.args;
  if (ids.empty()) ids = PaperCaseIds();
  std::vector<CaseResult> results;
  for (const std::string& id : ids) results.push_back(PaperVerify(id));
  bool all = true;
  for (const CaseResult& r : results) all = all && r.pass();
  if (c.json()) {
    Json out = Json::array();
    for (const CaseResult& r : results) {
      Json qs = Json::array();
      for (const Quantity& q : r.quantities) {
        qs.push_back({{"name", q.name},
                      {"expected", q.expected},
                      {"computed", q.computed},
                      {"relation", q.at_least ? ">=" : "=="},
                      {"holds", q.holds()}});
      }
      out.push_back({{"case", r.id},
                     {"claim", r.claim},
                     {"pass", r.pass()},
                     {"quantities", qs}});
    }
    c.out << Json{{"pass", all}, {"cases", out}}.dump(2) << "\n";
  } else {
    size_t width = 8;
    for (const CaseResult& r : results) {
      for (const Quantity& q : r.quantities) {
        width = std::max(width, q.name.size());
      }
    }
    for (const CaseResult& r : results) {
      c.out << (r.pass() ? "PASS " : "FAIL ") << r.id << ": " << r.claim
            << "\n";
      for (const Quantity& q : r.quantities) {
        c.out << "  " << std::left << std::setw(static_cast<int>(width))
              << q.name << "  expected " << (q.at_least ? ">=" : "")
              << q.expected << "  computed " << q.computed
              << (q.holds() ? "" : "  MISMATCH") << "\n";
      }
    }
    size_t passed = 0;
    for (const CaseResult& r : results) passed += r.pass();
    c.out << passed << "/" << results.size() << " cases pass\n";
  }
  return all ? kExitOk : kExitFailure;
}

void ReportError(const Options& o, std::ostream& out, std::ostream& err,
                 const std::string& type, const std::string& message,
                 const Json& extra = Json::object()) {
  if (o.format == "json") {
    Json e = {{"type", type}, {"message", message}};
    for (auto it = extra.begin(); it != extra.end(); ++it) {
      e[it.key()] = it.value();
    }
    out << Json{{"error", e}}.dump(2) << "\n";
  } else {
    err << "error: " << type << ": " << message << "\n";
  }
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Matroids and strong maps: validation, hom-sets, "
               "constructions, (co)limit search and the greedy algorithm"};
  app.name("matroidcat");
  app.require_subcommand(1);
  app.add_option("--input", o.input, "Primary input file, - for stdin");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--pointed", o.pointed, "Use points on the inputs");
  app.add_flag("--count-only", o.count_only, "Print only the hom count");
  app.add_option("--extend", o.extend, "Partial map to extend (JSON)");
  app.add_option("--max-ground", o.max_ground,
                 "Largest carrier given an exhaustive verdict")
      ->check(CLI::Range(0, kMaxGround));
  app.add_option("--hom-budget", o.hom_budget,
                 "Maximum candidate functions per hom enumeration");
  app.add_option("--threads", o.threads, "Worker threads for hom enumeration")
      ->check(CLI::Range(1, 256));
  app.fallthrough();

  struct Verb {
    const char* name;
    const char* help;
    int (*run)(Context&);
  };
  const Verb verbs[] = {
      {"check", "Validate and classify a document", Check},
      {"convert", "Re-emit a matroid: convert KIND FILE", Convert},
      {"hom", "Enumerate strong maps: hom M N", Hom},
      {"op", "Apply a construction: op NAME FILE...", Op},
      {"limits", "Search for a (co)limit: limits colimit|limit FILE", Limits},
      {"greedy", "Greedy certification: greedy SYSTEM [WEIGHTS]", Greedy},
      {"paper-verify", "Run the counterexample registry", PaperVerifyCmd},
  };
  std::vector<std::pair<CLI::App*, int (*)(Context&)>> subs;
  for (const Verb& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("args", o.args, "Arguments and input files");
    subs.emplace_back(sub, v.run);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  Context c{o, in, out};
  try {
    for (auto& [sub, fn] : subs) {
      if (sub->parsed()) return fn(c);
    }
  } catch (const UsageError& e) {
    ReportError(o, out, err, "UsageError", e.what());
    return kExitUsage;
  } catch (const ValidationError& e) {
    ReportError(o, out, err, "ValidationError", e.what(),
                {{"axiom", e.axiom()}, {"witness", e.witness()}});
    return kExitFailure;
  } catch (const ParseError& e) {
    ReportError(o, out, err, "ParseError", e.what());
    return kExitFailure;
  } catch (const BudgetExceeded& e) {
    ReportError(o, out, err, "BudgetExceeded", e.what());
    return kExitFailure;
  } catch (const std::exception& e) {
    ReportError(o, out, err, "Error", e.what());
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace matroidcat::cli
