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

// JSON interchange documents for matroids, maps and lattices.

#ifndef MATROIDCAT_IO_HPP_
#define MATROIDCAT_IO_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "matroidcat/core.hpp"
#include "matroidcat/glat.hpp"
#include "matroidcat/maps.hpp"

namespace matroidcat {

using Json = nlohmann::ordered_json;

// Malformed document: wrong types, unknown labels, missing fields.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed document whose data violates an axiom.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string axiom, std::string witness)
      : std::runtime_error("ValidationError(" + axiom + "): " + witness),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}
  const std::string& axiom() const { return axiom_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::string witness_;
};

// A matroid with an optional point.
struct MatroidDoc {
  Matroid matroid;
  std::optional<int> point;

  PointedMatroid pointed() const;
};

enum class MatroidKind { kFlats, kIndependents, kRank };

std::optional<MatroidKind> ParseKind(std::string_view kind);
std::string ToString(MatroidKind kind);

// Reads "flats", "independents" and "rank" documents, and "matrix" and
// "graph" documents through the represent module.
MatroidDoc MatroidFromJson(const Json& doc);
Json ToJson(const Matroid& m, MatroidKind kind = MatroidKind::kFlats,
            std::optional<int> point = std::nullopt);
Json ToJson(const PointedMatroid& m);

Json SubsetToJson(const GroundSet& ground, Mask m);
Mask SubsetFromJson(const GroundSet& ground, const Json& labels);

// { "dom": <matroid>, "cod": <matroid>, "table": {"a": "x", ...} }. The map
// is pointed when both sides carry a point.
StrongMap MapFromJson(const Json& doc);
Json ToJson(const StrongMap& f);
// Table over the given grounds from a {"a": "x"} object. Unlisted elements
// get -1.
std::vector<int> TableFromJson(const GroundSet& dom, const GroundSet& cod,
                               const Json& table);
Json TableToJson(const GroundSet& dom, const GroundSet& cod,
                 const std::vector<int>& table);

// { "elements": [...], "covers": [[lo, hi], ...] } with element names.
Lattice LatticeFromJson(const Json& doc);
Json ToJson(const Lattice& l);

// Parses text; throws ParseError with the parser's message.
Json ParseJsonText(std::string_view text);

}  // namespace matroidcat

#endif  // MATROIDCAT_IO_HPP_
