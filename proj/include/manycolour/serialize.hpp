// JSON encoding of the domain types. One object per file:
//   EdgeColouring   {"n":int,"r":int,"colours":[int; n(n-1)/2]}   (pair-rank order)
//   Hypergraph      {"r":int,"edges":[[int,...],...]}               (edge order kept)
//   GuaranteeReport {"colours":[..],"witness_vertices":[..],
//                    "claimed_bound":{"num":int,"den":int},"achieved":int,
//                    "k":int,"status":"theorem"|"fallback"|"not_certified"}
//   ExactRecord     {"n","r","s","kind":"f"|"g","value","extremal_colouring":{..}}
#pragma once

#include "manycolour/core.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace manycolour {

nlohmann::json to_json(const EdgeColouring& c);
nlohmann::json to_json(const Hypergraph& h);
nlohmann::json to_json(const GuaranteeReport& report);
nlohmann::json to_json(const ExactRecord& record);
nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(ColourSet s);

// Decoders throw ParseError naming the offending field.
EdgeColouring colouring_from_json(const nlohmann::json& j);
Hypergraph hypergraph_from_json(const nlohmann::json& j);
GuaranteeReport report_from_json(const nlohmann::json& j);
ExactRecord record_from_json(const nlohmann::json& j);

/// Parses text, reporting syntax errors as "line L, column C: ...".
nlohmann::json parse_json_text(std::string_view text);

template <class T>
std::string serialize(const T& value) {
  return to_json(value).dump();
}

template <class T>
T deserialize(std::string_view text);

template <>
EdgeColouring deserialize<EdgeColouring>(std::string_view text);
template <>
Hypergraph deserialize<Hypergraph>(std::string_view text);
template <>
GuaranteeReport deserialize<GuaranteeReport>(std::string_view text);
template <>
ExactRecord deserialize<ExactRecord>(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace manycolour
