#include "manycolour/serialize.hpp"

#include <fstream>
#include <sstream>

namespace manycolour {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(where + ": missing field '" + name + "'");
  return *it;
}

std::uint64_t unsigned_field(const json& j, const char* name, const std::string& where) {
  const json& v = field(j, name, where);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw ParseError(where + ": field '" + name + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::int64_t signed_field(const json& j, const char* name, const std::string& where) {
  const json& v = field(j, name, where);
  if (!v.is_number_integer()) throw ParseError(where + ": field '" + name + "' must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::uint64_t> unsigned_array(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  std::vector<std::uint64_t> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer() || v[i].get<std::int64_t>() < 0)
      throw ParseError(where + "[" + std::to_string(i) + "]: expected a non-negative integer");
    out.push_back(v[i].get<std::uint64_t>());
  }
  return out;
}

ColourSet colour_set_from(const json& v, const std::string& where) {
  ColourSet out;
  for (auto c : unsigned_array(v, where)) {
    if (c >= kMaxColours) throw ParseError(where + ": colour " + std::to_string(c) + " exceeds 63");
    out.insert(static_cast<Colour>(c));
  }
  return out;
}

template <class F>
auto rethrow_domain(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace

json to_json(ColourSet s) { return json(s.to_vector()); }

json to_json(const Rational& q) { return json{{"num", q.numerator()}, {"den", q.denominator()}}; }

json to_json(const EdgeColouring& c) {
  json colours = json::array();
  for (auto col : c.raw()) colours.push_back(static_cast<int>(col));
  return json{{"n", c.n()}, {"r", c.r()}, {"colours", std::move(colours)}};
}

json to_json(const Hypergraph& h) {
  json edges = json::array();
  for (const auto& e : h.edges()) edges.push_back(to_json(e));
  return json{{"r", h.r()}, {"edges", std::move(edges)}};
}

json to_json(const GuaranteeReport& report) {
  return json{{"colours", to_json(report.colours)},
              {"witness_vertices", report.witness_vertices},
              {"claimed_bound", to_json(report.claimed_bound)},
              {"achieved", report.achieved},
              {"k", report.k},
              {"status", to_string(report.status)}};
}

json to_json(const ExactRecord& record) {
  return json{{"n", record.n},           {"r", record.r},          {"s", record.s},
              {"kind", to_string(record.kind)}, {"value", record.value},
              {"extremal_colouring", to_json(record.extremal_colouring)}};
}

EdgeColouring colouring_from_json(const json& j) {
  const std::string where = "colouring";
  const auto n = unsigned_field(j, "n", where);
  const auto r = unsigned_field(j, "r", where);
  const auto raw = unsigned_array(field(j, "colours", where), where + ".colours");
  std::vector<std::uint8_t> colours;
  colours.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] >= r)
      throw ParseError(where + ".colours[" + std::to_string(i) + "]: colour " + std::to_string(raw[i]) +
                       " is not below r=" + std::to_string(r));
    colours.push_back(static_cast<std::uint8_t>(raw[i]));
  }
  return rethrow_domain(where, [&] {
    return EdgeColouring(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(r), std::move(colours));
  });
}

Hypergraph hypergraph_from_json(const json& j) {
  const std::string where = "hypergraph";
  const auto r = unsigned_field(j, "r", where);
  const json& edges_json = field(j, "edges", where);
  if (!edges_json.is_array()) throw ParseError(where + ".edges: expected an array");
  std::vector<ColourSet> edges;
  for (std::size_t i = 0; i < edges_json.size(); ++i)
    edges.push_back(colour_set_from(edges_json[i], where + ".edges[" + std::to_string(i) + "]"));
  return rethrow_domain(where, [&] { return Hypergraph(static_cast<std::uint32_t>(r), std::move(edges)); });
}

GuaranteeReport report_from_json(const json& j) {
  const std::string where = "report";
  GuaranteeReport out;
  out.colours = colour_set_from(field(j, "colours", where), where + ".colours");
  for (auto v : unsigned_array(field(j, "witness_vertices", where), where + ".witness_vertices"))
    out.witness_vertices.push_back(static_cast<Vertex>(v));
  const json& bound = field(j, "claimed_bound", where);
  const auto num = signed_field(bound, "num", where + ".claimed_bound");
  const auto den = signed_field(bound, "den", where + ".claimed_bound");
  if (den <= 0) throw ParseError(where + ".claimed_bound: 'den' must be positive");
  out.claimed_bound = Rational(num, den);
  out.achieved = static_cast<std::uint32_t>(unsigned_field(j, "achieved", where));
  out.k = static_cast<std::uint32_t>(unsigned_field(j, "k", where));
  const json& status = field(j, "status", where);
  if (!status.is_string()) throw ParseError(where + ": field 'status' must be a string");
  out.status = bound_status_from_string(status.get<std::string>());
  return out;
}

ExactRecord record_from_json(const json& j) {
  const std::string where = "record";
  ExactRecord out;
  out.n = static_cast<std::uint32_t>(unsigned_field(j, "n", where));
  out.r = static_cast<std::uint32_t>(unsigned_field(j, "r", where));
  out.s = static_cast<std::uint32_t>(unsigned_field(j, "s", where));
  const json& kind = field(j, "kind", where);
  if (!kind.is_string()) throw ParseError(where + ": field 'kind' must be a string");
  out.kind = kind_from_string(kind.get<std::string>());
  out.value = static_cast<std::uint32_t>(unsigned_field(j, "value", where));
  out.extremal_colouring = colouring_from_json(field(j, "extremal_colouring", where));
  return out;
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line/column position.
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
  }
}

template <>
EdgeColouring deserialize<EdgeColouring>(std::string_view text) {
  return colouring_from_json(parse_json_text(text));
}
template <>
Hypergraph deserialize<Hypergraph>(std::string_view text) {
  return hypergraph_from_json(parse_json_text(text));
}
template <>
GuaranteeReport deserialize<GuaranteeReport>(std::string_view text) {
  return report_from_json(parse_json_text(text));
}
template <>
ExactRecord deserialize<ExactRecord>(std::string_view text) {
  return record_from_json(parse_json_text(text));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace manycolour
