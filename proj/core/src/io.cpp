// Copyright 2026 The veblen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "veblen/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"

#include "veblen/errors.hpp"

namespace veblen {

namespace {

using ordered_json = nlohmann::ordered_json;

std::optional<std::uint64_t> parse_unsigned(std::string_view s) {
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Shared edge validation; `line` is 0 for structured documents.
void check_edge(const HypergraphDocument& doc, const EdgeRecord& edge, std::size_t line,
                const std::string& field) {
  if (edge.vertices.size() != doc.k) {
    throw ArityError(line, field,
                     "edge has " + std::to_string(edge.vertices.size()) + " vertices, expected " +
                         std::to_string(doc.k));
  }
  std::set<Vertex> seen;
  for (Vertex v : edge.vertices) {
    if (v < 1 || v > doc.n) {
      throw VertexRangeError(line, field,
                             "vertex " + std::to_string(v) + " outside 1.." + std::to_string(doc.n));
    }
    if (!seen.insert(v).second) {
      throw ParseError(line, field, "vertex " + std::to_string(v) + " repeated in an edge");
    }
  }
  if (edge.mult == 0) throw ParseError(line, field, "multiplicity must be positive");
}

HypergraphDocument parse_lines(std::string_view text) {
  HypergraphDocument doc;
  bool header = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!header) {
      bool have_k = false, have_n = false;
      while (!line.empty()) {
        std::size_t end = 0;
        while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
        std::string_view token = line.substr(0, end);
        if (token.starts_with("name=")) {
          doc.name = std::string(line.substr(5));
          break;
        }
        line = trim(line.substr(end));
        if (token.starts_with("k=")) {
          auto k = parse_unsigned(token.substr(2));
          if (!k || *k < 2 || *k > 64) throw ParseError(line_no, "k", "expected an integer in 2..64");
          doc.k = static_cast<unsigned>(*k);
          have_k = true;
        } else if (token.starts_with("n=")) {
          auto n = parse_unsigned(token.substr(2));
          if (!n || *n > 1'000'000) throw ParseError(line_no, "n", "expected a vertex count");
          doc.n = static_cast<Vertex>(*n);
          have_n = true;
        } else {
          throw ParseError(line_no, "header", "unexpected token '" + std::string(token) + "'");
        }
      }
      if (!have_k) throw ParseError(line_no, "k", "header is missing k=");
      if (!have_n) throw ParseError(line_no, "n", "header is missing n=");
      header = true;
      continue;
    }

    EdgeRecord edge;
    auto tokens = split_ws(line);
    if (!tokens.empty() && tokens.back().starts_with('x')) {
      auto m = parse_unsigned(tokens.back().substr(1));
      if (!m) throw ParseError(line_no, "multiplicity", "malformed '" + std::string(tokens.back()) + "'");
      edge.mult = *m;
      tokens.pop_back();
    }
    for (auto token : tokens) {
      auto v = parse_unsigned(token);
      if (!v || *v > 0xffffffffu) {
        throw ParseError(line_no, "vertex", "malformed vertex '" + std::string(token) + "'");
      }
      edge.vertices.push_back(static_cast<Vertex>(*v));
    }
    check_edge(doc, edge, line_no, "edge");
    doc.edges.push_back(std::move(edge));
  }
  if (!header) throw ParseError(line_no ? line_no : 1, "header", "missing 'k=<int> n=<int>' header");
  return doc;
}

template <class Json>
std::uint64_t json_unsigned(const Json& value, const std::string& field) {
  if (!value.is_number_unsigned()) throw ParseError(0, field, "expected a non-negative integer");
  return value.template get<std::uint64_t>();
}

HypergraphDocument parse_structured(std::string_view text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) line += text[i] == '\n';
    throw ParseError(line, "json", e.what());
  }
  if (!root.is_object()) throw ParseError(0, "$", "expected an object");
  HypergraphDocument doc;
  if (!root.contains("k")) throw ParseError(0, "k", "missing");
  if (!root.contains("n")) throw ParseError(0, "n", "missing");
  auto k = json_unsigned(root["k"], "k");
  if (k < 2 || k > 64) throw ParseError(0, "k", "expected an integer in 2..64");
  doc.k = static_cast<unsigned>(k);
  auto n = json_unsigned(root["n"], "n");
  if (n > 1'000'000) throw ParseError(0, "n", "vertex count too large");
  doc.n = static_cast<Vertex>(n);
  if (root.contains("name")) {
    if (!root["name"].is_string()) throw ParseError(0, "name", "expected a string");
    doc.name = root["name"].get<std::string>();
  }
  if (root.contains("edges")) {
    const auto& edges = root["edges"];
    if (!edges.is_array()) throw ParseError(0, "edges", "expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::string path = "edges[" + std::to_string(i) + "]";
      const auto& record = edges[i];
      if (!record.is_object() || !record.contains("vertices") || !record["vertices"].is_array()) {
        throw ParseError(0, path, "expected {\"vertices\": [...], \"mult\": m}");
      }
      EdgeRecord edge;
      for (const auto& v : record["vertices"]) {
        auto value = json_unsigned(v, path + ".vertices");
        if (value > 0xffffffffu) throw VertexRangeError(0, path + ".vertices", "vertex too large");
        edge.vertices.push_back(static_cast<Vertex>(value));
      }
      if (record.contains("mult")) edge.mult = json_unsigned(record["mult"], path + ".mult");
      check_edge(doc, edge, 0, path);
      doc.edges.push_back(std::move(edge));
    }
  }
  return doc;
}

std::string hex64(std::uint64_t x) {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(x));
  return buffer;
}

}  // namespace

MultiHypergraph HypergraphDocument::to_hypergraph() const {
  std::vector<std::pair<Edge, Multiplicity>> list;
  list.reserve(edges.size());
  for (const auto& e : edges) list.emplace_back(e.vertices, e.mult);
  return MultiHypergraph::from_list(k, n, list);
}

HypergraphDocument HypergraphDocument::from_hypergraph(const MultiHypergraph& h,
                                                       std::optional<std::string> name) {
  HypergraphDocument doc;
  doc.k = h.k();
  doc.n = h.n();
  doc.name = std::move(name);
  for (const auto& [e, m] : h.edges()) doc.edges.push_back({e, m});
  return doc;
}

HypergraphDocument parse_document(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') return parse_structured(text);
  return parse_lines(text);
}

MultiHypergraph parse_hypergraph(std::string_view text) {
  return parse_document(text).to_hypergraph();
}

std::string serialize_line(const HypergraphDocument& doc) {
  std::string out = "k=" + std::to_string(doc.k) + " n=" + std::to_string(doc.n);
  if (doc.name) out += " name=" + *doc.name;
  out += '\n';
  for (const auto& e : doc.edges) {
    for (std::size_t i = 0; i < e.vertices.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(e.vertices[i]);
    }
    if (e.mult != 1) out += " x" + std::to_string(e.mult);
    out += '\n';
  }
  return out;
}

std::string serialize_structured(const HypergraphDocument& doc) {
  ordered_json root;
  root["k"] = doc.k;
  root["n"] = doc.n;
  if (doc.name) root["name"] = *doc.name;
  root["edges"] = ordered_json::array();
  for (const auto& e : doc.edges) {
    root["edges"].push_back(ordered_json{{"vertices", e.vertices}, {"mult", e.mult}});
  }
  return root.dump(2) + "\n";
}

Format parse_format(std::string_view name) {
  if (name == "structured" || name == "json") return Format::structured;
  if (name == "csv") return Format::csv;
  if (name == "human") return Format::human;
  throw UsageError("unknown format '" + std::string(name) + "' (structured, csv, human)");
}

std::string edges_text(const MultiHypergraph& h) {
  std::string out;
  for (const auto& [e, m] : h.edges()) {
    if (!out.empty()) out += ' ';
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(e[i]);
    }
    if (m != 1) out += '^' + std::to_string(m);
  }
  return out;
}

std::string atlas_line(const IsoClassRecord& record) {
  return record.code.hex() + '\t' + std::to_string(record.edge_count) + '\t' +
         edges_text(record.representative) + '\t' +
         (record.assoc_coeff ? to_string(*record.assoc_coeff) : std::string("-")) + '\t' +
         record.aut_count.get_str();
}

std::string emit_table(const CoefficientTable& table, Format format, bool breakdown) {
  const unsigned top = table.max_codegree;
  switch (format) {
    case Format::csv: {
      std::string out = "# k=" + std::to_string(table.k) + " n=" + std::to_string(table.n) +
                        " max_codegree=" + std::to_string(top) + "\nd,c_d\n";
      for (unsigned d = 0; d <= top; ++d) {
        out += std::to_string(d) + ',' + to_string(table.coefficients[d]) + '\n';
      }
      if (breakdown) {
        out += "# breakdown\nd,code,edges,C_H,labeled_count,contribution\n";
        for (unsigned d = 0; d <= top; ++d) {
          for (const auto& c : table.breakdown[d]) {
            out += std::to_string(d) + ',' + c.code.hex() + ",\"" + edges_text(c.representative) +
                   "\"," + to_string(c.assoc_coeff) + ',' + c.labeled_count.get_str() + ',' +
                   to_string(c.contribution) + '\n';
          }
        }
      }
      return out;
    }
    case Format::human: {
      std::string out = "k=" + std::to_string(table.k) + " n=" + std::to_string(table.n) +
                        " max_codegree=" + std::to_string(top) + '\n';
      std::size_t width = std::to_string(top).size();
      for (unsigned d = 0; d <= top; ++d) {
        std::string label = std::to_string(d);
        out += "  c_" + label + std::string(width - label.size(), ' ') + " = " +
               to_string(table.coefficients[d]) + '\n';
        if (!breakdown) continue;
        for (const auto& c : table.breakdown[d]) {
          out += "      " + edges_text(c.representative) + "  C_H=" + to_string(c.assoc_coeff) +
                 "  #=" + c.labeled_count.get_str() + "  term=" + to_string(c.contribution) +
                 '\n';
        }
      }
      return out;
    }
    case Format::structured: {
      ordered_json root;
      root["k"] = table.k;
      root["n"] = table.n;
      root["edge_hash"] = hex64(table.edge_hash);
      root["max_codegree"] = top;
      root["coefficients"] = ordered_json::array();
      for (unsigned d = 0; d <= top; ++d) {
        root["coefficients"].push_back({{"d", d}, {"c", to_string(table.coefficients[d])}});
      }
      if (breakdown) {
        root["breakdown"] = ordered_json::array();
        for (unsigned d = 1; d <= top; ++d) {
          ordered_json classes = ordered_json::array();
          for (const auto& c : table.breakdown[d]) {
            classes.push_back({{"code", c.code.hex()},
                               {"edges", edges_text(c.representative)},
                               {"C_H", to_string(c.assoc_coeff)},
                               {"labeled_count", c.labeled_count.get_str()},
                               {"contribution", to_string(c.contribution)}});
          }
          root["breakdown"].push_back({{"d", d}, {"classes", std::move(classes)}});
        }
      }
      return root.dump(2) + "\n";
    }
  }
  return {};
}

std::string emit_traces(const TraceVector& traces, unsigned k, Vertex n, Format format) {
  const std::size_t top = traces.traces.empty() ? 0 : traces.traces.size() - 1;
  switch (format) {
    case Format::csv: {
      std::string out = "# k=" + std::to_string(k) + " n=" + std::to_string(n) +
                        " max_codegree=" + std::to_string(top) + "\nd,Tr_d\n";
      for (std::size_t d = 1; d <= top; ++d) {
        out += std::to_string(d) + ',' + to_string(traces.traces[d]) + '\n';
      }
      return out;
    }
    case Format::human: {
      std::string out = "k=" + std::to_string(k) + " n=" + std::to_string(n) + '\n';
      for (std::size_t d = 1; d <= top; ++d) {
        out += "  Tr_" + std::to_string(d) + " = " + to_string(traces.traces[d]) + '\n';
      }
      return out;
    }
    case Format::structured: {
      ordered_json root;
      root["k"] = k;
      root["n"] = n;
      root["traces"] = ordered_json::array();
      for (std::size_t d = 1; d <= top; ++d) {
        root["traces"].push_back({{"d", d}, {"tr", to_string(traces.traces[d])}});
      }
      return root.dump(2) + "\n";
    }
  }
  return {};
}

std::string emit_simplex_report(const SimplexCoefficientReport& report, Format format,
                                bool asymptotics) {
  auto partition_text = [](const PartitionMin2& p) {
    std::string s;
    for (unsigned part : p.parts) s += (s.empty() ? "" : ",") + std::to_string(part);
    return s;
  };
  switch (format) {
    case Format::csv: {
      std::string out = "k,C_k,C_H";
      if (asymptotics) out += ",asymptotic_ratio,derangement_fraction";
      out += '\n' + std::to_string(report.k) + ',' + report.Ck.get_str() + ',' +
             to_string(report.CH);
      if (asymptotics) out += ',' + report.asymptotic_ratio + ',' + report.derangement_fraction;
      return out + '\n';
    }
    case Format::human: {
      std::string out = "C_" + std::to_string(report.k) + " = " + report.Ck.get_str() + '\n' +
                        "C_H = " + to_string(report.CH) + '\n';
      for (const auto& [p, value] : report.contributions) {
        out += "  (" + partition_text(p) + ")  " + value.get_str() + '\n';
      }
      if (asymptotics) {
        out += "C_k/((k+1)! k^(k+1)) = " + report.asymptotic_ratio + '\n' +
               "|D_(k+1)|/(k+1)! = " + report.derangement_fraction + '\n';
      }
      return out;
    }
    case Format::structured: {
      ordered_json root;
      root["k"] = report.k;
      root["C_k"] = report.Ck.get_str();
      root["C_H"] = to_string(report.CH);
      root["contributions"] = ordered_json::array();
      for (const auto& [p, value] : report.contributions) {
        root["contributions"].push_back(
            {{"partition", p.parts}, {"derangements", derangements_by_type(p).get_str()},
             {"contribution", value.get_str()}});
      }
      if (asymptotics) {
        root["asymptotic_ratio"] = report.asymptotic_ratio;
        root["derangement_fraction"] = report.derangement_fraction;
      }
      return root.dump(2) + "\n";
    }
  }
  return {};
}

}  // namespace veblen
