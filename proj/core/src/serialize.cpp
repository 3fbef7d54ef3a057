#include "qgrowth/serialize.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

namespace qgrowth {

json to_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(n);
  return n.str();
}

json to_json(const QPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

json to_json(const QRat& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

json to_json(const Partition& p) {
  json out = json::array();
  for (int part : p.parts()) out.push_back(part);
  return out;
}

json to_json(const ShapeChain& c) {
  json out = json::array();
  for (const auto& s : c.shapes()) out.push_back(to_json(s));
  return out;
}

json to_json(const TableauPair& pair) {
  return {{"p", to_json(pair.p)}, {"q", to_json(pair.q)}, {"p_rows", chain_to_rows(pair.p)},
          {"q_rows", chain_to_rows(pair.q)}};
}

json to_json(const WeightedPairSet& s) {
  json out = json::array();
  for (const auto& [key, w] : s) {
    out.push_back({{"p", to_json(key.first)},
                   {"q", to_json(key.second)},
                   {"p_rows", chain_to_rows(key.first)},
                   {"q_rows", chain_to_rows(key.second)},
                   {"weight", to_json(w)},
                   {"display", w.to_string()}});
  }
  return out;
}

json to_json(const WeightedChains& chains) {
  json out = json::array();
  for (const auto& [chain, w] : chains)
    out.push_back({{"p", to_json(chain)}, {"p_rows", chain_to_rows(chain)}, {"weight", to_json(w)},
                   {"display", w.to_string()}});
  return out;
}

json to_json(const CheckReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  return {{"check", r.check},
          {"parameters", params},
          {"status", r.passed ? "pass" : "fail"},
          {"cases", r.cases},
          {"witnesses", r.witnesses}};
}

namespace {

std::string case_name(GrowthCase c) {
  switch (c) {
    case GrowthCase::boring: return "boring";
    case GrowthCase::case1: return "case1";
    case GrowthCase::case2: return "case2";
    case GrowthCase::case3: return "case3";
    case GrowthCase::case4: return "case4";
    case GrowthCase::case5: return "case5";
  }
  return "?";
}

std::string node_name(const GrowthNode& n) {
  return std::to_string(n.m) + "_" + std::to_string(n.k) + "_" + std::to_string(n.branch);
}

}  // namespace

json to_json(const GrowthGraph& g) {
  json nodes = json::array();
  json edges = json::array();
  for (const auto& n : g.nodes) {
    nodes.push_back({{"id", node_name(n)}, {"m", n.m}, {"k", n.k}, {"branch", n.branch},
                     {"label", to_json(n.label)}, {"case", case_name(n.growth_case)}});
    if (n.west < 0) continue;
    for (int parent : {n.west, n.south})
      edges.push_back({{"from", node_name(g.nodes[parent])},
                       {"to", node_name(n)},
                       {"direction", parent == n.west ? "horizontal" : "vertical"},
                       {"weight", to_json(n.weight)},
                       {"display", n.weight.to_string()}});
  }
  json marks = json::array();
  for (const auto& [m, k] : g.x_marks) marks.push_back({m, k});
  return {{"variant", to_string(g.variant)},
          {"perm", g.sigma.images()},
          {"nodes", nodes},
          {"edges", edges},
          {"x_marks", marks}};
}

namespace {

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ValidationError("expected an integer coefficient, got " + j.dump());
}

QPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("expected a coefficient array, got " + j.dump());
  std::vector<BigInt> coeffs;
  for (const auto& c : j) coeffs.push_back(bigint_from_json(c));
  return QPoly(std::move(coeffs));
}

}  // namespace

QRat qrat_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw ValidationError("expected {\"num\": [...], \"den\": [...]}, got " + j.dump());
  return QRat(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("expected a partition array, got " + j.dump());
  std::vector<int> parts;
  for (const auto& p : j) {
    if (!p.is_number_integer()) throw ValidationError("partition parts must be integers, got " + p.dump());
    parts.push_back(p.get<int>());
  }
  return Partition(std::move(parts));
}

TableauRows rows_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of tableau rows, got " + j.dump());
  TableauRows rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ValidationError("tableau row must be an array, got " + row.dump());
    std::vector<int> entries;
    for (const auto& e : row) {
      if (!e.is_number_integer()) throw ValidationError("tableau entries must be integers, got " + e.dump());
      entries.push_back(e.get<int>());
    }
    rows.push_back(std::move(entries));
  }
  return rows;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const GrowthGraph& g) {
  std::ostringstream out;
  out << "digraph growth {\n";
  out << "  // " << to_string(g.variant) << " growth graph of " << g.sigma.to_string() << "\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& n : g.nodes) {
    out << "  " << quoted(node_name(n)) << " [label=" << quoted(n.label.to_string()) << ", pos=" << quoted(
        std::to_string(3 * n.m) + "," + std::to_string(3 * n.k + n.branch) + "!") << "];\n";
  }
  for (const auto& [m, k] : g.x_marks) {
    const std::string name = "x_" + std::to_string(m) + "_" + std::to_string(k);
    out << "  " << quoted(name) << " [shape=plaintext, label=\"X\", pos="
        << quoted(std::to_string(3 * m - 1) + "," + std::to_string(3 * k - 1) + "!") << "];\n";
  }
  for (const auto& n : g.nodes) {
    if (n.west < 0) continue;
    const std::string label = n.weight.is_one() ? "" : n.weight.to_string();
    out << "  " << quoted(node_name(g.nodes[n.west])) << " -> " << quoted(node_name(n))
        << " [label=" << quoted(label) << "];\n";
    out << "  " << quoted(node_name(g.nodes[n.south])) << " -> " << quoted(node_name(n))
        << " [label=" << quoted(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace qgrowth
