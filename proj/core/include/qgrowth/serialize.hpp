#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qgrowth/checks.hpp"
#include "qgrowth/classical.hpp"
#include "qgrowth/growth.hpp"

namespace qgrowth {

using nlohmann::json;

json to_json(const BigInt& n);
json to_json(const QPoly& p);
/// {"num": [...], "den": [...]} with ascending coefficients.
json to_json(const QRat& f);
json to_json(const Partition& p);
json to_json(const ShapeChain& c);
json to_json(const TableauPair& pair);
/// Entries [{"p", "q", "p_rows", "q_rows", "weight", "display"}] in key order.
json to_json(const WeightedPairSet& s);
json to_json(const WeightedChains& chains);
json to_json(const CheckReport& r);
json to_json(const GrowthGraph& g);

QRat qrat_from_json(const json& j);
Partition partition_from_json(const json& j);
TableauRows rows_from_json(const json& j);

/// Graphviz rendering: nodes "m_k_b" labelled by their partition, edges by weight.
std::string to_dot(const GrowthGraph& g);

}  // namespace qgrowth
