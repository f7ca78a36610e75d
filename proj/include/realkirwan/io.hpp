#pragma once

#include "realkirwan/f2/poly.hpp"
#include "realkirwan/gkm_module.hpp"
#include "realkirwan/kirwan.hpp"
#include "realkirwan/moment_graph.hpp"
#include "realkirwan/morse.hpp"
#include "realkirwan/toric.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace realkirwan::io {

using nlohmann::json;

// Schema violations throw Error(ParseError) naming the JSON location.

json poly_to_json(const f2::F2Poly& p);
f2::F2Poly poly_from_json(const json& j, std::size_t nvars, unsigned degree);

json graph_to_json(const MomentGraph& g);
MomentGraph graph_from_json(const json& j);

json polytope_to_json(const DelzantPolytope& p);
DelzantPolytope polytope_from_json(const json& j);

json class_to_json(const MomentGraph& g, const EquivariantClass& c);
EquivariantClass class_from_json(const MomentGraph& g, const json& j);

json index_table_to_json(const MomentGraph& g, const IndexTable& t);
json chamber_to_json(const MomentGraph& g, const Chamber& c);
json report_to_json(const MomentGraph& g, const ReductionReport& r);
json validation_to_json(const MomentGraph& g, const ValidationReport& r);
json cross_check_to_json(const ToricCrossCheck& c);

/// Reads and parses a JSON file; syntax errors carry the byte offset.
json read_json_file(const std::filesystem::path& path);

}  // namespace realkirwan::io
