#pragma once

// JSON encodings of graphs, geometric instances, generator specs and result
// records. Graph edge lists are written sorted lexicographically.

#include <string>
#include <vector>

#include <json.hpp>

#include "ptchain/core.hpp"
#include "ptchain/dp.hpp"
#include "ptchain/geometry.hpp"
#include "ptchain/oracle.hpp"
#include "ptchain/transition.hpp"

namespace ptchain::io {

using Json = nlohmann::ordered_json;

/// Graph file contents before any structural checking.
struct RawGraph {
  int n = 0;
  std::vector<Weight> weights;
  EdgeList e1, e2;
};

RawGraph parse_raw_graph(const Json& j);  // throws BAD_INPUT
PtGraph graph_from_json(const Json& j);
Json graph_to_json(const PtGraph& g);

geometry::GeomInstance instance_from_json(const Json& j);  // throws BAD_INPUT
Json instance_to_json(const geometry::GeomInstance& inst);

/// Accepts either the bare spec object or a {"gen": {...}} stanza.
oracle::GenSpec gen_spec_from_json(const Json& j);
Json gen_spec_to_json(const oracle::GenSpec& spec);

Json report_to_json(const ValidationReport& report);

Json dp_result_json(const DpResult& r);
Json transition_result_json(const TransitionResult& r);
Json brute_result_json(const ChainResult& r);
Json mis_result_json(const geometry::MisResult& r);

/// Whole-file helpers. Throw BAD_INPUT on unreadable or malformed files.
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ptchain::io
