#include "ptchain/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ptchain::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadInput, what); }

template <typename T>
T get_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<T>();
}

EdgeList parse_edges(const Json& j, const char* name) {
  EdgeList out;
  if (j.is_null()) return out;
  if (!j.is_array()) bad(std::string(name) + " must be an array of pairs");
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) bad(std::string(name) + " entries must be [u, v] pairs");
    out.emplace_back(get_int<Vertex>(e[0], name), get_int<Vertex>(e[1], name));
  }
  return out;
}

Json edges_json(EdgeList edges) {
  std::sort(edges.begin(), edges.end());
  Json arr = Json::array();
  for (auto [u, v] : edges) arr.push_back({u, v});
  return arr;
}

Json vertices_json(const std::vector<Vertex>& vs) {
  Json arr = Json::array();
  for (Vertex v : vs) arr.push_back(v);
  return arr;
}

std::vector<geometry::Coord> coords(const Json& item, std::size_t count, std::size_t index) {
  if (!item.is_array() || item.size() != count)
    bad("item " + std::to_string(index) + " must have " + std::to_string(count) + " coordinates");
  std::vector<geometry::Coord> out;
  for (const auto& c : item) out.push_back(get_int<geometry::Coord>(c, "coordinate"));
  return out;
}

}  // namespace

RawGraph parse_raw_graph(const Json& j) {
  if (!j.is_object()) bad("graph file must be a JSON object");
  if (!j.contains("n")) bad("graph file needs \"n\"");
  RawGraph raw;
  raw.n = get_int<int>(j["n"], "n");
  if (raw.n < 0) bad("n must be non-negative");
  if (j.contains("weights")) {
    if (!j["weights"].is_array()) bad("weights must be an array");
    for (const auto& w : j["weights"]) raw.weights.push_back(get_int<Weight>(w, "weight"));
    if (static_cast<int>(raw.weights.size()) != raw.n) bad("weights must have n entries");
  } else {
    raw.weights.assign(raw.n, 1);
  }
  raw.e1 = parse_edges(j.value("e1", Json()), "e1");
  raw.e2 = parse_edges(j.value("e2", Json()), "e2");
  return raw;
}

PtGraph graph_from_json(const Json& j) {
  RawGraph raw = parse_raw_graph(j);
  return PtGraph::build(raw.e1, raw.e2, std::move(raw.weights));
}

Json graph_to_json(const PtGraph& g) {
  Json j;
  j["n"] = g.n();
  j["weights"] = Json(std::vector<Weight>(g.weights().begin(), g.weights().end()));
  j["e1"] = edges_json(g.edges(EdgeClass::E1));
  j["e2"] = edges_json(g.edges(EdgeClass::E2));
  return j;
}

geometry::GeomInstance instance_from_json(const Json& j) {
  using namespace geometry;
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    bad("instance file needs a string \"kind\"");
  GeomInstance inst{kind_from_string(j["kind"].get<std::string>()), {}};
  const Json items = j.value("items", Json::array());
  if (!items.is_array()) bad("items must be an array");
  for (std::size_t i = 0; i < items.size(); ++i) {
    switch (inst.kind) {
      case Kind::Segments:
      case Kind::GroundedSegments: {
        auto c = coords(items[i], 4, i);
        inst.items.push_back(Segment{{c[0], c[1]}, {c[2], c[3]}});
        break;
      }
      case Kind::Rects: {
        auto c = coords(items[i], 4, i);
        inst.items.push_back(Rect{c[0], c[1], c[2], c[3]});
        break;
      }
      case Kind::Chords: {
        auto c = coords(items[i], 2, i);
        inst.items.push_back(ChordInterval{c[0], c[1]});
        break;
      }
    }
  }
  return inst;
}

Json instance_to_json(const geometry::GeomInstance& inst) {
  using namespace geometry;
  Json items = Json::array();
  for (const auto& o : inst.items) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Segment>)
            items.push_back({v.base.x, v.base.y, v.top.x, v.top.y});
          else if constexpr (std::is_same_v<T, Rect>)
            items.push_back({v.xmin, v.xmax, v.ymin, v.ymax});
          else
            items.push_back({v.l, v.r});
        },
        o);
  }
  Json j;
  j["kind"] = std::string(to_string(inst.kind));
  j["items"] = std::move(items);
  return j;
}

oracle::GenSpec gen_spec_from_json(const Json& j) {
  const Json& s = j.contains("gen") ? j["gen"] : j;
  if (!s.is_object()) bad("gen stanza must be an object");
  oracle::GenSpec spec;
  if (s.contains("kind")) spec.kind = oracle::gen_kind_from_string(s["kind"].get<std::string>());
  if (s.contains("n")) spec.n = get_int<int>(s["n"], "n");
  if (s.contains("seed")) spec.seed = get_int<std::uint64_t>(s["seed"], "seed");
  if (s.contains("coordinate_range"))
    spec.coordinate_range = get_int<std::int64_t>(s["coordinate_range"], "coordinate_range");
  if (s.contains("weight_range")) {
    const Json& w = s["weight_range"];
    if (!w.is_array() || w.size() != 2) bad("weight_range must be [lo, hi]");
    spec.weight_range = {get_int<Weight>(w[0], "weight"), get_int<Weight>(w[1], "weight")};
  }
  if (s.contains("lean")) spec.lean = oracle::lean_from_string(s["lean"].get<std::string>());
  oracle::validate_spec(spec);
  return spec;
}

Json gen_spec_to_json(const oracle::GenSpec& spec) {
  Json s;
  s["kind"] = std::string(oracle::to_string(spec.kind));
  s["n"] = spec.n;
  s["seed"] = spec.seed;
  s["coordinate_range"] = spec.coordinate_range;
  s["weight_range"] = {spec.weight_range.first, spec.weight_range.second};
  s["lean"] = std::string(oracle::to_string(spec.lean));
  return Json{{"gen", s}};
}

Json report_to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"rule", std::string(to_string(v.rule))}, {"witness", vertices_json(v.witness)}});
  Json j;
  j["ok"] = report.ok();
  j["violations"] = std::move(violations);
  if (report.truncated) j["truncated"] = true;
  return j;
}

Json dp_result_json(const DpResult& r) {
  Json j;
  j["algorithm"] = "dp";
  j["value"] = r.value;
  j["chain"] = vertices_json(r.chain);
  return j;
}

Json transition_result_json(const TransitionResult& r) {
  Json j;
  j["algorithm"] = "transition";
  j["omega_g2"] = r.omega_g2;
  j["value"] = r.value;
  j["chain"] = vertices_json(r.chain);
  j["nodes"] = r.nodes;
  j["edges"] = r.edges;
  return j;
}

Json brute_result_json(const ChainResult& r) {
  Json j;
  j["algorithm"] = "brute";
  j["value"] = r.value;
  j["chain"] = vertices_json(r.chain);
  return j;
}

Json mis_result_json(const geometry::MisResult& r) {
  Json j;
  j["mis"] = r.indices;
  j["size"] = r.indices.size();
  j["method"] = r.method;
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bad("cannot write '" + path + "'");
  out << text;
}

}  // namespace ptchain::io
