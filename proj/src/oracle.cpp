#include "ptchain/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace ptchain::oracle {

using geometry::ChordInterval;
using geometry::Coord;
using geometry::GeomInstance;
using geometry::Kind;
using geometry::Rect;
using geometry::Segment;

ChainResult brute_max_weight_chain(const PtGraph& g) {
  if (g.n() > kMaxBruteChainVertices)
    throw Error(ErrorCode::TooLarge, "brute force is capped at " +
                                         std::to_string(kMaxBruteChainVertices) + " vertices");
  if (g.n() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");

  ChainResult best{-1, {}};
  std::vector<Vertex> chain;
  Weight weight = 0;
  // Candidates are tried in increasing pi, so chains appear in lexicographic
  // pi order and the first optimum found is the smallest.
  auto extend = [&](auto&& self, int from_rank) -> void {
    if (weight > best.value) {
      best.value = weight;
      best.chain = chain;
    }
    for (int rank = from_rank; rank < g.n(); ++rank) {
      const Vertex w = g.order()[rank];
      bool ok = true;
      for (Vertex m : chain) ok = ok && g.has_edge(m, w);
      if (!ok) continue;
      chain.push_back(w);
      weight += g.weight(w);
      self(self, rank + 1);
      weight -= g.weight(w);
      chain.pop_back();
    }
  };
  extend(extend, 0);
  return best;
}

BruteMis brute_mis(const GeomInstance& inst) {
  const int n = static_cast<int>(inst.items.size());
  if (n > kMaxBruteMisItems)
    throw Error(ErrorCode::TooLarge,
                "brute force is capped at " + std::to_string(kMaxBruteMisItems) + " items");
  std::vector<std::uint8_t> apart(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) apart[i * n + j] = geometry::disjoint(inst.items[i], inst.items[j]);

  BruteMis best;
  std::vector<int> chosen;
  auto grow = [&](auto&& self, int from) -> void {
    if (static_cast<int>(chosen.size()) > best.size) {
      best.size = static_cast<int>(chosen.size());
      best.indices = chosen;
    }
    for (int i = from; i < n; ++i) {
      bool ok = true;
      for (int c : chosen) ok = ok && apart[c * n + i];
      if (!ok) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  grow(grow, 0);
  return best;
}

std::string_view to_string(GenKind kind) {
  switch (kind) {
    case GenKind::Segments: return "segments";
    case GenKind::GroundedSegments: return "grounded_segments";
    case GenKind::Rects: return "rects";
    case GenKind::Chords: return "chords";
    case GenKind::RawE2Tournament: return "raw_e2_tournament";
  }
  return "unknown";
}

GenKind gen_kind_from_string(std::string_view name) {
  for (GenKind k : {GenKind::Segments, GenKind::GroundedSegments, GenKind::Rects, GenKind::Chords,
                    GenKind::RawE2Tournament})
    if (to_string(k) == name) return k;
  throw Error(ErrorCode::BadSpec, "unknown generator kind '" + std::string(name) + "'");
}

std::string_view to_string(Lean lean) { return lean == Lean::Right ? "right" : "mixed"; }

Lean lean_from_string(std::string_view name) {
  if (name == "right" || name == "acute") return Lean::Right;
  if (name == "mixed") return Lean::Mixed;
  throw Error(ErrorCode::BadSpec, "unknown lean '" + std::string(name) + "'");
}

void validate_spec(const GenSpec& spec) {
  if (spec.n < 1) throw Error(ErrorCode::BadSpec, "n must be at least 1");
  if (spec.coordinate_range < 1 || spec.coordinate_range > geometry::kMaxCoord)
    throw Error(ErrorCode::BadSpec, "coordinate range must be in [1, 2^40]");
  if (spec.weight_range.first < 0 || spec.weight_range.first > spec.weight_range.second)
    throw Error(ErrorCode::BadSpec, "weight range must satisfy 0 <= lo <= hi");
  if (spec.kind == GenKind::Chords && spec.n > 1'000'000)
    throw Error(ErrorCode::BadSpec, "too many chords");
}

namespace {

using Rng = std::mt19937_64;

Coord draw(Rng& rng, Coord lo, Coord hi) {
  return std::uniform_int_distribution<Coord>(lo, hi)(rng);
}

bool strong_order(const GeomInstance& inst) {
  return inst.items.empty() || validate_strong(geometry::build_order(inst), 1).ok();
}

bool distinct_items(const GeomInstance& inst) {
  try {
    geometry::validate_instance(inst);
    return true;
  } catch (const Error&) {
    return false;
  }
}

GeomInstance gen_chords(const GenSpec& spec, Rng& rng) {
  std::vector<Coord> positions(2 * static_cast<std::size_t>(spec.n));
  std::iota(positions.begin(), positions.end(), 0);
  std::shuffle(positions.begin(), positions.end(), rng);
  GeomInstance inst{Kind::Chords, {}};
  for (int i = 0; i < spec.n; ++i) {
    Coord a = positions[2 * i], b = positions[2 * i + 1];
    inst.items.push_back(ChordInterval{std::min(a, b), std::max(a, b)});
  }
  return inst;
}

GeomInstance gen_rects(const GenSpec& spec, Rng& rng) {
  const Coord range = std::max<Coord>(spec.coordinate_range, 3);
  const Coord height = 2;
  const Coord max_width = std::max<Coord>(1, range / 3);
  GeomInstance inst{Kind::Rects, {}};
  while (static_cast<int>(inst.items.size()) < spec.n) {
    const Coord w = draw(rng, 1, max_width);
    const Coord x = draw(rng, 0, range - w);
    const Coord y = draw(rng, 0, range - height);
    Rect r{x, x + w, y, y + height};
    if (std::find(inst.items.begin(), inst.items.end(), geometry::Object{r}) == inst.items.end())
      inst.items.push_back(r);
  }
  return inst;
}

GeomInstance gen_segments(const GenSpec& spec, Rng& rng) {
  const Coord range = spec.coordinate_range;
  GeomInstance inst{Kind::Segments, {}};
  while (static_cast<int>(inst.items.size()) < spec.n) {
    Segment s{{draw(rng, 0, range), draw(rng, 0, range)}, {draw(rng, 0, range), draw(rng, 0, range)}};
    if (s.base == s.top) continue;
    if (std::find(inst.items.begin(), inst.items.end(), geometry::Object{s}) == inst.items.end())
      inst.items.push_back(s);
  }
  return inst;
}

// One raw draw of grounded segments: bases anywhere in the range, tops at
// positive height with a horizontal offset of at most a quarter range.
GeomInstance draw_grounded(const GenSpec& spec, Rng& rng) {
  const Coord range = std::max<Coord>(spec.coordinate_range, 4);
  const Coord reach = std::max<Coord>(1, range / 4);
  GeomInstance inst{Kind::GroundedSegments, {}};
  for (int i = 0; i < spec.n; ++i) {
    const Coord bx = draw(rng, 0, range);
    const Coord dx = spec.lean == Lean::Right ? draw(rng, 1, reach) : draw(rng, -reach, reach);
    inst.items.push_back(Segment{{bx, 0}, {bx + dx, draw(rng, 1, range)}});
  }
  return inst;
}

bool grounded_classes_strong(const GeomInstance& inst) {
  GeomInstance right{Kind::GroundedSegments, {}}, left{Kind::GroundedSegments, {}};
  bool has_left = false, has_right = false;
  for (const auto& o : inst.items) {
    const auto& s = std::get<Segment>(o);
    if (s.top.x >= s.base.x) {
      right.items.push_back(o);
      has_right = has_right || s.top.x > s.base.x;
    } else {
      left.items.push_back(o);
      has_left = true;
    }
  }
  return strong_order(right) && strong_order(geometry::mirror(left)) &&
         (inst.items.size() < 2 || (has_left && has_right));
}

GeomInstance gen_grounded(const GenSpec& spec, Rng& rng, GenStats& stats) {
  constexpr std::uint64_t kMaxAttempts = 1'000'000;
  for (std::uint64_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    ++stats.attempts;
    GeomInstance inst = draw_grounded(spec, rng);
    if (!distinct_items(inst)) continue;
    const bool ok = spec.lean == Lean::Right ? strong_order(inst) : grounded_classes_strong(inst);
    if (ok) return inst;
    ++stats.rejected_not_strong;
  }
  throw Error(ErrorCode::BadSpec,
              "no strongly pseudo-transitive grounded instance found; lower n or widen the range");
}

}  // namespace

GeomInstance generate_instance(const GenSpec& spec, GenStats& stats) {
  validate_spec(spec);
  stats = {};
  Rng rng(spec.seed);
  switch (spec.kind) {
    case GenKind::Chords: return gen_chords(spec, rng);
    case GenKind::Rects: return gen_rects(spec, rng);
    case GenKind::Segments: return gen_segments(spec, rng);
    case GenKind::GroundedSegments: return gen_grounded(spec, rng, stats);
    case GenKind::RawE2Tournament: break;
  }
  throw Error(ErrorCode::BadSpec, "raw_e2_tournament is a graph, not a geometric instance");
}

GeomInstance generate_instance(const GenSpec& spec) {
  GenStats stats;
  return generate_instance(spec, stats);
}

PtGraph generate_graph(const GenSpec& spec) {
  validate_spec(spec);
  if (spec.kind != GenKind::RawE2Tournament)
    throw Error(ErrorCode::BadSpec, "only raw_e2_tournament generates a bare graph");
  Rng rng(spec.seed);
  const int n = spec.n;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(order[i], order[j]);
  std::shuffle(pairs.begin(), pairs.end(), rng);

  std::vector<Weight> weights(n);
  for (auto& w : weights) w = draw(rng, spec.weight_range.first, spec.weight_range.second);

  std::vector<std::uint8_t> promoted(pairs.size(), 0);
  auto assemble = [&] {
    EdgeList e1, e2;
    for (std::size_t i = 0; i < pairs.size(); ++i) (promoted[i] ? e1 : e2).push_back(pairs[i]);
    std::sort(e1.begin(), e1.end());
    std::sort(e2.begin(), e2.end());
    return PtGraph::build(e1, e2, weights);
  };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!std::bernoulli_distribution(0.5)(rng)) continue;
    promoted[i] = 1;
    if (!validate_strong(assemble(), 1).ok()) promoted[i] = 0;
  }
  return assemble();
}

std::variant<GeomInstance, PtGraph> generate(const GenSpec& spec) {
  if (spec.kind == GenKind::RawE2Tournament) return generate_graph(spec);
  return generate_instance(spec);
}

std::vector<Weight> random_weights(int n, std::pair<Weight, Weight> range, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Weight> out(n);
  for (auto& w : out) w = draw(rng, range.first, range.second);
  return out;
}

}  // namespace ptchain::oracle
