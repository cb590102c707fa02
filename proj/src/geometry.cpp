#include "ptchain/geometry.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "ptchain/dp.hpp"

namespace ptchain::geometry {

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::Segments: return "segments";
    case Kind::GroundedSegments: return "grounded_segments";
    case Kind::Rects: return "rects";
    case Kind::Chords: return "chords";
  }
  return "unknown";
}

Kind kind_from_string(std::string_view name) {
  for (Kind k : {Kind::Segments, Kind::GroundedSegments, Kind::Rects, Kind::Chords})
    if (to_string(k) == name) return k;
  throw Error(ErrorCode::BadInput, "unknown instance kind '" + std::string(name) + "'");
}

namespace {

int orientation(const Point& a, const Point& b, const Point& c) {
  const __int128 cross = static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
                         static_cast<__int128>(b.y - a.y) * (c.x - a.x);
  return (cross > 0) - (cross < 0);
}

// c is collinear with a,b; is it inside their bounding box?
bool within(const Point& a, const Point& b, const Point& c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
         c.y <= std::max(a.y, b.y);
}

bool coord_ok(Coord c) { return c >= -kMaxCoord && c <= kMaxCoord; }

std::string item_str(std::size_t i) { return "item " + std::to_string(i); }

bool holds_expected(Kind kind, const Object& o) {
  switch (kind) {
    case Kind::Segments:
    case Kind::GroundedSegments: return std::holds_alternative<Segment>(o);
    case Kind::Rects: return std::holds_alternative<Rect>(o);
    case Kind::Chords: return std::holds_alternative<ChordInterval>(o);
  }
  return false;
}

auto object_key(const Object& o) {
  return std::visit(
      [](const auto& v) -> std::tuple<Coord, Coord, Coord, Coord> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Segment>)
          return {v.base.x, v.base.y, v.top.x, v.top.y};
        else if constexpr (std::is_same_v<T, Rect>)
          return {v.xmin, v.xmax, v.ymin, v.ymax};
        else
          return {v.l, v.r, 0, 0};
      },
      o);
}

}  // namespace

bool disjoint(const Segment& a, const Segment& b) {
  const int o1 = orientation(a.base, a.top, b.base);
  const int o2 = orientation(a.base, a.top, b.top);
  const int o3 = orientation(b.base, b.top, a.base);
  const int o4 = orientation(b.base, b.top, a.top);
  if (o1 != o2 && o3 != o4) return false;
  if (o1 == 0 && within(a.base, a.top, b.base)) return false;
  if (o2 == 0 && within(a.base, a.top, b.top)) return false;
  if (o3 == 0 && within(b.base, b.top, a.base)) return false;
  if (o4 == 0 && within(b.base, b.top, a.top)) return false;
  return true;
}

bool disjoint(const Rect& a, const Rect& b) {
  const bool x_overlap = a.xmin <= b.xmax && b.xmin <= a.xmax;
  const bool y_overlap = a.ymin <= b.ymax && b.ymin <= a.ymax;
  return !(x_overlap && y_overlap);
}

bool disjoint(const ChordInterval& a, const ChordInterval& b) {
  // A shared endpoint is a common point of the two chords.
  if (a.l == b.l || a.l == b.r || a.r == b.l || a.r == b.r) return false;
  const bool interleaved = (a.l < b.l && b.l < a.r && a.r < b.r) ||
                           (b.l < a.l && a.l < b.r && b.r < a.r);
  return !interleaved;
}

bool disjoint(const Object& a, const Object& b) {
  if (a.index() != b.index()) throw Error(ErrorCode::KindMismatch, "objects of different kinds");
  return std::visit(
      [&](const auto& lhs) {
        using T = std::decay_t<decltype(lhs)>;
        return disjoint(lhs, std::get<T>(b));
      },
      a);
}

Coord min_x(const Object& o) {
  return std::visit(
      [](const auto& v) -> Coord {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Segment>)
          return std::min(v.base.x, v.top.x);
        else if constexpr (std::is_same_v<T, Rect>)
          return v.xmin;
        else
          return v.l;
      },
      o);
}

Coord max_x(const Object& o) {
  return std::visit(
      [](const auto& v) -> Coord {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Segment>)
          return std::max(v.base.x, v.top.x);
        else if constexpr (std::is_same_v<T, Rect>)
          return v.xmax;
        else
          return v.r;
      },
      o);
}

void validate_instance(const GeomInstance& inst) {
  std::set<std::tuple<Coord, Coord, Coord, Coord>> seen;
  std::set<Coord> endpoints;
  for (std::size_t i = 0; i < inst.items.size(); ++i) {
    const Object& o = inst.items[i];
    if (!holds_expected(inst.kind, o))
      throw Error(ErrorCode::KindMismatch, item_str(i) + " does not match the instance kind");
    if (const auto* s = std::get_if<Segment>(&o)) {
      for (Coord c : {s->base.x, s->base.y, s->top.x, s->top.y})
        if (!coord_ok(c)) throw Error(ErrorCode::BadInstance, item_str(i) + " coordinate too large");
      if (s->base == s->top) throw Error(ErrorCode::BadInstance, item_str(i) + " is a single point");
      if (inst.kind == Kind::GroundedSegments && (s->base.y != 0 || s->top.y <= 0))
        throw Error(ErrorCode::NotGrounded, item_str(i) + " needs base.y = 0 and top.y > 0");
    } else if (const auto* r = std::get_if<Rect>(&o)) {
      for (Coord c : {r->xmin, r->xmax, r->ymin, r->ymax})
        if (!coord_ok(c)) throw Error(ErrorCode::BadInstance, item_str(i) + " coordinate too large");
      if (r->xmin >= r->xmax || r->ymin >= r->ymax)
        throw Error(ErrorCode::BadInstance, item_str(i) + " is not a proper rectangle");
    } else {
      const auto& c = std::get<ChordInterval>(o);
      if (c.l >= c.r) throw Error(ErrorCode::BadChords, item_str(i) + " needs l < r");
      if (!endpoints.insert(c.l).second || !endpoints.insert(c.r).second)
        throw Error(ErrorCode::BadChords, item_str(i) + " reuses an endpoint position");
    }
    if (!seen.insert(object_key(o)).second)
      throw Error(ErrorCode::DuplicateObject, item_str(i) + " repeats an earlier item");
  }
}

PtGraph build_order(const GeomInstance& inst) {
  validate_instance(inst);
  const int n = static_cast<int>(inst.items.size());
  EdgeList e1, e2;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const Object& a = inst.items[p];
      const Object& b = inst.items[q];
      if (!disjoint(a, b)) continue;
      if (max_x(a) < min_x(b)) {
        e1.emplace_back(p, q);
      } else if (max_x(b) < min_x(a)) {
        e1.emplace_back(q, p);
      } else if (min_x(a) <= min_x(b)) {
        // Equal leftmost x falls back to index order, which keeps E acyclic.
        e2.emplace_back(p, q);
      } else {
        e2.emplace_back(q, p);
      }
    }
  }
  std::sort(e1.begin(), e1.end());
  std::sort(e2.begin(), e2.end());
  return PtGraph::build(e1, e2, std::vector<Weight>(n, 1));
}

GeomInstance mirror(const GeomInstance& inst) {
  GeomInstance out{inst.kind, {}};
  out.items.reserve(inst.items.size());
  for (const Object& o : inst.items) {
    out.items.push_back(std::visit(
        [](const auto& v) -> Object {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Segment>)
            return Segment{{-v.base.x, v.base.y}, {-v.top.x, v.top.y}};
          else if constexpr (std::is_same_v<T, Rect>)
            return Rect{-v.xmax, -v.xmin, v.ymin, v.ymax};
          else
            return ChordInterval{-v.r, -v.l};
        },
        o));
  }
  return out;
}

bool is_independent(const GeomInstance& inst, const std::vector<int>& indices) {
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = i + 1; j < indices.size(); ++j)
      if (indices[i] == indices[j] || !disjoint(inst.items[indices[i]], inst.items[indices[j]]))
        return false;
  return true;
}

namespace {

std::vector<int> sorted_indices(std::span<const Vertex> chain) {
  std::vector<int> out(chain.begin(), chain.end());
  std::sort(out.begin(), out.end());
  return out;
}

MisResult certify(const GeomInstance& inst, MisResult result) {
  if (!is_independent(inst, result.indices))
    throw Error(ErrorCode::Internal, "independent-set certificate failed");
  return result;
}

MisResult solve_by_dp(const GeomInstance& inst) {
  if (inst.items.empty()) return {{}, "dp"};
  const DpResult r = max_weight_chain_dp(build_order(inst));
  return certify(inst, {sorted_indices(r.chain), "dp"});
}

MisResult solve_by_transition(const GeomInstance& inst, const Budget& budget) {
  if (inst.items.empty()) return {{}, "transition"};
  const TransitionResult r = longest_chain_transition(build_order(inst), budget);
  return certify(inst, {sorted_indices(r.chain), "transition"});
}

}  // namespace

MisResult mis_grounded_segments_exact(const std::vector<Segment>& segments) {
  const GeomInstance inst = make_instance(Kind::GroundedSegments, segments);
  validate_instance(inst);
  for (std::size_t i = 0; i < segments.size(); ++i)
    if (segments[i].top.x <= segments[i].base.x)
      throw Error(ErrorCode::NotAcute, item_str(i) + " does not lean strictly right");
  MisResult r = solve_by_dp(inst);
  r.method = "exact";
  return r;
}

MisResult mis_grounded_segments_half(const std::vector<Segment>& segments) {
  validate_instance(make_instance(Kind::GroundedSegments, segments));
  std::vector<int> right_ids, left_ids;
  std::vector<Segment> right, left;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment& s = segments[i];
    if (s.top.x >= s.base.x) {
      right_ids.push_back(static_cast<int>(i));
      right.push_back(s);
    } else {
      left_ids.push_back(static_cast<int>(i));
      left.push_back(s);
    }
  }
  const MisResult right_sol = solve_by_dp(make_instance(Kind::GroundedSegments, right));
  const MisResult left_sol = solve_by_dp(mirror(make_instance(Kind::GroundedSegments, left)));

  const bool take_right = right_sol.indices.size() >= left_sol.indices.size();
  const auto& local = take_right ? right_sol.indices : left_sol.indices;
  const auto& ids = take_right ? right_ids : left_ids;
  MisResult result{{}, "half"};
  for (int i : local) result.indices.push_back(ids[i]);
  std::sort(result.indices.begin(), result.indices.end());
  return certify(make_instance(Kind::GroundedSegments, segments), std::move(result));
}

MisResult mis_circle(const std::vector<ChordInterval>& chords) {
  return solve_by_dp(make_instance(Kind::Chords, chords));
}

MisResult mis_rectangles(const std::vector<Rect>& rects, const Budget& budget) {
  for (std::size_t i = 1; i < rects.size(); ++i)
    if (rects[i].ymax - rects[i].ymin != rects[0].ymax - rects[0].ymin)
      throw Error(ErrorCode::NotUnitHeight, item_str(i) + " has a different height");
  return solve_by_transition(make_instance(Kind::Rects, rects), budget);
}

MisResult mis_segments(const std::vector<Segment>& segments, const Budget& budget) {
  return solve_by_transition(make_instance(Kind::Segments, segments), budget);
}

}  // namespace ptchain::geometry
