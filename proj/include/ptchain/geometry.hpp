#pragma once

// Planar objects, exact disjointness predicates, and the order that turns a
// family of objects into a pseudo-transitive graph whose chains are exactly
// the pairwise-disjoint subfamilies.
//
// The separating direction is fixed as vertical: P -> Q is an E1 edge when a
// vertical line strictly separates P (left) from Q (right). Every other
// disjoint pair becomes an E2 edge oriented by (leftmost x, index).

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ptchain/core.hpp"
#include "ptchain/transition.hpp"

namespace ptchain::geometry {

using Coord = std::int64_t;

struct Point {
  Coord x = 0;
  Coord y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Segment {
  Point base;
  Point top;
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct Rect {
  Coord xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  friend bool operator==(const Rect&, const Rect&) = default;
};

/// A chord of a circle cut open at a point: its two endpoint positions.
struct ChordInterval {
  Coord l = 0;
  Coord r = 0;
  friend bool operator==(const ChordInterval&, const ChordInterval&) = default;
};

using Object = std::variant<Segment, Rect, ChordInterval>;

enum class Kind { Segments, GroundedSegments, Rects, Chords };

std::string_view to_string(Kind kind);
Kind kind_from_string(std::string_view name);  // throws BAD_INPUT

struct GeomInstance {
  Kind kind = Kind::Segments;
  std::vector<Object> items;
};

/// Coordinates must stay within this magnitude so orientation products fit.
inline constexpr Coord kMaxCoord = Coord{1} << 40;

/// Per-kind invariants plus distinctness. Throws BAD_INSTANCE,
/// NOT_GROUNDED, BAD_CHORDS or DUPLICATE_OBJECT.
void validate_instance(const GeomInstance& inst);

bool disjoint(const Segment& a, const Segment& b);
bool disjoint(const Rect& a, const Rect& b);
bool disjoint(const ChordInterval& a, const ChordInterval& b);
/// Throws KIND_MISMATCH when the alternatives differ.
bool disjoint(const Object& a, const Object& b);

Coord min_x(const Object& o);
Coord max_x(const Object& o);

/// Unit-weight graph on the items; edge (P,Q) in either direction iff
/// P and Q are disjoint. Throws as validate_instance.
PtGraph build_order(const GeomInstance& inst);

/// x -> -x on every item.
GeomInstance mirror(const GeomInstance& inst);

struct MisResult {
  std::vector<int> indices;  // ascending
  std::string method;
};

/// Grounded segments that all lean strictly right. Solved through the
/// weighted-chain DP; throws NOT_GROUNDED, NOT_ACUTE, NOT_STRONG.
MisResult mis_grounded_segments_exact(const std::vector<Segment>& segments);

/// Any grounded family. Solves the right-leaning (plus vertical) and the
/// mirrored left-leaning classes exactly and keeps the larger answer, which
/// is at least half the optimum. Throws NOT_GROUNDED, NOT_STRONG.
MisResult mis_grounded_segments_half(const std::vector<Segment>& segments);

/// Maximum set of pairwise non-crossing chords. Throws BAD_CHORDS.
MisResult mis_circle(const std::vector<ChordInterval>& chords);

/// Unit-height rectangles through the transition algorithm. Throws
/// NOT_UNIT_HEIGHT, BUDGET_EXCEEDED.
MisResult mis_rectangles(const std::vector<Rect>& rects, const Budget& budget = {});

/// General segments through the transition algorithm; the order is
/// pseudo-transitive for any planar family. Throws BUDGET_EXCEEDED.
MisResult mis_segments(const std::vector<Segment>& segments, const Budget& budget = {});

/// True iff the indexed items are pairwise disjoint.
bool is_independent(const GeomInstance& inst, const std::vector<int>& indices);

template <typename T>
GeomInstance make_instance(Kind kind, const std::vector<T>& items) {
  GeomInstance inst{kind, {}};
  inst.items.assign(items.begin(), items.end());
  return inst;
}

template <typename T>
std::vector<T> items_as(const GeomInstance& inst) {
  std::vector<T> out;
  out.reserve(inst.items.size());
  for (const auto& o : inst.items) {
    const T* p = std::get_if<T>(&o);
    if (!p) throw Error(ErrorCode::KindMismatch, "instance holds a different object type");
    out.push_back(*p);
  }
  return out;
}

}  // namespace ptchain::geometry
