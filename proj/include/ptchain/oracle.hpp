#pragma once

// Brute-force references and seeded instance generators. The brute-force
// routines only use edge lookups and the disjointness predicates; they share
// no code with the DP or the transition algorithm.

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "ptchain/core.hpp"
#include "ptchain/dp.hpp"
#include "ptchain/geometry.hpp"

namespace ptchain::oracle {

inline constexpr int kMaxBruteChainVertices = 24;
inline constexpr int kMaxBruteMisItems = 20;

/// Heaviest chain by exhaustive ordered extension. The witness is the
/// lexicographically smallest optimal pi-sequence. Throws TOO_LARGE,
/// EMPTY_GRAPH.
ChainResult brute_max_weight_chain(const PtGraph& g);

struct BruteMis {
  int size = 0;
  std::vector<int> indices;  // lexicographically smallest optimum
};

/// Largest pairwise-disjoint subfamily over all subsets. Throws TOO_LARGE.
BruteMis brute_mis(const geometry::GeomInstance& inst);

enum class GenKind { Segments, GroundedSegments, Rects, Chords, RawE2Tournament };
enum class Lean { Right, Mixed };

std::string_view to_string(GenKind kind);
GenKind gen_kind_from_string(std::string_view name);  // throws BAD_SPEC
std::string_view to_string(Lean lean);
Lean lean_from_string(std::string_view name);  // throws BAD_SPEC

struct GenSpec {
  GenKind kind = GenKind::Chords;
  int n = 8;
  std::uint64_t seed = 1;
  std::int64_t coordinate_range = 30;
  std::pair<Weight, Weight> weight_range{1, 1};
  // Grounded segments only. Right: every segment leans strictly right and
  // the built order is strongly pseudo-transitive. Mixed: both lean
  // classes occur and each class is strongly pseudo-transitive on its own.
  Lean lean = Lean::Right;
};

/// Rejects n < 1, an empty coordinate range and bad weight ranges.
void validate_spec(const GenSpec& spec);

/// Geometric kinds. Identical specs give identical instances.
geometry::GeomInstance generate_instance(const GenSpec& spec);

/// RAW_E2_TOURNAMENT: a transitive tournament in E2 on a random vertex
/// order; pairs are visited in random order and promoted to E1 when the
/// graph stays strongly pseudo-transitive. Weights from weight_range.
PtGraph generate_graph(const GenSpec& spec);

std::variant<geometry::GeomInstance, PtGraph> generate(const GenSpec& spec);

/// Uniform weights in [range.first, range.second].
std::vector<Weight> random_weights(int n, std::pair<Weight, Weight> range, std::uint64_t seed);

/// Attempts the grounded-segment generator needed for its last instance:
/// raw draws rejected because the order was not strongly pseudo-transitive.
struct GenStats {
  std::uint64_t attempts = 0;
  std::uint64_t rejected_not_strong = 0;
};
geometry::GeomInstance generate_instance(const GenSpec& spec, GenStats& stats);

}  // namespace ptchain::oracle
