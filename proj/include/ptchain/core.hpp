#pragma once

// Pseudo-transitive DAGs: graph storage, topological indexing, chain checks
// and the structural validators every algorithm in this library relies on.
//
// A graph G = (V, E1, E) is pseudo-transitive when ab in E1 and bc in E
// imply ac in E. It is strongly pseudo-transitive when, in addition, both
// E1 and E2 = E - E1 are transitive.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ptchain {

using Vertex = std::int32_t;
using Weight = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;
using EdgeList = std::vector<Edge>;

enum class EdgeClass : std::uint8_t { Absent = 0, E1 = 1, E2 = 2 };

enum class ErrorCode {
  Cycle,
  DuplicateEdge,
  SelfLoop,
  Antiparallel,
  BadWeight,
  UnknownVertex,
  NotAChain,
  TooShort,
  NotStrong,
  NotPseudoTransitive,
  EmptyGraph,
  BudgetExceeded,
  InternalCycle,
  KindMismatch,
  DuplicateObject,
  NotGrounded,
  NotAcute,
  BadChords,
  NotUnitHeight,
  BadInstance,
  TooLarge,
  BadSpec,
  BadInput,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
/// BUDGET_EXCEEDED errors additionally report the best lower bound reached.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::int64_t> lower_bound = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::int64_t> lower_bound() const noexcept { return lower_bound_; }

 private:
  ErrorCode code_;
  std::optional<std::int64_t> lower_bound_;
};

enum class Rule {
  Acyclicity,
  PseudoTrans,
  E1Transitive,
  E2Transitive,
  Antiparallel,
  SelfLoop,
  DuplicateEdge,
};

std::string_view to_string(Rule rule);

struct Violation {
  Rule rule;
  std::vector<Vertex> witness;  // pair or triple, depending on the rule
};

struct ValidationReport {
  std::vector<Violation> violations;
  // Set when more violations existed than the report kept.
  bool truncated = false;

  bool ok() const noexcept { return violations.empty(); }
};

/// Computes pi: V -> {1..n} by Kahn's algorithm, always releasing the
/// smallest available vertex id first. Throws CYCLE.
std::vector<int> topological_index(int n, std::span<const std::vector<Vertex>> out_adj);

/// Structural checks on raw edge lists, reported rather than thrown.
/// Covers SELF_LOOP, DUPLICATE_EDGE, ANTIPARALLEL and ACYCLICITY.
ValidationReport check_structure(int n, const EdgeList& e1, const EdgeList& e2);

class PtGraph {
 public:
  PtGraph() = default;

  /// Builds the graph on vertices 0..weights.size()-1. Rejects self loops,
  /// duplicate edges (within or across the lists), antiparallel pairs,
  /// cycles and negative weights.
  static PtGraph build(const EdgeList& e1, const EdgeList& e2, std::vector<Weight> weights);

  int n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  Weight weight(Vertex v) const { return weights_[v]; }
  std::span<const Weight> weights() const noexcept { return weights_; }

  EdgeClass edge_class(Vertex u, Vertex v) const noexcept {
    return static_cast<EdgeClass>(classes_[static_cast<std::size_t>(u) * n_ + v]);
  }
  bool has_edge(Vertex u, Vertex v) const noexcept {
    return edge_class(u, v) != EdgeClass::Absent;
  }

  /// Out-neighbours over E = E1 u E2, sorted by id. Excludes the vertex itself.
  std::span<const Vertex> out(Vertex v) const { return out_adj_[v]; }
  std::span<const Vertex> in(Vertex v) const { return in_adj_[v]; }
  std::size_t out_degree(Vertex v) const { return out_adj_[v].size(); }
  std::size_t in_degree(Vertex v) const { return in_adj_[v].size(); }
  std::size_t degree(Vertex v) const { return out_degree(v) + in_degree(v); }

  /// Topological index in 1..n.
  int pi(Vertex v) const { return pi_[v]; }
  std::span<const int> pi() const noexcept { return pi_; }
  /// Vertices sorted by pi.
  std::span<const Vertex> order() const noexcept { return order_; }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  /// Edge lists of each class, sorted lexicographically.
  EdgeList edges(EdgeClass cls) const;

  /// Same structure, different vertex weights.
  PtGraph with_weights(std::vector<Weight> weights) const;

 private:
  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<Weight> weights_;
  std::vector<std::uint8_t> classes_;
  std::vector<std::vector<Vertex>> out_adj_;
  std::vector<std::vector<Vertex>> in_adj_;
  std::vector<int> pi_;
  std::vector<Vertex> order_;
};

inline constexpr std::size_t kDefaultMaxViolations = 100;

/// ab in E1 and bc in E imply ac in E.
ValidationReport validate_pseudo_transitive(const PtGraph& g,
                                            std::size_t max_violations = kDefaultMaxViolations);

/// Pseudo-transitivity plus transitivity of E1 and of E2.
ValidationReport validate_strong(const PtGraph& g,
                                 std::size_t max_violations = kDefaultMaxViolations);

/// True iff the sequence is strictly pi-increasing and every forward pair
/// is an edge. Throws UNKNOWN_VERTEX.
bool verify_chain(const PtGraph& g, std::span<const Vertex> vertices);

/// Summed vertex weight.
Weight chain_weight(const PtGraph& g, std::span<const Vertex> vertices);

enum class ChainKind { Degenerate, Splitable };

struct ChainClass {
  ChainKind kind = ChainKind::Degenerate;
  std::vector<Vertex> splitting_elements;
  std::optional<Vertex> last_split;
};

/// Splitting elements of a chain of length >= 3: internal a_j receiving an
/// E1 edge from every earlier member. Meaningful on strongly
/// pseudo-transitive graphs; the caller is responsible for that.
/// Throws NOT_A_CHAIN, TOO_SHORT.
ChainClass classify_chain(const PtGraph& g, std::span<const Vertex> chain);

}  // namespace ptchain
