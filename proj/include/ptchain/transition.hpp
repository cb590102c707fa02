#pragma once

// Longest chain in a pseudo-transitive graph through the transition graph.
//
// Let k be the longest chain length using only E2 edges. Every chain of
// k+1 vertices then contains an E1 edge, and its first vertex with an E1
// edge to a later member (the pivot) can be dropped without changing which
// later vertices extend the chain. The transition graph has one node per
// (k+1)-chain and an arc C -> (C - pivot(C)) + a* for each a* extending C;
// the longest chain has k+1 vertices plus one per arc of its longest path.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ptchain/core.hpp"

namespace ptchain {

struct Budget {
  std::uint64_t max_nodes = 5'000'000;
  std::uint64_t max_checks = 100'000'000;
};

/// Work accounting shared by all stages of one solve. Throws
/// BUDGET_EXCEEDED carrying the best lower bound recorded so far.
class WorkMeter {
 public:
  explicit WorkMeter(Budget budget = {}) : budget_(budget) {}

  void charge_checks(std::uint64_t count = 1) {
    checks_ += count;
    if (checks_ > budget_.max_checks) fail("adjacency-check budget exhausted");
  }
  void charge_nodes(std::uint64_t count = 1) {
    nodes_ += count;
    if (nodes_ > budget_.max_nodes) fail("node budget exhausted");
  }
  void raise_lower_bound(std::int64_t bound) {
    if (bound > lower_bound_) lower_bound_ = bound;
  }

  std::uint64_t checks() const noexcept { return checks_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  std::int64_t lower_bound() const noexcept { return lower_bound_; }
  const Budget& budget() const noexcept { return budget_; }

 private:
  [[noreturn]] void fail(const char* what) const;

  Budget budget_;
  std::uint64_t checks_ = 0;
  std::uint64_t nodes_ = 0;
  std::int64_t lower_bound_ = 0;
};

struct OmegaG2Result {
  int k = 0;
  std::vector<Vertex> witness;  // a longest E2-only chain, pi order
};

/// Longest chain in the E2 subgraph by ordered depth-first extension.
OmegaG2Result omega_g2(const PtGraph& g, WorkMeter& meter);
OmegaG2Result omega_g2(const PtGraph& g, const Budget& budget = {});

/// All r-vertex chains, each in pi order, listed in lexicographic pi order.
/// Every emitted chain is charged as a node.
std::vector<std::vector<Vertex>> enumerate_chains(const PtGraph& g, int r, WorkMeter& meter);
std::vector<std::vector<Vertex>> enumerate_chains(const PtGraph& g, int r,
                                                  const Budget& budget = {});

/// First vertex (in pi order) with an E1 edge to a later member.
std::optional<Vertex> pivot_of(const PtGraph& g, std::span<const Vertex> chain);

class TransitionGraph {
 public:
  struct Arc {
    std::uint32_t target;
    Vertex appended;
  };

  int k() const noexcept { return k_; }
  std::size_t width() const noexcept { return static_cast<std::size_t>(k_) + 1; }
  std::size_t node_count() const noexcept { return pivots_.size(); }
  std::size_t edge_count() const noexcept { return arcs_.size(); }

  std::span<const Vertex> node(std::size_t id) const {
    return {tuples_.data() + id * width(), width()};
  }
  Vertex pivot(std::size_t id) const { return pivots_[id]; }
  std::span<const Arc> arcs(std::size_t id) const {
    return {arcs_.data() + offsets_[id], offsets_[id + 1] - offsets_[id]};
  }
  /// Node ids in a topological order of the arc relation.
  std::span<const std::uint32_t> topological_order() const noexcept { return topo_; }

  /// Node id of a pi-ordered tuple.
  std::optional<std::size_t> find(std::span<const Vertex> tuple) const;

 private:
  friend TransitionGraph build_transition_graph(const PtGraph&, int, WorkMeter&);

  const PtGraph* graph_ = nullptr;
  int k_ = 0;
  std::vector<Vertex> tuples_;
  std::vector<Vertex> pivots_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Arc> arcs_;
  std::vector<std::uint32_t> topo_;
};

/// Nodes are the (k+1)-chains. Throws BUDGET_EXCEEDED, NOT_PSEUDO_TRANSITIVE
/// (a generated successor is not a chain) and INTERNAL_CYCLE. The graph
/// keeps a pointer to g, which must outlive it.
TransitionGraph build_transition_graph(const PtGraph& g, int k, WorkMeter& meter);
TransitionGraph build_transition_graph(const PtGraph& g, int k, const Budget& budget = {});

struct TransitionResult {
  int omega_g2 = 0;
  int value = 0;
  std::vector<Vertex> chain;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::uint64_t checks = 0;
};

/// Throws NOT_PSEUDO_TRANSITIVE, EMPTY_GRAPH, BUDGET_EXCEEDED.
TransitionResult longest_chain_transition(const PtGraph& g, const Budget& budget = {});

}  // namespace ptchain
