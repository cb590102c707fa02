#pragma once

// Maximum-weight chain in a strongly pseudo-transitive graph.
//
// Four edge-indexed tables are filled in increasing topological span
// pi(y) - pi(x):
//   W [x,y]  best chain from x to y
//   W1[x,y]  best chain from x to y whose other members all have an E1 edge
//            into y (defined only for xy in E1)
//   D [x,y]  best degenerate chain from x to y
//   D1[x,y]  best degenerate chain from x to y whose internal members all
//            have an E1 edge into y
// A chain is degenerate when no internal member receives E1 edges from all
// of its predecessors; on strong graphs that is the same as the first
// member reaching every internal member through E2.

#include <cstdint>
#include <optional>
#include <vector>

#include "ptchain/core.hpp"

namespace ptchain {

enum class Table : std::uint8_t { W, W1, D, D1 };

enum class Term : std::uint8_t {
  None,      // entry undefined (no such edge)
  Base,      // the bare two-chain x,y
  Fallback,  // W -> D, W1 -> D1: the optimum is degenerate
  Split,     // glue at an intermediate vertex t
  Prepend,   // x in front of the D1 chain starting at t
};

struct BackPointer {
  Term term = Term::None;
  Vertex via = -1;
};

struct DpCounters {
  std::uint64_t inspections = 0;  // (edge, t) candidate pairs examined
  std::uint64_t table_writes = 0;
};

class DpTables {
 public:
  DpTables() = default;
  explicit DpTables(int n);

  int n() const noexcept { return n_; }

  std::optional<Weight> value(Table t, Vertex x, Vertex y) const;
  BackPointer back(Table t, Vertex x, Vertex y) const { return back_[slot(t, x, y)]; }

  /// Follows back-pointers from entry (x,y) of the given table and returns
  /// the chain in pi order. Throws NOT_A_CHAIN for undefined entries.
  std::vector<Vertex> reconstruct(Table t, Vertex x, Vertex y) const;

  const DpCounters& counters() const noexcept { return counters_; }

 private:
  friend DpTables fill_tables(const PtGraph& g);

  std::size_t slot(Table t, Vertex x, Vertex y) const noexcept {
    return (static_cast<std::size_t>(t) * n_ + x) * n_ + y;
  }
  void set(Table t, Vertex x, Vertex y, Weight v, BackPointer bp) {
    values_[slot(t, x, y)] = v;
    back_[slot(t, x, y)] = bp;
    ++counters_.table_writes;
  }
  Weight raw(Table t, Vertex x, Vertex y) const noexcept { return values_[slot(t, x, y)]; }

  int n_ = 0;
  std::vector<Weight> values_;
  std::vector<BackPointer> back_;
  DpCounters counters_;
};

/// Fills all four tables. Throws NOT_STRONG unless validate_strong passes.
DpTables dp_tables(const PtGraph& g);

struct ChainResult {
  Weight value = 0;
  std::vector<Vertex> chain;
};

struct DpResult : ChainResult {
  DpCounters counters;
};

/// Heaviest chain. The witness is verified before returning; among optimal
/// table entries, those starting at the smallest-pi vertex are reconstructed
/// and the lexicographically smallest pi-sequence wins.
/// Throws NOT_STRONG, EMPTY_GRAPH.
DpResult max_weight_chain_dp(const PtGraph& g);

}  // namespace ptchain
