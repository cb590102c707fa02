#include "ptchain/transition.hpp"

#include <algorithm>
#include <numeric>

namespace ptchain {

void WorkMeter::fail(const char* what) const {
  throw Error(ErrorCode::BudgetExceeded,
              std::string(what) + "; best lower bound " + std::to_string(lower_bound_),
              lower_bound_);
}

namespace {

// Out-neighbours re-sorted by pi so that depth-first extension emits chains
// in lexicographic pi order.
std::vector<std::vector<Vertex>> out_by_pi(const PtGraph& g) {
  std::vector<std::vector<Vertex>> adj(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    adj[v].assign(g.out(v).begin(), g.out(v).end());
    std::sort(adj[v].begin(), adj[v].end(), [&](Vertex a, Vertex b) { return g.pi(a) < g.pi(b); });
  }
  return adj;
}

// True when every member reaches w, charging one check per lookup.
bool extends(const PtGraph& g, std::span<const Vertex> chain, Vertex w, WorkMeter& meter,
             bool e2_only) {
  for (Vertex m : chain) {
    meter.charge_checks();
    const EdgeClass cls = g.edge_class(m, w);
    if (cls == EdgeClass::Absent || (e2_only && cls != EdgeClass::E2)) return false;
  }
  return true;
}

bool pi_less(const PtGraph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [&](Vertex u, Vertex v) { return g.pi(u) < g.pi(v); });
}

}  // namespace

OmegaG2Result omega_g2(const PtGraph& g, WorkMeter& meter) {
  OmegaG2Result best;
  if (g.n() == 0) return best;
  const auto adj = out_by_pi(g);
  std::vector<Vertex> chain;

  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(chain.size()) > best.k) {
      best.k = static_cast<int>(chain.size());
      best.witness = chain;
      meter.raise_lower_bound(best.k);
    }
    const Vertex last = chain.back();
    for (Vertex w : adj[last]) {
      if (g.edge_class(last, w) != EdgeClass::E2) continue;
      if (!extends(g, std::span(chain).first(chain.size() - 1), w, meter, true)) continue;
      chain.push_back(w);
      self(self);
      chain.pop_back();
    }
  };
  for (Vertex v : g.order()) {
    chain.assign(1, v);
    dfs(dfs);
  }
  return best;
}

OmegaG2Result omega_g2(const PtGraph& g, const Budget& budget) {
  WorkMeter meter(budget);
  return omega_g2(g, meter);
}

std::vector<std::vector<Vertex>> enumerate_chains(const PtGraph& g, int r, WorkMeter& meter) {
  std::vector<std::vector<Vertex>> result;
  if (r < 1 || r > g.n()) return result;
  const auto adj = out_by_pi(g);
  std::vector<Vertex> chain;

  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(chain.size()) == r) {
      meter.charge_nodes();
      result.push_back(chain);
      return;
    }
    const Vertex last = chain.back();
    for (Vertex w : adj[last]) {
      if (!extends(g, std::span(chain).first(chain.size() - 1), w, meter, false)) continue;
      chain.push_back(w);
      self(self);
      chain.pop_back();
    }
  };
  for (Vertex v : g.order()) {
    chain.assign(1, v);
    dfs(dfs);
  }
  return result;
}

std::vector<std::vector<Vertex>> enumerate_chains(const PtGraph& g, int r, const Budget& budget) {
  WorkMeter meter(budget);
  return enumerate_chains(g, r, meter);
}

std::optional<Vertex> pivot_of(const PtGraph& g, std::span<const Vertex> chain) {
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j)
      if (g.edge_class(chain[i], chain[j]) == EdgeClass::E1) return chain[i];
  return std::nullopt;
}

std::optional<std::size_t> TransitionGraph::find(std::span<const Vertex> tuple) const {
  if (tuple.size() != width() || node_count() == 0) return std::nullopt;
  std::size_t lo = 0, hi = node_count();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (pi_less(*graph_, node(mid), tuple))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < node_count() && std::ranges::equal(node(lo), tuple)) return lo;
  return std::nullopt;
}

TransitionGraph build_transition_graph(const PtGraph& g, int k, WorkMeter& meter) {
  TransitionGraph tg;
  tg.graph_ = &g;
  tg.k_ = k;
  const std::size_t width = tg.width();

  const auto chains = enumerate_chains(g, k + 1, meter);
  if (!chains.empty()) meter.raise_lower_bound(k + 1);
  tg.tuples_.reserve(chains.size() * width);
  for (const auto& c : chains) {
    tg.tuples_.insert(tg.tuples_.end(), c.begin(), c.end());
    const auto pivot = pivot_of(g, c);
    if (!pivot)
      throw Error(ErrorCode::Internal, "a chain of k+1 vertices lies entirely in E2");
    tg.pivots_.push_back(*pivot);
  }

  const auto adj = out_by_pi(g);
  std::vector<Vertex> successor(width);
  for (std::size_t id = 0; id < chains.size(); ++id) {
    const auto tuple = tg.node(id);
    const Vertex pivot = tg.pivots_[id];
    for (Vertex w : adj[tuple.back()]) {
      if (!extends(g, tuple.first(width - 1), w, meter, false)) continue;
      std::size_t pos = 0;
      for (Vertex v : tuple)
        if (v != pivot) successor[pos++] = v;
      successor[pos] = w;
      const auto target = tg.find(successor);
      if (!target)
        throw Error(ErrorCode::NotPseudoTransitive,
                    "dropping the pivot of a chain broke it; input is not pseudo-transitive");
      tg.arcs_.push_back({static_cast<std::uint32_t>(*target), w});
    }
    tg.offsets_.push_back(tg.arcs_.size());
  }

  // Kahn's algorithm doubles as the acyclicity certificate.
  std::vector<std::uint32_t> indeg(chains.size(), 0);
  for (const auto& arc : tg.arcs_) ++indeg[arc.target];
  for (std::uint32_t id = 0; id < chains.size(); ++id)
    if (indeg[id] == 0) tg.topo_.push_back(id);
  for (std::size_t head = 0; head < tg.topo_.size(); ++head)
    for (const auto& arc : tg.arcs(tg.topo_[head]))
      if (--indeg[arc.target] == 0) tg.topo_.push_back(arc.target);
  if (tg.topo_.size() != chains.size())
    throw Error(ErrorCode::InternalCycle, "transition graph contains a cycle");
  return tg;
}

TransitionGraph build_transition_graph(const PtGraph& g, int k, const Budget& budget) {
  WorkMeter meter(budget);
  return build_transition_graph(g, k, meter);
}

TransitionResult longest_chain_transition(const PtGraph& g, const Budget& budget) {
  if (g.n() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  if (ValidationReport report = validate_pseudo_transitive(g, 1); !report.ok()) {
    const auto& w = report.violations.front().witness;
    throw Error(ErrorCode::NotPseudoTransitive,
                "witness " + std::to_string(w[0]) + " " + std::to_string(w[1]) + " " +
                    std::to_string(w[2]));
  }

  WorkMeter meter(budget);
  TransitionResult result;
  OmegaG2Result stage1 = omega_g2(g, meter);
  result.omega_g2 = stage1.k;

  const TransitionGraph tg = build_transition_graph(g, stage1.k, meter);
  result.nodes = tg.node_count();
  result.edges = tg.edge_count();
  if (tg.node_count() == 0) {
    result.value = stage1.k;
    result.chain = std::move(stage1.witness);
    result.checks = meter.checks();
    return result;
  }

  // Longest path by arc count, processed in reverse topological order.
  constexpr std::uint32_t kNone = UINT32_MAX;
  std::vector<int> length(tg.node_count(), 0);
  std::vector<std::uint32_t> next(tg.node_count(), kNone);
  std::vector<Vertex> appended(tg.node_count(), -1);
  const auto topo = tg.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    for (const auto& arc : tg.arcs(*it)) {
      if (length[arc.target] + 1 > length[*it]) {
        length[*it] = length[arc.target] + 1;
        next[*it] = arc.target;
        appended[*it] = arc.appended;
      }
    }
  }
  std::uint32_t start = 0;
  for (std::uint32_t id = 1; id < tg.node_count(); ++id)
    if (length[id] > length[start]) start = id;

  std::vector<Vertex> chain(tg.node(start).begin(), tg.node(start).end());
  for (std::uint32_t id = start; next[id] != kNone; id = next[id]) chain.push_back(appended[id]);

  result.value = stage1.k + 1 + length[start];
  if (static_cast<int>(chain.size()) != result.value || !verify_chain(g, chain))
    throw Error(ErrorCode::Internal, "transition witness failed verification");
  result.chain = std::move(chain);
  result.checks = meter.checks();
  return result;
}

}  // namespace ptchain
