#include "ptchain/core.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace ptchain {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Cycle: return "CYCLE";
    case ErrorCode::DuplicateEdge: return "DUPLICATE_EDGE";
    case ErrorCode::SelfLoop: return "SELF_LOOP";
    case ErrorCode::Antiparallel: return "ANTIPARALLEL";
    case ErrorCode::BadWeight: return "BAD_WEIGHT";
    case ErrorCode::UnknownVertex: return "UNKNOWN_VERTEX";
    case ErrorCode::NotAChain: return "NOT_A_CHAIN";
    case ErrorCode::TooShort: return "TOO_SHORT";
    case ErrorCode::NotStrong: return "NOT_STRONG";
    case ErrorCode::NotPseudoTransitive: return "NOT_PSEUDO_TRANSITIVE";
    case ErrorCode::EmptyGraph: return "EMPTY_GRAPH";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::InternalCycle: return "INTERNAL_CYCLE";
    case ErrorCode::KindMismatch: return "KIND_MISMATCH";
    case ErrorCode::DuplicateObject: return "DUPLICATE_OBJECT";
    case ErrorCode::NotGrounded: return "NOT_GROUNDED";
    case ErrorCode::NotAcute: return "NOT_ACUTE";
    case ErrorCode::BadChords: return "BAD_CHORDS";
    case ErrorCode::NotUnitHeight: return "NOT_UNIT_HEIGHT";
    case ErrorCode::BadInstance: return "BAD_INSTANCE";
    case ErrorCode::TooLarge: return "TOO_LARGE";
    case ErrorCode::BadSpec: return "BAD_SPEC";
    case ErrorCode::BadInput: return "BAD_INPUT";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::Acyclicity: return "ACYCLICITY";
    case Rule::PseudoTrans: return "PSEUDO_TRANS";
    case Rule::E1Transitive: return "E1_TRANSITIVE";
    case Rule::E2Transitive: return "E2_TRANSITIVE";
    case Rule::Antiparallel: return "ANTIPARALLEL";
    case Rule::SelfLoop: return "SELF_LOOP";
    case Rule::DuplicateEdge: return "DUPLICATE_EDGE";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& what, std::optional<std::int64_t> lower_bound)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      lower_bound_(lower_bound) {}

namespace {

std::string edge_str(Vertex u, Vertex v) {
  std::ostringstream os;
  os << "(" << u << "," << v << ")";
  return os.str();
}

class ReportBuilder {
 public:
  explicit ReportBuilder(std::size_t cap) : cap_(cap) {}

  // Returns false once the cap is reached so callers can stop scanning.
  bool add(Rule rule, std::vector<Vertex> witness) {
    if (report_.violations.size() >= cap_) {
      report_.truncated = true;
      return false;
    }
    report_.violations.push_back({rule, std::move(witness)});
    return true;
  }
  bool full() const { return report_.truncated; }
  ValidationReport take() { return std::move(report_); }

 private:
  std::size_t cap_;
  ValidationReport report_;
};

// Returns a vertex sequence forming a directed cycle, or empty.
std::vector<Vertex> find_cycle(int n, const std::vector<std::vector<Vertex>>& adj) {
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> color(n, kWhite);
  std::vector<Vertex> parent(n, -1);
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != kWhite) continue;
    stack.push_back({s, 0});
    color[s] = kGrey;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < adj[v].size()) {
        Vertex w = adj[v][idx++];
        if (color[w] == kGrey) {
          std::vector<Vertex> cycle{w};
          for (Vertex x = v; x != w; x = parent[x]) cycle.push_back(x);
          std::reverse(cycle.begin() + 1, cycle.end());
          return cycle;
        }
        if (color[w] == kWhite) {
          color[w] = kGrey;
          parent[w] = v;
          stack.push_back({w, 0});
        }
      } else {
        color[v] = kBlack;
        stack.pop_back();
      }
    }
  }
  return {};
}

}  // namespace

std::vector<int> topological_index(int n, std::span<const std::vector<Vertex>> out_adj) {
  std::vector<int> indeg(n, 0);
  for (const auto& adj : out_adj)
    for (Vertex w : adj) ++indeg[w];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> pi(n, 0);
  int next = 1;
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    pi[v] = next++;
    for (Vertex w : out_adj[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (next != n + 1) throw Error(ErrorCode::Cycle, "edge set is not acyclic");
  return pi;
}

ValidationReport check_structure(int n, const EdgeList& e1, const EdgeList& e2) {
  ReportBuilder rb(kDefaultMaxViolations);
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::vector<Vertex>> adj(n);
  for (const EdgeList* list : {&e1, &e2}) {
    for (auto [u, v] : *list) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw Error(ErrorCode::UnknownVertex, "edge " + edge_str(u, v) + " out of range");
      if (u == v) {
        rb.add(Rule::SelfLoop, {u, v});
        continue;
      }
      auto& slot = seen[static_cast<std::size_t>(u) * n + v];
      if (slot) {
        rb.add(Rule::DuplicateEdge, {u, v});
        continue;
      }
      if (seen[static_cast<std::size_t>(v) * n + u]) {
        rb.add(Rule::Antiparallel, {u, v});
        continue;
      }
      slot = 1;
      adj[u].push_back(v);
    }
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  if (auto cycle = find_cycle(n, adj); !cycle.empty()) rb.add(Rule::Acyclicity, std::move(cycle));
  return rb.take();
}

PtGraph PtGraph::build(const EdgeList& e1, const EdgeList& e2, std::vector<Weight> weights) {
  const int n = static_cast<int>(weights.size());
  for (Vertex v = 0; v < n; ++v)
    if (weights[v] < 0)
      throw Error(ErrorCode::BadWeight, "vertex " + std::to_string(v) + " has negative weight");

  ValidationReport structure = check_structure(n, e1, e2);
  if (!structure.ok()) {
    const Violation& first = structure.violations.front();
    std::ostringstream os;
    os << "witness";
    for (Vertex v : first.witness) os << ' ' << v;
    switch (first.rule) {
      case Rule::SelfLoop: throw Error(ErrorCode::SelfLoop, os.str());
      case Rule::DuplicateEdge: throw Error(ErrorCode::DuplicateEdge, os.str());
      case Rule::Antiparallel: throw Error(ErrorCode::Antiparallel, os.str());
      default: throw Error(ErrorCode::Cycle, os.str());
    }
  }

  PtGraph g;
  g.n_ = n;
  g.weights_ = std::move(weights);
  g.classes_.assign(static_cast<std::size_t>(n) * n, 0);
  g.out_adj_.resize(n);
  g.in_adj_.resize(n);
  auto add = [&](const EdgeList& list, EdgeClass cls) {
    for (auto [u, v] : list) {
      g.classes_[static_cast<std::size_t>(u) * n + v] = static_cast<std::uint8_t>(cls);
      g.out_adj_[u].push_back(v);
      g.in_adj_[v].push_back(u);
    }
  };
  add(e1, EdgeClass::E1);
  add(e2, EdgeClass::E2);
  g.edge_count_ = e1.size() + e2.size();
  for (auto& a : g.out_adj_) std::sort(a.begin(), a.end());
  for (auto& a : g.in_adj_) std::sort(a.begin(), a.end());

  g.pi_ = topological_index(n, g.out_adj_);
  g.order_.resize(n);
  for (Vertex v = 0; v < n; ++v) g.order_[g.pi_[v] - 1] = v;
  return g;
}

EdgeList PtGraph::edges(EdgeClass cls) const {
  EdgeList result;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : out_adj_[u])
      if (edge_class(u, v) == cls) result.emplace_back(u, v);
  return result;
}

PtGraph PtGraph::with_weights(std::vector<Weight> weights) const {
  if (weights.size() != weights_.size())
    throw Error(ErrorCode::BadWeight, "weight vector length does not match vertex count");
  for (Weight w : weights)
    if (w < 0) throw Error(ErrorCode::BadWeight, "negative weight");
  PtGraph g = *this;
  g.weights_ = std::move(weights);
  return g;
}

ValidationReport validate_pseudo_transitive(const PtGraph& g, std::size_t max_violations) {
  ReportBuilder rb(max_violations);
  for (Vertex b = 0; b < g.n() && !rb.full(); ++b) {
    for (Vertex a : g.in(b)) {
      if (g.edge_class(a, b) != EdgeClass::E1) continue;
      for (Vertex c : g.out(b)) {
        if (!g.has_edge(a, c) && !rb.add(Rule::PseudoTrans, {a, b, c})) break;
      }
      if (rb.full()) break;
    }
  }
  return rb.take();
}

ValidationReport validate_strong(const PtGraph& g, std::size_t max_violations) {
  ValidationReport report = validate_pseudo_transitive(g, max_violations);
  ReportBuilder rb(max_violations);
  for (auto& v : report.violations) rb.add(v.rule, std::move(v.witness));
  if (report.truncated) return rb.take();

  for (Vertex b = 0; b < g.n() && !rb.full(); ++b) {
    for (Vertex a : g.in(b)) {
      const EdgeClass ab = g.edge_class(a, b);
      for (Vertex c : g.out(b)) {
        if (g.edge_class(b, c) != ab || g.edge_class(a, c) == ab) continue;
        const Rule rule = ab == EdgeClass::E1 ? Rule::E1Transitive : Rule::E2Transitive;
        if (!rb.add(rule, {a, b, c})) break;
      }
      if (rb.full()) break;
    }
  }
  return rb.take();
}

bool verify_chain(const PtGraph& g, std::span<const Vertex> vertices) {
  for (Vertex v : vertices)
    if (!g.contains(v)) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.pi(vertices[i]) >= g.pi(vertices[j])) return false;
      if (!g.has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

Weight chain_weight(const PtGraph& g, std::span<const Vertex> vertices) {
  Weight total = 0;
  for (Vertex v : vertices) total += g.weight(v);
  return total;
}

ChainClass classify_chain(const PtGraph& g, std::span<const Vertex> chain) {
  if (!verify_chain(g, chain)) throw Error(ErrorCode::NotAChain, "sequence is not a chain");
  if (chain.size() < 3)
    throw Error(ErrorCode::TooShort, "classification needs at least three vertices");
  ChainClass result;
  for (std::size_t j = 1; j + 1 < chain.size(); ++j) {
    bool splits = true;
    for (std::size_t i = 0; i < j && splits; ++i)
      splits = g.edge_class(chain[i], chain[j]) == EdgeClass::E1;
    if (splits) result.splitting_elements.push_back(chain[j]);
  }
  if (!result.splitting_elements.empty()) {
    result.kind = ChainKind::Splitable;
    result.last_split = result.splitting_elements.back();
  }
  return result;
}

}  // namespace ptchain
