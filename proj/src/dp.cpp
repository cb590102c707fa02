#include "ptchain/dp.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace ptchain {

namespace {

constexpr Weight kUndefined = -1;  // weights are non-negative, so every real entry is >= 0

// Best candidate of one term family; smaller t wins ties because candidates
// are offered in increasing id order and only strict improvements replace.
struct Best {
  Weight value = kUndefined;
  Vertex via = -1;
  void offer(Weight v, Vertex t) {
    if (v > value) {
      value = v;
      via = t;
    }
  }
};

}  // namespace

DpTables::DpTables(int n)
    : n_(n),
      values_(static_cast<std::size_t>(4) * n * n, kUndefined),
      back_(static_cast<std::size_t>(4) * n * n) {}

std::optional<Weight> DpTables::value(Table t, Vertex x, Vertex y) const {
  Weight v = raw(t, x, y);
  if (v == kUndefined) return std::nullopt;
  return v;
}

std::vector<Vertex> DpTables::reconstruct(Table table, Vertex x, Vertex y) const {
  if (x < 0 || y < 0 || x >= n_ || y >= n_ || raw(table, x, y) == kUndefined)
    throw Error(ErrorCode::NotAChain, "no table entry for this pair");

  struct Frame {
    Table table;
    Vertex x, y;
    bool include_first;
  };
  std::vector<Vertex> out;
  std::vector<Frame> stack{{table, x, y, true}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    BackPointer bp = back(f.table, f.x, f.y);
    switch (bp.term) {
      case Term::Base:
        if (f.include_first) out.push_back(f.x);
        out.push_back(f.y);
        break;
      case Term::Fallback:
        stack.push_back({f.table == Table::W ? Table::D : Table::D1, f.x, f.y, f.include_first});
        break;
      case Term::Split: {
        // Prefix table follows the shape of the entry: W/W1 glue W1 prefixes,
        // D/D1 glue D1 prefixes. Suffix keeps the entry's own table.
        const Table prefix = (f.table == Table::W || f.table == Table::W1) ? Table::W1 : Table::D1;
        stack.push_back({f.table, bp.via, f.y, false});
        stack.push_back({prefix, f.x, bp.via, f.include_first});
        break;
      }
      case Term::Prepend:
        if (f.include_first) out.push_back(f.x);
        stack.push_back({Table::D1, bp.via, f.y, true});
        break;
      case Term::None:
        throw Error(ErrorCode::NotAChain, "dangling back-pointer");
    }
  }
  return out;
}

DpTables fill_tables(const PtGraph& g) {
  const int n = g.n();
  DpTables tables(n);

  std::vector<Edge> schedule;
  schedule.reserve(g.edge_count());
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y : g.out(x)) schedule.emplace_back(x, y);
  std::sort(schedule.begin(), schedule.end(), [&](const Edge& a, const Edge& b) {
    auto key = [&](const Edge& e) {
      return std::make_tuple(g.pi(e.second) - g.pi(e.first), g.pi(e.first), g.pi(e.second));
    };
    return key(a) < key(b);
  });

  for (auto [x, y] : schedule) {
    const Weight cx = g.weight(x);
    const Weight cy = g.weight(y);
    const Weight base = cx + cy;
    const bool xy_in_e1 = g.edge_class(x, y) == EdgeClass::E1;

    Best d1_split, d1_prepend, d_split, d_prepend, w1_split, w_split;
    // Every referenced entry (x,t) or (t,y) has a strictly smaller span and
    // is already final.
    for (Vertex t : g.out(x)) {
      ++tables.counters_.inspections;
      const EdgeClass ty = g.edge_class(t, y);
      if (ty == EdgeClass::Absent) continue;
      const EdgeClass xt = g.edge_class(x, t);
      const Weight ct = g.weight(t);
      if (xt == EdgeClass::E2) {
        const Weight d1_xt = tables.raw(Table::D1, x, t);
        const Weight d1_ty = tables.raw(Table::D1, t, y);
        if (ty == EdgeClass::E1) {
          d1_split.offer(d1_xt + d1_ty - ct, t);
          d1_prepend.offer(d1_ty + cx, t);
        }
        d_split.offer(d1_xt + tables.raw(Table::D, t, y) - ct, t);
        // Kept as printed even though the split term with the two-chain
        // prefix x,t always matches or beats it.
        d_prepend.offer(d1_ty + cx, t);
      } else {
        const Weight w1_xt = tables.raw(Table::W1, x, t);
        if (ty == EdgeClass::E1 && xy_in_e1) w1_split.offer(w1_xt + tables.raw(Table::W1, t, y) - ct, t);
        w_split.offer(w1_xt + tables.raw(Table::W, t, y) - ct, t);
      }
    }

    auto settle = [&](Table table, const Best& split, const Best& prepend) {
      if (base >= split.value && base >= prepend.value) {
        tables.set(table, x, y, base, {Term::Base, -1});
      } else if (split.value >= prepend.value) {
        tables.set(table, x, y, split.value, {Term::Split, split.via});
      } else {
        tables.set(table, x, y, prepend.value, {Term::Prepend, prepend.via});
      }
    };
    settle(Table::D1, d1_split, d1_prepend);
    settle(Table::D, d_split, d_prepend);

    auto settle_w = [&](Table table, Table degenerate, const Best& split) {
      const Weight fallback = tables.raw(degenerate, x, y);
      if (fallback >= split.value) {
        tables.set(table, x, y, fallback, {Term::Fallback, -1});
      } else {
        tables.set(table, x, y, split.value, {Term::Split, split.via});
      }
    };
    if (xy_in_e1) settle_w(Table::W1, Table::D1, w1_split);
    settle_w(Table::W, Table::D, w_split);
  }
  return tables;
}

DpTables dp_tables(const PtGraph& g) {
  if (ValidationReport report = validate_strong(g, 1); !report.ok()) {
    const Violation& v = report.violations.front();
    std::string what = std::string(to_string(v.rule)) + " witness";
    for (Vertex w : v.witness) what += " " + std::to_string(w);
    throw Error(ErrorCode::NotStrong, what);
  }
  return fill_tables(g);
}

DpResult max_weight_chain_dp(const PtGraph& g) {
  if (g.n() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  const DpTables tables = dp_tables(g);

  Weight best = std::numeric_limits<Weight>::min();
  for (Vertex v = 0; v < g.n(); ++v) best = std::max(best, g.weight(v));
  for (Vertex x = 0; x < g.n(); ++x)
    for (Vertex y : g.out(x)) best = std::max(best, *tables.value(Table::W, x, y));

  // Every witness begins with its first vertex, so only optima starting at
  // the smallest-pi vertex can be lexicographically smallest.
  int first_pi = g.n() + 1;
  for (Vertex x = 0; x < g.n(); ++x) {
    bool reaches = g.weight(x) == best;
    for (Vertex y : g.out(x)) reaches = reaches || *tables.value(Table::W, x, y) == best;
    if (reaches) first_pi = std::min(first_pi, g.pi(x));
  }
  const Vertex start = g.order()[first_pi - 1];

  auto pi_less = [&](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [&](Vertex u, Vertex v) { return g.pi(u) < g.pi(v); });
  };
  std::vector<Vertex> witness;
  bool have = false;
  if (g.weight(start) == best) {
    witness = {start};
    have = true;
  }
  for (Vertex y : g.out(start)) {
    if (*tables.value(Table::W, start, y) != best) continue;
    std::vector<Vertex> candidate = tables.reconstruct(Table::W, start, y);
    if (!have || pi_less(candidate, witness)) {
      witness = std::move(candidate);
      have = true;
    }
  }

  if (!verify_chain(g, witness) || chain_weight(g, witness) != best)
    throw Error(ErrorCode::Internal, "reconstructed witness failed verification");

  DpResult result;
  result.value = best;
  result.chain = std::move(witness);
  result.counters = tables.counters();
  return result;
}

}  // namespace ptchain
