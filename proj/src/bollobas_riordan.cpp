#include "ribbonlink/bollobas_riordan.hpp"

#include <omp.h>

#include <array>
#include <bit>
#include <map>
#include <numeric>

namespace ribbonlink {

AbstractGraph abstract_graph(const RibbonGraph& g) {
  AbstractGraph out;
  out.vertex_count = g.vertex_count();
  out.edges.reserve(g.edge_count());
  for (Dart rep : g.edges())
    out.edges.emplace_back(g.vertex_of(rep), g.vertex_of(g.alpha(rep)));
  return out;
}

SignedSubgraphStats signed_subgraph_stats(const RibbonGraph& g, std::uint64_t mask) {
  SignedSubgraphStats st;
  const auto& reps = g.edges();
  for (int i = 0; i < static_cast<int>(reps.size()); ++i) {
    if (g.sign(reps[i]) >= 0) continue;
    if (mask >> i & 1)
      ++st.e_minus_F;
    else
      ++st.e_minus_coF;
  }
  return st;
}

namespace {

void check_edge_cap(int edges, const EnumOptions& opts) {
  if (edges > opts.max_edges) throw SizeLimitError(edges, opts.max_edges);
}

Monomial xyz_monomial(std::int64_t xq, std::int64_t yq, std::int64_t zq) {
  Monomial m;
  if (xq != 0) m.emplace("x", QExp::quarter(xq));
  if (yq != 0) m.emplace("y", QExp::quarter(yq));
  if (zq != 0) m.emplace("z", QExp::quarter(zq));
  return m;
}

MultiPoly subset_sum_serial(const RibbonGraph& g, bool use_signs, const EnumOptions& opts) {
  check_edge_cap(g.edge_count(), opts);
  const GraphMetrics whole = g.metrics();
  MultiPoly out(std::vector<std::string>{"x", "y", "z"});
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const GraphMetrics mf = g.induced_subgraph_mask(mask).metrics();
    std::int64_t xq = 4 * std::int64_t{whole.r - mf.r};
    std::int64_t yq = 4 * std::int64_t{mf.n};
    const std::int64_t zq = 4 * std::int64_t{mf.k - mf.bc + mf.n};
    if (use_signs) {
      const SignedSubgraphStats st = signed_subgraph_stats(g, mask);
      const std::int64_t shift = 2 * std::int64_t{st.e_minus_F - st.e_minus_coF};
      xq += shift;
      yq -= shift;
    }
    out.add_term(xyz_monomial(xq, yq, zq), BigInt(1));
  }
  return out;
}

// Exponents in quarter units, (x, y, z).
using ExpKey = std::array<std::int64_t, 3>;
using PartialSum = std::map<ExpKey, std::uint64_t>;

// Subset sum over one connected dartful component. Per mask the work is
// O(darts): k(F) by union-find over endpoints, bc(F) by walking the orbits
// of d -> nextKept(alpha(d)) where nextKept skips unkept darts in each
// vertex rotation.
PartialSum component_subset_sum(const RibbonGraph& g, bool use_signs, int threads) {
  const int ec = g.edge_count();
  const int nd = g.dart_count();
  const int vc = g.vertex_count();
  const auto& reps = g.edges();

  std::vector<int> edge_of_dart(nd);
  std::vector<int> end_u(ec), end_v(ec);
  std::uint64_t neg_mask = 0;
  for (int i = 0; i < ec; ++i) {
    const Dart d = reps[i];
    edge_of_dart[d] = i;
    edge_of_dart[g.alpha(d)] = i;
    end_u[i] = g.vertex_of(d);
    end_v[i] = g.vertex_of(g.alpha(d));
    if (g.sign(d) < 0) neg_mask |= std::uint64_t{1} << i;
  }
  const int neg_total = std::popcount(neg_mask);
  const auto& rotations = g.vertex_rotations();
  const std::int64_t total = std::int64_t{1} << ec;

  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  std::vector<PartialSum> partials(nthreads);

#pragma omp parallel num_threads(nthreads)
  {
    PartialSum local;
    std::vector<int> parent(vc);
    std::vector<Dart> next_kept(nd);
    std::vector<std::int64_t> seen(nd, -1);
    std::vector<Dart> kept;
    kept.reserve(nd);

#pragma omp for schedule(static)
    for (std::int64_t mask = 0; mask < total; ++mask) {
      std::iota(parent.begin(), parent.end(), 0);
      const auto find = [&](int x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x = parent[x];
        }
        return x;
      };
      int kf = vc;
      for (int i = 0; i < ec; ++i) {
        if (!(mask >> i & 1)) continue;
        const int a = find(end_u[i]);
        const int b = find(end_v[i]);
        if (a != b) {
          parent[a] = b;
          --kf;
        }
      }

      kept.clear();
      int bc = 0;
      for (const auto& cycle : rotations) {
        Dart first = -1, prev = -1;
        for (const Dart d : cycle) {
          if (!(mask >> edge_of_dart[d] & 1)) continue;
          kept.push_back(d);
          if (first < 0)
            first = d;
          else
            next_kept[prev] = d;
          prev = d;
        }
        if (first >= 0)
          next_kept[prev] = first;
        else
          ++bc;  // a vertex stripped of all its edges is one boundary circle
      }
      for (const Dart d : kept) {
        if (seen[d] == mask) continue;
        ++bc;
        for (Dart x = d; seen[x] != mask; x = next_kept[g.alpha(x)]) seen[x] = mask;
      }

      const int ef = std::popcount(static_cast<std::uint64_t>(mask));
      const std::int64_t nf = ef - vc + kf;
      std::int64_t xq = 4 * std::int64_t{kf - 1};
      std::int64_t yq = 4 * nf;
      const std::int64_t zq = 4 * (kf - bc + nf);
      if (use_signs) {
        // In quarters: 2 * (e_minus(F) - e_minus(complement)).
        const int neg_f = std::popcount(static_cast<std::uint64_t>(mask) & neg_mask);
        const std::int64_t shift = 2 * (2 * std::int64_t{neg_f} - neg_total);
        xq += shift;
        yq -= shift;
      }
      ++local[{xq, yq, zq}];
    }

    partials[omp_get_thread_num()] = std::move(local);
  }

  PartialSum merged;
  for (const auto& partial : partials)
    for (const auto& [key, count] : partial) merged[key] += count;
  return merged;
}

MultiPoly subset_sum_parallel(const RibbonGraph& g, bool use_signs, const EnumOptions& opts) {
  check_edge_cap(g.edge_count(), opts);
  MultiPoly out = MultiPoly::constant(1).with_vars({"x", "y", "z"});
  for (const RibbonGraph& comp : g.dartful_components()) {
    MultiPoly factor(std::vector<std::string>{"x", "y", "z"});
    for (const auto& [key, count] : component_subset_sum(comp, use_signs, opts.threads))
      factor.add_term(xyz_monomial(key[0], key[1], key[2]), BigInt(count));
    out = out * factor;
  }
  return out;
}

}  // namespace

MultiPoly br_polynomial(const RibbonGraph& g, const EnumOptions& opts) {
  return subset_sum_parallel(g, false, opts);
}

MultiPoly br_polynomial_serial(const RibbonGraph& g, const EnumOptions& opts) {
  return subset_sum_serial(g, false, opts);
}

MultiPoly signed_br_polynomial(const RibbonGraph& g, const EnumOptions& opts) {
  return subset_sum_parallel(g, true, opts);
}

MultiPoly signed_br_polynomial_serial(const RibbonGraph& g, const EnumOptions& opts) {
  return subset_sum_serial(g, true, opts);
}

namespace {

// Mutable copy used by the Tutte recursion.
struct EdgeList {
  int vertex_count;
  std::vector<std::pair<int, int>> edges;
};

bool is_bridge(const EdgeList& g, std::size_t skip) {
  std::vector<int> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i == skip) continue;
    parent[find(g.edges[i].first)] = find(g.edges[i].second);
  }
  return find(g.edges[skip].first) != find(g.edges[skip].second);
}

EdgeList contract_last(EdgeList g) {
  auto [u, v] = g.edges.back();
  g.edges.pop_back();
  if (u != v) {
    // Relabel v as u, then close the gap left by the largest label.
    const int last = g.vertex_count - 1;
    for (auto& [a, b] : g.edges) {
      if (a == v) a = u;
      if (b == v) b = u;
      if (a == last) a = v;
      if (b == last) b = v;
    }
    --g.vertex_count;
  }
  return g;
}

MultiPoly tutte_recurse(EdgeList g) {
  if (g.edges.empty()) return MultiPoly::constant(1).with_vars({"x", "y"});
  const auto [u, v] = g.edges.back();
  if (u == v) {
    g.edges.pop_back();
    return MultiPoly::variable("y") * tutte_recurse(std::move(g));
  }
  if (is_bridge(g, g.edges.size() - 1))
    return MultiPoly::variable("x") * tutte_recurse(contract_last(std::move(g)));
  EdgeList deleted = g;
  deleted.edges.pop_back();
  return tutte_recurse(std::move(deleted)) + tutte_recurse(contract_last(std::move(g)));
}

}  // namespace

MultiPoly tutte_deletion_contraction(const AbstractGraph& g, const EnumOptions& opts) {
  check_edge_cap(static_cast<int>(g.edges.size()), opts);
  EdgeList list{g.vertex_count, g.edges};
  return tutte_recurse(std::move(list)).with_vars({"x", "y"});
}

MultiPoly dichromatic_polynomial(const AbstractGraph& g, const EnumOptions& opts) {
  const int ec = static_cast<int>(g.edges.size());
  check_edge_cap(ec, opts);
  MultiPoly out(std::vector<std::string>{"q", "v"});
  std::vector<int> parent(g.vertex_count);
  const auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  const std::uint64_t total = std::uint64_t{1} << ec;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int k = g.vertex_count;
    for (int i = 0; i < ec; ++i) {
      if (!(mask >> i & 1)) continue;
      const int a = find(g.edges[i].first);
      const int b = find(g.edges[i].second);
      if (a != b) {
        parent[a] = b;
        --k;
      }
    }
    Monomial m;
    if (k != 0) m.emplace("q", QExp::integer(k));
    const int ef = std::popcount(mask);
    if (ef != 0) m.emplace("v", QExp::integer(ef));
    out.add_term(m, BigInt(1));
  }
  return out;
}

}  // namespace ribbonlink
