#include "ribbonlink/ribbon_graph.hpp"

#include <algorithm>
#include <numeric>

namespace ribbonlink {

namespace {

// Plain union-find over 0..n-1.
struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int count_roots() {
    int roots = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
      if (find(i) == i) ++roots;
    return roots;
  }
  std::vector<int> parent;
};

}  // namespace

void validate_map(std::span<const Dart> sigma, std::span<const Dart> alpha) {
  const int n = static_cast<int>(sigma.size());
  if (static_cast<int>(alpha.size()) != n)
    throw MapError(MapErrorCode::DanglingDart,
                   "sigma and alpha must act on the same dart set");
  for (int d = 0; d < n; ++d) {
    if (sigma[d] < 0 || sigma[d] >= n)
      throw MapError(MapErrorCode::DanglingDart,
                     "sigma sends dart " + std::to_string(d) + " to " +
                         std::to_string(sigma[d]) + ", outside 0.." + std::to_string(n - 1));
    if (alpha[d] < 0 || alpha[d] >= n)
      throw MapError(MapErrorCode::DanglingDart,
                     "alpha sends dart " + std::to_string(d) + " to " +
                         std::to_string(alpha[d]) + ", outside 0.." + std::to_string(n - 1));
  }
  for (int d = 0; d < n; ++d) {
    if (alpha[d] == d)
      throw MapError(MapErrorCode::AlphaFixedPoint,
                     "alpha fixes dart " + std::to_string(d) +
                         "; every dart needs a distinct partner");
    if (alpha[alpha[d]] != d)
      throw MapError(MapErrorCode::AlphaNotInvolution,
                     "alpha is not an involution at dart " + std::to_string(d));
  }
  std::vector<char> seen(n, 0);
  for (int d = 0; d < n; ++d) {
    if (seen[sigma[d]])
      throw MapError(MapErrorCode::SigmaNotBijection,
                     "sigma sends two darts to " + std::to_string(sigma[d]));
    seen[sigma[d]] = 1;
  }
}

RibbonGraph::RibbonGraph(std::vector<Dart> sigma, std::vector<Dart> alpha, int isolated_vertices)
    : sigma_(std::move(sigma)), alpha_(std::move(alpha)), isolated_(isolated_vertices) {
  validate_map(sigma_, alpha_);
  build();
}

RibbonGraph::RibbonGraph(std::vector<Dart> sigma, std::vector<Dart> alpha,
                         const std::map<Dart, int>& edge_signs, int isolated_vertices)
    : RibbonGraph(std::move(sigma), std::move(alpha), isolated_vertices) {
  for (const auto& [rep, s] : edge_signs) {
    if (rep < 0 || rep >= dart_count() || edge_of(rep) != rep)
      throw MapError(MapErrorCode::UnknownEdge,
                     "sign given for " + std::to_string(rep) +
                         ", which is not an edge representative");
    if (s != 1 && s != -1)
      throw MapError(MapErrorCode::UnknownEdge,
                     "edge " + std::to_string(rep) + " has sign " + std::to_string(s) +
                         "; only +1 and -1 are allowed");
    sign_[rep] = static_cast<int8_t>(s);
    sign_[alpha_[rep]] = static_cast<int8_t>(s);
  }
}

void RibbonGraph::build() {
  const int n = dart_count();
  sigma_inv_.assign(n, 0);
  for (int d = 0; d < n; ++d) sigma_inv_[sigma_[d]] = d;

  sign_.assign(n, 1);
  edges_.clear();
  for (int d = 0; d < n; ++d)
    if (d < alpha_[d]) edges_.push_back(d);

  vertex_of_.assign(n, -1);
  rotations_.clear();
  vertex_count_ = 0;
  for (int d = 0; d < n; ++d) {
    if (vertex_of_[d] >= 0) continue;
    std::vector<Dart> cycle;
    for (Dart x = d; vertex_of_[x] < 0; x = sigma_[x]) {
      vertex_of_[x] = vertex_count_;
      cycle.push_back(x);
    }
    rotations_.push_back(std::move(cycle));
    ++vertex_count_;
  }
}

int RibbonGraph::edge_index(Dart edge_rep) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), edge_rep);
  if (it == edges_.end() || *it != edge_rep)
    throw MapError(MapErrorCode::UnknownEdge,
                   std::to_string(edge_rep) + " is not an edge representative");
  return static_cast<int>(it - edges_.begin());
}

bool RibbonGraph::has_negative_edge() const {
  return std::find(sign_.begin(), sign_.end(), int8_t{-1}) != sign_.end();
}

GraphMetrics RibbonGraph::metrics() const {
  const int n = dart_count();
  GraphMetrics m;
  m.v = vertex_count();
  m.e = edge_count();

  DisjointSets comps(n);
  for (int d = 0; d < n; ++d) {
    comps.unite(d, sigma_[d]);
    comps.unite(d, alpha_[d]);
  }
  m.k = (n > 0 ? comps.count_roots() : 0) + isolated_;

  std::vector<char> visited(n, 0);
  int bc = 0;
  for (int d = 0; d < n; ++d) {
    if (visited[d]) continue;
    ++bc;
    for (Dart x = d; !visited[x]; x = sigma_[alpha_[x]]) visited[x] = 1;
  }
  m.bc = bc + isolated_;

  m.r = m.v - m.k;
  m.n = m.e - m.r;
  m.genus = (m.k - m.bc + m.n) / 2;
  return m;
}

RibbonGraph RibbonGraph::induced_subgraph(std::span<const Dart> kept_edges) const {
  const int n = dart_count();
  std::vector<char> keep(n, 0);
  for (Dart rep : kept_edges) {
    if (rep < 0 || rep >= n || edge_of(rep) != rep)
      throw MapError(MapErrorCode::UnknownEdge,
                     std::to_string(rep) + " is not an edge representative");
    keep[rep] = 1;
    keep[alpha_[rep]] = 1;
  }

  std::vector<Dart> renumber(n, -1);
  int kept_darts = 0;
  for (int d = 0; d < n; ++d)
    if (keep[d]) renumber[d] = kept_darts++;

  std::vector<Dart> sub_sigma(kept_darts), sub_alpha(kept_darts);
  std::map<Dart, int> sub_signs;
  for (int d = 0; d < n; ++d) {
    if (!keep[d]) continue;
    Dart next = sigma_[d];
    while (!keep[next]) next = sigma_[next];
    sub_sigma[renumber[d]] = renumber[next];
    sub_alpha[renumber[d]] = renumber[alpha_[d]];
    if (d < alpha_[d] && sign_[d] < 0)
      sub_signs[std::min(renumber[d], renumber[alpha_[d]])] = -1;
  }

  int emptied = 0;
  for (const auto& cycle : rotations_) {
    bool any = false;
    for (Dart d : cycle)
      if (keep[d]) { any = true; break; }
    if (!any) ++emptied;
  }

  return RibbonGraph(std::move(sub_sigma), std::move(sub_alpha), sub_signs,
                     isolated_ + emptied);
}

RibbonGraph RibbonGraph::induced_subgraph_mask(std::uint64_t mask) const {
  std::vector<Dart> kept;
  for (int i = 0; i < edge_count(); ++i)
    if (mask >> i & 1) kept.push_back(edges_[i]);
  return induced_subgraph(kept);
}

std::vector<std::vector<Dart>> RibbonGraph::boundary_walks() const {
  const int n = dart_count();
  std::vector<std::vector<Dart>> walks;
  std::vector<char> visited(n, 0);
  for (int d = 0; d < n; ++d) {
    if (visited[d]) continue;
    std::vector<Dart> walk;
    for (Dart x = d; !visited[x]; x = sigma_[alpha_[x]]) {
      visited[x] = 1;
      walk.push_back(x);
    }
    walks.push_back(std::move(walk));
  }
  for (int i = 0; i < isolated_; ++i) walks.emplace_back();
  return walks;
}

std::vector<RibbonGraph> RibbonGraph::dartful_components() const {
  const int n = dart_count();
  DisjointSets comps(n);
  for (int d = 0; d < n; ++d) {
    comps.unite(d, sigma_[d]);
    comps.unite(d, alpha_[d]);
  }

  std::vector<int> root_index(n, -1);
  std::vector<std::vector<Dart>> members;
  for (int d = 0; d < n; ++d) {
    int r = comps.find(d);
    if (root_index[r] < 0) {
      root_index[r] = static_cast<int>(members.size());
      members.emplace_back();
    }
    members[root_index[r]].push_back(d);
  }

  std::vector<RibbonGraph> out;
  out.reserve(members.size());
  for (const auto& darts : members) {
    std::vector<Dart> renumber(n, -1);
    for (int i = 0; i < static_cast<int>(darts.size()); ++i) renumber[darts[i]] = i;
    std::vector<Dart> sub_sigma(darts.size()), sub_alpha(darts.size());
    std::map<Dart, int> sub_signs;
    for (Dart d : darts) {
      sub_sigma[renumber[d]] = renumber[sigma_[d]];
      sub_alpha[renumber[d]] = renumber[alpha_[d]];
      if (d < alpha_[d] && sign_[d] < 0)
        sub_signs[std::min(renumber[d], renumber[alpha_[d]])] = -1;
    }
    out.emplace_back(std::move(sub_sigma), std::move(sub_alpha), sub_signs, 0);
  }
  return out;
}

}  // namespace ribbonlink
