/*
 * ribbon_graph.hpp
 * ----------------
 * Oriented ribbon graphs as combinatorial maps: a dart set {0..2e-1} with a
 * vertex rotation sigma (next dart counterclockwise around its vertex) and a
 * fixed-point-free edge involution alpha. Optional +-1 edge signs. Vertices
 * that carry no darts are tracked by count; each is a disc with one boundary
 * circle.
 *
 * Boundary components are the orbits of d -> sigma(alpha(d)).
 */
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ribbonlink {

using Dart = int;

enum class MapErrorCode {
  AlphaNotInvolution,
  AlphaFixedPoint,
  SigmaNotBijection,
  DanglingDart,
  UnknownEdge,
};

class MapError : public std::runtime_error {
 public:
  MapError(MapErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  MapErrorCode code() const { return code_; }

 private:
  MapErrorCode code_;
};

struct GraphMetrics {
  int v = 0;      // vertices
  int e = 0;      // edges
  int k = 0;      // connected components
  int r = 0;      // rank v - k
  int n = 0;      // nullity e - r
  int bc = 0;     // boundary components of the ribbon surface
  int genus = 0;  // (k - bc + n) / 2
  bool operator==(const GraphMetrics&) const = default;
};

// Throws MapError unless alpha is a fixed-point-free involution and sigma a
// bijection on the same dart set (out-of-range images count as dangling).
void validate_map(std::span<const Dart> sigma, std::span<const Dart> alpha);

class RibbonGraph {
 public:
  RibbonGraph() = default;  // the empty graph
  RibbonGraph(std::vector<Dart> sigma, std::vector<Dart> alpha, int isolated_vertices = 0);
  // edge_signs keys are edge representatives (the smaller dart of the pair);
  // unlisted edges default to +1.
  RibbonGraph(std::vector<Dart> sigma, std::vector<Dart> alpha,
              const std::map<Dart, int>& edge_signs, int isolated_vertices = 0);

  int dart_count() const { return static_cast<int>(sigma_.size()); }
  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  Dart alpha(Dart d) const { return alpha_[d]; }
  Dart edge_of(Dart d) const { return d < alpha_[d] ? d : alpha_[d]; }
  int isolated_vertices() const { return isolated_; }

  // Edge representatives in increasing order.
  const std::vector<Dart>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int edge_index(Dart edge_rep) const;  // position in edges(); UnknownEdge if absent
  int sign(Dart d) const { return sign_[d]; }  // sign of the dart's edge
  bool has_negative_edge() const;

  int vertex_count() const { return vertex_count_ + isolated_; }
  int vertex_of(Dart d) const { return vertex_of_[d]; }  // sigma-orbit index
  // Darts of each dartful vertex in rotation order, starting at the smallest.
  const std::vector<std::vector<Dart>>& vertex_rotations() const { return rotations_; }

  GraphMetrics metrics() const;

  // Spanning subgraph on the given edges (all vertices retained; darts
  // renumbered preserving order). Throws UnknownEdge for a non-edge.
  RibbonGraph induced_subgraph(std::span<const Dart> kept_edges) const;
  // Same, with bit i of mask selecting edges()[i].
  RibbonGraph induced_subgraph_mask(std::uint64_t mask) const;

  // Orbits of d -> sigma(alpha(d)) as cyclic dart sequences, one per boundary
  // component (isolated vertices yield empty walks), so size() == bc.
  std::vector<std::vector<Dart>> boundary_walks() const;

  // Connected components as separate ribbon graphs (dartful ones only;
  // isolated vertices are reported by the count).
  std::vector<RibbonGraph> dartful_components() const;

 private:
  void build();

  std::vector<Dart> sigma_, sigma_inv_, alpha_;
  std::vector<int8_t> sign_;  // per dart, equal on both darts of an edge
  std::vector<Dart> edges_;
  std::vector<int> vertex_of_;
  std::vector<std::vector<Dart>> rotations_;
  int vertex_count_ = 0;
  int isolated_ = 0;
};

}  // namespace ribbonlink
