/*
 * medial.hpp
 * ----------
 * The alternating link diagram traced on a ribbon graph's surface: one
 * crossing per edge, strands running along the ribbon sides and turning
 * through the corners of the vertex discs. Positive edges put the strand
 * that sweeps the vertex-side regions on top; negative edges flip it.
 *
 * The bracket of this diagram factors through the ribbon graph's subgraph
 * expansion: with r, n, k taken from G,
 *
 *   <medial(G)> = A^r B^n d^{k-1} R(Bd/A, Ad/B, 1/d),
 *
 * where R is the signed subgraph-expansion polynomial. check_identity
 * computes both sides exactly; the A-smoothing of a crossing corresponds
 * to keeping its edge, matching state-by-state via delta(S) = bc(F).
 */
#pragma once

#include <vector>

#include "ribbonlink/link_diagram.hpp"
#include "ribbonlink/multipoly.hpp"
#include "ribbonlink/options.hpp"
#include "ribbonlink/ribbon_graph.hpp"

namespace ribbonlink {

// How diagram pieces sit on the graph. Crossing i is at edge edges()[i].
// Each port holds the vertex-disc corner between a dart and its rotation
// successor: a strand leaves the crossing of edge(d) at leave_port[d],
// crosses the corner (d, sigma(d)), and enters the crossing of
// edge(sigma(d)) at enter_port[sigma(d)].
struct MedialCorrespondence {
  std::vector<Dart> edge_of_crossing;
  std::vector<int> leave_port;  // per dart
  std::vector<int> enter_port;  // per dart
};

struct MedialResult {
  SurfaceLinkDiagram diagram;
  MedialCorrespondence corr;
};

// Ports of the crossing at edge e with darts {a, alpha(a)}, a the smaller,
// in counterclockwise order:
//   4i+0 = leave toward corner (alpha(a), sigma(alpha(a)))
//   4i+1 = enter from corner (sigma^{-1}(alpha(a)), alpha(a))
//   4i+2 = leave toward corner (a, sigma(a))
//   4i+3 = enter from corner (sigma^{-1}(a), a)
// The over-pair is (0,2) for a positive edge, (1,3) for a negative one.
// Isolated vertices become free loops.
MedialResult medial_diagram(const RibbonGraph& g);

// A^{r(G)} B^{n(G)} d^{k(G)-1} R(Bd/A, Ad/B, 1/d) with R the signed
// subgraph expansion; always a genuine polynomial in A, B, d.
MultiPoly main_theorem_rhs(const RibbonGraph& g, const EnumOptions& opts = {});

struct IdentityReport {
  MultiPoly lhs;  // bracket of the medial diagram
  MultiPoly rhs;  // subgraph-expansion side
  bool equal = false;
};

IdentityReport check_identity(const RibbonGraph& g, const EnumOptions& opts = {});

}  // namespace ribbonlink
