/*
 * bollobas_riordan.hpp
 * --------------------
 * The Bollobas-Riordan polynomial of a ribbon graph G,
 *
 *   R_G(x,y,z) = sum over spanning subgraphs F of
 *                x^{r(G)-r(F)} y^{n(F)} z^{k(F)-bc(F)+n(F)},
 *
 * and its signed variant, which shifts the x and y exponents by
 * s(F) = (e_-(F) - e_-(complement)) / 2, so exponents can be half-integers
 * and negative.
 *
 * br_polynomial / signed_br_polynomial enumerate subsets with OpenMP after
 * splitting G into connected components (the polynomial is multiplicative
 * over disjoint union, and isolated vertices contribute a factor of 1). The
 * *_serial variants walk the definition on the whole graph with no tricks;
 * they exist as the reference the fast path is tested against.
 *
 * tutte_deletion_contraction and dichromatic_polynomial are classical
 * oracles on the underlying abstract graph, implemented without any ribbon
 * structure so they can cross-check the specializations
 * R_G(x-1,y-1,1) = T(x,y) and R_G = x^{-k} y^{-v} Z(xy,y) (planar case).
 */
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ribbonlink/multipoly.hpp"
#include "ribbonlink/options.hpp"
#include "ribbonlink/ribbon_graph.hpp"

namespace ribbonlink {

struct AbstractGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // unordered endpoint pairs; loops allowed
};

// Forgets the rotation system; edge i is edges()[i] of g.
AbstractGraph abstract_graph(const RibbonGraph& g);

struct SignedSubgraphStats {
  int e_minus_F = 0;    // negative edges kept
  int e_minus_coF = 0;  // negative edges in the complementary subgraph
  QExp s() const { return QExp::half(e_minus_F - e_minus_coF); }
};

// Stats for the subset selecting edges()[i] where bit i of mask is set.
SignedSubgraphStats signed_subgraph_stats(const RibbonGraph& g, std::uint64_t mask);

// Variables x,y,z. Edge signs are ignored.
MultiPoly br_polynomial(const RibbonGraph& g, const EnumOptions& opts = {});
MultiPoly br_polynomial_serial(const RibbonGraph& g, const EnumOptions& opts = {});

// Variables x,y,z. With all-positive signs this equals br_polynomial.
MultiPoly signed_br_polynomial(const RibbonGraph& g, const EnumOptions& opts = {});
MultiPoly signed_br_polynomial_serial(const RibbonGraph& g, const EnumOptions& opts = {});

// Tutte polynomial in x,y by the textbook recursion: bridges give a factor
// x, loops a factor y, other edges T(G-e) + T(G/e), edgeless graphs 1.
MultiPoly tutte_deletion_contraction(const AbstractGraph& g, const EnumOptions& opts = {});

// Z(q,v) = sum over edge subsets F of q^{k(F)} v^{|F|}.
MultiPoly dichromatic_polynomial(const AbstractGraph& g, const EnumOptions& opts = {});

}  // namespace ribbonlink
