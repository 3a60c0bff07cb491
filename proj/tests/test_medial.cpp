#include <doctest.h>

#include <random>
#include <set>

#include "generators.hpp"
#include "ribbonlink/medial.hpp"

using ribbonlink::BracketTerm;
using ribbonlink::check_identity;
using ribbonlink::EnumOptions;
using ribbonlink::GraphMetrics;
using ribbonlink::IdentityReport;
using ribbonlink::kauffman_bracket;
using ribbonlink::main_theorem_rhs;
using ribbonlink::medial_diagram;
using ribbonlink::MedialResult;
using ribbonlink::resolve_state;
using ribbonlink::RibbonGraph;
using ribbonlink::Smoothing;
using ribbonlink::State;
using ribbonlink::SurfaceLinkDiagram;

namespace {

// The state whose resolved curves are the boundary of the spanning
// subgraph picked by `mask`: keeping an edge is the A-smoothing on a
// positive edge and the B-smoothing on a negative one.
State state_of_mask(const RibbonGraph& g, std::uint64_t mask) {
  State s(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    const bool keep = mask >> i & 1;
    const bool positive = g.sign(g.edges()[i]) > 0;
    s[i] = (keep == positive) ? Smoothing::A : Smoothing::B;
  }
  return s;
}

}  // namespace

TEST_CASE("medial construction") {
  SUBCASE("two interleaved loops give the alternating two-crossing link") {
    const MedialResult m = medial_diagram(testgen::two_loop_torus());
    CHECK(m.diagram.crossing_count() == 2);
    CHECK(m.diagram.free_loops() == 0);
    CHECK(m.diagram.over_pair(0) == 0);
    CHECK(m.diagram.over_pair(1) == 0);
    CHECK(kauffman_bracket(m.diagram).to_string() == "A^2 + 2*A*B*d + B^2");

    const std::vector<BracketTerm> expected = {
        {2, 0, 1}, {1, 1, 2}, {1, 1, 2}, {0, 2, 1}};
    int at = 0;
    for (const Smoothing s0 : {Smoothing::A, Smoothing::B})
      for (const Smoothing s1 : {Smoothing::A, Smoothing::B})
        CHECK(resolve_state(m.diagram, {s0, s1}) == expected[at++]);
  }

  SUBCASE("planar loop gives the one-crossing kink") {
    const MedialResult m = medial_diagram(testgen::planar_loop());
    CHECK(m.diagram.crossing_count() == 1);
    CHECK(kauffman_bracket(m.diagram).to_string() == "A*d + B");
    CHECK(ribbonlink::writhe(m.diagram) == 1);
  }

  SUBCASE("negative edges flip the over-pair") {
    const MedialResult m = medial_diagram(testgen::negative_loop());
    CHECK(m.diagram.over_pair(0) == 1);
  }

  SUBCASE("isolated vertices become free loops") {
    const RibbonGraph g({}, {}, {}, 2);
    const MedialResult m = medial_diagram(g);
    CHECK(m.diagram.crossing_count() == 0);
    CHECK(m.diagram.free_loops() == 2);
    CHECK(kauffman_bracket(m.diagram).to_string() == "d");
  }

  SUBCASE("ports tile the diagram and arcs follow the rotations") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 8; ++trial) {
      const RibbonGraph g = testgen::random_map(rng, 5);
      const MedialResult m = medial_diagram(g);
      REQUIRE(m.corr.edge_of_crossing.size() == g.edges().size());
      for (std::size_t i = 0; i < g.edges().size(); ++i)
        CHECK(m.corr.edge_of_crossing[i] == g.edges()[i]);

      std::set<int> ports;
      for (ribbonlink::Dart d = 0; d < g.dart_count(); ++d) {
        CHECK(ports.insert(m.corr.leave_port[d]).second);
        CHECK(ports.insert(m.corr.enter_port[d]).second);
      }
      CHECK(static_cast<int>(ports.size()) == m.diagram.port_count());

      for (ribbonlink::Dart d = 0; d < g.dart_count(); ++d)
        CHECK(m.diagram.arc_partner(m.corr.leave_port[d]) ==
              m.corr.enter_port[g.sigma(d)]);
    }
  }
}

TEST_CASE("states mirror spanning subgraphs") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const bool signed_trial = trial % 2 == 1;
    RibbonGraph g = testgen::random_map(rng, 5);
    if (signed_trial) g = testgen::with_signs(g, testgen::random_signs(rng, g));
    const MedialResult m = medial_diagram(g);
    for (std::uint64_t mask = 0; mask < (1u << g.edge_count()); ++mask) {
      const GraphMetrics part = g.induced_subgraph_mask(mask).metrics();
      const BracketTerm t = resolve_state(m.diagram, state_of_mask(g, mask));
      CHECK(t.delta == part.bc);
      if (!signed_trial) CHECK(t.alpha == part.e);
    }
  }
}

TEST_CASE("bracket identity") {
  SUBCASE("fixed instances") {
    CHECK(main_theorem_rhs(testgen::single_edge()).to_string() == "A + B*d");
    CHECK(main_theorem_rhs(testgen::planar_loop()).to_string() == "A*d + B");
    CHECK(main_theorem_rhs(testgen::single_edge({{0, -1}})).to_string() == "A*d + B");
    CHECK(main_theorem_rhs(testgen::two_loop_torus()).to_string() ==
          "A^2 + 2*A*B*d + B^2");

    for (const RibbonGraph& g :
         {testgen::two_loop_torus(), testgen::triangle(), testgen::negative_loop(),
          testgen::single_edge({{0, -1}})}) {
      const IdentityReport rep = check_identity(g);
      CHECK(rep.equal);
      CHECK(rep.lhs == rep.rhs);
    }
  }

  SUBCASE("empty graph") {
    const IdentityReport rep = check_identity(RibbonGraph({}, {}));
    CHECK(rep.equal);
    CHECK(rep.lhs.to_string() == "d^-1");
  }

  SUBCASE("isolated vertices scale both sides by d") {
    const RibbonGraph bare = testgen::single_edge();
    const RibbonGraph padded({0, 1}, {1, 0}, {}, 2);
    const IdentityReport rep = check_identity(padded);
    CHECK(rep.equal);
    CHECK(rep.lhs == check_identity(bare).lhs * ribbonlink::MultiPoly::variable("d").pow(ribbonlink::QExp::integer(2)));
  }

  SUBCASE("random signed maps") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
      RibbonGraph g = testgen::random_map(rng, 1 + trial % 6);
      g = testgen::with_signs(g, testgen::random_signs(rng, g));
      CHECK(check_identity(g).equal);
    }
  }

  SUBCASE("random planar maps") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 10; ++trial)
      CHECK(check_identity(testgen::random_planar_map(rng, 2 + trial % 5, true)).equal);
  }
}

TEST_CASE("trefoil from the planar 3-cycle") {
  const MedialResult m = medial_diagram(testgen::triangle());
  REQUIRE(m.diagram.crossing_count() == 3);
  CHECK(ribbonlink::strand_components(m.diagram).count() == 1);
  CHECK(ribbonlink::writhe(m.diagram) == 3);
  CHECK(ribbonlink::jones_polynomial(m.diagram).to_string() == "-t^4 + t^3 + t");
}
