// Acceptance suite: one line per criterion, PASS or FAIL with wall time.
// Exit status is the number of failed criteria. Everything is exact
// arithmetic, so every comparison below is equality, never tolerance.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "generators.hpp"
#include "ribbonlink/bollobas_riordan.hpp"
#include "ribbonlink/cli.hpp"
#include "ribbonlink/link_diagram.hpp"
#include "ribbonlink/medial.hpp"
#include "ribbonlink/multipoly.hpp"

using namespace ribbonlink;

namespace {

std::string data_path(const std::string& name) {
  return std::string(RIBBONLINK_DATA_DIR) + "/" + name;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

void require_eq(const std::string& got, const std::string& want, const std::string& label) {
  if (got != want)
    throw std::runtime_error(label + ": got \"" + got + "\", wanted \"" + want + "\"");
}

int g_index = 0;
int g_failures = 0;

// budget_ms == 0 means no wall-time requirement.
void criterion(const std::string& name, long long budget_ms,
               const std::function<void()>& body) {
  ++g_index;
  const auto t0 = std::chrono::steady_clock::now();
  std::string problem;
  try {
    body();
  } catch (const std::exception& e) {
    problem = e.what();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  if (problem.empty() && budget_ms > 0 && ms >= budget_ms)
    problem = "took " + std::to_string(ms) + " ms, budget is " + std::to_string(budget_ms);
  std::printf("[%2d/11] %s  %-48s %6lld ms\n", g_index, problem.empty() ? "PASS" : "FAIL",
              name.c_str(), static_cast<long long>(ms));
  if (!problem.empty()) {
    std::printf("        %s\n", problem.c_str());
    ++g_failures;
  }
}

std::string cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  require(code == 0, "command exited " + std::to_string(code) + ": " + err.str());
  return out.str();
}

// State whose resolved curves are the boundary circles of the spanning
// subgraph picked by mask (A keeps a positive edge, B keeps a negative one).
State state_of_mask(const RibbonGraph& g, std::uint64_t mask) {
  State s(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    const bool keep = mask >> i & 1;
    s[i] = (keep == (g.sign(g.edges()[i]) > 0)) ? Smoothing::A : Smoothing::B;
  }
  return s;
}

void check_bracket_shape(const SurfaceLinkDiagram& d) {
  const int n = d.crossing_count();
  const MultiPoly b = kauffman_bracket(d);
  for (const auto& [mono, coeff] : b.terms()) {
    QExp degree = QExp::integer(0);
    if (auto it = mono.find("A"); it != mono.end()) degree = degree + it->second;
    if (auto it = mono.find("B"); it != mono.end()) degree = degree + it->second;
    require(degree == QExp::integer(n), "a bracket monomial is not A/B-homogeneous");
  }
  const MultiPoly at_ones = b.substitute({{"A", MultiPoly::constant(1)},
                                          {"B", MultiPoly::constant(1)},
                                          {"d", MultiPoly::constant(1)}});
  require(at_ones.coefficient({}) == BigInt(1) << n,
          "bracket at A=B=d=1 is not 2^crossings");
}

}  // namespace

int main() {
  std::printf("ribbonlink acceptance suite\n");

  criterion("two-loop torus: expansion and metrics", 1000, [] {
    require_eq(cli({"br", data_path("torus_two_loops.rg")}), "1 + 2*y + y^2*z^2\n",
               "br output");
    require_eq(cli({"metrics", data_path("torus_two_loops.rg")}),
               "v=1 e=2 k=1 r=0 n=2 bc=1 genus=1\n", "metrics output");
  });

  criterion("two-loop torus medial: bracket and states", 1000, [] {
    const MedialResult m = medial_diagram(testgen::two_loop_torus());
    require_eq(kauffman_bracket(m.diagram).to_string(), "A^2 + 2*A*B*d + B^2",
               "medial bracket");
    const std::vector<BracketTerm> expected = {
        {2, 0, 1}, {1, 1, 2}, {1, 1, 2}, {0, 2, 1}};
    int at = 0;
    for (const Smoothing s0 : {Smoothing::A, Smoothing::B})
      for (const Smoothing s1 : {Smoothing::A, Smoothing::B}) {
        const BracketTerm t = resolve_state(m.diagram, {s0, s1});
        require(t == expected[at++], "state " + std::to_string(at - 1) +
                                         " resolved to (" + std::to_string(t.alpha) + "," +
                                         std::to_string(t.beta) + "," +
                                         std::to_string(t.delta) + ")");
      }
    require_eq(cli({"bracket", data_path("two_loops_link.ld")}),
               "A^2 + 2*A*B*d + B^2\n", "bracket output");
  });

  criterion("identity sweep over all small rotation systems", 120000, [] {
    int total = 0;
    for (int edges = 1; edges <= 3; ++edges)
      for (const RibbonGraph& g : testgen::all_maps(edges, 3)) {
        ++total;
        if (!check_identity(g).equal)
          throw std::runtime_error("identity failed on sweep instance " +
                                   std::to_string(total));
      }
    require(total == 644, "sweep visited " + std::to_string(total) +
                              " rotation systems, expected 644");
  });

  criterion("identity on 500 random signed graphs", 300000, [] {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 500; ++trial) {
      RibbonGraph g = testgen::random_map(rng, 1 + trial % 12);
      g = testgen::with_signs(g, testgen::random_signs(rng, g));
      if (!check_identity(g).equal)
        throw std::runtime_error("identity failed on random trial " + std::to_string(trial));
    }
  });

  criterion("specializing z = 1 recovers tutte", 0, [] {
    const MultiPoly xm1 = MultiPoly::variable("x") - MultiPoly::constant(1);
    const MultiPoly ym1 = MultiPoly::variable("y") - MultiPoly::constant(1);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      const RibbonGraph g = testgen::random_map(rng, 1 + trial % 10);
      const MultiPoly shifted = br_polynomial(g).substitute(
          {{"x", xm1}, {"y", ym1}, {"z", MultiPoly::constant(1)}});
      require(shifted == tutte_deletion_contraction(abstract_graph(g)),
              "mismatch on random trial " + std::to_string(trial));
    }
    require_eq(tutte_deletion_contraction(abstract_graph(testgen::triangle())).to_string(),
               "x^2 + x + y", "triangle tutte");
  });

  criterion("planar expansions are z-free, z always even", 0, [] {
    std::mt19937 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
      const RibbonGraph g = testgen::random_planar_map(rng, 1 + trial % 8);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask)
        require(g.induced_subgraph_mask(mask).metrics().genus == 0,
                "planar generator produced a positive-genus subgraph");
      const MultiPoly r = br_polynomial(g);
      for (const auto& [mono, coeff] : r.terms())
        require(mono.count("z") == 0, "planar expansion mentions z");
    }
    for (int trial = 0; trial < 100; ++trial) {
      RibbonGraph g = testgen::random_map(rng, 1 + trial % 8);
      if (trial % 2) g = testgen::with_signs(g, testgen::random_signs(rng, g));
      const MultiPoly r = signed_br_polynomial(g);
      for (const auto& [mono, coeff] : r.terms())
        if (auto it = mono.find("z"); it != mono.end())
          require(it->second.integer_value() % 2 == 0, "odd z-exponent");
    }
  });

  criterion("planar dichromatic correspondence", 0, [] {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
      const RibbonGraph g = testgen::random_planar_map(rng, 1 + trial % 8);
      const GraphMetrics m = g.metrics();
      const MultiPoly z_at = dichromatic_polynomial(abstract_graph(g))
                                 .substitute({{"q", MultiPoly::variable("x") *
                                                        MultiPoly::variable("y")},
                                              {"v", MultiPoly::variable("y")}});
      const MultiPoly scale = MultiPoly::monomial(
          1, {{"x", QExp::integer(-m.k)}, {"y", QExp::integer(-m.v)}});
      require(signed_br_polynomial(g) == scale * z_at,
              "mismatch on random trial " + std::to_string(trial));
    }
  });

  criterion("jones values: trefoil and kink", 0, [] {
    const MedialResult trefoil = medial_diagram(testgen::triangle());
    require(writhe(trefoil.diagram) == 3, "trefoil writhe is not 3");
    require_eq(jones_polynomial(trefoil.diagram).to_string(), "-t^4 + t^3 + t",
               "trefoil jones");
    const MedialResult kink = medial_diagram(testgen::planar_loop());
    require_eq(jones_polynomial(kink.diagram).to_string(), "1", "kink jones");
  });

  criterion("states mirror spanning subgraphs", 0, [] {
    for (int edges = 1; edges <= 3; ++edges)
      for (const RibbonGraph& g : testgen::all_maps(edges, 3)) {
        const MedialResult m = medial_diagram(g);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
          const GraphMetrics part = g.induced_subgraph_mask(mask).metrics();
          const BracketTerm t = resolve_state(m.diagram, state_of_mask(g, mask));
          require(t.delta == part.bc, "delta != boundary components");
          require(t.alpha == part.e, "alpha != kept edges");
        }
      }
  });

  criterion("bracket homogeneity and 2^n state count", 0, [] {
    for (int edges = 1; edges <= 3; ++edges)
      for (const RibbonGraph& g : testgen::all_maps(edges, 3))
        check_bracket_shape(medial_diagram(g).diagram);
    std::mt19937 rng(10);
    for (int trial = 0; trial < 50; ++trial) {
      RibbonGraph g = testgen::random_map(rng, 1 + trial % 10);
      if (trial % 2) g = testgen::with_signs(g, testgen::random_signs(rng, g));
      check_bracket_shape(medial_diagram(g).diagram);
    }
  });

  criterion("parallel determinism on a 14-edge instance", 10000, [] {
    std::mt19937 rng(14);
    const RibbonGraph g = testgen::random_map(rng, 14);
    const SurfaceLinkDiagram d = medial_diagram(g).diagram;
    require(d.crossing_count() == 14, "instance does not have 14 crossings");

    std::string bracket_ref, br_ref;
    for (const int workers : {1, 2, 8}) {
      EnumOptions opts;
      opts.threads = workers;
      const std::string b = kauffman_bracket(d, opts).to_string();
      const std::string r = signed_br_polynomial(g, opts).to_string();
      if (workers == 1) {
        bracket_ref = b;
        br_ref = r;
      } else {
        require(b == bracket_ref, "bracket differs at " + std::to_string(workers) +
                                      " workers");
        require(r == br_ref, "expansion differs at " + std::to_string(workers) +
                                 " workers");
      }
    }
  });

  std::printf("%d of 11 criteria passed\n", 11 - g_failures);
  return g_failures;
}
