#include "ribbonlink/medial.hpp"

#include "ribbonlink/bollobas_riordan.hpp"

namespace ribbonlink {

MedialResult medial_diagram(const RibbonGraph& g) {
  MedialResult out;
  out.corr.edge_of_crossing = g.edges();
  out.corr.leave_port.assign(g.dart_count(), -1);
  out.corr.enter_port.assign(g.dart_count(), -1);

  std::vector<int> over_pairs(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    const Dart a = g.edges()[i];
    out.corr.leave_port[g.alpha(a)] = 4 * i + 0;
    out.corr.enter_port[g.alpha(a)] = 4 * i + 1;
    out.corr.leave_port[a] = 4 * i + 2;
    out.corr.enter_port[a] = 4 * i + 3;
    over_pairs[i] = g.sign(a) > 0 ? 0 : 1;
  }

  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(g.dart_count());
  for (Dart d = 0; d < g.dart_count(); ++d)
    arcs.emplace_back(out.corr.leave_port[d], out.corr.enter_port[g.sigma(d)]);

  out.diagram = SurfaceLinkDiagram(g.edge_count(), std::move(arcs), std::move(over_pairs),
                                   g.isolated_vertices());
  return out;
}

MultiPoly main_theorem_rhs(const RibbonGraph& g, const EnumOptions& opts) {
  const GraphMetrics m = g.metrics();
  const MultiPoly r = signed_br_polynomial(g, opts);
  const MultiPoly evaluated = r.substitute({
      {"x", MultiPoly::monomial(1, {{"A", QExp::integer(-1)},
                                    {"B", QExp::integer(1)},
                                    {"d", QExp::integer(1)}})},
      {"y", MultiPoly::monomial(1, {{"A", QExp::integer(1)},
                                    {"B", QExp::integer(-1)},
                                    {"d", QExp::integer(1)}})},
      {"z", MultiPoly::monomial(1, {{"d", QExp::integer(-1)}})},
  });
  const MultiPoly prefactor = MultiPoly::monomial(1, {{"A", QExp::integer(m.r)},
                                                      {"B", QExp::integer(m.n)},
                                                      {"d", QExp::integer(m.k - 1)}});
  return (prefactor * evaluated).with_vars({"A", "B", "d"});
}

IdentityReport check_identity(const RibbonGraph& g, const EnumOptions& opts) {
  IdentityReport report;
  report.lhs = kauffman_bracket(medial_diagram(g).diagram, opts);
  report.rhs = main_theorem_rhs(g, opts);
  report.equal = report.lhs == report.rhs;
  return report;
}

}  // namespace ribbonlink
