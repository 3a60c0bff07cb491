#include "ribbonlink/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "ribbonlink/bollobas_riordan.hpp"
#include "ribbonlink/formats.hpp"
#include "ribbonlink/link_diagram.hpp"
#include "ribbonlink/medial.hpp"
#include "ribbonlink/multipoly.hpp"
#include "ribbonlink/options.hpp"
#include "ribbonlink/ribbon_graph.hpp"

namespace ribbonlink {

namespace {

std::string load_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RibbonGraph load_ribbon(const std::string& path) {
  const std::string text = load_text(path);
  if (sniff_file_kind(text) != FileKind::Ribbon)
    throw std::runtime_error(path + " holds a link diagram; this command needs a ribbon graph");
  return parse_ribbon_file(text);
}

nlohmann::json metrics_json(const GraphMetrics& m) {
  return {{"v", m.v}, {"e", m.e},   {"k", m.k},
          {"r", m.r}, {"n", m.n},   {"bc", m.bc},
          {"genus", m.genus}};
}

nlohmann::json diagram_json(const SurfaceLinkDiagram& d) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& [a, b] : d.arcs()) arcs.push_back({port_label(a), port_label(b)});
  nlohmann::json over = nlohmann::json::array();
  for (int c = 0; c < d.crossing_count(); ++c) over.push_back(d.over_pair(c));
  return {{"crossings", d.crossing_count()},
          {"over_pairs", over},
          {"arcs", arcs},
          {"free_loops", d.free_loops()}};
}

Orientation orientation_from_flips(const SurfaceLinkDiagram& d,
                                   const std::vector<int>& flipped) {
  const int count = strand_components(d).count();
  Orientation orient(count, false);
  for (const int i : flipped) {
    if (i < 0 || i >= count)
      throw DiagramError(DiagramErrorCode::IncoherentOrientation,
                         "--orient component " + std::to_string(i) + " out of range; diagram has " +
                             std::to_string(count) + " components");
    orient[i] = !orient[i];
  }
  return orient;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Bollobas-Riordan / Kauffman bracket toolkit for ribbon graphs"};
  app.require_subcommand(1);
  app.fallthrough();  // inherited: lets --json etc. appear after the subcommand

  bool json = false;
  EnumOptions opts;
  app.add_flag("--json", json, "emit JSON instead of plain text");
  app.add_option("--max-edges", opts.max_edges, "cap on edges/crossings before enumeration")
      ->capture_default_str();
  app.add_option("--par", opts.threads, "worker threads for the state sums (0 = all cores)")
      ->capture_default_str();

  std::string path;
  std::vector<int> flipped;

  auto* br_cmd =
      app.add_subcommand("br", "subgraph-expansion polynomial R(x,y,z) of a ribbon graph");
  br_cmd->add_option("file", path, "ribbon graph file")->required();

  auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket of a link diagram");
  bracket_cmd->add_option("file", path, "diagram file")->required();

  auto* medial_cmd =
      app.add_subcommand("medial", "alternating link diagram on a ribbon graph's surface");
  medial_cmd->add_option("file", path, "ribbon graph file")->required();

  auto* jones_cmd =
      app.add_subcommand("jones", "Jones polynomial of a diagram, or of a graph's medial link");
  jones_cmd->add_option("file", path, "ribbon graph or diagram file")->required();
  jones_cmd
      ->add_option("--orient", flipped,
                   "strand components whose default direction is reversed")
      ->delimiter(',');

  auto* check_cmd = app.add_subcommand(
      "check", "verify bracket(medial(G)) against the subgraph-expansion side");
  check_cmd->add_option("file", path, "ribbon graph file")->required();

  auto* metrics_cmd = app.add_subcommand("metrics", "vertex/edge/component/boundary counts");
  metrics_cmd->add_option("file", path, "ribbon graph file")->required();

  std::vector<const char*> argv;
  argv.push_back("ribbonlink");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(br_cmd)) {
      const RibbonGraph g = load_ribbon(path);
      const bool signed_case = g.has_negative_edge();
      const MultiPoly r = signed_case ? signed_br_polynomial(g, opts) : br_polynomial(g, opts);
      if (json)
        out << nlohmann::json{{"command", "br"},
                              {"signed", signed_case},
                              {"polynomial", r.to_string()}}
                   .dump()
            << "\n";
      else
        out << r.to_string() << "\n";
    } else if (app.got_subcommand(bracket_cmd)) {
      const std::string text = load_text(path);
      if (sniff_file_kind(text) != FileKind::Diagram)
        throw std::runtime_error(path +
                                 " holds a ribbon graph; run `medial` first or use `jones`");
      const SurfaceLinkDiagram d = parse_diagram_file(text);
      const MultiPoly b = kauffman_bracket(d, opts);
      if (json)
        out << nlohmann::json{{"command", "bracket"}, {"polynomial", b.to_string()}}.dump()
            << "\n";
      else
        out << b.to_string() << "\n";
    } else if (app.got_subcommand(medial_cmd)) {
      const RibbonGraph g = load_ribbon(path);
      const SurfaceLinkDiagram d = medial_diagram(g).diagram;
      if (json)
        out << nlohmann::json{{"command", "medial"}, {"diagram", diagram_json(d)}}.dump()
            << "\n";
      else
        out << emit_diagram_file(d);
    } else if (app.got_subcommand(jones_cmd)) {
      const std::string text = load_text(path);
      const SurfaceLinkDiagram d = sniff_file_kind(text) == FileKind::Ribbon
                                       ? medial_diagram(parse_ribbon_file(text)).diagram
                                       : parse_diagram_file(text);
      const Orientation orient = orientation_from_flips(d, flipped);
      const int w = writhe(d, orient);
      const MultiPoly j = jones_polynomial(d, orient, opts);
      if (json)
        out << nlohmann::json{{"command", "jones"},
                              {"writhe", w},
                              {"polynomial", j.to_string()}}
                   .dump()
            << "\n";
      else
        out << j.to_string() << "\n";
    } else if (app.got_subcommand(check_cmd)) {
      const RibbonGraph g = load_ribbon(path);
      const IdentityReport report = check_identity(g, opts);
      if (json)
        out << nlohmann::json{{"command", "check"},
                              {"equal", report.equal},
                              {"lhs", report.lhs.to_string()},
                              {"rhs", report.rhs.to_string()}}
                   .dump()
            << "\n";
      else if (report.equal)
        out << "EQUAL: " << report.lhs.to_string() << "\n";
      else
        out << "NOT EQUAL: lhs = " << report.lhs.to_string()
            << " rhs = " << report.rhs.to_string() << "\n";
      if (!report.equal) return 2;
    } else if (app.got_subcommand(metrics_cmd)) {
      const RibbonGraph g = load_ribbon(path);
      const GraphMetrics m = g.metrics();
      if (json)
        out << nlohmann::json{{"command", "metrics"}, {"metrics", metrics_json(m)}}.dump()
            << "\n";
      else
        out << "v=" << m.v << " e=" << m.e << " k=" << m.k << " r=" << m.r << " n=" << m.n
            << " bc=" << m.bc << " genus=" << m.genus << "\n";
    }
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace ribbonlink
