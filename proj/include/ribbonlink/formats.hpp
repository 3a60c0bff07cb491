/*
 * formats.hpp
 * -----------
 * Text formats for ribbon graphs and link diagrams. Both are line-oriented
 * but whitespace-insensitive; '#' starts a comment running to end of line.
 *
 * Ribbon graph:
 *
 *   # one list per vertex, darts in counterclockwise order
 *   vertices: [[e1+, e2+, e1-, e2-], []]
 *   signs: {e1: -1}
 *
 * Every edge name appears exactly once with '+' and once with '-'; an
 * empty list is an isolated vertex; the signs table is optional and lists
 * any subset of edges (default +1). Darts are numbered in order of
 * appearance, so edge ids and vertex ids are reproducible from the file.
 *
 * Link diagram:
 *
 *   crossing: [c0.0, c0.1, c0.2, c0.3] over 0
 *   arcs: [[c0.2, c0.1], [c0.0, c0.3]]
 *   free_loops: 0
 *
 * Each crossing line names its four ports in counterclockwise order and
 * says which opposite-port pair is the overstrand (0 for positions 0/2,
 * 1 for positions 1/3). Port labels start with a letter and may contain
 * letters, digits, '_' and '.'. The arcs list must cover every port
 * exactly once; free_loops is optional and defaults to 0.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ribbonlink/link_diagram.hpp"
#include "ribbonlink/ribbon_graph.hpp"

namespace ribbonlink {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(int line, int col, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

RibbonGraph parse_ribbon_file(std::string_view text);
std::string emit_ribbon_file(const RibbonGraph& g);

SurfaceLinkDiagram parse_diagram_file(std::string_view text);
std::string emit_diagram_file(const SurfaceLinkDiagram& d);

enum class FileKind { Ribbon, Diagram };

// Decides by the first section keyword; SyntaxError if neither format fits.
FileKind sniff_file_kind(std::string_view text);

}  // namespace ribbonlink
