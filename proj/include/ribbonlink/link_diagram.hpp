/*
 * link_diagram.hpp
 * ----------------
 * Link diagrams on oriented surfaces, given combinatorially: each crossing
 * has four ports in counterclockwise order, strands run between opposite
 * ports, and an over-pair records which of the two strands passes on top.
 * Arcs form a perfect matching on all ports. Crossingless circles are a
 * plain count.
 *
 * Ports are numbered globally: crossing c owns ports 4c..4c+3, with port
 * 4c+p at counterclockwise position p.
 *
 * The Kauffman bracket is the state sum over all 2^n smoothing choices,
 *   <D> = sum A^{alpha(S)} B^{beta(S)} d^{delta(S)-1},
 * where delta counts the closed curves left after smoothing. At a crossing
 * whose over-strand uses positions (q, q+2), the A-smoothing joins each
 * over-port to its counterclockwise predecessor and the B-smoothing to its
 * successor.
 *
 * kauffman_bracket enumerates states with OpenMP; kauffman_bracket_serial
 * walks resolve_state over every state and is the reference the fast path
 * is tested against.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ribbonlink/multipoly.hpp"
#include "ribbonlink/options.hpp"

namespace ribbonlink {

enum class DiagramErrorCode {
  UnmatchedPort,
  DuplicatePort,
  SelfPairedPort,
  PartialState,
  IncoherentOrientation,
};

class DiagramError : public std::runtime_error {
 public:
  DiagramError(DiagramErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  DiagramErrorCode code() const { return code_; }

 private:
  DiagramErrorCode code_;
};

// "c3.1" for port 4*3+1.
std::string port_label(int port);

class SurfaceLinkDiagram {
 public:
  SurfaceLinkDiagram() = default;  // no crossings, no loops
  // over_pairs[c] is 0 when the over-strand of crossing c uses positions
  // (0,2), 1 when it uses (1,3). Arcs may list ports in either order.
  SurfaceLinkDiagram(int crossings, std::vector<std::pair<int, int>> arcs,
                     std::vector<int> over_pairs, int free_loops = 0);

  int crossing_count() const { return crossings_; }
  int port_count() const { return 4 * crossings_; }
  int free_loops() const { return free_loops_; }
  int over_pair(int crossing) const { return over_pairs_[crossing]; }
  int arc_partner(int port) const { return partner_[port]; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

  // Port on the far side of the same crossing, where a strand entering at
  // p leaves: position +2 mod 4.
  int opposite(int port) const { return port - port % 4 + (port % 4 + 2) % 4; }

 private:
  int crossings_ = 0;
  int free_loops_ = 0;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<int> over_pairs_;
  std::vector<int> partner_;
};

enum class Smoothing : std::uint8_t { A, B };
using State = std::vector<Smoothing>;  // one choice per crossing

struct BracketTerm {
  int alpha = 0;  // A-smoothings
  int beta = 0;   // B-smoothings
  int delta = 0;  // closed curves after smoothing, free loops included
  bool operator==(const BracketTerm&) const = default;
};

// Re-runs the constructor checks on already-built pieces; throws
// DiagramError naming the offending port.
void validate_diagram(int crossings, const std::vector<std::pair<int, int>>& arcs);

// Throws PartialState unless the state covers every crossing.
BracketTerm resolve_state(const SurfaceLinkDiagram& d, const State& s);

// Variables A,B,d. SizeLimit applies to the crossing count.
MultiPoly kauffman_bracket(const SurfaceLinkDiagram& d, const EnumOptions& opts = {});
MultiPoly kauffman_bracket_serial(const SurfaceLinkDiagram& d, const EnumOptions& opts = {});

// Strands of the diagram. Following a strand through a crossing means
// leaving at the opposite port, then crossing the arc to the next entry
// port. Each closed strand yields two directed port cycles, one per
// direction; cycles[i] is the one that enters at the component's lowest
// port, and components are numbered by that port in increasing order.
struct StrandComponents {
  std::vector<std::vector<int>> cycles;    // entry ports in traversal order
  std::vector<int> component_of_port;
  int count() const { return static_cast<int>(cycles.size()); }
};
StrandComponents strand_components(const SurfaceLinkDiagram& d);

// A direction choice per strand component: false keeps the default cycle,
// true reverses it.
using Orientation = std::vector<bool>;

// Sum of crossing signs. A crossing is +1 when the understrand exits at
// the counterclockwise successor of the overstrand's exit port, -1
// otherwise. Throws IncoherentOrientation if the choice vector does not
// match the component count.
int writhe(const SurfaceLinkDiagram& d, const Orientation& orient);
int writhe(const SurfaceLinkDiagram& d);  // default orientation

// (-1)^w t^{3w/4} <D> at A=t^{-1/4}, B=t^{1/4}, d=-t^{1/2}-t^{-1/2};
// a Laurent polynomial in quarter powers of t.
MultiPoly jones_polynomial(const SurfaceLinkDiagram& d, const Orientation& orient,
                           const EnumOptions& opts = {});
MultiPoly jones_polynomial(const SurfaceLinkDiagram& d, const EnumOptions& opts = {});

}  // namespace ribbonlink
