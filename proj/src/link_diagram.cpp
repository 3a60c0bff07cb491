#include "ribbonlink/link_diagram.hpp"

#include <omp.h>

#include <array>
#include <bit>
#include <map>

namespace ribbonlink {

std::string port_label(int port) {
  return "c" + std::to_string(port / 4) + "." + std::to_string(port % 4);
}

void validate_diagram(int crossings, const std::vector<std::pair<int, int>>& arcs) {
  const int ports = 4 * crossings;
  std::vector<int> partner(ports, -1);
  for (const auto& [a, b] : arcs) {
    if (a < 0 || a >= ports || b < 0 || b >= ports)
      throw DiagramError(DiagramErrorCode::UnmatchedPort,
                         "arc references a port outside the diagram's " +
                             std::to_string(crossings) + " crossings");
    if (a == b)
      throw DiagramError(DiagramErrorCode::SelfPairedPort,
                         "port " + port_label(a) + " is paired with itself");
    for (const int p : {a, b}) {
      if (partner[p] != -1)
        throw DiagramError(DiagramErrorCode::DuplicatePort,
                           "port " + port_label(p) + " appears in more than one arc");
    }
    partner[a] = b;
    partner[b] = a;
  }
  for (int p = 0; p < ports; ++p) {
    if (partner[p] == -1)
      throw DiagramError(DiagramErrorCode::UnmatchedPort,
                         "port " + port_label(p) + " is not covered by any arc");
  }
}

SurfaceLinkDiagram::SurfaceLinkDiagram(int crossings, std::vector<std::pair<int, int>> arcs,
                                       std::vector<int> over_pairs, int free_loops)
    : crossings_(crossings),
      free_loops_(free_loops),
      arcs_(std::move(arcs)),
      over_pairs_(std::move(over_pairs)) {
  if (static_cast<int>(over_pairs_.size()) != crossings_)
    throw DiagramError(DiagramErrorCode::UnmatchedPort,
                       "expected one over-pair choice per crossing");
  for (int c = 0; c < crossings_; ++c) {
    if (over_pairs_[c] != 0 && over_pairs_[c] != 1)
      throw DiagramError(DiagramErrorCode::UnmatchedPort,
                         "crossing " + std::to_string(c) + " has over-pair " +
                             std::to_string(over_pairs_[c]) + "; only 0 and 1 are valid");
  }
  validate_diagram(crossings_, arcs_);
  partner_.assign(4 * crossings_, -1);
  for (const auto& [a, b] : arcs_) {
    partner_[a] = b;
    partner_[b] = a;
  }
}

namespace {

// Port the smoothing joins to `port` at its own crossing. The over-ports
// sit at positions op and op+2; an A-smoothing sends each over-port to its
// counterclockwise predecessor, a B-smoothing to its successor, and the
// under-ports follow by matching up.
int smooth_partner(int port, int op, Smoothing s) {
  const int base = port - port % 4;
  const int pos = port % 4;
  const bool over = ((pos - op) & 1) == 0;
  const int shift = ((s == Smoothing::A) == over) ? 3 : 1;
  return base + ((pos + shift) & 3);
}

}  // namespace

BracketTerm resolve_state(const SurfaceLinkDiagram& d, const State& s) {
  if (static_cast<int>(s.size()) != d.crossing_count())
    throw DiagramError(DiagramErrorCode::PartialState,
                       "state covers " + std::to_string(s.size()) + " of " +
                           std::to_string(d.crossing_count()) + " crossings");
  BracketTerm term;
  for (const Smoothing choice : s) (choice == Smoothing::A ? term.alpha : term.beta)++;

  std::vector<char> seen(d.port_count(), 0);
  int cycles = 0;
  for (int p = 0; p < d.port_count(); ++p) {
    if (seen[p]) continue;
    ++cycles;
    int cur = p;
    while (!seen[cur]) {
      seen[cur] = 1;
      const int sm = smooth_partner(cur, d.over_pair(cur / 4), s[cur / 4]);
      seen[sm] = 1;
      cur = d.arc_partner(sm);
    }
  }
  term.delta = cycles + d.free_loops();
  return term;
}

namespace {

void check_crossing_cap(int crossings, const EnumOptions& opts) {
  if (crossings > opts.max_edges) throw SizeLimitError(crossings, opts.max_edges);
}

Monomial bracket_monomial(int alpha, int beta, int delta) {
  Monomial m;
  if (alpha != 0) m.emplace("A", QExp::integer(alpha));
  if (beta != 0) m.emplace("B", QExp::integer(beta));
  if (delta != 1) m.emplace("d", QExp::integer(delta - 1));
  return m;
}

}  // namespace

MultiPoly kauffman_bracket_serial(const SurfaceLinkDiagram& d, const EnumOptions& opts) {
  const int n = d.crossing_count();
  check_crossing_cap(n, opts);
  MultiPoly out(std::vector<std::string>{"A", "B", "d"});
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    State s(n);
    for (int i = 0; i < n; ++i) s[i] = (mask >> i & 1) ? Smoothing::B : Smoothing::A;
    const BracketTerm t = resolve_state(d, s);
    out.add_term(bracket_monomial(t.alpha, t.beta, t.delta), BigInt(1));
  }
  return out;
}

MultiPoly kauffman_bracket(const SurfaceLinkDiagram& d, const EnumOptions& opts) {
  const int n = d.crossing_count();
  check_crossing_cap(n, opts);
  const int ports = d.port_count();
  const std::int64_t total = std::int64_t{1} << n;

  // Key is (alpha, cycles); beta and delta follow from n and free_loops.
  using PartialSum = std::map<std::array<int, 2>, std::uint64_t>;
  const int nthreads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
  std::vector<PartialSum> partials(nthreads);

#pragma omp parallel num_threads(nthreads)
  {
    PartialSum local;
    std::vector<std::int64_t> seen(ports, -1);

#pragma omp for schedule(static)
    for (std::int64_t mask = 0; mask < total; ++mask) {
      int cycles = 0;
      for (int p = 0; p < ports; ++p) {
        if (seen[p] == mask) continue;
        ++cycles;
        int cur = p;
        while (seen[cur] != mask) {
          seen[cur] = mask;
          const int c = cur / 4;
          const Smoothing choice = (mask >> c & 1) ? Smoothing::B : Smoothing::A;
          const int sm = smooth_partner(cur, d.over_pair(c), choice);
          seen[sm] = mask;
          cur = d.arc_partner(sm);
        }
      }
      const int alpha = n - std::popcount(static_cast<std::uint64_t>(mask));
      ++local[{alpha, cycles}];
    }

    partials[omp_get_thread_num()] = std::move(local);
  }

  MultiPoly out(std::vector<std::string>{"A", "B", "d"});
  std::map<std::array<int, 2>, std::uint64_t> merged;
  for (const auto& partial : partials)
    for (const auto& [key, count] : partial) merged[key] += count;
  for (const auto& [key, count] : merged)
    out.add_term(bracket_monomial(key[0], n - key[0], key[1] + d.free_loops()),
                 BigInt(count));
  return out;
}

StrandComponents strand_components(const SurfaceLinkDiagram& d) {
  const int ports = d.port_count();
  StrandComponents sc;
  sc.component_of_port.assign(ports, -1);
  for (int p = 0; p < ports; ++p) {
    if (sc.component_of_port[p] >= 0) continue;
    const int id = sc.count();
    std::vector<int> cycle;
    int x = p;
    do {
      cycle.push_back(x);
      sc.component_of_port[x] = id;
      sc.component_of_port[d.opposite(x)] = id;
      x = d.arc_partner(d.opposite(x));
    } while (x != p);
    sc.cycles.push_back(std::move(cycle));
  }
  return sc;
}

int writhe(const SurfaceLinkDiagram& d, const Orientation& orient) {
  const StrandComponents sc = strand_components(d);
  if (static_cast<int>(orient.size()) != sc.count())
    throw DiagramError(DiagramErrorCode::IncoherentOrientation,
                       "orientation chooses directions for " + std::to_string(orient.size()) +
                           " components, diagram has " + std::to_string(sc.count()));

  std::vector<char> entry(d.port_count(), 0);
  for (int i = 0; i < sc.count(); ++i)
    for (const int p : sc.cycles[i]) entry[orient[i] ? d.opposite(p) : p] = 1;

  int w = 0;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int base = 4 * c;
    const int op = d.over_pair(c);
    const int over_exit = entry[base + op] ? (op + 2) & 3 : op;
    const int under_exit = entry[base + ((op + 1) & 3)] ? (op + 3) & 3 : (op + 1) & 3;
    w += (under_exit == ((over_exit + 1) & 3)) ? 1 : -1;
  }
  return w;
}

int writhe(const SurfaceLinkDiagram& d) {
  return writhe(d, Orientation(strand_components(d).count(), false));
}

MultiPoly jones_polynomial(const SurfaceLinkDiagram& d, const Orientation& orient,
                           const EnumOptions& opts) {
  const int w = writhe(d, orient);
  const MultiPoly bracket = kauffman_bracket(d, opts);
  const MultiPoly neg_d =
      MultiPoly::monomial(-1, {{"t", QExp::half(1)}}) +
      MultiPoly::monomial(-1, {{"t", QExp::half(-1)}});
  const MultiPoly evaluated = bracket.substitute({
      {"A", MultiPoly::variable("t", QExp::quarter(-1))},
      {"B", MultiPoly::variable("t", QExp::quarter(1))},
      {"d", neg_d},
  });
  const MultiPoly prefactor =
      MultiPoly::monomial(w % 2 != 0 ? -1 : 1, {{"t", QExp::quarter(3 * w)}});
  return (prefactor * evaluated).with_vars({"t"});
}

MultiPoly jones_polynomial(const SurfaceLinkDiagram& d, const EnumOptions& opts) {
  return jones_polynomial(d, Orientation(strand_components(d).count(), false), opts);
}

}  // namespace ribbonlink
