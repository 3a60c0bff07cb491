#include "ribbonlink/formats.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace ribbonlink {

namespace {

enum class TokKind { Word, DartLabel, Int, Punct, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;   // word or label name, without any +/- suffix
  long long value = 0;  // Int payload
  char punct = 0;
  int dart_sign = 0;  // +1 or -1 for DartLabel
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    throw SyntaxError(at.line, at.col, msg);
  }

  Token expect_punct(char c) {
    if (tok_.kind != TokKind::Punct || tok_.punct != c)
      fail(tok_, std::string("expected '") + c + "'" + describe_here());
    return take();
  }

  Token expect_word(const std::string& w) {
    if (tok_.kind != TokKind::Word || tok_.text != w)
      fail(tok_, "expected '" + w + "'" + describe_here());
    return take();
  }

  bool at_punct(char c) const { return tok_.kind == TokKind::Punct && tok_.punct == c; }
  bool at_word(const std::string& w) const {
    return tok_.kind == TokKind::Word && tok_.text == w;
  }

  std::string describe_here() const {
    switch (tok_.kind) {
      case TokKind::End: return ", found end of input";
      case TokKind::Punct: return std::string(", found '") + tok_.punct + "'";
      case TokKind::Int: return ", found number " + std::to_string(tok_.value);
      case TokKind::DartLabel:
        return ", found dart label " + tok_.text + (tok_.dart_sign > 0 ? "+" : "-");
      case TokKind::Word: return ", found '" + tok_.text + "'";
    }
    return "";
  }

 private:
  void advance() {
    skip_blank();
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = TokKind::End;
      return;
    }
    const char c = text_[pos_];
    if (std::string_view(":[]{},").find(c) != std::string_view::npos) {
      tok_.kind = TokKind::Punct;
      tok_.punct = c;
      bump();
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '-' || c == '+') && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      std::string num(1, c);
      bump();
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        num += text_[pos_];
        bump();
      }
      tok_.kind = TokKind::Int;
      tok_.value = std::stoll(num);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word(1, c);
      bump();
      while (pos_ < text_.size()) {
        const char w = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(w)) || w == '_' || w == '.') {
          word += w;
          bump();
        } else {
          break;
        }
      }
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        tok_.kind = TokKind::DartLabel;
        tok_.dart_sign = text_[pos_] == '+' ? 1 : -1;
        bump();
      } else {
        tok_.kind = TokKind::Word;
      }
      tok_.text = std::move(word);
      return;
    }
    throw SyntaxError(line_, col_, std::string("unexpected character '") + c + "'");
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

}  // namespace

RibbonGraph parse_ribbon_file(std::string_view text) {
  Lexer lex(text);
  lex.expect_word("vertices");
  lex.expect_punct(':');
  lex.expect_punct('[');

  struct EdgeEnds {
    int plus_dart = -1, minus_dart = -1;
    Token plus_tok, minus_tok;
  };
  std::map<std::string, EdgeEnds> by_name;
  std::vector<std::vector<Dart>> vertices;
  int dart_id = 0;

  bool more_vertices = !lex.at_punct(']');
  while (more_vertices) {
    lex.expect_punct('[');
    std::vector<Dart> darts;
    bool more_darts = !lex.at_punct(']');
    while (more_darts) {
      if (lex.peek().kind != TokKind::DartLabel)
        lex.fail(lex.peek(), "expected a dart label like e1+ or e1-" + lex.describe_here());
      const Token t = lex.take();
      EdgeEnds& ends = by_name[t.text];
      int& slot = t.dart_sign > 0 ? ends.plus_dart : ends.minus_dart;
      if (slot != -1)
        throw SyntaxError(t.line, t.col,
                          "dart label " + t.text + (t.dart_sign > 0 ? "+" : "-") +
                              " appears twice");
      slot = dart_id;
      (t.dart_sign > 0 ? ends.plus_tok : ends.minus_tok) = t;
      darts.push_back(dart_id++);
      more_darts = lex.at_punct(',');
      if (more_darts) lex.take();
    }
    lex.expect_punct(']');
    vertices.push_back(std::move(darts));
    more_vertices = lex.at_punct(',');
    if (more_vertices) lex.take();
  }
  lex.expect_punct(']');

  std::vector<Dart> sigma(dart_id), alpha(dart_id);
  int isolated = 0;
  for (const auto& darts : vertices) {
    if (darts.empty()) {
      ++isolated;
      continue;
    }
    for (std::size_t i = 0; i < darts.size(); ++i)
      sigma[darts[i]] = darts[(i + 1) % darts.size()];
  }
  for (const auto& [name, ends] : by_name) {
    if (ends.plus_dart == -1)
      throw SyntaxError(ends.minus_tok.line, ends.minus_tok.col,
                        "edge " + name + " has no " + name + "+ end");
    if (ends.minus_dart == -1)
      throw SyntaxError(ends.plus_tok.line, ends.plus_tok.col,
                        "edge " + name + " has no " + name + "- end");
    alpha[ends.plus_dart] = ends.minus_dart;
    alpha[ends.minus_dart] = ends.plus_dart;
  }

  std::map<Dart, int> signs;
  if (lex.at_word("signs")) {
    lex.take();
    lex.expect_punct(':');
    lex.expect_punct('{');
    bool more = !lex.at_punct('}');
    while (more) {
      if (lex.peek().kind != TokKind::Word)
        lex.fail(lex.peek(), "expected an edge name" + lex.describe_here());
      const Token name = lex.take();
      lex.expect_punct(':');
      if (lex.peek().kind != TokKind::Int)
        lex.fail(lex.peek(), "expected a sign of 1 or -1" + lex.describe_here());
      const Token val = lex.take();
      auto it = by_name.find(name.text);
      if (it == by_name.end())
        throw SyntaxError(name.line, name.col, "sign given for unknown edge " + name.text);
      if (val.value != 1 && val.value != -1)
        throw SyntaxError(val.line, val.col,
                          "edge " + name.text + " has sign " + std::to_string(val.value) +
                              "; only 1 and -1 are allowed");
      const Dart rep = std::min(it->second.plus_dart, it->second.minus_dart);
      if (signs.count(rep))
        throw SyntaxError(name.line, name.col, "sign for edge " + name.text + " given twice");
      signs[rep] = static_cast<int>(val.value);
      more = lex.at_punct(',');
      if (more) lex.take();
    }
    lex.expect_punct('}');
  }
  if (lex.peek().kind != TokKind::End)
    lex.fail(lex.peek(), "expected end of file" + lex.describe_here());

  return RibbonGraph(std::move(sigma), std::move(alpha), signs, isolated);
}

std::string emit_ribbon_file(const RibbonGraph& g) {
  // Edges are named in order of first appearance and '+' goes on the end
  // seen first, so parsing the output and emitting again reproduces it
  // byte for byte.
  std::vector<std::string> dart_name(g.dart_count());
  std::vector<std::string> negatives;
  int named = 0;
  for (const auto& cycle : g.vertex_rotations()) {
    for (const Dart d : cycle) {
      if (!dart_name[d].empty()) continue;
      const std::string name = "e" + std::to_string(++named);
      dart_name[d] = name + "+";
      dart_name[g.alpha(d)] = name + "-";
      if (g.sign(d) < 0) negatives.push_back(name);
    }
  }

  std::ostringstream os;
  os << "vertices: [";
  bool first_vertex = true;
  for (const auto& cycle : g.vertex_rotations()) {
    if (!first_vertex) os << ", ";
    first_vertex = false;
    os << "[";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) os << ", ";
      os << dart_name[cycle[i]];
    }
    os << "]";
  }
  for (int i = 0; i < g.isolated_vertices(); ++i) {
    if (!first_vertex) os << ", ";
    first_vertex = false;
    os << "[]";
  }
  os << "]\n";

  if (!negatives.empty()) {
    os << "signs: {";
    for (std::size_t i = 0; i < negatives.size(); ++i) {
      if (i) os << ", ";
      os << negatives[i] << ": -1";
    }
    os << "}\n";
  }
  return os.str();
}

SurfaceLinkDiagram parse_diagram_file(std::string_view text) {
  Lexer lex(text);

  std::map<std::string, int> port_of_label;
  std::vector<std::string> label_of_port;
  std::vector<int> over_pairs;

  while (lex.at_word("crossing")) {
    lex.take();
    lex.expect_punct(':');
    lex.expect_punct('[');
    for (int pos = 0; pos < 4; ++pos) {
      if (pos) lex.expect_punct(',');
      if (lex.peek().kind != TokKind::Word)
        lex.fail(lex.peek(), "expected a port label" + lex.describe_here());
      const Token t = lex.take();
      if (!port_of_label.emplace(t.text, static_cast<int>(label_of_port.size())).second)
        throw SyntaxError(t.line, t.col, "port label " + t.text + " declared twice");
      label_of_port.push_back(t.text);
    }
    lex.expect_punct(']');
    lex.expect_word("over");
    if (lex.peek().kind != TokKind::Int)
      lex.fail(lex.peek(), "expected over-pair index 0 or 1" + lex.describe_here());
    const Token t = lex.take();
    if (t.value != 0 && t.value != 1)
      throw SyntaxError(t.line, t.col,
                        "over-pair index must be 0 or 1, got " + std::to_string(t.value));
    over_pairs.push_back(static_cast<int>(t.value));
  }
  const int crossings = static_cast<int>(over_pairs.size());

  std::vector<std::pair<int, int>> arcs;
  std::vector<int> uses(label_of_port.size(), 0);
  if (lex.at_word("arcs")) {
    lex.take();
    lex.expect_punct(':');
    lex.expect_punct('[');
    bool more = !lex.at_punct(']');
    while (more) {
      lex.expect_punct('[');
      int ends[2];
      std::string names[2];
      for (int i = 0; i < 2; ++i) {
        if (i) lex.expect_punct(',');
        if (lex.peek().kind != TokKind::Word)
          lex.fail(lex.peek(), "expected a port label" + lex.describe_here());
        const Token t = lex.take();
        auto it = port_of_label.find(t.text);
        if (it == port_of_label.end())
          throw DiagramError(DiagramErrorCode::UnmatchedPort,
                             "arc references undeclared port " + t.text);
        ends[i] = it->second;
        names[i] = t.text;
      }
      lex.expect_punct(']');
      if (ends[0] == ends[1])
        throw DiagramError(DiagramErrorCode::SelfPairedPort,
                           "port " + names[0] + " is paired with itself");
      for (int i = 0; i < 2; ++i)
        if (++uses[ends[i]] > 1)
          throw DiagramError(DiagramErrorCode::DuplicatePort,
                             "port " + names[i] + " appears in more than one arc");
      arcs.emplace_back(ends[0], ends[1]);
      more = lex.at_punct(',');
      if (more) lex.take();
    }
    lex.expect_punct(']');
  }
  for (std::size_t p = 0; p < uses.size(); ++p) {
    if (uses[p] == 0)
      throw DiagramError(DiagramErrorCode::UnmatchedPort,
                         "port " + label_of_port[p] + " is not covered by any arc");
  }

  int free_loops = 0;
  if (lex.at_word("free_loops")) {
    lex.take();
    lex.expect_punct(':');
    if (lex.peek().kind != TokKind::Int)
      lex.fail(lex.peek(), "expected a free-loop count" + lex.describe_here());
    const Token t = lex.take();
    if (t.value < 0)
      throw SyntaxError(t.line, t.col, "free-loop count cannot be negative");
    free_loops = static_cast<int>(t.value);
  }
  if (lex.peek().kind != TokKind::End)
    lex.fail(lex.peek(), "expected end of file" + lex.describe_here());

  return SurfaceLinkDiagram(crossings, std::move(arcs), std::move(over_pairs), free_loops);
}

std::string emit_diagram_file(const SurfaceLinkDiagram& d) {
  std::ostringstream os;
  for (int c = 0; c < d.crossing_count(); ++c) {
    os << "crossing: [";
    for (int pos = 0; pos < 4; ++pos) {
      if (pos) os << ", ";
      os << port_label(4 * c + pos);
    }
    os << "] over " << d.over_pair(c) << "\n";
  }
  os << "arcs: [";
  for (std::size_t i = 0; i < d.arcs().size(); ++i) {
    if (i) os << ", ";
    os << "[" << port_label(d.arcs()[i].first) << ", " << port_label(d.arcs()[i].second)
       << "]";
  }
  os << "]\n";
  os << "free_loops: " << d.free_loops() << "\n";
  return os.str();
}

FileKind sniff_file_kind(std::string_view text) {
  Lexer lex(text);
  const Token& t = lex.peek();
  if (t.kind == TokKind::Word) {
    if (t.text == "vertices" || t.text == "signs") return FileKind::Ribbon;
    if (t.text == "crossing" || t.text == "arcs" || t.text == "free_loops")
      return FileKind::Diagram;
  }
  throw SyntaxError(t.line, t.col,
                    "expected a 'vertices' section (ribbon graph) or 'crossing' section "
                    "(link diagram)");
}

}  // namespace ribbonlink
