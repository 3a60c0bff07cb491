#include "ribbonlink/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ribbonlink {

QExp QExp::times(QExp o) const {
  std::int64_t p = q_ * o.q_;
  if (p % 4 != 0) {
    throw PolyError(PolyErrorCode::NonIntegralPower,
                    "exponent product " + to_string() + "*" + o.to_string() +
                        " leaves the quarter-integer lattice");
  }
  return QExp(p / 4);
}

std::string QExp::to_string() const {
  if (is_integer()) return std::to_string(q_ / 4);
  if (q_ % 2 == 0) return "(" + std::to_string(q_ / 2) + "/2)";
  return "(" + std::to_string(q_) + "/4)";
}

MultiPoly MultiPoly::constant(const BigInt& c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(Monomial{}, c);
  return p;
}

MultiPoly MultiPoly::variable(std::string name, QExp e) {
  MultiPoly p;
  p.vars_.push_back(name);
  Monomial m;
  if (!e.is_zero()) m.emplace(std::move(name), e);
  p.terms_.emplace(std::move(m), BigInt(1));
  return p;
}

MultiPoly MultiPoly::monomial(const BigInt& coeff, Monomial m) {
  MultiPoly p;
  if (coeff == 0) return p;
  std::erase_if(m, [](const auto& kv) { return kv.second.is_zero(); });
  p.note_vars(m);
  p.terms_.emplace(std::move(m), coeff);
  return p;
}

BigInt MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiPoly::note_vars(const Monomial& m) {
  for (const auto& [v, e] : m) {
    if (std::find(vars_.begin(), vars_.end(), v) == vars_.end()) vars_.push_back(v);
  }
}

void MultiPoly::merge_vars(const std::vector<std::string>& other) {
  for (const auto& v : other) {
    if (std::find(vars_.begin(), vars_.end(), v) == vars_.end()) vars_.push_back(v);
  }
}

void MultiPoly::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  note_vars(m);
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  merge_vars(o.vars_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  merge_vars(o.vars_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  out.vars_ = a.vars_;
  out.merge_vars(b.vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (const auto& [v, e] : mb) {
        auto [it, fresh] = m.emplace(v, e);
        if (!fresh) {
          it->second = it->second + e;
          if (it->second.is_zero()) m.erase(it);
        }
      }
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  out.vars_ = vars_;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

MultiPoly MultiPoly::pow(QExp e) const {
  if (e.is_zero()) return constant(1);
  if (is_zero()) {
    if (e.is_integer() && !e.is_negative()) return MultiPoly();
    throw PolyError(PolyErrorCode::NegativePowerOfPolynomial,
                    "zero polynomial raised to power " + e.to_string());
  }
  if (e.is_integer() && !e.is_negative()) {
    MultiPoly acc = constant(1);
    MultiPoly base = *this;
    for (std::int64_t n = e.integer_value(); n > 0; n >>= 1) {
      if (n & 1) acc = acc * base;
      if (n > 1) base = base * base;
    }
    acc.merge_vars(vars_);
    return acc;
  }
  if (!is_monomial()) {
    throw PolyError(PolyErrorCode::NegativePowerOfPolynomial,
                    "multi-term polynomial raised to power " + e.to_string());
  }
  const auto& [m, c] = *terms_.begin();
  BigInt coeff;
  if (c == 1) {
    coeff = 1;
  } else if (c == -1 && e.is_integer()) {
    coeff = (e.integer_value() % 2 == 0) ? 1 : -1;
  } else {
    throw PolyError(PolyErrorCode::NonIntegralPower,
                    "coefficient " + c.str() + " raised to power " + e.to_string());
  }
  Monomial out;
  for (const auto& [v, ve] : m) out.emplace(v, ve.times(e));
  MultiPoly p = monomial(coeff, std::move(out));
  p.merge_vars(vars_);
  return p;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& bindings) const {
  MultiPoly out;
  for (const auto& v : vars_) {
    auto it = bindings.find(v);
    if (it == bindings.end()) {
      out.vars_.push_back(v);
    } else {
      out.merge_vars(it->second.vars_);
    }
  }
  for (const auto& [m, c] : terms_) {
    MultiPoly term = constant(c);
    for (const auto& [v, e] : m) {
      auto it = bindings.find(v);
      term = term * (it == bindings.end() ? variable(v, e) : it->second.pow(e));
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::with_vars(std::vector<std::string> vars) const {
  MultiPoly out;
  out.vars_ = std::move(vars);
  out.merge_vars(vars_);
  out.terms_ = terms_;
  return out;
}

namespace {

// Exponents of a monomial laid out by declared variable order.
std::vector<QExp> exp_vector(const Monomial& m, const std::vector<std::string>& vars) {
  std::vector<QExp> v(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = m.find(vars[i]);
    if (it != m.end()) v[i] = it->second;
  }
  return v;
}

// Leading variable descending, remaining ascending.
bool print_order_less(const std::vector<QExp>& a, const std::vector<QExp>& b) {
  if (!a.empty() && a[0] != b[0]) return a[0] > b[0];
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  struct Entry {
    std::vector<QExp> exps;
    const BigInt* coeff;
  };
  std::vector<Entry> entries;
  entries.reserve(terms_.size());
  for (const auto& [m, c] : terms_) entries.push_back({exp_vector(m, vars_), &c});
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return print_order_less(a.exps, b.exps); });

  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, coeff] : entries) {
    BigInt mag = *coeff < 0 ? BigInt(-*coeff) : *coeff;
    if (first) {
      if (*coeff < 0) os << "-";
      first = false;
    } else {
      os << (*coeff < 0 ? " - " : " + ");
    }
    std::string factors;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (exps[i].is_zero()) continue;
      if (!factors.empty()) factors += "*";
      factors += vars_[i];
      if (exps[i] != QExp::integer(1)) factors += "^" + exps[i].to_string();
    }
    if (factors.empty()) {
      os << mag.str();
    } else if (mag == 1) {
      os << factors;
    } else {
      os << mag.str() << "*" << factors;
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly p;
    skip_ws();
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    parse_term(p, neg);
    skip_ws();
    while (pos_ < text_.size()) {
      bool minus;
      if (accept('+')) minus = false;
      else if (accept('-')) minus = true;
      else fail("expected '+' or '-'");
      parse_term(p, minus);
      skip_ws();
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw PolyError(PolyErrorCode::ParseError,
                    "polynomial syntax error at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  bool peek_ident() {
    skip_ws();
    return pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_');
  }

  BigInt parse_digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) fail("expected variable name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t parse_int64() {
    bool neg = accept('-');
    BigInt v = parse_digits();
    if (neg) v = -v;
    return static_cast<std::int64_t>(v);
  }

  QExp parse_exponent() {
    if (accept('(')) {
      std::int64_t num = parse_int64();
      QExp e = QExp::integer(num);
      if (accept('/')) {
        std::int64_t den = parse_int64();
        if (den == 2) e = QExp::half(num);
        else if (den == 4) e = QExp::quarter(num);
        else if (den == 1) e = QExp::integer(num);
        else fail("exponent denominator must be 1, 2 or 4");
      }
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    return QExp::integer(parse_int64());
  }

  void parse_term(MultiPoly& p, bool negative) {
    BigInt coeff = 1;
    Monomial m;
    bool any = false;
    if (peek_digit()) {
      coeff = parse_digits();
      any = true;
    }
    while (true) {
      if (any && !accept('*')) break;
      if (!any && !peek_ident()) break;
      std::string v = parse_ident();
      QExp e = QExp::integer(1);
      if (accept('^')) e = parse_exponent();
      auto [it, fresh] = m.emplace(std::move(v), e);
      if (!fresh) it->second = it->second + e;
      any = true;
    }
    if (!any) fail("expected a term");
    std::erase_if(m, [](const auto& kv) { return kv.second.is_zero(); });
    p.add_term(m, negative ? BigInt(-coeff) : coeff);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace ribbonlink
