/*
 * multipoly.hpp
 * -------------
 * Exact multivariate Laurent polynomials with arbitrary-precision integer
 * coefficients and exponents on the quarter-integer lattice.
 *
 * A monomial maps variable names to exponents (zero exponents are never
 * stored); a polynomial maps monomials to nonzero coefficients, so the
 * stored form is canonical and operator== is mathematical equality.
 * The variable list only fixes printing order.
 */
#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ribbonlink {

using BigInt = boost::multiprecision::cpp_int;

// Exponent q/4 stored as the integer q. Quarters are the smallest lattice
// needed: subset ranks give integers, edge signs give halves, the Jones
// substitution t^{+-1/4} gives quarters.
class QExp {
 public:
  constexpr QExp() = default;
  static constexpr QExp integer(std::int64_t n) { return QExp(4 * n); }
  static constexpr QExp half(std::int64_t n) { return QExp(2 * n); }
  static constexpr QExp quarter(std::int64_t n) { return QExp(n); }

  constexpr std::int64_t quarters() const { return q_; }
  constexpr bool is_zero() const { return q_ == 0; }
  constexpr bool is_integer() const { return q_ % 4 == 0; }
  constexpr bool is_negative() const { return q_ < 0; }
  constexpr std::int64_t integer_value() const { return q_ / 4; }  // requires is_integer

  friend constexpr QExp operator+(QExp a, QExp b) { return QExp(a.q_ + b.q_); }
  friend constexpr QExp operator-(QExp a, QExp b) { return QExp(a.q_ - b.q_); }
  constexpr QExp operator-() const { return QExp(-q_); }
  // Product of two exponents; throws if it falls off the quarter lattice.
  QExp times(QExp o) const;

  friend constexpr auto operator<=>(QExp a, QExp b) = default;

  // "2", "-3" for integers; "(1/2)", "(-3/4)" otherwise (the form used
  // after '^' in the text grammar).
  std::string to_string() const;

 private:
  explicit constexpr QExp(std::int64_t q) : q_(q) {}
  std::int64_t q_ = 0;
};

enum class PolyErrorCode {
  NegativePowerOfPolynomial,
  NonIntegralPower,
  ParseError,
};

class PolyError : public std::runtime_error {
 public:
  PolyError(PolyErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  PolyErrorCode code() const { return code_; }

 private:
  PolyErrorCode code_;
};

// Variable name -> exponent; entries with zero exponent are never stored.
using Monomial = std::map<std::string, QExp>;

class MultiPoly {
 public:
  MultiPoly() = default;  // the zero polynomial
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(const BigInt& c);
  static MultiPoly constant(long long c) { return constant(BigInt(c)); }
  static MultiPoly variable(std::string name, QExp e = QExp::integer(1));
  static MultiPoly monomial(const BigInt& coeff, Monomial m);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  const std::vector<std::string>& vars() const { return vars_; }
  BigInt coefficient(const Monomial& m) const;

  // Accumulates c into the coefficient of m, dropping it if it cancels.
  void add_term(const Monomial& m, const BigInt& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  // p^e. Any polynomial to a nonnegative integer power; single-term
  // polynomials with coefficient +-1 to any quarter-integer power.
  // Throws NegativePowerOfPolynomial / NonIntegralPower otherwise.
  MultiPoly pow(QExp e) const;

  // Evaluation homomorphism: bound variables are replaced by their binding,
  // unbound ones pass through. Rejects a multi-term binding for a variable
  // occurring with a negative (or fractional) exponent.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const;

  // Returns a copy whose declared variable order starts with `vars`
  // (remaining used variables follow in their old order).
  MultiPoly with_vars(std::vector<std::string> vars) const;

  // Canonical text form: terms ordered by descending power of the leading
  // variable, then ascending lexicographic on the remaining exponents;
  // factors in declared variable order; coefficient +-1 elided except on
  // constants. Zero prints "0".
  std::string to_string() const;

  // Inverse of to_string for the text grammar (also accepts unparenthesized
  // negative integer exponents). parse(p.to_string()) == p.
  static MultiPoly parse(std::string_view text);

 private:
  void note_vars(const Monomial& m);
  void merge_vars(const std::vector<std::string>& other);

  std::vector<std::string> vars_;       // printing order; superset of used vars
  std::map<Monomial, BigInt> terms_;    // canonical: no zero coefficients
};

}  // namespace ribbonlink
