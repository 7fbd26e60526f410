#pragma once

// Exact coefficients, exponent vectors, monomial orders and sparse
// polynomials over the rationals.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dgb {

/// Raised when an operation is called with arguments from mismatched
/// rings or otherwise outside its contract.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a partial function is applied outside its domain, e.g. the
/// leading exponent of the zero operator.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact rational. GMP keeps every result of +, -, *, / canonical.
using Coefficient = mpq_class;

/// Canonical rational p/q; throws DomainError when q == 0.
Coefficient make_rational(const mpz_class& num, const mpz_class& den);

class ExpVec {
 public:
  using value_type = std::uint32_t;

  ExpVec() = default;
  explicit ExpVec(std::size_t length) : e_(length, 0) {}
  ExpVec(std::initializer_list<value_type> entries) : e_(entries) {}
  explicit ExpVec(std::vector<value_type> entries) : e_(std::move(entries)) {}

  /// power * e_i in N^length.
  static ExpVec unit(std::size_t length, std::size_t i, value_type power = 1);

  std::size_t size() const { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  std::span<const value_type> entries() const { return e_; }

  std::uint64_t total_degree() const;
  bool is_zero() const;

  /// Componentwise difference; DomainError when some entry would go negative.
  ExpVec operator-(const ExpVec& other) const;
  ExpVec operator+(const ExpVec& other) const;

  /// Concatenation (a, b) in N^{|a|+|b|}.
  ExpVec concat(const ExpVec& other) const;
  ExpVec slice(std::size_t begin, std::size_t count) const;

  /// Structural (lexicographic on raw entries) comparison. This is the key
  /// order for containers, not a user-facing monomial order.
  friend auto operator<=>(const ExpVec&, const ExpVec&) = default;
  friend bool operator==(const ExpVec&, const ExpVec&) = default;

 private:
  std::vector<value_type> e_;
};

ExpVec lcm_exp(const ExpVec& a, const ExpVec& b);
/// True iff b lies in a + N^n.
bool divides(const ExpVec& a, const ExpVec& b);
std::string to_string(const ExpVec& e);

enum class OrderKind { lex, deglex, degrevlex };

OrderKind parse_order_kind(std::string_view name);
std::string_view order_kind_name(OrderKind kind);

/// Admissible order on N^n. precedence[0] is the index of the most
/// significant variable.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::size_t nvars);
  MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence);

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& precedence() const { return precedence_; }
  std::size_t size() const { return precedence_.size(); }

  std::strong_ordering compare(const ExpVec& a, const ExpVec& b) const;
  bool less(const ExpVec& a, const ExpVec& b) const { return compare(a, b) < 0; }
  const ExpVec& max(const ExpVec& a, const ExpVec& b) const { return less(a, b) ? b : a; }

  /// Same kind and precedence, extended by `extra` trailing variables that
  /// rank below all existing ones.
  MonomialOrder extended(std::size_t extra) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_ = OrderKind::deglex;
  std::vector<std::size_t> precedence_;
};

std::strong_ordering compare(const MonomialOrder& order, const ExpVec& a, const ExpVec& b);

struct Term {
  ExpVec exp;
  Coefficient coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in a fixed number of variables. Terms are kept sorted
/// ascending by the structural ExpVec order with no zero coefficients, so
/// equality is term-list equality.
class Poly {
 public:
  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Coefficient& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly monomial(ExpVec exp, const Coefficient& c);
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  Coefficient coefficient(const ExpVec& exp) const;
  std::uint64_t total_degree() const;

  /// Leading term under `order`. DomainError on the zero polynomial.
  const Term& leading_term(const MonomialOrder& order) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Coefficient& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Coefficient& c) { return a *= c; }
  friend Poly operator*(const Coefficient& c, Poly a) { return a *= c; }

  /// this + c * x^shift * g, computed by a single merge.
  Poly add_scaled(const Poly& g, const Coefficient& c, const ExpVec& shift) const;

  /// Formal partial derivative with respect to variable i.
  Poly partial(std::size_t i) const;

  Coefficient evaluate(std::span<const Coefficient> point) const;

  /// Embeds into a ring with `extra` more variables (appended last).
  Poly with_extra_variables(std::size_t extra) const;
  /// Drops the last variables; UsageError if any of them occurs.
  Poly restricted_to(std::size_t nvars) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Formal partial derivative of f by x_i, allowed only for derivation
/// variables i < n_derivations.
Poly poly_partial(const Poly& f, std::size_t i, std::size_t n_derivations);

/// Factor s such that s * c has coprime integer entries over all c, with
/// positive sign. Returns 1 for an all-zero input.
Coefficient primitive_scale(std::span<const Coefficient> coefficients);

/// Rendering. Terms are listed by descending total degree, ties broken
/// with the higher-index variable dominant, so x1*(x2 - x1) renders as
/// "x1*x2 - x1^2".
std::string format_rational(const Coefficient& c);
std::string format_poly(const Poly& f, std::span<const std::string> names);
/// True when format_poly output needs parentheses as a factor.
bool needs_parentheses(const Poly& f);

}  // namespace dgb
