#pragma once

// Linear differential operators with polynomial coefficients,
// D = Q[x_1..x_{n+m}][d_1..d_n], where d_i differentiates x_i and the
// parameters x_{n+1..n+m} are constants for every derivation.

#include "dgb/arith.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace dgb {

struct RingSpec {
  std::size_t n = 1;  // derivation variables
  std::size_t m = 0;  // parameter variables
  std::vector<std::string> x_names;  // n + m names
  std::vector<std::string> d_names;  // n names
  MonomialOrder order_delta;         // on N^n
  MonomialOrder order_x;             // on N^{n+m}; used for computations in H

  /// Validates the invariants (n >= 1, names distinct, order sizes).
  RingSpec(std::size_t n, std::size_t m, std::vector<std::string> x_names, std::vector<std::string> d_names,
           MonomialOrder order_delta, MonomialOrder order_x);

  /// x1..x_{n+m}, d1..dn with deglex orders and first variables dominant.
  static RingSpec standard(std::size_t n, std::size_t m = 0, OrderKind delta = OrderKind::deglex,
                           OrderKind x = OrderKind::deglex);

  std::size_t nvars() const { return n + m; }
  Poly x(std::size_t i) const { return Poly::variable(nvars(), i); }
  Poly constant(const Coefficient& c) const { return Poly::constant(nvars(), c); }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

class DiffOp {
 public:
  using TermMap = std::map<ExpVec, Poly>;

  DiffOp() = default;
  DiffOp(std::size_t n, std::size_t nvars) : n_(n), nvars_(nvars) {}
  explicit DiffOp(const RingSpec& ring) : DiffOp(ring.n, ring.nvars()) {}

  /// The operator p * d^exp.
  static DiffOp term(std::size_t n, ExpVec exp, Poly p);
  static DiffOp from_poly(std::size_t n, Poly p);
  static DiffOp derivation(const RingSpec& ring, std::size_t i);

  std::size_t n() const { return n_; }
  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Poly coefficient(const ExpVec& exp) const;
  std::size_t term_count() const;

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& other);
  DiffOp& operator-=(const DiffOp& other);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }

  /// Left multiplication by an element of H: p * sum p_a d^a = sum (p p_a) d^a.
  friend DiffOp operator*(const Poly& p, const DiffOp& op);
  friend DiffOp operator*(const Coefficient& c, const DiffOp& op);

  /// Adds c * d^exp.
  void add_term(const ExpVec& exp, const Poly& c);

  friend bool operator==(const DiffOp&, const DiffOp&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// The initial term c * zeta^exponent in H[zeta].
struct InitialTerm {
  Poly coeff;
  ExpVec exponent;
};

DiffOp op_add(const DiffOp& p, const DiffOp& q);

/// d^gamma(f), the iterated partial derivative of a coefficient.
Poly derive(const Poly& f, const ExpVec& gamma);

/// Product in D, via d^b p = sum_{g <= b} binom(b, g) d^g(p) d^{b-g}.
DiffOp leibniz_mul(const DiffOp& p, const DiffOp& q);

/// d^gamma * P.
DiffOp derivation_times(const ExpVec& gamma, const DiffOp& p);

/// Exponents with nonzero coefficient; DomainError for P = 0.
std::set<ExpVec> newton_delta_diagram(const DiffOp& p);
ExpVec exp_delta(const DiffOp& p, const MonomialOrder& order);
Poly c_delta(const DiffOp& p, const MonomialOrder& order);
InitialTerm in_delta(const DiffOp& p, const MonomialOrder& order);

/// Rescales P to coprime integer coefficients with c_delta(P) having a
/// positive leading coefficient under order_x.
DiffOp primitive_normalized(const DiffOp& p, const RingSpec& ring);

/// Canonical display: terms descending by order_delta, each rendered as
/// `poly*d1^a1*...*dn^an`. Re-parses to the same operator.
std::string format_op(const DiffOp& p, const RingSpec& ring);

}  // namespace dgb
