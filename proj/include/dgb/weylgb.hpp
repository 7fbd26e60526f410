#pragma once

// Classical Gröbner bases in the Weyl algebra A_n(Q) for the elimination
// order that compares derivation exponents first and x-exponents second.

#include "dgb/deltagb.hpp"
#include "dgb/weylops.hpp"

#include <vector>

namespace dgb {

/// Exponent (x-part, d-part) of the monomial x^a d^b.
struct WeylExp {
  ExpVec x;
  ExpVec d;

  ExpVec joined() const { return x.concat(d); }
  friend bool operator==(const WeylExp&, const WeylExp&) = default;
};

std::string to_string(const WeylExp& e);

class WeylOrder {
 public:
  WeylOrder(MonomialOrder order_x, MonomialOrder order_d);
  /// order_x from ring.order_x, order_d from ring.order_delta; needs m = 0.
  explicit WeylOrder(const RingSpec& ring);

  const MonomialOrder& order_x() const { return order_x_; }
  const MonomialOrder& order_d() const { return order_d_; }
  std::strong_ordering compare(const WeylExp& a, const WeylExp& b) const;
  bool less(const WeylExp& a, const WeylExp& b) const { return compare(a, b) < 0; }

 private:
  MonomialOrder order_x_;
  MonomialOrder order_d_;
};

/// Leading exponent and coefficient of P under the elimination order.
WeylExp exp_full(const DiffOp& p, const WeylOrder& worder);
Coefficient leading_coefficient(const DiffOp& p, const WeylOrder& worder);

/// x^a d^b as an operator.
DiffOp weyl_monomial(const WeylExp& e, const Coefficient& c);

struct WeylDivision {
  std::vector<DiffOp> cofactors;
  DiffOp remainder;
};

/// P = sum cofactors[i] * G[i] + remainder with no remainder monomial in
/// any exp(G_i) + N^{2n}. Each step uses the first G_i whose leading
/// exponent divides the current leading exponent.
WeylDivision divide_weyl(const DiffOp& p, std::span<const DiffOp> g, const WeylOrder& worder);

/// S(P, Q) = (1/lc P) x^u d^v P - (1/lc Q) x^s d^t Q with both shifted
/// leading exponents equal to the lcm.
DiffOp s_operator(const DiffOp& p, const DiffOp& q, const WeylOrder& worder);

struct WeylStats {
  std::size_t s_pairs = 0;
  std::size_t reduction_steps = 0;
  std::size_t additions = 0;
};

struct WeylGB {
  std::vector<DiffOp> ops;
  WeylOrder worder;
};

/// Reduced Gröbner basis, normalized to coprime integer coefficients with
/// positive leading coefficient, ascending by leading exponent. Pairs are
/// selected by smallest lcm, ties by index. CapExceeded past `cap`
/// additions. Requires m = 0.
WeylGB buchberger_weyl(std::span<const DiffOp> g, const RingSpec& ring, std::size_t cap = 10000,
                       WeylStats* stats = nullptr);

bool is_gb(std::span<const DiffOp> g, const WeylOrder& worder);

/// Truth of "is_gb(G) implies G is a Gröbner delta-base for order_delta".
bool gb_implies_delta_check(std::span<const DiffOp> g, const RingSpec& ring);

}  // namespace dgb
