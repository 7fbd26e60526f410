#pragma once

// Commutative Gröbner engine over Q[x_1..x_N]: division, reduced bases,
// membership with cofactors and syzygy modules.

#include "dgb/arith.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace dgb {

struct DivisionResult {
  std::vector<Poly> cofactors;
  Poly remainder;
};

/// Multivariate division: f = sum cofactors[i]*divisors[i] + remainder, and
/// no remainder monomial is divisible by a leading monomial of a divisor.
/// Each step uses the first divisor (in list order) whose leading monomial
/// divides the current leading monomial.
DivisionResult comm_divide(const Poly& f, std::span<const Poly> divisors, const MonomialOrder& order);

/// A Gröbner basis together with the expression of every element in terms
/// of the generators it was computed from:
///   polys[j] = sum_k rows[j][k] * generators[k].
struct TrackedBasis {
  std::vector<Poly> polys;
  std::vector<std::vector<Poly>> rows;
};

/// Reduced Gröbner basis of the ideal generated by `generators` (zeros
/// allowed), monic and sorted ascending by leading monomial, with the
/// transformation rows. An empty basis denotes the zero ideal.
TrackedBasis tracked_groebner(std::span<const Poly> generators, const MonomialOrder& order);

/// Reduced, monic, ascending-sorted Gröbner basis; empty for the zero ideal.
std::vector<Poly> comm_buchberger(std::span<const Poly> generators, const MonomialOrder& order);

class PolyIdeal {
 public:
  /// The zero ideal of Q[x_1..x_N] with N = order.size().
  explicit PolyIdeal(MonomialOrder order);
  PolyIdeal(std::vector<Poly> generators, MonomialOrder order);

  std::size_t nvars() const { return order_.size(); }
  const std::vector<Poly>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }

  /// Reduced Gröbner basis, computed on first use.
  const std::vector<Poly>& groebner_basis() const;
  const TrackedBasis& tracked() const;

  bool is_zero() const { return groebner_basis().empty(); }
  bool contains(const Poly& f) const;
  Poly normal_form(const Poly& f) const;

  /// Same ideal (compares reduced bases, so the orders must agree).
  bool same_ideal(const PolyIdeal& other) const;

 private:
  struct Cache;
  std::vector<Poly> generators_;
  MonomialOrder order_;
  std::shared_ptr<Cache> cache_;
};

/// Cofactors q with f = sum q_i * I.generators()[i], or nullopt if f is not
/// in I. Cofactors come from division by the reduced basis composed with
/// the basis' transformation rows.
std::optional<std::vector<Poly>> ideal_member_with_cofactors(const Poly& f, const PolyIdeal& ideal);

bool is_unit_ideal(const PolyIdeal& ideal);

/// Product ideal: all products of one generator from each factor, dropping
/// products that already lie in the ideal of the ones kept before them.
PolyIdeal product_ideal(std::span<const PolyIdeal> factors, const MonomialOrder& order);

using SyzygyVector = std::vector<Poly>;

/// Generators of the module of syzygies of `generators`. Schreyer syzygies
/// of the reduced basis are transported back through the transformation
/// rows; the result is pruned of zero and redundant vectors and each vector
/// is scaled to coprime integer coefficients with the leading coefficient
/// of its last nonzero entry negative.
std::vector<SyzygyVector> syzygies(std::span<const Poly> generators, const MonomialOrder& order);

/// Whether v lies in the submodule of Q[x]^r generated by `module`.
bool module_contains(std::span<const SyzygyVector> module, const SyzygyVector& v, const MonomialOrder& order);

}  // namespace dgb
