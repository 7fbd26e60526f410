#pragma once

// Gröbner delta-bases of left ideals in D = H[d_1..d_n]: reduction against
// a generator set, cone ideals C(alpha; F), S-delta operators, the
// S-delta criterion and the completion procedure.

#include "dgb/commgb.hpp"
#include "dgb/weylops.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dgb {

/// Completion ran past its configured number of basis additions.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Work counters, summed over a computation.
struct DeltaStats {
  std::size_t reductions = 0;       // reduce() calls
  std::size_t reduction_steps = 0;  // elimination steps inside them
  std::size_t s_operators = 0;      // S-delta operators built
  std::size_t additions = 0;        // elements appended by completion
};

/// A finite family F of nonzero operators with cached delta-invariants.
/// Copies share the caches; `with` extends the family keeping indices.
class GeneratorSet {
 public:
  GeneratorSet(RingSpec ring, std::vector<DiffOp> ops);

  const RingSpec& ring() const { return ring_; }
  const std::vector<DiffOp>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  const DiffOp& operator[](std::size_t i) const { return ops_[i]; }
  const ExpVec& exponent(std::size_t i) const { return exps_[i]; }
  const Poly& coefficient(std::size_t i) const { return coeffs_[i]; }

  /// Indices i (ascending) with alpha in exp(P_i) + N^n.
  std::vector<std::size_t> participating(const ExpVec& alpha) const;

  GeneratorSet with(DiffOp extra) const;

  /// Ideal of H generated by the delta-coefficients at `indices`.
  const PolyIdeal& coefficient_ideal(const std::vector<std::size_t>& indices) const;
  /// Syzygy generators of the delta-coefficients at `indices`.
  const std::vector<SyzygyVector>& coefficient_syzygies(const std::vector<std::size_t>& indices) const;
  /// d^gamma * P_i.
  const DiffOp& shifted(std::size_t i, const ExpVec& gamma) const;

 private:
  struct Cache;
  RingSpec ring_;
  std::vector<DiffOp> ops_;
  std::vector<ExpVec> exps_;
  std::vector<Poly> coeffs_;
  std::shared_ptr<Cache> cache_;
};

/// K(alpha; F): delta-coefficients of the members whose exponent divides
/// alpha, in input order.
std::vector<Poly> cone_coefficients(const ExpVec& alpha, const GeneratorSet& f);
/// C(alpha; F) = H K(alpha; F); the zero ideal when K is empty.
PolyIdeal cone_ideal(const ExpVec& alpha, const GeneratorSet& f);

/// Zero is reduced; otherwise P is reduced iff exp(P) lies in no cone of F
/// or c(P) is outside C(exp(P); F).
bool is_reduced(const DiffOp& p, const GeneratorSet& f);

/// P = sum cofactors[i] * F[i] + remainder.
struct ReductionTrace {
  std::vector<DiffOp> cofactors;
  DiffOp remainder;
  std::size_t steps = 0;
};

struct ReduceOptions {
  /// Keep reducing below an irreducible leading term: each remaining
  /// coefficient is replaced by its normal form modulo its cone ideal.
  bool tail_reduce = false;
};

ReductionTrace reduce(const DiffOp& p, const GeneratorSet& f, const ReduceOptions& options = {},
                      DeltaStats* stats = nullptr);

/// K(F): lcms of exponents over nonempty subsets, ascending by order_delta.
std::vector<ExpVec> lcm_targets(const GeneratorSet& f);

/// S_{alpha,tau} = sum_k lambda_k d^{alpha - exp(P_k)} P_k for one syzygy
/// generator lambda of the participating delta-coefficients.
struct SDeltaOp {
  ExpVec alpha;
  SyzygyVector lambda;  // length |F|, zero outside the participating indices
  DiffOp op;
};

/// UsageError if alpha is not in K(F).
std::vector<SDeltaOp> s_delta_operators(const GeneratorSet& f, const ExpVec& alpha, DeltaStats* stats = nullptr);

/// Every S-delta operator over every lcm target reduces to 0.
bool is_delta_groebner(const GeneratorSet& f, const ReduceOptions& options = {}, DeltaStats* stats = nullptr);

struct CompletionOptions {
  std::size_t cap = 10000;
  ReduceOptions reduce;
};

class DeltaBasis;
DeltaBasis complete(const GeneratorSet& f, const CompletionOptions& options, DeltaStats* stats);

/// A generating family certified to be a Gröbner delta-base, with its
/// minimal delta-stair and the cone ideal at every stair element.
class DeltaBasis {
 public:
  /// DomainError if `f` fails the S-delta criterion.
  static DeltaBasis certify(GeneratorSet f, const ReduceOptions& options = {});

  const GeneratorSet& generators() const { return set_; }
  const std::vector<DiffOp>& ops() const { return set_.ops(); }
  const RingSpec& ring() const { return set_.ring(); }
  const std::vector<ExpVec>& stair() const { return stair_; }
  const std::map<ExpVec, PolyIdeal>& cones() const { return cones_; }
  /// Number of elements completion appended to the input.
  std::size_t additions() const { return additions_; }

 private:
  friend DeltaBasis complete(const GeneratorSet&, const CompletionOptions&, DeltaStats*);
  DeltaBasis(GeneratorSet set, std::size_t additions);

  GeneratorSet set_;
  std::vector<ExpVec> stair_;
  std::map<ExpVec, PolyIdeal> cones_;
  std::size_t additions_ = 0;
};

/// Appends normalized nonzero remainders of S-delta operators until the
/// criterion holds. Lcm targets are visited in ascending order and the
/// scan restarts after every addition. CapExceeded past `cap` additions.
DeltaBasis complete(const GeneratorSet& f, const CompletionOptions& options = {}, DeltaStats* stats = nullptr);

/// Minimal antichain generating the union of the cones exp(P_i) + N^n,
/// ascending by order_delta.
std::vector<ExpVec> delta_stair(const DeltaBasis& b);
std::vector<ExpVec> minimal_exponents(std::vector<ExpVec> exps, const MonomialOrder& order);

/// C(alpha; I) for the ideal I generated by a certified base.
PolyIdeal cone_ideal_of_ideal(const ExpVec& alpha, const DeltaBasis& b);

struct MembershipResult {
  bool member = false;
  std::optional<ReductionTrace> certificate;
};

MembershipResult member(const DiffOp& p, const DeltaBasis& b, const ReduceOptions& options = {});

}  // namespace dgb
