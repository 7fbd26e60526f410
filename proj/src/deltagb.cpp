#include "dgb/deltagb.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace dgb {

// --------------------------------------------------------- GeneratorSet

struct GeneratorSet::Cache {
  std::mutex mu;
  std::map<std::vector<std::size_t>, PolyIdeal> ideals;
  std::map<std::vector<std::size_t>, std::vector<SyzygyVector>> syz;
  std::map<std::pair<std::size_t, ExpVec>, DiffOp> shifts;
};

GeneratorSet::GeneratorSet(RingSpec ring, std::vector<DiffOp> ops)
    : ring_(std::move(ring)), ops_(std::move(ops)), cache_(std::make_shared<Cache>()) {
  for (const auto& p : ops_) {
    if (p.n() != ring_.n || p.nvars() != ring_.nvars()) throw UsageError("generator does not belong to the ring");
    if (p.is_zero()) throw UsageError("generator sets may not contain the zero operator");
    auto in = in_delta(p, ring_.order_delta);
    exps_.push_back(std::move(in.exponent));
    coeffs_.push_back(std::move(in.coeff));
  }
}

std::vector<std::size_t> GeneratorSet::participating(const ExpVec& alpha) const {
  if (alpha.size() != ring_.n) throw UsageError("exponent has the wrong number of derivations");
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < ops_.size(); ++i)
    if (divides(exps_[i], alpha)) idx.push_back(i);
  return idx;
}

GeneratorSet GeneratorSet::with(DiffOp extra) const {
  if (extra.is_zero()) throw UsageError("generator sets may not contain the zero operator");
  GeneratorSet g(*this);
  auto in = in_delta(extra, ring_.order_delta);
  g.exps_.push_back(std::move(in.exponent));
  g.coeffs_.push_back(std::move(in.coeff));
  g.ops_.push_back(std::move(extra));
  return g;
}

const PolyIdeal& GeneratorSet::coefficient_ideal(const std::vector<std::size_t>& indices) const {
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->ideals.find(indices);
    if (it != cache_->ideals.end()) return it->second;
  }
  std::vector<Poly> gens;
  for (std::size_t i : indices) gens.push_back(coeffs_.at(i));
  PolyIdeal ideal(std::move(gens), ring_.order_x);
  ideal.groebner_basis();
  std::lock_guard lock(cache_->mu);
  return cache_->ideals.try_emplace(indices, std::move(ideal)).first->second;
}

const std::vector<SyzygyVector>& GeneratorSet::coefficient_syzygies(const std::vector<std::size_t>& indices) const {
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->syz.find(indices);
    if (it != cache_->syz.end()) return it->second;
  }
  std::vector<Poly> gens;
  for (std::size_t i : indices) gens.push_back(coeffs_.at(i));
  auto s = syzygies(gens, ring_.order_x);
  std::lock_guard lock(cache_->mu);
  return cache_->syz.try_emplace(indices, std::move(s)).first->second;
}

const DiffOp& GeneratorSet::shifted(std::size_t i, const ExpVec& gamma) const {
  auto key = std::make_pair(i, gamma);
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->shifts.find(key);
    if (it != cache_->shifts.end()) return it->second;
  }
  DiffOp s = derivation_times(gamma, ops_.at(i));
  std::lock_guard lock(cache_->mu);
  return cache_->shifts.try_emplace(std::move(key), std::move(s)).first->second;
}

// ----------------------------------------------------------- cone ideals

std::vector<Poly> cone_coefficients(const ExpVec& alpha, const GeneratorSet& f) {
  std::vector<Poly> out;
  for (std::size_t i : f.participating(alpha)) out.push_back(f.coefficient(i));
  return out;
}

PolyIdeal cone_ideal(const ExpVec& alpha, const GeneratorSet& f) {
  return PolyIdeal(cone_coefficients(alpha, f), f.ring().order_x);
}

bool is_reduced(const DiffOp& p, const GeneratorSet& f) {
  if (p.is_zero()) return true;
  auto in = in_delta(p, f.ring().order_delta);
  auto idx = f.participating(in.exponent);
  if (idx.empty()) return true;
  return !f.coefficient_ideal(idx).contains(in.coeff);
}

// ------------------------------------------------------------- reduction

ReductionTrace reduce(const DiffOp& p, const GeneratorSet& f, const ReduceOptions& options, DeltaStats* stats) {
  const RingSpec& ring = f.ring();
  if (p.n() != ring.n || p.nvars() != ring.nvars()) throw UsageError("operator does not belong to the ring");
  if (f.size() == 0) throw UsageError("reduction needs a nonempty generator set");
  const MonomialOrder& od = ring.order_delta;

  ReductionTrace tr;
  tr.cofactors.assign(f.size(), DiffOp(ring));
  tr.remainder = DiffOp(ring);
  DiffOp work = p;
  if (stats) ++stats->reductions;

  while (!work.is_zero()) {
    auto in = in_delta(work, od);
    const ExpVec alpha = in.exponent;
    auto idx = f.participating(alpha);
    Poly nf = in.coeff;
    if (!idx.empty()) {
      const PolyIdeal& ideal = f.coefficient_ideal(idx);
      const TrackedBasis& tb = ideal.tracked();
      if (!tb.polys.empty()) {
        auto div = comm_divide(in.coeff, tb.polys, ideal.order());
        nf = std::move(div.remainder);
        if (nf.is_zero() || options.tail_reduce) {
          bool any = false;
          for (std::size_t k = 0; k < idx.size(); ++k) {
            Poly q(ring.nvars());
            for (std::size_t j = 0; j < tb.polys.size(); ++j)
              if (!div.cofactors[j].is_zero()) q += div.cofactors[j] * tb.rows[j][k];
            if (q.is_zero()) continue;
            any = true;
            const std::size_t i = idx[k];
            const ExpVec gamma = alpha - f.exponent(i);
            work -= q * f.shifted(i, gamma);
            tr.cofactors[i].add_term(gamma, q);
          }
          if (any) ++tr.steps;
        }
      }
    }
    if (!nf.is_zero()) {
      if (!options.tail_reduce) {
        tr.remainder += work;
        break;
      }
      DiffOp lead = DiffOp::term(ring.n, alpha, nf);
      tr.remainder += lead;
      work -= lead;
    }
    if (!work.is_zero() && !od.less(exp_delta(work, od), alpha))
      throw std::logic_error("reduction step did not lower the delta-exponent");
  }
  if (stats) stats->reduction_steps += tr.steps;
  return tr;
}

// ---------------------------------------------------------- S-operators

std::vector<ExpVec> lcm_targets(const GeneratorSet& f) {
  if (f.size() == 0) throw UsageError("lcm targets of an empty family");
  std::set<ExpVec> closure;
  std::vector<ExpVec> frontier;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (closure.insert(f.exponent(i)).second) frontier.push_back(f.exponent(i));
  // Every subset lcm is a chain of pairwise lcms with single exponents.
  std::vector<ExpVec> base(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<ExpVec> next;
    for (const auto& a : frontier)
      for (const auto& b : base) {
        ExpVec l = lcm_exp(a, b);
        if (closure.insert(l).second) next.push_back(std::move(l));
      }
    frontier = std::move(next);
  }
  std::vector<ExpVec> out(closure.begin(), closure.end());
  const auto& od = f.ring().order_delta;
  std::sort(out.begin(), out.end(), [&](const ExpVec& a, const ExpVec& b) { return od.less(a, b); });
  return out;
}

std::vector<SDeltaOp> s_delta_operators(const GeneratorSet& f, const ExpVec& alpha, DeltaStats* stats) {
  const RingSpec& ring = f.ring();
  auto idx = f.participating(alpha);
  if (idx.empty()) throw UsageError(to_string(alpha) + " is not an lcm target of the family");
  ExpVec l = f.exponent(idx[0]);
  for (std::size_t i : idx) l = lcm_exp(l, f.exponent(i));
  if (l != alpha) throw UsageError(to_string(alpha) + " is not an lcm target of the family");

  std::vector<SDeltaOp> out;
  if (idx.size() < 2) return out;  // a single nonzero coefficient has no syzygy
  for (const auto& syz : f.coefficient_syzygies(idx)) {
    SDeltaOp s{alpha, SyzygyVector(f.size(), Poly(ring.nvars())), DiffOp(ring)};
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (syz[k].is_zero()) continue;
      const std::size_t i = idx[k];
      s.lambda[i] = syz[k];
      s.op += syz[k] * f.shifted(i, alpha - f.exponent(i));
    }
    if (!s.op.is_zero() && !ring.order_delta.less(exp_delta(s.op, ring.order_delta), alpha))
      throw std::logic_error("S-delta operator does not drop below its lcm target");
    out.push_back(std::move(s));
  }
  if (stats) stats->s_operators += out.size();
  return out;
}

bool is_delta_groebner(const GeneratorSet& f, const ReduceOptions& options, DeltaStats* stats) {
  for (const auto& alpha : lcm_targets(f))
    for (const auto& s : s_delta_operators(f, alpha, stats))
      if (!reduce(s.op, f, options, stats).remainder.is_zero()) return false;
  return true;
}

// ------------------------------------------------------------ completion

std::vector<ExpVec> minimal_exponents(std::vector<ExpVec> exps, const MonomialOrder& order) {
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<ExpVec> out;
  for (const auto& e : exps) {
    bool covered = std::any_of(exps.begin(), exps.end(), [&](const ExpVec& o) { return o != e && divides(o, e); });
    if (!covered) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [&](const ExpVec& a, const ExpVec& b) { return order.less(a, b); });
  return out;
}

DeltaBasis::DeltaBasis(GeneratorSet set, std::size_t additions) : set_(std::move(set)), additions_(additions) {
  std::vector<ExpVec> exps;
  for (std::size_t i = 0; i < set_.size(); ++i) exps.push_back(set_.exponent(i));
  stair_ = minimal_exponents(std::move(exps), set_.ring().order_delta);
  for (const auto& a : stair_) cones_.emplace(a, cone_ideal(a, set_));
}

DeltaBasis DeltaBasis::certify(GeneratorSet f, const ReduceOptions& options) {
  if (!is_delta_groebner(f, options)) throw DomainError("the family is not a Groebner delta-base");
  return DeltaBasis(std::move(f), 0);
}

DeltaBasis complete(const GeneratorSet& f, const CompletionOptions& options, DeltaStats* stats) {
  if (f.size() == 0) throw UsageError("completion needs a nonempty family");
  GeneratorSet current = f;
  std::size_t added = 0;
  // (target, participating indices) whose S-delta operators reduced to 0.
  std::set<std::pair<ExpVec, std::vector<std::size_t>>> settled;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& alpha : lcm_targets(current)) {
      auto key = std::make_pair(alpha, current.participating(alpha));
      if (key.second.size() < 2 || settled.count(key)) continue;
      for (const auto& s : s_delta_operators(current, alpha, stats)) {
        auto tr = reduce(s.op, current, options.reduce, stats);
        if (tr.remainder.is_zero()) continue;
        if (added == options.cap)
          throw CapExceeded("completion exceeded the cap of " + std::to_string(options.cap) + " additions");
        current = current.with(primitive_normalized(tr.remainder, current.ring()));
        ++added;
        if (stats) ++stats->additions;
        changed = true;
        break;
      }
      if (changed) break;
      settled.insert(std::move(key));
    }
  }
  return DeltaBasis(std::move(current), added);
}

std::vector<ExpVec> delta_stair(const DeltaBasis& b) {
  return b.stair();
}

PolyIdeal cone_ideal_of_ideal(const ExpVec& alpha, const DeltaBasis& b) {
  return cone_ideal(alpha, b.generators());
}

MembershipResult member(const DiffOp& p, const DeltaBasis& b, const ReduceOptions& options) {
  auto tr = reduce(p, b.generators(), options);
  MembershipResult r;
  r.member = tr.remainder.is_zero();
  if (r.member) r.certificate = std::move(tr);
  return r;
}

}  // namespace dgb
