#include "dgb/weylgb.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace dgb {

std::string to_string(const WeylExp& e) {
  return to_string(e.joined());
}

WeylOrder::WeylOrder(MonomialOrder order_x, MonomialOrder order_d)
    : order_x_(std::move(order_x)), order_d_(std::move(order_d)) {
  if (order_x_.size() != order_d_.size()) throw UsageError("Weyl orders need n x-variables and n derivations");
}

namespace {

const RingSpec& without_parameters(const RingSpec& ring) {
  if (ring.m != 0) throw DomainError("the Weyl algebra pipeline requires m = 0 parameter variables");
  return ring;
}

}  // namespace

WeylOrder::WeylOrder(const RingSpec& ring)
    : WeylOrder(without_parameters(ring).order_x, ring.order_delta) {}

std::strong_ordering WeylOrder::compare(const WeylExp& a, const WeylExp& b) const {
  auto c = order_d_.compare(a.d, b.d);
  if (c != 0) return c;
  return order_x_.compare(a.x, b.x);
}

namespace {

struct Lead {
  WeylExp exp;
  Coefficient coeff;
};

Lead lead_of(const DiffOp& p, const WeylOrder& w) {
  if (p.is_zero()) throw DomainError("leading exponent of the zero operator");
  if (p.nvars() != p.n()) throw DomainError("the Weyl algebra pipeline requires m = 0 parameter variables");
  auto in = in_delta(p, w.order_d());
  const Term& t = in.coeff.leading_term(w.order_x());
  return {WeylExp{t.exp, in.exponent}, t.coeff};
}

WeylExp split(const ExpVec& joined, std::size_t n) {
  return {joined.slice(0, n), joined.slice(n, n)};
}

}  // namespace

WeylExp exp_full(const DiffOp& p, const WeylOrder& worder) {
  return lead_of(p, worder).exp;
}

Coefficient leading_coefficient(const DiffOp& p, const WeylOrder& worder) {
  return lead_of(p, worder).coeff;
}

DiffOp weyl_monomial(const WeylExp& e, const Coefficient& c) {
  return DiffOp::term(e.d.size(), e.d, Poly::monomial(e.x, c));
}

WeylDivision divide_weyl(const DiffOp& p, std::span<const DiffOp> g, const WeylOrder& worder) {
  const std::size_t n = p.n();
  std::vector<Lead> leads;
  for (const auto& gi : g) {
    if (gi.n() != n || gi.nvars() != p.nvars()) throw UsageError("divisor from a different ring");
    leads.push_back(lead_of(gi, worder));
  }
  WeylDivision out{std::vector<DiffOp>(g.size(), DiffOp(n, p.nvars())), DiffOp(n, p.nvars())};
  DiffOp work = p;
  while (!work.is_zero()) {
    Lead lt = lead_of(work, worder);
    const ExpVec e = lt.exp.joined();
    std::size_t hit = g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      if (divides(leads[i].exp.joined(), e)) {
        hit = i;
        break;
      }
    if (hit == g.size()) {
      DiffOp t = weyl_monomial(lt.exp, lt.coeff);
      out.remainder += t;
      work -= t;
      continue;
    }
    DiffOp m = weyl_monomial(split(e - leads[hit].exp.joined(), n), lt.coeff / leads[hit].coeff);
    work -= leibniz_mul(m, g[hit]);
    out.cofactors[hit] += m;
  }
  return out;
}

DiffOp s_operator(const DiffOp& p, const DiffOp& q, const WeylOrder& worder) {
  const std::size_t n = p.n();
  Lead a = lead_of(p, worder), b = lead_of(q, worder);
  const ExpVec l = lcm_exp(a.exp.joined(), b.exp.joined());
  DiffOp s = leibniz_mul(weyl_monomial(split(l - a.exp.joined(), n), 1 / a.coeff), p);
  s -= leibniz_mul(weyl_monomial(split(l - b.exp.joined(), n), 1 / b.coeff), q);
  return s;
}

WeylGB buchberger_weyl(std::span<const DiffOp> g, const RingSpec& ring, std::size_t cap, WeylStats* stats) {
  const WeylOrder worder(ring);
  std::vector<DiffOp> basis;
  std::vector<ExpVec> leads;

  struct Pair {
    ExpVec lcm;  // joined (x, d)
    std::size_t i, j;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    auto c = worder.compare(split(a.lcm, ring.n), split(b.lcm, ring.n));
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<Pair, decltype(pair_less)> pairs(pair_less);

  auto add = [&](DiffOp op) {
    const ExpVec e = exp_full(op, worder).joined();
    for (std::size_t i = 0; i < basis.size(); ++i) pairs.insert(Pair{lcm_exp(leads[i], e), i, basis.size()});
    basis.push_back(std::move(op));
    leads.push_back(e);
  };

  for (const auto& p : g) {
    if (p.n() != ring.n || p.nvars() != ring.nvars()) throw UsageError("operator does not belong to the ring");
    if (!p.is_zero()) add(p);
  }
  std::size_t added = 0;
  while (!pairs.empty()) {
    Pair pr = *pairs.begin();
    pairs.erase(pairs.begin());
    // Chain criterion: S(i,j) is a combination of S(i,k) and S(k,j) once
    // both of those have been treated and lead_k divides the lcm.
    auto pending = [&](std::size_t a, std::size_t b) {
      if (a > b) std::swap(a, b);
      return pairs.count(Pair{lcm_exp(leads[a], leads[b]), a, b}) > 0;
    };
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k)
      chained = k != pr.i && k != pr.j && divides(leads[k], pr.lcm) && !pending(pr.i, k) && !pending(pr.j, k);
    if (chained) continue;
    if (stats) ++stats->s_pairs;
    auto div = divide_weyl(s_operator(basis[pr.i], basis[pr.j], worder), basis, worder);
    if (stats)
      for (const auto& c : div.cofactors) stats->reduction_steps += c.term_count();
    if (div.remainder.is_zero()) continue;
    if (added == cap) throw CapExceeded("Weyl Buchberger exceeded the cap of " + std::to_string(cap) + " additions");
    ++added;
    if (stats) ++stats->additions;
    add(primitive_normalized(div.remainder, ring));
  }

  // Minimal basis: ascending by leading exponent, drop divisible leads.
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return worder.less(split(leads[a], ring.n), split(leads[b], ring.n));
  });
  std::vector<DiffOp> minimal;
  std::vector<ExpVec> mleads;
  for (std::size_t i : idx) {
    bool redundant = std::any_of(mleads.begin(), mleads.end(), [&](const ExpVec& e) { return divides(e, leads[i]); });
    if (redundant) continue;
    minimal.push_back(basis[i]);
    mleads.push_back(leads[i]);
  }
  WeylGB out{{}, worder};
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<DiffOp> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.ops.push_back(primitive_normalized(divide_weyl(minimal[i], others, worder).remainder, ring));
  }
  return out;
}

bool is_gb(std::span<const DiffOp> g, const WeylOrder& worder) {
  std::vector<DiffOp> nz;
  for (const auto& p : g)
    if (!p.is_zero()) nz.push_back(p);
  for (std::size_t i = 0; i < nz.size(); ++i)
    for (std::size_t j = i + 1; j < nz.size(); ++j)
      if (!divide_weyl(s_operator(nz[i], nz[j], worder), nz, worder).remainder.is_zero()) return false;
  return true;
}

bool gb_implies_delta_check(std::span<const DiffOp> g, const RingSpec& ring) {
  if (!is_gb(g, WeylOrder(ring))) return true;
  std::vector<DiffOp> nz;
  for (const auto& p : g)
    if (!p.is_zero()) nz.push_back(p);
  return is_delta_groebner(GeneratorSet(ring, std::move(nz)));
}

}  // namespace dgb
