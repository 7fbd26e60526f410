#pragma once

// Random inputs and independent reference computations for the tests.
// Nothing here calls the code paths it is used to check.

#include "dgb/apps.hpp"
#include "dgb/commgb.hpp"
#include "dgb/deltagb.hpp"
#include "dgb/weylgb.hpp"
#include "dgb/weylops.hpp"

#include <functional>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using dgb::Coefficient;
using dgb::DiffOp;
using dgb::ExpVec;
using dgb::Poly;
using dgb::RingSpec;

// ------------------------------------------------------------ random data

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen); }

  Coefficient coeff(int range = 5, bool rational = false) {
    int num = 0;
    while (num == 0) num = uniform(-range, range);
    int den = rational ? uniform(1, 3) : 1;
    return dgb::make_rational(num, den);
  }

  ExpVec exponent(std::size_t nvars, int max_deg) {
    std::vector<ExpVec::value_type> e(nvars, 0);
    int budget = uniform(0, max_deg);
    for (int k = 0; k < budget; ++k) ++e[static_cast<std::size_t>(uniform(0, static_cast<int>(nvars) - 1))];
    return ExpVec(std::move(e));
  }

  Poly poly(std::size_t nvars, int max_deg, int max_terms, bool rational = false) {
    std::vector<dgb::Term> ts;
    int k = uniform(1, max_terms);
    for (int i = 0; i < k; ++i) ts.push_back({exponent(nvars, max_deg), coeff(5, rational)});
    return Poly::from_terms(nvars, std::move(ts));
  }

  Poly nonzero_poly(std::size_t nvars, int max_deg, int max_terms, bool rational = false) {
    Poly p(nvars);
    while (p.is_zero()) p = poly(nvars, max_deg, max_terms, rational);
    return p;
  }

  DiffOp op(const RingSpec& ring, int max_order, int coeff_deg, int max_terms, bool rational = false) {
    DiffOp r(ring);
    int k = uniform(1, max_terms);
    for (int i = 0; i < k; ++i) r.add_term(exponent(ring.n, max_order), poly(ring.nvars(), coeff_deg, 2, rational));
    return r;
  }

  DiffOp nonzero_op(const RingSpec& ring, int max_order, int coeff_deg, int max_terms, bool rational = false) {
    DiffOp r(ring);
    while (r.is_zero()) r = op(ring, max_order, coeff_deg, max_terms, rational);
    return r;
  }
};

// ------------------------------------------------------------ operators

// Normal form by rewriting words in the letters x_i and d_i with the single
// rule d_i x_i -> x_i d_i + 1 and swaps of commuting letters.
inline DiffOp rewrite_product(const DiffOp& p, const DiffOp& q, const RingSpec& ring) {
  const std::size_t nv = ring.nvars(), n = ring.n;
  // letter < nv: x_letter; letter >= nv: d_(letter - nv)
  std::map<std::vector<std::size_t>, Coefficient> pending, done;
  auto words_of = [&](const DiffOp& op) {
    std::vector<std::pair<std::vector<std::size_t>, Coefficient>> out;
    for (const auto& [e, c] : op.terms())
      for (const auto& t : c.terms()) {
        std::vector<std::size_t> w;
        for (std::size_t i = 0; i < nv; ++i) w.insert(w.end(), t.exp[i], i);
        for (std::size_t i = 0; i < n; ++i) w.insert(w.end(), e[i], nv + i);
        out.emplace_back(std::move(w), t.coeff);
      }
    return out;
  };
  for (const auto& [wa, ca] : words_of(p))
    for (const auto& [wb, cb] : words_of(q)) {
      auto w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      pending[w] += ca * cb;
    }
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    auto w = node.key();
    Coefficient c = node.mapped();
    if (c == 0) continue;
    std::size_t k = 0;
    while (k + 1 < w.size() && w[k] <= w[k + 1]) ++k;
    if (k + 1 >= w.size()) {
      done[w] += c;
      continue;
    }
    std::size_t a = w[k], b = w[k + 1];
    if (a >= nv && b < nv && a - nv == b) {
      auto shorter = w;
      shorter.erase(shorter.begin() + static_cast<long>(k), shorter.begin() + static_cast<long>(k) + 2);
      pending[shorter] += c;
    }
    std::swap(w[k], w[k + 1]);
    pending[w] += c;
  }
  DiffOp r(ring);
  for (const auto& [w, c] : done) {
    if (c == 0) continue;
    std::vector<ExpVec::value_type> xe(nv, 0), de(n, 0);
    for (auto l : w) (l < nv ? xe[l] : de[l - nv]) += 1;
    r.add_term(ExpVec(de), Poly::monomial(ExpVec(xe), c));
  }
  return r;
}

// P applied to a polynomial u: sum p_alpha * d^alpha(u).
inline Poly apply(const DiffOp& p, const Poly& u) {
  Poly r(u.nvars());
  for (const auto& [e, c] : p.terms()) {
    Poly d = u;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (ExpVec::value_type k = 0; k < e[i]; ++k) d = d.partial(i);
    r += c * d;
  }
  return r;
}

// ------------------------------------------------------------ linear algebra

// Row echelon over Q on sparse vectors indexed by ExpVec.
class Span {
 public:
  using Vec = std::map<ExpVec, Coefficient>;

  // Reduces v against the stored rows; returns the residue.
  Vec residue(Vec v) const {
    for (const auto& [pivot, row] : rows_) {
      auto it = v.find(pivot);
      if (it == v.end()) continue;
      Coefficient f = it->second;
      for (const auto& [k, c] : row) {
        Coefficient& slot = v[k];
        slot -= f * c;
        if (slot == 0) v.erase(k);
      }
    }
    return v;
  }

  void add(Vec v) {
    v = residue(std::move(v));
    if (v.empty()) return;
    const ExpVec pivot = v.rbegin()->first;
    Coefficient inv = 1 / v.rbegin()->second;
    for (auto& [k, c] : v) c *= inv;
    // keep rows fully reduced against the new pivot
    for (auto& [p, row] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      Coefficient f = it->second;
      for (const auto& [k, c] : v) {
        Coefficient& slot = row[k];
        slot -= f * c;
        if (slot == 0) row.erase(k);
      }
    }
    rows_.emplace(pivot, std::move(v));
  }

  bool contains(const Vec& v) const { return residue(v).empty(); }

 private:
  std::map<ExpVec, Vec> rows_;
};

inline Span::Vec to_vec(const Poly& p) {
  Span::Vec v;
  for (const auto& t : p.terms()) v.emplace(t.exp, t.coeff);
  return v;
}

inline std::vector<ExpVec> monomials_up_to(std::size_t nvars, unsigned deg) {
  std::vector<ExpVec> out;
  std::vector<ExpVec::value_type> e(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == nvars) {
      out.emplace_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, deg);
  return out;
}

// f in <gens> with cofactors of total degree at most `bound`.
inline bool member_bounded(const Poly& f, const std::vector<Poly>& gens, unsigned bound) {
  if (f.is_zero()) return true;
  Span s;
  for (const auto& g : gens)
    for (const auto& m : monomials_up_to(f.nvars(), bound)) s.add(to_vec(Poly::monomial(m, 1) * g));
  return s.contains(to_vec(f));
}

// ------------------------------------------------------------ naive Buchberger

inline Poly naive_normal_form(Poly f, const std::vector<Poly>& g, const dgb::MonomialOrder& o) {
  Poly r(f.nvars());
  while (!f.is_zero()) {
    dgb::Term lt = f.leading_term(o);
    bool hit = false;
    for (const auto& gi : g) {
      dgb::Term lg = gi.leading_term(o);
      if (!dgb::divides(lg.exp, lt.exp)) continue;
      f -= Poly::monomial(lt.exp - lg.exp, lt.coeff / lg.coeff) * gi;
      hit = true;
      break;
    }
    if (!hit) {
      Poly t = Poly::monomial(lt.exp, lt.coeff);
      r += t;
      f -= t;
    }
  }
  return r;
}

inline std::vector<Poly> naive_buchberger(std::vector<Poly> g, const dgb::MonomialOrder& o) {
  std::erase_if(g, [](const Poly& p) { return p.is_zero(); });
  // Rescan every pair after each addition; slow but obviously complete.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < g.size() && !changed; ++i)
      for (std::size_t j = 0; j < i && !changed; ++j) {
        dgb::Term a = g[i].leading_term(o), b = g[j].leading_term(o);
        ExpVec l = dgb::lcm_exp(a.exp, b.exp);
        Poly s = Poly::monomial(l - a.exp, 1 / a.coeff) * g[i] - Poly::monomial(l - b.exp, 1 / b.coeff) * g[j];
        Poly r = naive_normal_form(s, g, o);
        if (!r.is_zero()) {
          g.push_back(r);
          changed = true;
        }
      }
  }
  return g;
}

// ------------------------------------------------------------ checks

inline DiffOp reconstruct(const std::vector<DiffOp>& cof, const std::vector<DiffOp>& f, const DiffOp& rem) {
  DiffOp r = rem;
  for (std::size_t i = 0; i < f.size(); ++i) r += dgb::leibniz_mul(cof[i], f[i]);
  return r;
}

inline Poly dot(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  Poly r(b.empty() ? 0 : b[0].nvars());
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

}  // namespace oracle
