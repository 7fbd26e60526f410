#include "dgb/commgb.hpp"

#include "ordered_poly.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <tuple>

namespace dgb {

using detail::OrderedTerms;

namespace {

void check_ring(const Poly& f, const MonomialOrder& order) {
  if (f.nvars() != order.size()) throw UsageError("polynomial does not belong to the order's ring");
}

struct Divisor {
  OrderedTerms terms;
  ExpVec lm;
  Coefficient lc;
};

Divisor make_divisor(const Poly& g, const MonomialOrder& order) {
  Divisor d{detail::to_ordered(g, order), {}, {}};
  d.lm = d.terms.back().exp;
  d.lc = d.terms.back().coeff;
  return d;
}

// Full reduction of p by `basis`; the quotient callback receives
// (basis index, coefficient, shift) for every elimination step.
template <typename OnStep>
OrderedTerms reduce_full(OrderedTerms p, const std::vector<Divisor>& basis, const MonomialOrder& order,
                         OnStep&& on_step) {
  OrderedTerms remainder;
  while (!p.empty()) {
    const Term& lt = p.back();
    const Divisor* hit = nullptr;
    std::size_t idx = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (divides(basis[j].lm, lt.exp)) {
        hit = &basis[j];
        idx = j;
        break;
      }
    }
    if (!hit) {
      remainder.push_back(lt);
      p.pop_back();
      continue;
    }
    Coefficient c = lt.coeff / hit->lc;
    ExpVec shift = lt.exp - hit->lm;
    on_step(idx, c, shift);
    p = detail::add_scaled(p, hit->terms, -c, shift, order);
  }
  std::reverse(remainder.begin(), remainder.end());
  return remainder;
}

struct Element {
  Divisor d;
  std::vector<Poly> row;
};

void axpy_row(std::vector<Poly>& row, const std::vector<Poly>& other, const Coefficient& c, const ExpVec& shift) {
  for (std::size_t k = 0; k < row.size(); ++k) row[k] = row[k].add_scaled(other[k], c, shift);
}

// Reduces `p` (with its row) fully by `basis`, updating the row.
OrderedTerms reduce_tracked(OrderedTerms p, std::vector<Poly>& row, const std::vector<Element>& basis,
                            const std::vector<Divisor>& divisors, const MonomialOrder& order,
                            std::size_t skip = static_cast<std::size_t>(-1)) {
  if (skip == static_cast<std::size_t>(-1)) {
    return reduce_full(std::move(p), divisors, order, [&](std::size_t j, const Coefficient& c, const ExpVec& s) {
      axpy_row(row, basis[j].row, -c, s);
    });
  }
  std::vector<Divisor> others;
  std::vector<std::size_t> map;
  for (std::size_t j = 0; j < divisors.size(); ++j) {
    if (j == skip) continue;
    others.push_back(divisors[j]);
    map.push_back(j);
  }
  return reduce_full(std::move(p), others, order, [&](std::size_t j, const Coefficient& c, const ExpVec& s) {
    axpy_row(row, basis[map[j]].row, -c, s);
  });
}

}  // namespace

DivisionResult comm_divide(const Poly& f, std::span<const Poly> divisors, const MonomialOrder& order) {
  check_ring(f, order);
  std::vector<Divisor> ds;
  for (const auto& g : divisors) {
    check_ring(g, order);
    if (g.is_zero()) throw UsageError("division by the zero polynomial");
    ds.push_back(make_divisor(g, order));
  }
  std::vector<std::vector<Term>> quotient_terms(ds.size());
  auto rem = reduce_full(detail::to_ordered(f, order), ds, order,
                         [&](std::size_t j, const Coefficient& c, const ExpVec& s) {
                           quotient_terms[j].push_back({s, c});
                         });
  DivisionResult out;
  for (auto& q : quotient_terms) out.cofactors.push_back(Poly::from_terms(f.nvars(), std::move(q)));
  out.remainder = detail::from_ordered(f.nvars(), std::move(rem));
  return out;
}

namespace {

// With track = false every row is empty and only the polynomials are kept.
TrackedBasis groebner(std::span<const Poly> generators, const MonomialOrder& order, bool track) {
  const std::size_t nv = order.size();
  const std::size_t r = track ? generators.size() : 0;
  std::vector<Element> basis;
  std::vector<Divisor> divisors;

  auto unit_row = [&](std::size_t k) {
    std::vector<Poly> row(r, Poly(nv));
    if (track) row[k] = Poly::constant(nv, 1);
    return row;
  };

  // Pairs ordered by (lcm under the order, i, j): the normal strategy.
  struct Pair {
    ExpVec lcm;
    std::size_t i, j;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    auto c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<Pair, decltype(pair_less)> pairs(pair_less);

  auto add_element = [&](OrderedTerms terms, std::vector<Poly> row) {
    Element e{Divisor{std::move(terms), {}, {}}, std::move(row)};
    e.d.lm = e.d.terms.back().exp;
    e.d.lc = e.d.terms.back().coeff;
    const std::size_t idx = basis.size();
    for (std::size_t i = 0; i < idx; ++i) {
      ExpVec l = lcm_exp(basis[i].d.lm, e.d.lm);
      // Buchberger's criterion: coprime leading monomials give S -> 0.
      if (l == basis[i].d.lm + e.d.lm) continue;
      pairs.insert(Pair{std::move(l), i, idx});
    }
    divisors.push_back(e.d);
    basis.push_back(std::move(e));
  };

  for (std::size_t k = 0; k < generators.size(); ++k) {
    check_ring(generators[k], order);
    if (generators[k].is_zero()) continue;
    auto row = unit_row(k);
    auto rem = reduce_tracked(detail::to_ordered(generators[k], order), row, basis, divisors, order);
    if (!rem.empty()) add_element(std::move(rem), std::move(row));
  }

  while (!pairs.empty()) {
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    const Element& a = basis[p.i];
    const Element& b = basis[p.j];
    ExpVec sa = p.lcm - a.d.lm;
    ExpVec sb = p.lcm - b.d.lm;
    Coefficient ca = 1 / a.d.lc;
    Coefficient cb = -1 / b.d.lc;
    OrderedTerms s = detail::add_scaled(OrderedTerms{}, a.d.terms, ca, sa, order);
    s = detail::add_scaled(s, b.d.terms, cb, sb, order);
    std::vector<Poly> row(r, Poly(nv));
    axpy_row(row, a.row, ca, sa);
    axpy_row(row, b.row, cb, sb);
    auto rem = reduce_tracked(std::move(s), row, basis, divisors, order);
    if (!rem.empty()) add_element(std::move(rem), std::move(row));
  }

  // Minimalize: ascending by leading monomial, drop elements whose leading
  // monomial is divisible by an earlier kept one.
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t x, std::size_t y) { return order.less(basis[x].d.lm, basis[y].d.lm); });
  std::vector<Element> minimal;
  for (std::size_t i : idx) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const Element& m) { return divides(m.d.lm, basis[i].d.lm); });
    if (!redundant) minimal.push_back(basis[i]);
  }

  std::vector<Divisor> mdiv;
  for (const auto& m : minimal) mdiv.push_back(m.d);
  TrackedBasis out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> row = minimal[i].row;
    // The leading term is irreducible by the others, so only the tail moves.
    auto red = reduce_tracked(minimal[i].d.terms, row, minimal, mdiv, order, i);
    Coefficient inv = 1 / red.back().coeff;
    Poly g = detail::from_ordered(nv, std::move(red)) * inv;
    for (auto& q : row) q *= inv;
    out.polys.push_back(std::move(g));
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace

TrackedBasis tracked_groebner(std::span<const Poly> generators, const MonomialOrder& order) {
  return groebner(generators, order, true);
}

std::vector<Poly> comm_buchberger(std::span<const Poly> generators, const MonomialOrder& order) {
  return groebner(generators, order, false).polys;
}

// ------------------------------------------------------------- PolyIdeal

struct PolyIdeal::Cache {
  std::once_flag once_tracked, once_plain;
  TrackedBasis tracked;
  std::vector<Poly> plain;
};

PolyIdeal::PolyIdeal(MonomialOrder order) : order_(std::move(order)), cache_(std::make_shared<Cache>()) {}

PolyIdeal::PolyIdeal(std::vector<Poly> generators, MonomialOrder order)
    : generators_(std::move(generators)), order_(std::move(order)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) check_ring(g, order_);
}

const TrackedBasis& PolyIdeal::tracked() const {
  std::call_once(cache_->once_tracked, [this] { cache_->tracked = tracked_groebner(generators_, order_); });
  return cache_->tracked;
}

const std::vector<Poly>& PolyIdeal::groebner_basis() const {
  std::call_once(cache_->once_plain, [this] { cache_->plain = comm_buchberger(generators_, order_); });
  return cache_->plain;
}

Poly PolyIdeal::normal_form(const Poly& f) const {
  check_ring(f, order_);
  const auto& gb = groebner_basis();
  if (gb.empty()) return f;
  return comm_divide(f, gb, order_).remainder;
}

bool PolyIdeal::contains(const Poly& f) const {
  return normal_form(f).is_zero();
}

bool PolyIdeal::same_ideal(const PolyIdeal& other) const {
  if (!(order_ == other.order_)) throw UsageError("ideal comparison needs a common order");
  return groebner_basis() == other.groebner_basis();
}

std::optional<std::vector<Poly>> ideal_member_with_cofactors(const Poly& f, const PolyIdeal& ideal) {
  check_ring(f, ideal.order());
  const std::size_t r = ideal.generators().size();
  const std::size_t nv = ideal.nvars();
  std::vector<Poly> cof(r, Poly(nv));
  if (f.is_zero()) return cof;
  const auto& tb = ideal.tracked();
  if (tb.polys.empty()) return std::nullopt;
  auto div = comm_divide(f, tb.polys, ideal.order());
  if (!div.remainder.is_zero()) return std::nullopt;
  for (std::size_t j = 0; j < tb.polys.size(); ++j) {
    if (div.cofactors[j].is_zero()) continue;
    for (std::size_t k = 0; k < r; ++k) cof[k] += div.cofactors[j] * tb.rows[j][k];
  }
  return cof;
}

bool is_unit_ideal(const PolyIdeal& ideal) {
  const auto& gb = ideal.groebner_basis();
  return gb.size() == 1 && gb[0].is_constant();
}

PolyIdeal product_ideal(std::span<const PolyIdeal> factors, const MonomialOrder& order) {
  const std::size_t nv = order.size();
  std::vector<Poly> products{Poly::constant(nv, 1)};
  for (const auto& f : factors) {
    std::vector<Poly> next;
    for (const auto& p : products)
      for (const auto& g : f.generators())
        if (!g.is_zero()) next.push_back(p * g);
    products = std::move(next);
  }
  std::vector<Poly> kept;
  for (auto& p : products) {
    if (p.is_zero()) continue;
    if (!kept.empty() && PolyIdeal(kept, order).contains(p)) continue;
    kept.push_back(std::move(p));
  }
  return PolyIdeal(std::move(kept), order);
}

// -------------------------------------------------------------- syzygies

namespace {

Poly encode(const SyzygyVector& v, std::size_t nv) {
  const std::size_t r = v.size();
  Poly out(nv + r);
  for (std::size_t k = 0; k < r; ++k) {
    if (v[k].is_zero()) continue;
    out += v[k].with_extra_variables(r) * Poly::variable(nv + r, nv + k);
  }
  return out;
}

bool is_zero_vector(const SyzygyVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

void normalize_vector(SyzygyVector& v, const MonomialOrder& order) {
  std::vector<Coefficient> all;
  for (const auto& p : v)
    for (const auto& t : p.terms()) all.push_back(t.coeff);
  Coefficient s = primitive_scale(all);
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (it->is_zero()) continue;
    if (it->leading_term(order).coeff > 0) s = -s;
    break;
  }
  for (auto& p : v) p *= s;
}

// v == q * w for some polynomial q.
bool is_multiple_of(const SyzygyVector& v, const SyzygyVector& w, const MonomialOrder& order) {
  std::size_t pivot = w.size();
  for (std::size_t k = 0; k < w.size(); ++k)
    if (!w[k].is_zero()) {
      pivot = k;
      break;
    }
  if (pivot == w.size()) return false;
  std::vector<Poly> d{w[pivot]};
  auto div = comm_divide(v[pivot], d, order);
  if (!div.remainder.is_zero()) return false;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (!(div.cofactors[0] * w[k] == v[k])) return false;
  return true;
}

}  // namespace

bool module_contains(std::span<const SyzygyVector> module, const SyzygyVector& v, const MonomialOrder& order) {
  const std::size_t nv = order.size();
  const std::size_t r = v.size();
  if (is_zero_vector(v)) return true;
  std::vector<Poly> gens;
  for (const auto& w : module) {
    if (w.size() != r) throw UsageError("module elements of different lengths");
    gens.push_back(encode(w, nv));
  }
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b)
      gens.push_back(Poly::variable(nv + r, nv + a) * Poly::variable(nv + r, nv + b));
  PolyIdeal ext(std::move(gens), order.extended(r));
  return ext.contains(encode(v, nv));
}

std::vector<SyzygyVector> syzygies(std::span<const Poly> generators, const MonomialOrder& order) {
  const std::size_t nv = order.size();
  const std::size_t r = generators.size();
  for (const auto& g : generators) check_ring(g, order);
  TrackedBasis tb = tracked_groebner(generators, order);
  const std::size_t t = tb.polys.size();

  auto transport = [&](const std::vector<Poly>& sigma) {
    SyzygyVector v(r, Poly(nv));
    for (std::size_t j = 0; j < t; ++j) {
      if (sigma[j].is_zero()) continue;
      for (std::size_t k = 0; k < r; ++k) v[k] += sigma[j] * tb.rows[j][k];
    }
    return v;
  };

  std::vector<SyzygyVector> raw;
  std::vector<ExpVec> lead;
  for (const auto& g : tb.polys) lead.push_back(g.leading_term(order).exp);
  // Schreyer syzygies of the basis (monic, so S = m_i g_i - m_j g_j).
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      const ExpVec& li = lead[i];
      const ExpVec& lj = lead[j];
      const ExpVec l = lcm_exp(li, lj);
      // Chain criterion: S_ij is a combination of S_ik and S_kj when both
      // of their lcms properly divide l.
      bool chained = false;
      for (std::size_t k = 0; k < t && !chained; ++k)
        chained = k != i && k != j && divides(lead[k], l) && lcm_exp(li, lead[k]) != l && lcm_exp(lj, lead[k]) != l;
      if (chained) continue;
      Poly s = Poly(nv).add_scaled(tb.polys[i], 1, l - li).add_scaled(tb.polys[j], -1, l - lj);
      auto div = comm_divide(s, tb.polys, order);
      if (!div.remainder.is_zero()) throw std::logic_error("S-polynomial of a Groebner basis did not reduce to 0");
      std::vector<Poly> sigma(t, Poly(nv));
      for (std::size_t k = 0; k < t; ++k) sigma[k] = -div.cofactors[k];
      sigma[i] = sigma[i].add_scaled(Poly::constant(nv, 1), 1, l - li);
      sigma[j] = sigma[j].add_scaled(Poly::constant(nv, 1), -1, l - lj);
      raw.push_back(transport(sigma));
    }
  }
  // Rows of (identity - N*M), where generators = N * basis.
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<Poly> sigma(t, Poly(nv));
    if (!generators[k].is_zero()) {
      auto div = comm_divide(generators[k], tb.polys, order);
      if (!div.remainder.is_zero()) throw std::logic_error("generator not reduced to 0 by its own basis");
      sigma = div.cofactors;
    }
    SyzygyVector v = transport(sigma);
    for (auto& p : v) p = -p;
    v[k] += Poly::constant(nv, 1);
    raw.push_back(std::move(v));
  }

  std::vector<SyzygyVector> out;
  for (auto& v : raw) {
    if (is_zero_vector(v)) continue;
    normalize_vector(v, order);
    bool dup = std::any_of(out.begin(), out.end(), [&](const SyzygyVector& w) { return is_multiple_of(v, w, order); });
    if (!dup) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace dgb
