#pragma once

// Working representation for reductions: terms sorted ascending by an
// active monomial order, so the leading term is back().

#include "dgb/arith.hpp"

#include <algorithm>
#include <vector>

namespace dgb::detail {

using OrderedTerms = std::vector<Term>;

inline OrderedTerms to_ordered(const Poly& f, const MonomialOrder& order) {
  OrderedTerms t(f.terms());
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.less(a.exp, b.exp); });
  return t;
}

inline Poly from_ordered(std::size_t nvars, OrderedTerms terms) {
  return Poly::from_terms(nvars, std::move(terms));
}

/// f + c * x^shift * g, all sorted ascending by `order`.
inline OrderedTerms add_scaled(const OrderedTerms& f, const OrderedTerms& g, const Coefficient& c, const ExpVec& shift,
                               const MonomialOrder& order) {
  OrderedTerms r;
  r.reserve(f.size() + g.size());
  auto a = f.begin();
  auto b = g.begin();
  ExpVec bexp;
  auto load = [&] {
    if (b != g.end()) bexp = b->exp + shift;
  };
  load();
  while (a != f.end() || b != g.end()) {
    if (b == g.end()) {
      r.push_back(*a++);
      continue;
    }
    if (a == f.end()) {
      r.push_back({bexp, c * b->coeff});
      ++b;
      load();
      continue;
    }
    auto cmp = order.compare(a->exp, bexp);
    if (cmp < 0) {
      r.push_back(*a++);
    } else if (cmp > 0) {
      r.push_back({bexp, c * b->coeff});
      ++b;
      load();
    } else {
      Coefficient s = a->coeff + c * b->coeff;
      if (s != 0) r.push_back({a->exp, std::move(s)});
      ++a;
      ++b;
      load();
    }
  }
  return r;
}

}  // namespace dgb::detail
