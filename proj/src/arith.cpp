#include "dgb/arith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dgb {

Coefficient make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("division by zero in rational literal");
  Coefficient q(num, den);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- ExpVec

ExpVec ExpVec::unit(std::size_t length, std::size_t i, value_type power) {
  if (i >= length) throw UsageError("unit exponent index out of range");
  ExpVec e(length);
  e.e_[i] = power;
  return e;
}

std::uint64_t ExpVec::total_degree() const {
  return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

bool ExpVec::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](value_type v) { return v == 0; });
}

static void check_lengths(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw UsageError("exponent vectors of different lengths");
}

ExpVec ExpVec::operator+(const ExpVec& other) const {
  check_lengths(*this, other);
  ExpVec r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += other.e_[i];
  return r;
}

ExpVec ExpVec::operator-(const ExpVec& other) const {
  check_lengths(*this, other);
  ExpVec r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (other.e_[i] > e_[i]) throw DomainError("exponent difference is not in N^n");
    r.e_[i] -= other.e_[i];
  }
  return r;
}

ExpVec ExpVec::concat(const ExpVec& other) const {
  std::vector<value_type> v(e_);
  v.insert(v.end(), other.e_.begin(), other.e_.end());
  return ExpVec(std::move(v));
}

ExpVec ExpVec::slice(std::size_t begin, std::size_t count) const {
  if (begin + count > e_.size()) throw UsageError("exponent slice out of range");
  return ExpVec(std::vector<value_type>(e_.begin() + begin, e_.begin() + begin + count));
}

ExpVec lcm_exp(const ExpVec& a, const ExpVec& b) {
  check_lengths(a, b);
  std::vector<ExpVec::value_type> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = std::max(a[i], b[i]);
  return ExpVec(std::move(v));
}

bool divides(const ExpVec& a, const ExpVec& b) {
  check_lengths(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::string to_string(const ExpVec& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

// --------------------------------------------------------- MonomialOrder

OrderKind parse_order_kind(std::string_view name) {
  if (name == "lex") return OrderKind::lex;
  if (name == "deglex") return OrderKind::deglex;
  if (name == "degrevlex") return OrderKind::degrevlex;
  throw UsageError("unknown monomial order '" + std::string(name) + "'");
}

std::string_view order_kind_name(OrderKind kind) {
  switch (kind) {
    case OrderKind::lex: return "lex";
    case OrderKind::deglex: return "deglex";
    case OrderKind::degrevlex: return "degrevlex";
  }
  return "?";
}

MonomialOrder::MonomialOrder(OrderKind kind, std::size_t nvars) : kind_(kind), precedence_(nvars) {
  std::iota(precedence_.begin(), precedence_.end(), std::size_t{0});
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  std::vector<std::size_t> sorted(precedence_);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw UsageError("variable precedence is not a permutation");
}

std::strong_ordering MonomialOrder::compare(const ExpVec& a, const ExpVec& b) const {
  if (a.size() != precedence_.size() || b.size() != precedence_.size())
    throw UsageError("exponent length does not match the order");
  if (kind_ != OrderKind::lex) {
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da <=> db;
  }
  if (kind_ == OrderKind::degrevlex) {
    for (auto it = precedence_.rbegin(); it != precedence_.rend(); ++it)
      if (a[*it] != b[*it]) return b[*it] <=> a[*it];
    return std::strong_ordering::equal;
  }
  for (std::size_t v : precedence_)
    if (a[v] != b[v]) return a[v] <=> b[v];
  return std::strong_ordering::equal;
}

MonomialOrder MonomialOrder::extended(std::size_t extra) const {
  std::vector<std::size_t> p(precedence_);
  for (std::size_t i = 0; i < extra; ++i) p.push_back(precedence_.size() + i);
  return MonomialOrder(kind_, std::move(p));
}

std::strong_ordering compare(const MonomialOrder& order, const ExpVec& a, const ExpVec& b) {
  return order.compare(a, b);
}

// ------------------------------------------------------------------ Poly

Poly Poly::constant(std::size_t nvars, const Coefficient& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.push_back({ExpVec(nvars), c});
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  return monomial(ExpVec::unit(nvars, i), 1);
}

Poly Poly::monomial(ExpVec exp, const Coefficient& c) {
  Poly p(exp.size());
  if (c != 0) p.terms_.push_back({std::move(exp), c});
  return p;
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.exp.size() != nvars) throw UsageError("term does not belong to the polynomial ring");
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  Poly p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero());
}

Coefficient Poly::coefficient(const ExpVec& exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, const ExpVec& e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

std::uint64_t Poly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp.total_degree());
  return d;
}

const Term& Poly::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (order.less(best->exp, t.exp)) best = &t;
  return *best;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

static void check_ring(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw UsageError("polynomials from different rings");
}

Poly Poly::add_scaled(const Poly& g, const Coefficient& c, const ExpVec& shift) const {
  check_ring(*this, g);
  if (shift.size() != nvars_) throw UsageError("shift does not belong to the polynomial ring");
  if (c == 0 || g.is_zero()) return *this;
  Poly r(nvars_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  // Shifting preserves the structural order because it is a monomial order.
  const bool trivial_shift = shift.is_zero();
  ExpVec bexp;
  auto load = [&] {
    if (b != g.terms_.end()) bexp = trivial_shift ? b->exp : b->exp + shift;
  };
  load();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end() || (a != terms_.end() && a->exp < bexp)) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || bexp < a->exp) {
      r.terms_.push_back({bexp, c * b->coeff});
      ++b;
      load();
    } else {
      Coefficient s = a->coeff + c * b->coeff;
      if (s != 0) r.terms_.push_back({a->exp, std::move(s)});
      ++a;
      ++b;
      load();
    }
  }
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  *this = add_scaled(other, 1, ExpVec(nvars_));
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  *this = add_scaled(other, -1, ExpVec(nvars_));
  return *this;
}

Poly& Poly::operator*=(const Coefficient& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.nvars());
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.exp + t.exp, s.coeff * t.coeff});
  return Poly::from_terms(a.nvars(), std::move(prod));
}

Poly Poly::partial(std::size_t i) const {
  if (i >= nvars_) throw UsageError("derivative variable out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[i] == 0) continue;
    std::vector<ExpVec::value_type> e(t.exp.entries().begin(), t.exp.entries().end());
    Coefficient c = t.coeff * e[i];
    e[i] -= 1;
    out.push_back({ExpVec(std::move(e)), std::move(c)});
  }
  return from_terms(nvars_, std::move(out));
}

Coefficient Poly::evaluate(std::span<const Coefficient> point) const {
  if (point.size() != nvars_) throw UsageError("evaluation point has the wrong dimension");
  Coefficient sum = 0;
  for (const auto& t : terms_) {
    Coefficient v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (ExpVec::value_type k = 0; k < t.exp[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

Poly Poly::with_extra_variables(std::size_t extra) const {
  Poly r(nvars_ + extra);
  r.terms_.reserve(terms_.size());
  const ExpVec pad(extra);
  for (const auto& t : terms_) r.terms_.push_back({t.exp.concat(pad), t.coeff});
  return r;
}

Poly Poly::restricted_to(std::size_t nvars) const {
  if (nvars > nvars_) throw UsageError("cannot restrict to a larger ring");
  Poly r(nvars);
  for (const auto& t : terms_) {
    for (std::size_t i = nvars; i < nvars_; ++i)
      if (t.exp[i] != 0) throw UsageError("polynomial involves an eliminated variable");
    r.terms_.push_back({t.exp.slice(0, nvars), t.coeff});
  }
  return r;
}

Poly poly_partial(const Poly& f, std::size_t i, std::size_t n_derivations) {
  if (i >= n_derivations) throw UsageError("x" + std::to_string(i + 1) + " is not a derivation variable");
  return f.partial(i);
}

Coefficient primitive_scale(std::span<const Coefficient> coefficients) {
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& c : coefficients) {
    if (c == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  if (num_gcd == 0) return 1;
  return make_rational(den_lcm, num_gcd);
}

// ------------------------------------------------------------ formatting

std::string format_rational(const Coefficient& c) {
  return c.get_str();
}

bool needs_parentheses(const Poly& f) {
  if (f.size() > 1) return true;
  return f.size() == 1 && f.terms()[0].coeff < 0;
}

static bool display_less(const ExpVec& a, const ExpVec& b) {
  auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::string format_poly(const Poly& f, std::span<const std::string> names) {
  if (names.size() != f.nvars()) throw UsageError("variable names do not match the ring");
  if (f.is_zero()) return "0";
  std::vector<const Term*> order;
  for (const auto& t : f.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) { return display_less(b->exp, a->exp); });
  std::ostringstream os;
  bool first = true;
  for (const Term* t : order) {
    Coefficient c = t->coeff;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (c < 0) c = -c;
    std::string mono;
    for (std::size_t i = 0; i < t->exp.size(); ++i) {
      if (t->exp[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (t->exp[i] > 1) mono += "^" + std::to_string(t->exp[i]);
    }
    if (mono.empty()) {
      os << format_rational(c);
    } else if (c == 1) {
      os << mono;
    } else {
      os << format_rational(c) << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace dgb
