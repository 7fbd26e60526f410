#include "dgb/weylops.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace dgb {

RingSpec::RingSpec(std::size_t n_, std::size_t m_, std::vector<std::string> xs, std::vector<std::string> ds,
                   MonomialOrder od, MonomialOrder ox)
    : n(n_), m(m_), x_names(std::move(xs)), d_names(std::move(ds)), order_delta(std::move(od)),
      order_x(std::move(ox)) {
  if (n == 0) throw UsageError("a ring needs at least one derivation variable");
  if (x_names.size() != n + m) throw UsageError("expected " + std::to_string(n + m) + " ring variable names");
  if (d_names.size() != n) throw UsageError("expected " + std::to_string(n) + " derivation names");
  std::unordered_set<std::string> seen;
  for (const auto* names : {&x_names, &d_names})
    for (const auto& s : *names)
      if (!seen.insert(s).second) throw UsageError("duplicate variable name '" + s + "'");
  if (order_delta.size() != n) throw UsageError("derivation order has the wrong number of variables");
  if (order_x.size() != n + m) throw UsageError("coefficient order has the wrong number of variables");
}

RingSpec RingSpec::standard(std::size_t n, std::size_t m, OrderKind delta, OrderKind x) {
  std::vector<std::string> xs, ds;
  for (std::size_t i = 0; i < n + m; ++i) xs.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) ds.push_back("d" + std::to_string(i + 1));
  return RingSpec(n, m, std::move(xs), std::move(ds), MonomialOrder(delta, n), MonomialOrder(x, n + m));
}

// ---------------------------------------------------------------- DiffOp

DiffOp DiffOp::term(std::size_t n, ExpVec exp, Poly p) {
  if (exp.size() != n) throw UsageError("derivation exponent has the wrong length");
  DiffOp op(n, p.nvars());
  if (!p.is_zero()) op.terms_.emplace(std::move(exp), std::move(p));
  return op;
}

DiffOp DiffOp::from_poly(std::size_t n, Poly p) {
  return term(n, ExpVec(n), std::move(p));
}

DiffOp DiffOp::derivation(const RingSpec& ring, std::size_t i) {
  return term(ring.n, ExpVec::unit(ring.n, i), ring.constant(1));
}

Poly DiffOp::coefficient(const ExpVec& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Poly(nvars_) : it->second;
}

std::size_t DiffOp::term_count() const {
  std::size_t c = 0;
  for (const auto& [e, p] : terms_) c += p.size();
  return c;
}

DiffOp DiffOp::operator-() const {
  DiffOp r(*this);
  for (auto& [e, p] : r.terms_) p = -p;
  return r;
}

static void check_ring(const DiffOp& a, const DiffOp& b) {
  if (a.n() != b.n() || a.nvars() != b.nvars()) throw UsageError("operators from different rings");
}

void DiffOp::add_term(const ExpVec& exp, const Poly& c) {
  if (exp.size() != n_ || c.nvars() != nvars_) throw UsageError("term does not belong to the operator ring");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOp& DiffOp::operator+=(const DiffOp& other) {
  check_ring(*this, other);
  for (const auto& [e, p] : other.terms_) add_term(e, p);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& other) {
  check_ring(*this, other);
  for (const auto& [e, p] : other.terms_) add_term(e, -p);
  return *this;
}

DiffOp operator*(const Poly& p, const DiffOp& op) {
  if (p.nvars() != op.nvars()) throw UsageError("coefficient from a different ring");
  DiffOp r(op.n(), op.nvars());
  if (p.is_zero()) return r;
  for (const auto& [e, c] : op.terms()) r.add_term(e, p * c);
  return r;
}

DiffOp operator*(const Coefficient& c, const DiffOp& op) {
  DiffOp r(op.n(), op.nvars());
  if (c == 0) return r;
  for (const auto& [e, p] : op.terms()) r.add_term(e, p * c);
  return r;
}

DiffOp op_add(const DiffOp& p, const DiffOp& q) {
  return p + q;
}

// ------------------------------------------------------------ products

Poly derive(const Poly& f, const ExpVec& gamma) {
  Poly r = f;
  for (std::size_t i = 0; i < gamma.size() && !r.is_zero(); ++i)
    for (ExpVec::value_type k = 0; k < gamma[i] && !r.is_zero(); ++k) r = r.partial(i);
  return r;
}

namespace {

// All gamma <= beta componentwise, with prod binom(beta_i, gamma_i).
void for_each_subexponent(const ExpVec& beta, auto&& fn) {
  const std::size_t n = beta.size();
  std::vector<ExpVec::value_type> g(n, 0);
  while (true) {
    mpz_class c = 1;
    for (std::size_t i = 0; i < n; ++i) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), beta[i], g[i]);
      c *= b;
    }
    fn(ExpVec(g), c);
    std::size_t i = 0;
    while (i < n && g[i] == beta[i]) g[i++] = 0;
    if (i == n) return;
    ++g[i];
  }
}

}  // namespace

DiffOp leibniz_mul(const DiffOp& p, const DiffOp& q) {
  check_ring(p, q);
  DiffOp r(p.n(), p.nvars());
  for (const auto& [alpha, pa] : p.terms()) {
    for_each_subexponent(alpha, [&](const ExpVec& gamma, const mpz_class& binom) {
      const ExpVec rest = alpha - gamma;
      for (const auto& [beta, qb] : q.terms()) {
        Poly d = derive(qb, gamma);
        if (d.is_zero()) continue;
        r.add_term(rest + beta, pa * d * Coefficient(binom));
      }
    });
  }
  return r;
}

DiffOp derivation_times(const ExpVec& gamma, const DiffOp& p) {
  if (gamma.size() != p.n()) throw UsageError("derivation exponent has the wrong length");
  if (gamma.is_zero()) return p;
  return leibniz_mul(DiffOp::term(p.n(), gamma, Poly::constant(p.nvars(), 1)), p);
}

// ---------------------------------------------------------- invariants

std::set<ExpVec> newton_delta_diagram(const DiffOp& p) {
  if (p.is_zero()) throw DomainError("the Newton diagram of the zero operator is undefined");
  std::set<ExpVec> s;
  for (const auto& [e, c] : p.terms()) s.insert(e);
  return s;
}

static const std::pair<const ExpVec, Poly>& leading_entry(const DiffOp& p, const MonomialOrder& order) {
  if (p.is_zero()) throw DomainError("delta-invariants of the zero operator are undefined");
  if (order.size() != p.n()) throw UsageError("order does not match the number of derivations");
  auto best = p.terms().begin();
  for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return *best;
}

ExpVec exp_delta(const DiffOp& p, const MonomialOrder& order) {
  return leading_entry(p, order).first;
}

Poly c_delta(const DiffOp& p, const MonomialOrder& order) {
  return leading_entry(p, order).second;
}

InitialTerm in_delta(const DiffOp& p, const MonomialOrder& order) {
  const auto& [e, c] = leading_entry(p, order);
  return {c, e};
}

DiffOp primitive_normalized(const DiffOp& p, const RingSpec& ring) {
  if (p.is_zero()) return p;
  std::vector<Coefficient> all;
  for (const auto& [e, c] : p.terms())
    for (const auto& t : c.terms()) all.push_back(t.coeff);
  Coefficient s = primitive_scale(all);
  if (c_delta(p, ring.order_delta).leading_term(ring.order_x).coeff < 0) s = -s;
  return s * p;
}

std::string format_op(const DiffOp& p, const RingSpec& ring) {
  if (p.n() != ring.n || p.nvars() != ring.nvars()) throw UsageError("operator does not belong to the ring");
  if (p.is_zero()) return "0";
  std::vector<const std::pair<const ExpVec, Poly>*> entries;
  for (const auto& e : p.terms()) entries.push_back(&e);
  std::sort(entries.begin(), entries.end(),
            [&](auto* a, auto* b) { return ring.order_delta.less(b->first, a->first); });
  std::ostringstream os;
  bool first = true;
  for (const auto* entry : entries) {
    const ExpVec& e = entry->first;
    const Poly& c = entry->second;
    std::string dpart;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!dpart.empty()) dpart += "*";
      dpart += ring.d_names[i];
      if (e[i] > 1) dpart += "^" + std::to_string(e[i]);
    }
    // A single negative monomial is written with a leading sign so the
    // sum reads "a - b*d1" instead of "a + (-b)*d1".
    const bool negative_mono = c.size() == 1 && c.terms()[0].coeff < 0;
    const Poly shown = negative_mono ? -c : c;
    std::string cpart = format_poly(shown, ring.x_names);
    if (dpart.empty() && shown.size() > 1) {
      // A bare polynomial is a flat sum; splice its terms in directly.
      if (first) os << cpart;
      else if (cpart[0] == '-') os << " - " << cpart.substr(1);
      else os << " + " << cpart;
      first = false;
      continue;
    }
    if (!first) os << (negative_mono ? " - " : " + ");
    else if (negative_mono) os << "-";
    first = false;
    if (dpart.empty()) {
      os << cpart;
    } else if (shown.size() > 1) {
      os << "(" << cpart << ")*" << dpart;
    } else if (cpart == "1") {
      os << dpart;
    } else {
      os << cpart << "*" << dpart;
    }
  }
  return os.str();
}

}  // namespace dgb
