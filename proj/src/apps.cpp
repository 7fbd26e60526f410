#include "dgb/apps.hpp"

#include <algorithm>

namespace dgb {

FlatnessReport flatness_report(const DeltaBasis& b) {
  const RingSpec& ring = b.ring();
  FlatnessReport r{delta_stair(b), {}, PolyIdeal(ring.order_x), PolyIdeal(ring.order_x), true, false};
  std::vector<PolyIdeal> factors;
  for (const auto& alpha : r.stair) {
    PolyIdeal c = cone_ideal_of_ideal(alpha, b);
    r.globally_flat = r.globally_flat && is_unit_ideal(c);
    factors.push_back(c);
    r.cone_ideals.emplace(alpha, std::move(c));
  }
  r.J = product_ideal(factors, ring.order_x);

  std::vector<Poly> h_elements;
  const auto& f = b.generators();
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.exponent(i).is_zero()) h_elements.push_back(f.coefficient(i));
  r.zero_cone = PolyIdeal(std::move(h_elements), ring.order_x);
  r.maximal_set_known = !r.zero_cone.is_zero();
  return r;
}

FinitenessReport finiteness_test(const DeltaBasis& b) {
  const RingSpec& ring = b.ring();
  const auto& f = b.generators();
  FinitenessReport r{true, {}};
  for (std::size_t coord = 0; coord < ring.n; ++coord) {
    FinitenessWitness w{coord, std::nullopt, PolyIdeal(ring.order_x), false};
    std::vector<Poly> coeffs;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const ExpVec& e = f.exponent(i);
      bool pure = true;
      for (std::size_t j = 0; j < e.size(); ++j)
        if (j != coord && e[j] != 0) pure = false;
      if (!pure) continue;
      w.power = std::max(w.power.value_or(0), e[coord]);
      coeffs.push_back(f.coefficient(i));
    }
    w.ideal = PolyIdeal(std::move(coeffs), ring.order_x);
    w.unit = w.power.has_value() && is_unit_ideal(w.ideal);
    r.finite = r.finite && w.unit;
    r.witnesses.push_back(std::move(w));
  }
  return r;
}

bool localized_contains(const PolyIdeal& ideal, const Poly& f, const Poly& s) {
  const std::size_t nv = ideal.nvars();
  if (f.nvars() != nv || s.nvars() != nv) throw UsageError("polynomial from a different ring");
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.with_extra_variables(1));
  gens.push_back(Poly::variable(nv + 1, nv) * s.with_extra_variables(1) - Poly::constant(nv + 1, 1));
  return PolyIdeal(std::move(gens), ideal.order().extended(1)).contains(f.with_extra_variables(1));
}

std::map<ExpVec, bool> localized_cones(const FlatnessReport& report, const Poly& s) {
  std::map<ExpVec, bool> out;
  for (const auto& [alpha, c] : report.cone_ideals)
    out.emplace(alpha, localized_contains(c, Poly::constant(c.nvars(), 1), s));
  return out;
}

}  // namespace dgb
