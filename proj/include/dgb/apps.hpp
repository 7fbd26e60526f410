#pragma once

// Flatness locus and finiteness of D/I over H, read off a certified
// Gröbner delta-base.

#include "dgb/deltagb.hpp"

#include <map>
#include <optional>
#include <vector>

namespace dgb {

struct FlatnessReport {
  std::vector<ExpVec> stair;               // the minimal delta-stair used for J
  std::map<ExpVec, PolyIdeal> cone_ideals;  // C(alpha; I) per stair element
  PolyIdeal J;                              // product of the cone ideals
  PolyIdeal zero_cone;                      // C(0; I) = I ∩ H
  bool globally_flat = false;               // every cone ideal is (1)
  bool maximal_set_known = false;           // zero_cone != 0
};

FlatnessReport flatness_report(const DeltaBasis& b);

struct FinitenessWitness {
  std::size_t coordinate = 0;
  std::optional<ExpVec::value_type> power;  // largest pure power a_i present
  PolyIdeal ideal;                          // generated by the pure-power coefficients
  bool unit = false;
};

struct FinitenessReport {
  bool finite = false;
  std::vector<FinitenessWitness> witnesses;  // one per coordinate
};

FinitenessReport finiteness_test(const DeltaBasis& b);

/// f ∈ S^{-1} I for S = {1, s, s^2, ...}: f lies in I + <t*s - 1> inside
/// H[t].
bool localized_contains(const PolyIdeal& ideal, const Poly& f, const Poly& s);

/// For every stair element, whether its cone ideal becomes (1) once s is
/// inverted. All true means the localized module is free over H_s.
std::map<ExpVec, bool> localized_cones(const FlatnessReport& report, const Poly& s);

}  // namespace dgb
