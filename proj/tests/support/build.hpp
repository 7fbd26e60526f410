#pragma once

// Shorthand for writing operators and polynomials in tests.

#include "dgb/problem.hpp"

#include <string_view>

namespace build {

inline dgb::DiffOp op(const dgb::RingSpec& r, std::string_view s) {
  return dgb::parse_operator(s, r);
}

// A polynomial in x1..xk, parsed through a ring with one derivation.
inline dgb::Poly poly(const dgb::RingSpec& r, std::string_view s) {
  dgb::DiffOp o = op(r, s);
  if (o.terms().size() > 1 || (o.terms().size() == 1 && !o.terms().begin()->first.is_zero()))
    throw dgb::UsageError("not a polynomial");
  return o.coefficient(dgb::ExpVec(r.n));
}

inline dgb::RingSpec poly_ring(std::size_t k, dgb::OrderKind kind = dgb::OrderKind::deglex) {
  return dgb::RingSpec::standard(1, k - 1, dgb::OrderKind::deglex, kind);
}

}  // namespace build
