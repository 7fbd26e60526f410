#include <doctest.h>

#include "build.hpp"
#include "oracles.hpp"

using namespace dgb;

namespace {

RingSpec r2 = RingSpec::standard(2);

std::vector<DiffOp> two_ops(const std::string& a, const std::string& b, const std::string& d) {
  return {build::op(r2, "x1*d1 + (" + a + ")*d2 + (" + b + ")"), build::op(r2, "(x2 - x1)*d2 - (" + d + ")")};
}

bool in_left_ideal(const DiffOp& p, const std::vector<DiffOp>& gb, const WeylOrder& w) {
  return divide_weyl(p, gb, w).remainder.is_zero();
}

}  // namespace

TEST_CASE("elimination order compares derivations first") {
  WeylOrder w(r2);
  CHECK(w.less(WeylExp{{5, 5}, {0, 1}}, WeylExp{{0, 0}, {1, 0}}));
  CHECK(w.less(WeylExp{{0, 1}, {1, 0}}, WeylExp{{1, 0}, {1, 0}}));
  CHECK_THROWS_AS(WeylOrder(RingSpec::standard(2, 1)), DomainError);
}

TEST_CASE("full leading exponents") {
  WeylOrder w(r2);
  auto g = two_ops("x1", "x1", "1");
  CHECK(exp_full(g[0], w).joined() == ExpVec{1, 0, 1, 0});
  CHECK(exp_full(g[1], w).joined() == ExpVec{1, 0, 0, 1});
  CHECK(leading_coefficient(g[1], w) == -1);
  CHECK(exp_full(build::op(r2, "5"), w).joined() == ExpVec{0, 0, 0, 0});
  CHECK_THROWS_AS(exp_full(DiffOp(r2), w), DomainError);
  CHECK(to_string(exp_full(g[0], w)) == "(1,0,1,0)");
}

TEST_CASE("leading exponents add under products") {
  oracle::Rng rng(51);
  WeylOrder w(r2);
  for (int trial = 0; trial < 150; ++trial) {
    DiffOp p = rng.nonzero_op(r2, 2, 2, 3), q = rng.nonzero_op(r2, 2, 2, 3);
    CHECK(exp_full(leibniz_mul(p, q), w).joined() == exp_full(p, w).joined() + exp_full(q, w).joined());
  }
}

TEST_CASE("Weyl division") {
  WeylOrder w(r2);
  auto g = two_ops("x1", "x1", "1");
  std::vector<DiffOp> one{g[0]};
  CHECK(divide_weyl(g[0], one, w).remainder.is_zero());
  CHECK(divide_weyl(DiffOp(r2), g, w).remainder.is_zero());
  DiffOp s = s_operator(g[0], g[1], w);
  CHECK(s == leibniz_mul(DiffOp::derivation(r2, 1), g[0]) + leibniz_mul(DiffOp::derivation(r2, 0), g[1]));
  CHECK(exp_full(s, w).joined() == ExpVec{0, 1, 1, 1});
  auto d = divide_weyl(s, g, w);
  REQUIRE_FALSE(d.remainder.is_zero());
  CHECK(exp_full(d.remainder, w).joined() == ExpVec{0, 1, 1, 1});

  oracle::Rng rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<DiffOp> gs;
    int k = rng.uniform(1, 3);
    for (int i = 0; i < k; ++i) gs.push_back(rng.nonzero_op(r2, 2, 2, 2));
    DiffOp p = rng.op(r2, 3, 2, 4);
    auto dv = divide_weyl(p, gs, w);
    CHECK(oracle::reconstruct(dv.cofactors, gs, dv.remainder) == p);
    for (const auto& [e, c] : dv.remainder.terms())
      for (const auto& t : c.terms())
        for (const auto& gi : gs) CHECK_FALSE(divides(exp_full(gi, w).joined(), t.exp.concat(e)));
  }
}

TEST_CASE("Weyl Buchberger examples") {
  WeylOrder w(r2);
  std::vector<DiffOp> d{build::op(r2, "d1"), build::op(r2, "d2")};
  auto gb = buchberger_weyl(d, r2);
  CHECK(gb.ops.size() == 2);
  CHECK(std::is_permutation(gb.ops.begin(), gb.ops.end(), d.begin()));
  std::vector<DiffOp> x{build::op(r2, "x1")};
  CHECK(buchberger_weyl(x, r2).ops == x);

  for (const auto& [a, b, dd] : {std::tuple{"x1", "x1", "1"}, std::tuple{"x2", "x1^2", "x2"}}) {
    auto g = two_ops(a, b, dd);
    CHECK_FALSE(is_gb(g, w));
    auto out = buchberger_weyl(g, r2);
    CHECK(is_gb(out.ops, w));
    // 1 lies in the ideal exactly when its delta-base completion reaches it
    bool unit = member(build::op(r2, "1"), complete(GeneratorSet(r2, g))).member;
    CHECK(unit == (out.ops == std::vector<DiffOp>{build::op(r2, "1")}));
    CHECK(out.ops.size() == (unit ? 1u : 3u));
    for (const auto& p : g) CHECK(in_left_ideal(p, out.ops, w));
    // every output element is a left combination of the input
    auto closed = buchberger_weyl(out.ops, r2);
    CHECK(closed.ops == out.ops);
  }
  CHECK_THROWS_AS(buchberger_weyl(two_ops("x2", "x1", "1"), r2, 0), CapExceeded);
  RingSpec withparam = RingSpec::standard(1, 1);
  std::vector<DiffOp> pp{build::op(withparam, "x2*d1")};
  CHECK_THROWS_AS(buchberger_weyl(pp, withparam), DomainError);
}

TEST_CASE("Groebner bases of the Weyl algebra are delta-bases") {
  oracle::Rng rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<DiffOp> g;
    int k = rng.uniform(1, 3);
    for (int i = 0; i < k; ++i) g.push_back(rng.nonzero_op(r2, 2, 2, 2));
    auto out = buchberger_weyl(g, r2);
    CHECK(is_gb(out.ops, WeylOrder(r2)));
    CHECK(gb_implies_delta_check(out.ops, r2));
    for (const auto& p : g) CHECK(in_left_ideal(p, out.ops, WeylOrder(r2)));
  }
  // the converse fails: a delta-base that is not a Groebner base
  auto g = two_ops("x1", "x1", "1");
  CHECK_FALSE(is_gb(g, WeylOrder(r2)));
  CHECK(is_delta_groebner(GeneratorSet(r2, g)));
  CHECK(gb_implies_delta_check(g, r2));
}
