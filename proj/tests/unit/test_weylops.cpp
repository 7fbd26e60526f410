#include <doctest.h>

#include "build.hpp"
#include "oracles.hpp"

using namespace dgb;

namespace {

RingSpec r2 = RingSpec::standard(2);

}  // namespace

TEST_CASE("ring declarations are validated") {
  CHECK_THROWS_AS(RingSpec::standard(0), UsageError);
  CHECK_THROWS_AS(RingSpec(1, 0, {"x"}, {"x"}, MonomialOrder(OrderKind::lex, 1), MonomialOrder(OrderKind::lex, 1)),
                  UsageError);
  CHECK_THROWS_AS(RingSpec(2, 0, {"x"}, {"d1", "d2"}, MonomialOrder(OrderKind::lex, 2), MonomialOrder(OrderKind::lex, 2)),
                  UsageError);
  RingSpec r = RingSpec::standard(2, 1);
  CHECK(r.nvars() == 3);
  CHECK(r.x_names[2] == "x3");
}

TEST_CASE("operator addition") {
  DiffOp p = build::op(r2, "x1*d1 + x1*d2");
  CHECK((p + (-p)).is_zero());
  CHECK(p.terms().size() == 2);
  CHECK(build::op(r2, "x1*d1") + build::op(r2, "(x2 - x1)*d1") == build::op(r2, "x2*d1"));
  CHECK_THROWS_AS(p + DiffOp(RingSpec::standard(1)), UsageError);
  CHECK(op_add(p, p) == Coefficient(2) * p);
}

TEST_CASE("Leibniz product examples") {
  DiffOp d1 = DiffOp::derivation(r2, 0), x1 = DiffOp::from_poly(2, r2.x(0));
  CHECK(leibniz_mul(d1, x1) == build::op(r2, "x1*d1 + 1"));
  CHECK(leibniz_mul(DiffOp::term(2, ExpVec{2, 1}, r2.constant(1)), DiffOp::from_poly(2, r2.constant(5))) ==
        DiffOp::term(2, ExpVec{2, 1}, r2.constant(5)));
  DiffOp x1d1 = build::op(r2, "x1*d1");
  CHECK(leibniz_mul(x1d1, x1d1) == build::op(r2, "x1^2*d1^2 + x1*d1"));
  CHECK(leibniz_mul(x1d1, x1d1) == oracle::rewrite_product(x1d1, x1d1, r2));
  // [d_i, x_j] = 0 for i != j, [d_1, d_2] = 0
  DiffOp d2 = DiffOp::derivation(r2, 1), x2 = DiffOp::from_poly(2, r2.x(1));
  CHECK(leibniz_mul(d1, x2) == leibniz_mul(x2, d1));
  CHECK(leibniz_mul(d1, d2) == leibniz_mul(d2, d1));
  CHECK(derivation_times(ExpVec{1, 0}, x1) == build::op(r2, "x1*d1 + 1"));
}

TEST_CASE("parameters are constants for every derivation") {
  RingSpec r = RingSpec::standard(1, 1);
  DiffOp d1 = DiffOp::derivation(r, 0), y = DiffOp::from_poly(1, r.x(1));
  CHECK(leibniz_mul(d1, y) == leibniz_mul(y, d1));
  CHECK(leibniz_mul(d1, y) == oracle::rewrite_product(d1, y, r));
}

TEST_CASE("Leibniz product agrees with word rewriting") {
  oracle::Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    RingSpec r = RingSpec::standard(static_cast<std::size_t>(rng.uniform(1, 2)), static_cast<std::size_t>(rng.uniform(0, 1)));
    DiffOp p = rng.op(r, 2, 2, 2), q = rng.op(r, 2, 2, 2);
    CHECK(leibniz_mul(p, q) == oracle::rewrite_product(p, q, r));
  }
}

TEST_CASE("Leibniz product is composition of actions on polynomials") {
  oracle::Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    DiffOp p = rng.op(r2, 3, 2, 3), q = rng.op(r2, 3, 2, 3);
    DiffOp pq = leibniz_mul(p, q);
    for (int k = 0; k < 4; ++k) {
      Poly u = rng.poly(2, 6, 4);
      CHECK(oracle::apply(pq, u) == oracle::apply(p, oracle::apply(q, u)));
    }
  }
}

TEST_CASE("Leibniz product is associative and left H-linear") {
  oracle::Rng rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    DiffOp p = rng.op(r2, 2, 2, 2), q = rng.op(r2, 2, 2, 2), s = rng.op(r2, 2, 2, 2);
    CHECK(leibniz_mul(leibniz_mul(p, q), s) == leibniz_mul(p, leibniz_mul(q, s)));
    Poly h = rng.poly(2, 2, 2);
    CHECK(leibniz_mul(h * p, q) == h * leibniz_mul(p, q));
    CHECK(leibniz_mul(p, q + s) == leibniz_mul(p, q) + leibniz_mul(p, s));
  }
}

TEST_CASE("delta invariants") {
  DiffOp p1 = build::op(r2, "x1*d1 + x1*d2 + x1");
  CHECK(newton_delta_diagram(p1) == std::set<ExpVec>{{1, 0}, {0, 1}, {0, 0}});
  CHECK(exp_delta(p1, r2.order_delta) == ExpVec{1, 0});
  CHECK(c_delta(p1, r2.order_delta) == r2.x(0));
  DiffOp p2 = build::op(r2, "(x2 - x1)*d2 - 1");
  CHECK(exp_delta(p2, r2.order_delta) == ExpVec{0, 1});
  CHECK(c_delta(p2, r2.order_delta) == build::poly(r2, "x2 - x1"));
  CHECK(newton_delta_diagram(build::op(r2, "5")) == std::set<ExpVec>{{0, 0}});
  CHECK(newton_delta_diagram(build::op(r2, "d1^3")) == std::set<ExpVec>{{3, 0}});
  RingSpec lex = RingSpec::standard(2, 0, OrderKind::lex);
  CHECK(exp_delta(build::op(lex, "x1*d1^2 + x2*d1"), lex.order_delta) == ExpVec{2, 0});
  auto in = in_delta(p1, r2.order_delta);
  CHECK(in.exponent == ExpVec{1, 0});
  CHECK(in.coeff == r2.x(0));
  CHECK_THROWS_AS(exp_delta(DiffOp(r2), r2.order_delta), DomainError);
  CHECK_THROWS_AS(c_delta(DiffOp(r2), r2.order_delta), DomainError);
  CHECK_THROWS_AS(newton_delta_diagram(DiffOp(r2)), DomainError);
}

TEST_CASE("exponent and coefficient laws for sums and products") {
  oracle::Rng rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    MonomialOrder o(static_cast<OrderKind>(trial % 3), 2);
    DiffOp p = rng.nonzero_op(r2, 3, 2, 3), q = rng.nonzero_op(r2, 3, 2, 3);
    DiffOp pq = leibniz_mul(p, q), qp = leibniz_mul(q, p);
    CHECK(exp_delta(pq, o) == exp_delta(p, o) + exp_delta(q, o));
    CHECK(c_delta(pq, o) == c_delta(p, o) * c_delta(q, o));
    DiffOp comm = pq - qp;
    if (!comm.is_zero()) CHECK(o.less(exp_delta(comm, o), exp_delta(pq, o)));
    DiffOp s = p + q;
    if (exp_delta(p, o) != exp_delta(q, o)) {
      CHECK(exp_delta(s, o) == o.max(exp_delta(p, o), exp_delta(q, o)));
    } else if (!(c_delta(p, o) + c_delta(q, o)).is_zero()) {
      CHECK(exp_delta(s, o) == exp_delta(p, o));
      CHECK(c_delta(s, o) == c_delta(p, o) + c_delta(q, o));
    }
    // cancelling leading coefficients
    DiffOp t = rng.op(r2, 3, 2, 2);
    DiffOp neg = -DiffOp::term(2, exp_delta(p, o), c_delta(p, o)) + t;
    if (neg.is_zero() || exp_delta(neg, o) != exp_delta(p, o)) continue;
    DiffOp sum = p + neg;
    if (!(c_delta(p, o) + c_delta(neg, o)).is_zero()) continue;
    if (!sum.is_zero()) CHECK(o.less(exp_delta(sum, o), exp_delta(p, o)));
  }
}

TEST_CASE("primitive normalization") {
  DiffOp p = build::op(r2, "-2/3*x1*d1 + 4/9");
  DiffOp q = primitive_normalized(p, r2);
  CHECK(q == build::op(r2, "3*x1*d1 - 2"));
  CHECK(primitive_normalized(DiffOp(r2), r2).is_zero());
}

TEST_CASE("canonical display") {
  CHECK(format_op(build::op(r2, "x1*d1 + x1*d2 + x1"), r2) == "x1*d1 + x1*d2 + x1");
  CHECK(format_op(build::op(r2, "(x2 - x1)*d2 - 1"), r2) == "(x2 - x1)*d2 - 1");
  CHECK(format_op(build::op(r2, "-x1*d1^2*d2 + d2 - x2 + 1"), r2) == "-x1*d1^2*d2 + d2 - x2 + 1");
  CHECK(format_op(build::op(r2, "1/2*d1"), r2) == "1/2*d1");
  CHECK(format_op(DiffOp(r2), r2) == "0");
}
