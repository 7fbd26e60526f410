#include <doctest.h>

#include "build.hpp"
#include "oracles.hpp"

using namespace dgb;

namespace {

const char* two_ops = R"(# a = b = x1, d = 1
ring x1 x2 ; dvars d1 d2 ; order deglex
P1 = x1*d1 + x1*d2 + x1
P2 = (x2 - x1)*d2 - 1
)";

ResultDocument run(const std::string& text, const std::string& cmd, std::vector<std::string> defs = {},
                   std::optional<std::string> alpha = std::nullopt) {
  CommandOptions o;
  o.command = cmd;
  o.definitions = std::move(defs);
  o.alpha = std::move(alpha);
  return run_command(parse_problem(text), o);
}

}  // namespace

TEST_CASE("parsing the two-operator family") {
  ProblemFile p = parse_problem(two_ops);
  REQUIRE(p.definitions.size() == 2);
  const RingSpec& r = p.ring;
  DiffOp expect = DiffOp::term(2, ExpVec{1, 0}, r.x(0)) + DiffOp::term(2, ExpVec{0, 1}, r.x(0)) +
                  DiffOp::from_poly(2, r.x(0));
  CHECK(*p.find("P1") == expect);
  CHECK(p.find("nope") == nullptr);
  CHECK(p.ring.order_delta == MonomialOrder(OrderKind::deglex, 2));
}

TEST_CASE("expression language") {
  RingSpec r = RingSpec::standard(2);
  CHECK(parse_operator("0", r).is_zero());
  CHECK(parse_operator("d1*x1", r) == parse_operator("x1*d1 + 1", r));
  CHECK(parse_operator("(d1 + x2)^2", r) == parse_operator("d1^2 + 2*x2*d1 + x2^2", r));
  CHECK(parse_operator("3/6*x1 - -x1", r) == parse_operator("3/2*x1", r));
  CHECK(parse_operator("x1^0", r) == parse_operator("1", r));
  Environment env{{"P", parse_operator("x1*d1", r)}};
  CHECK(parse_operator("d1*P", r, env) == parse_operator("x1*d1^2 + d1", r));
}

TEST_CASE("parse errors carry positions") {
  RingSpec r = RingSpec::standard(2);
  auto error_at = [&](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_problem(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(error_at("ring x1 x2\ndvars d1 d2\nP = x1 + y") == std::pair<std::size_t, std::size_t>{3, 10});
  CHECK(error_at("ring x1\ndvars d1\nP = 1/0") == std::pair<std::size_t, std::size_t>{3, 7});
  CHECK(error_at("ring x1\ndvars d1\nP = x1 x1") == std::pair<std::size_t, std::size_t>{3, 8});
  CHECK(error_at("ring x1\ndvars d1\nP = x1^-1").first == 3);
  CHECK(error_at("ring x1\ndvars d1\nP = x1 $").second == 8);
  CHECK(error_at("P = 1").first == 1);
  CHECK(error_at("ring x1\ndvars d1\norder sideways").first == 3);
  CHECK(error_at("ring x1\ndvars d1\nP = 1; P = 2").second == 8);
  CHECK(error_at("ring x1\ndvars d1\nx1 = 2").first == 3);
  CHECK(error_at("ring x1\ndvars d1\nP = x1/2").first == 3);
  CHECK(error_at("ring x1\ndvars d1\nP = (x1").first == 3);
  CHECK(error_at("ring x1\ndvars d1\nP = 1\ngenerators Q").first == 4);
  CHECK_THROWS_AS(parse_operator("x1 +", r), ParseError);
}

TEST_CASE("orders, parameters and commands in problem files") {
  ProblemFile p = parse_problem("ring x1 x2 y; dvars d1 d2\norder lex d2 d1\norder-x degrevlex\n"
                                "A = y*d1\ngenerators A\ncommand delta-gb --cap 5");
  CHECK(p.ring.m == 1);
  CHECK(p.ring.order_delta == MonomialOrder(OrderKind::lex, std::vector<std::size_t>{1, 0}));
  CHECK(p.ring.order_x.kind() == OrderKind::degrevlex);
  CHECK(p.generators == std::vector<std::string>{"A"});
  CHECK(p.command == std::vector<std::string>{"delta-gb", "--cap", "5"});
  CHECK(format_op(*p.find("A"), p.ring) == "y*d1");
}

TEST_CASE("printing and parsing round-trip") {
  oracle::Rng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    RingSpec r = RingSpec::standard(static_cast<std::size_t>(rng.uniform(1, 3)), static_cast<std::size_t>(rng.uniform(0, 1)),
                                    static_cast<OrderKind>(trial % 3));
    DiffOp p = rng.op(r, 3, 3, 4, true);
    std::string shown = format_op(p, r);
    CHECK_MESSAGE(parse_operator(shown, r) == p, shown);
  }
}

TEST_CASE("commands on the two-operator family") {
  auto d = run(two_ops, "delta-gb");
  CHECK(d.exit_code == 0);
  CHECK(d.json["outputs"]["additions"] == 0);
  CHECK(d.json["outputs"]["stair"] == nlohmann::json::parse("[[0,1],[1,0]]"));
  CHECK(d.json["outputs"]["basis"][1]["op"] == "(x2 - x1)*d2 - 1");
  for (const char* key : {"command", "ring", "inputs", "outputs"}) CHECK(d.json.contains(key));

  d = run(two_ops, "member", {"P=1"});
  CHECK(d.exit_code == 1);
  CHECK(d.json["verdict"] == false);

  d = run(two_ops, "member", {"Q=d1*P1 + x2*P2"});
  CHECK(d.exit_code == 0);
  CHECK(d.json["verdict"] == true);
  CHECK(d.json["certificate"]["remainder"] == "0");

  d = run(two_ops, "flatness");
  CHECK(d.exit_code == 1);
  CHECK(d.json["outputs"]["J"] == nlohmann::json::parse(R"(["x1*x2 - x1^2"])"));
  CHECK(d.text.find("J = <x1*x2 - x1^2>") != std::string::npos);

  d = run(two_ops, "verify-delta-gb");
  CHECK(d.exit_code == 0);
  CHECK(d.json["verdict"] == true);

  d = run(two_ops, "gb");
  CHECK(d.exit_code == 0);
  CHECK(d.json["outputs"]["is_gb"] == false);
  CHECK(d.json["outputs"]["pairs"][0]["exp"] == nlohmann::json::parse("[0,1,1,1]"));
  CHECK(d.json["outputs"]["pairs"][0]["in_cone"] == false);

  d = run(two_ops, "sdelta", {}, "1,1");
  CHECK(d.json["outputs"]["operators"].size() == 1);
  d = run(two_ops, "cone", {}, "1,0");
  CHECK(d.json["outputs"]["coefficients"] == nlohmann::json::parse(R"(["x1"])"));

  d = run(two_ops, "finiteness");
  CHECK(d.exit_code == 1);
  d = run(two_ops, "compare");
  CHECK(d.exit_code == 0);
  CHECK(d.json["outputs"]["input_is_gb"] == false);
  CHECK(d.json["outputs"]["input_is_delta_gb"] == true);
}

TEST_CASE("command errors") {
  CHECK(run(two_ops, "reduce").exit_code == 2);
  CHECK(run(two_ops, "cone").exit_code == 2);
  CHECK(run(two_ops, "cone", {}, "1").exit_code == 2);
  CHECK(run(two_ops, "member", {"P=1/0"}).exit_code == 2);
  CHECK(run(two_ops, "syzygy").exit_code == 2);
  CHECK(run(two_ops, "bogus").exit_code == 2);
  CommandOptions o;
  o.command = "delta-gb";
  o.cap = 0;
  CHECK(run_command(parse_problem("ring x1 x2; dvars d1 d2; A = x1*d1 + x1*d2 + x2; B = (x2 - x1)*d2 - 1"), o)
            .exit_code == 3);
}

TEST_CASE("syzygy command") {
  auto d = run("ring x1 x2; dvars d1 d2; A = x1; B = x2 - x1", "syzygy");
  CHECK(d.exit_code == 0);
  CHECK(d.json["outputs"]["syzygies"] == nlohmann::json::parse(R"([["x2 - x1", "-x1"]])"));
}
