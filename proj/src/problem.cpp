#include "dgb/problem.hpp"

#include "dgb/apps.hpp"
#include "dgb/weylgb.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace dgb {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : UsageError(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line), column_(column) {}

const DiffOp* ProblemFile::find(std::string_view name) const {
  for (const auto& [n, op] : definitions)
    if (n == name) return &op;
  return nullptr;
}

// ---------------------------------------------------------------- lexer

namespace {

const std::set<std::string, std::less<>> keywords = {"ring", "dvars", "order", "order-x", "generators", "command"};

enum class Tok { ident, integer, plus, minus, star, caret, slash, lparen, rparen, comma, equals, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(std::string_view s, std::size_t line, std::size_t column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    std::size_t col = column + i;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::ident, std::string(s.substr(i, j - i)), line, col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::integer, std::string(s.substr(i, j - i)), line, col});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '^': k = Tok::caret; break;
      case '/': k = Tok::slash; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      case ',': k = Tok::comma; break;
      case '=': k = Tok::equals; break;
      default: throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), line, col});
    ++i;
  }
  out.push_back({Tok::end, "", line, column + s.size()});
  return out;
}

std::string describe(const Token& t) {
  return t.kind == Tok::end ? "end of statement" : "'" + t.text + "'";
}

// ---------------------------------------------------------------- expressions

class ExprParser {
 public:
  ExprParser(const std::vector<Token>& toks, std::size_t pos, const RingSpec& ring, const Environment& env)
      : toks_(toks), pos_(pos), ring_(ring), env_(env) {}

  DiffOp parse_all() {
    DiffOp r = expr();
    if (peek().kind != Tok::end) fail(peek(), "unexpected " + describe(peek()));
    return r;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] static void fail(const Token& t, const std::string& what) { throw ParseError(t.line, t.column, what); }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return next();
  }

  DiffOp expr() {
    DiffOp r = product();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      bool minus = next().kind == Tok::minus;
      DiffOp t = product();
      if (minus) r -= t;
      else r += t;
    }
    return r;
  }

  DiffOp product() {
    DiffOp r = factor();
    while (peek().kind == Tok::star) {
      next();
      r = leibniz_mul(r, factor());
    }
    return r;
  }

  DiffOp factor() {
    if (peek().kind == Tok::minus) {
      next();
      return -factor();
    }
    if (peek().kind == Tok::plus) {
      next();
      return factor();
    }
    DiffOp base = primary();
    if (peek().kind != Tok::caret) return base;
    next();
    const Token& e = expect(Tok::integer, "a nonnegative integer exponent");
    if (e.text.size() > 6) fail(e, "exponent too large");
    unsigned long k = std::stoul(e.text);
    DiffOp r = DiffOp::from_poly(ring_.n, ring_.constant(1));
    for (unsigned long i = 0; i < k; ++i) r = leibniz_mul(r, base);
    return r;
  }

  DiffOp primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::integer: {
        next();
        mpz_class num(t.text), den(1);
        if (peek().kind == Tok::slash) {
          next();
          const Token& d = expect(Tok::integer, "an integer denominator");
          den = mpz_class(d.text);
          if (den == 0) fail(d, "division by zero in coefficient literal");
        }
        return DiffOp::from_poly(ring_.n, ring_.constant(make_rational(num, den)));
      }
      case Tok::ident: {
        next();
        for (std::size_t i = 0; i < ring_.x_names.size(); ++i)
          if (ring_.x_names[i] == t.text) return DiffOp::from_poly(ring_.n, ring_.x(i));
        for (std::size_t i = 0; i < ring_.d_names.size(); ++i)
          if (ring_.d_names[i] == t.text) return DiffOp::derivation(ring_, i);
        if (auto it = env_.find(t.text); it != env_.end()) return it->second;
        fail(t, "undeclared identifier '" + t.text + "'");
      }
      case Tok::lparen: {
        next();
        DiffOp r = expr();
        expect(Tok::rparen, "')'");
        return r;
      }
      case Tok::slash: fail(t, "division is only allowed between integer literals");
      default: fail(t, "expected an expression, found " + describe(t));
    }
  }

  const std::vector<Token>& toks_;
  std::size_t pos_;
  const RingSpec& ring_;
  const Environment& env_;
};

// ---------------------------------------------------------------- statements

struct Statement {
  std::string_view text;
  std::size_t line, column;
};

std::vector<Statement> split_statements(std::string_view text) {
  std::vector<Statement> out;
  std::size_t line = 1, start = 0;
  while (start <= text.size()) {
    std::size_t eol = text.find('\n', start);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view l = text.substr(start, eol - start);
    if (auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    std::size_t s = 0;
    while (s <= l.size()) {
      std::size_t semi = l.find(';', s);
      if (semi == std::string_view::npos) semi = l.size();
      std::string_view piece = l.substr(s, semi - s);
      std::size_t lead = 0;
      while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
      std::size_t trail = piece.size();
      while (trail > lead && std::isspace(static_cast<unsigned char>(piece[trail - 1]))) --trail;
      if (trail > lead) out.push_back({piece.substr(lead, trail - lead), line, s + lead + 1});
      s = semi + 1;
    }
    start = eol + 1;
    ++line;
  }
  return out;
}

std::vector<std::pair<std::string, std::size_t>> words(std::string_view s) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(std::string(s.substr(i, j - i)), i);
    i = j;
  }
  return out;
}

bool is_identifier(std::string_view s) {
  return !s.empty() && ident_start(s[0]) && std::all_of(s.begin(), s.end(), ident_char);
}

MonomialOrder order_from_words(const std::vector<std::pair<std::string, std::size_t>>& w,
                               const std::vector<std::string>& names, const Statement& st) {
  if (w.size() < 2) throw ParseError(st.line, st.column, "expected an order name");
  OrderKind kind;
  try {
    kind = parse_order_kind(w[1].first);
  } catch (const UsageError&) {
    throw ParseError(st.line, st.column + w[1].second, "unknown order '" + w[1].first + "'");
  }
  if (w.size() == 2) return MonomialOrder(kind, names.size());
  if (w.size() - 2 != names.size())
    throw ParseError(st.line, st.column + w[2].second, "precedence must list every variable exactly once");
  std::vector<std::size_t> prec;
  for (std::size_t k = 2; k < w.size(); ++k) {
    auto it = std::find(names.begin(), names.end(), w[k].first);
    if (it == names.end()) throw ParseError(st.line, st.column + w[k].second, "unknown variable '" + w[k].first + "'");
    std::size_t idx = static_cast<std::size_t>(it - names.begin());
    if (std::find(prec.begin(), prec.end(), idx) != prec.end())
      throw ParseError(st.line, st.column + w[k].second, "variable '" + w[k].first + "' listed twice");
    prec.push_back(idx);
  }
  return MonomialOrder(kind, std::move(prec));
}

}  // namespace

DiffOp parse_operator(std::string_view text, const RingSpec& ring, const Environment& env) {
  auto toks = tokenize(text, 1, 1);
  return ExprParser(toks, 0, ring, env).parse_all();
}

RingSpec with_orders(const RingSpec& ring, std::optional<MonomialOrder> order_delta,
                     std::optional<MonomialOrder> order_x) {
  return RingSpec(ring.n, ring.m, ring.x_names, ring.d_names, order_delta.value_or(ring.order_delta),
                  order_x.value_or(ring.order_x));
}

ProblemFile parse_problem(std::string_view text) {
  std::optional<std::vector<std::string>> xs, ds;
  std::optional<MonomialOrder> od, ox;
  std::optional<Statement> od_at, ox_at;
  std::optional<RingSpec> ring;
  Environment env;
  std::vector<std::pair<std::string, DiffOp>> defs;
  std::optional<std::vector<std::string>> gens;
  std::optional<Statement> gens_at;
  std::vector<std::string> command;

  auto need_ring = [&](const Statement& st) -> const RingSpec& {
    if (!ring) {
      if (!xs || !ds) throw ParseError(st.line, st.column, "'ring' and 'dvars' must be declared before operators");
      if (xs->size() < ds->size())
        throw ParseError(st.line, st.column, "'ring' must list at least as many variables as 'dvars'");
      std::size_t n = ds->size(), m = xs->size() - n;
      try {
        ring.emplace(n, m, *xs, *ds, MonomialOrder(OrderKind::deglex, n), MonomialOrder(OrderKind::deglex, n + m));
      } catch (const UsageError& e) {
        throw ParseError(st.line, st.column, e.what());
      }
    }
    return *ring;
  };

  for (const auto& st : split_statements(text)) {
    auto w = words(st.text);
    const std::string& kw = w[0].first;
    auto names_after = [&]() {
      std::vector<std::string> out;
      for (std::size_t k = 1; k < w.size(); ++k) {
        std::stringstream ss(w[k].first);
        std::string nm;
        while (std::getline(ss, nm, ',')) {
          if (nm.empty()) continue;
          if (!is_identifier(nm) || keywords.count(nm))
            throw ParseError(st.line, st.column + w[k].second, "invalid name '" + nm + "'");
          out.push_back(nm);
        }
      }
      return out;
    };
    if (kw == "ring" || kw == "dvars") {
      if (ring) throw ParseError(st.line, st.column, "'" + kw + "' after operator definitions");
      auto& slot = kw == "ring" ? xs : ds;
      if (slot) throw ParseError(st.line, st.column, "'" + kw + "' declared twice");
      slot = names_after();
      if (slot->empty()) throw ParseError(st.line, st.column, "'" + kw + "' needs at least one name");
    } else if (kw == "order" || kw == "order-x") {
      if (!xs || !ds) throw ParseError(st.line, st.column, "'ring' and 'dvars' must come before '" + kw + "'");
      if (kw == "order") {
        od = order_from_words(w, *ds, st);
        od_at = st;
      } else {
        ox = order_from_words(w, *xs, st);
        ox_at = st;
      }
    } else if (kw == "generators") {
      gens = names_after();
      gens_at = st;
    } else if (kw == "command") {
      if (w.size() < 2) throw ParseError(st.line, st.column, "'command' needs a command name");
      command.clear();
      for (std::size_t k = 1; k < w.size(); ++k) command.push_back(w[k].first);
    } else {
      const RingSpec& r = need_ring(st);
      auto toks = tokenize(st.text, st.line, st.column);
      if (toks[0].kind != Tok::ident || toks[1].kind != Tok::equals)
        throw ParseError(st.line, st.column, "expected a statement or 'NAME = expression'");
      const std::string& name = toks[0].text;
      if (keywords.count(name)) throw ParseError(st.line, st.column, "'" + name + "' is a keyword");
      for (const auto* list : {&r.x_names, &r.d_names})
        if (std::find(list->begin(), list->end(), name) != list->end())
          throw ParseError(st.line, st.column, "'" + name + "' is a ring variable");
      if (env.count(name)) throw ParseError(st.line, st.column, "'" + name + "' is already defined");
      DiffOp op = ExprParser(toks, 2, r, env).parse_all();
      env.emplace(name, op);
      defs.emplace_back(name, std::move(op));
    }
  }
  Statement start{"", 1, 1};
  RingSpec base = need_ring(start);
  if (gens)
    for (const auto& g : *gens)
      if (!env.count(g)) throw ParseError(gens_at->line, gens_at->column, "undeclared operator '" + g + "'");
  return ProblemFile{with_orders(base, od, ox), std::move(defs), std::move(gens), std::move(command)};
}

// ---------------------------------------------------------------- commands

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"delta-gb", "gb",     "reduce",   "member",          "stair",
                                                 "cone",     "sdelta", "flatness", "verify-delta-gb", "finiteness",
                                                 "syzygy",   "compare"};
  return names;
}

namespace {

using json = nlohmann::ordered_json;

json exp_json(const ExpVec& e) {
  json a = json::array();
  for (auto v : e.entries()) a.push_back(v);
  return a;
}

std::vector<std::string> precedence_names(const MonomialOrder& o, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (auto i : o.precedence()) out.push_back(names[i]);
  return out;
}

json ring_json(const RingSpec& r) {
  return json{{"n", r.n},
              {"m", r.m},
              {"x", r.x_names},
              {"d", r.d_names},
              {"order", order_kind_name(r.order_delta.kind())},
              {"order_precedence", precedence_names(r.order_delta, r.d_names)},
              {"order_x", order_kind_name(r.order_x.kind())},
              {"order_x_precedence", precedence_names(r.order_x, r.x_names)}};
}

struct Named {
  std::vector<std::string> names;
  std::vector<DiffOp> ops;
};

class Runner {
 public:
  Runner(const ProblemFile& p, const CommandOptions& o) : problem_(p), opts_(o), ring_(p.ring) {}

  ResultDocument run() {
    doc_["command"] = opts_.command;
    doc_["ring"] = ring_json(problem_.ring);
    doc_["inputs"] = json::object();
    doc_["outputs"] = json::object();
    try {
      setup();
      dispatch();
    } catch (const CapExceeded& e) {
      return error(3, e.what());
    } catch (const UsageError& e) {
      return error(2, e.what());
    } catch (const DomainError& e) {
      return error(2, e.what());
    }
    return {doc_, text_.str(), exit_};
  }

 private:
  ResultDocument error(int code, const std::string& what) {
    doc_["error"] = what;
    return {doc_, "error: " + what + "\n", code};
  }

  std::string show(const DiffOp& p) const { return format_op(p, ring_); }
  std::string show(const Poly& p) const { return format_poly(p, ring_.x_names); }
  json show_all(const std::vector<Poly>& ps) const {
    json a = json::array();
    for (const auto& p : ps) a.push_back(show(p));
    return a;
  }
  std::string show_ideal(const std::vector<Poly>& ps) const {
    if (ps.empty()) return "<0>";
    std::string s = "<";
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + show(ps[i]);
    return s + ">";
  }

  void setup() {
    if (std::find(command_names().begin(), command_names().end(), opts_.command) == command_names().end())
      throw UsageError("unknown command '" + opts_.command + "'");
    ring_ = with_orders(problem_.ring,
                        opts_.order ? std::optional(MonomialOrder(*opts_.order, problem_.ring.order_delta.precedence()))
                                    : std::nullopt,
                        opts_.order_x ? std::optional(MonomialOrder(*opts_.order_x, problem_.ring.order_x.precedence()))
                                      : std::nullopt);
    doc_["ring"] = ring_json(ring_);

    for (const auto& [name, op] : problem_.definitions) env_.emplace(name, op);
    std::optional<std::string> last_cli;
    for (const auto& def : opts_.definitions) {
      auto eq = def.find('=');
      if (eq == std::string::npos) throw UsageError("expected NAME=EXPR, got '" + def + "'");
      std::string name = def.substr(0, eq);
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
      if (!is_identifier(name) || keywords.count(name)) throw UsageError("invalid operator name '" + name + "'");
      if (env_.count(name)) throw UsageError("'" + name + "' is already defined");
      DiffOp op;
      try {
        op = parse_operator(std::string_view(def).substr(eq + 1), ring_, env_);
      } catch (const ParseError& e) {
        throw UsageError("in definition of " + name + ": " + e.what());
      }
      env_.emplace(name, std::move(op));
      last_cli = name;
    }
    target_ = opts_.target ? opts_.target : last_cli;
    if (target_ && !env_.count(*target_)) throw UsageError("undeclared operator '" + *target_ + "'");

    std::vector<std::string> names;
    if (problem_.generators) {
      names = *problem_.generators;
    } else {
      for (const auto& [name, op] : problem_.definitions)
        if (name != target_) names.push_back(name);
    }
    for (const auto& name : names) {
      const DiffOp& op = env_.at(name);
      if (op.is_zero()) continue;  // zero generates nothing
      gens_.names.push_back(name);
      gens_.ops.push_back(op);
    }
    json g = json::array();
    for (std::size_t i = 0; i < gens_.ops.size(); ++i) g.push_back({{"name", gens_.names[i]}, {"op", show(gens_.ops[i])}});
    doc_["inputs"]["generators"] = g;
    if (target_) doc_["inputs"]["target"] = {{"name", *target_}, {"op", show(env_.at(*target_))}};
    if (opts_.alpha) doc_["inputs"]["alpha"] = exp_json(alpha());
  }

  ExpVec alpha() const {
    if (!opts_.alpha) throw UsageError("this command needs --alpha a1,...,an");
    std::vector<ExpVec::value_type> v;
    std::stringstream ss(*opts_.alpha);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty() || part.size() > 9 || !std::all_of(part.begin(), part.end(), ::isdigit))
        throw UsageError("--alpha expects nonnegative integers separated by commas");
      v.push_back(static_cast<ExpVec::value_type>(std::stoul(part)));
    }
    if (v.size() != ring_.n) throw UsageError("--alpha needs " + std::to_string(ring_.n) + " entries");
    return ExpVec(std::move(v));
  }

  const DiffOp& target() const {
    if (!target_) throw UsageError("this command needs a target operator (NAME=EXPR or --target NAME)");
    return env_.at(*target_);
  }

  GeneratorSet generator_set() const {
    if (gens_.ops.empty()) throw UsageError("no nonzero generators");
    return GeneratorSet(ring_, gens_.ops);
  }

  ReduceOptions reduce_options() const { return ReduceOptions{opts_.tail_reduce}; }

  // Completes the generators and names appended elements G1, G2, ...
  std::pair<DeltaBasis, std::vector<std::string>> completed(DeltaStats* stats = nullptr) {
    DeltaBasis b = complete(generator_set(), CompletionOptions{opts_.cap, reduce_options()}, stats);
    std::vector<std::string> names = gens_.names;
    std::size_t k = 0;
    while (names.size() < b.ops().size()) {
      std::string nm = "G" + std::to_string(++k);
      if (env_.count(nm)) continue;
      names.push_back(nm);
    }
    return {std::move(b), std::move(names)};
  }

  json basis_json(const std::vector<DiffOp>& ops, const std::vector<std::string>& names) const {
    json a = json::array();
    for (std::size_t i = 0; i < ops.size(); ++i)
      a.push_back({{"name", names[i]}, {"op", show(ops[i])}, {"exp", exp_json(exp_delta(ops[i], ring_.order_delta))}});
    return a;
  }

  void print_basis(const std::vector<DiffOp>& ops, const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < ops.size(); ++i) text_ << "  " << names[i] << " = " << show(ops[i]) << "\n";
  }

  void print_stair(const std::vector<ExpVec>& stair) {
    text_ << "stair:";
    for (const auto& e : stair) text_ << " " << to_string(e);
    text_ << "\n";
  }

  json stair_json(const std::vector<ExpVec>& stair) const {
    json a = json::array();
    for (const auto& e : stair) a.push_back(exp_json(e));
    return a;
  }

  json trace_json(const ReductionTrace& tr, const std::vector<std::string>& names) const {
    json cof = json::array();
    for (std::size_t i = 0; i < tr.cofactors.size(); ++i)
      if (!tr.cofactors[i].is_zero()) cof.push_back({{"name", names[i]}, {"cofactor", show(tr.cofactors[i])}});
    return {{"cofactors", cof}, {"remainder", show(tr.remainder)}, {"steps", tr.steps}};
  }

  void print_trace(const ReductionTrace& tr, const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < tr.cofactors.size(); ++i)
      if (!tr.cofactors[i].is_zero()) text_ << "  cofactor of " << names[i] << ": " << show(tr.cofactors[i]) << "\n";
    text_ << "  remainder: " << show(tr.remainder) << "\n";
  }

  void verdict(bool v) {
    doc_["verdict"] = v;
    if (!v) exit_ = 1;
  }

  void dispatch() {
    const std::string& c = opts_.command;
    if (c == "delta-gb") delta_gb();
    else if (c == "gb") gb();
    else if (c == "reduce") reduce_cmd();
    else if (c == "member") member_cmd();
    else if (c == "stair") stair();
    else if (c == "cone") cone();
    else if (c == "sdelta") sdelta();
    else if (c == "verify-delta-gb") verify();
    else if (c == "flatness") flatness();
    else if (c == "finiteness") finiteness();
    else if (c == "syzygy") syzygy();
    else compare();
  }

  void delta_gb() {
    DeltaStats stats;
    auto [b, names] = completed(&stats);
    auto& out = doc_["outputs"];
    out["basis"] = basis_json(b.ops(), names);
    out["stair"] = stair_json(b.stair());
    out["additions"] = b.additions();
    out["stats"] = stats_json(stats);
    text_ << "Groebner delta-base (" << b.ops().size() << " elements, " << b.additions() << " added):\n";
    print_basis(b.ops(), names);
    print_stair(b.stair());
  }

  static json stats_json(const DeltaStats& s) {
    return {{"reductions", s.reductions},
            {"reduction_steps", s.reduction_steps},
            {"s_operators", s.s_operators},
            {"additions", s.additions}};
  }

  void gb() {
    const WeylOrder w(ring_);
    const auto& g = gens_.ops;
    if (g.empty()) throw UsageError("no nonzero generators");
    json leads = json::array();
    std::vector<WeylExp> exps;
    for (std::size_t i = 0; i < g.size(); ++i) {
      exps.push_back(exp_full(g[i], w));
      leads.push_back({{"name", gens_.names[i]}, {"exp", exp_json(exps.back().joined())}});
      text_ << "exp(" << gens_.names[i] << ") = " << to_string(exps.back()) << "\n";
    }
    json pairs = json::array();
    bool input_gb = true;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        DiffOp s = s_operator(g[i], g[j], w);
        std::string label = "S(" + gens_.names[i] + "," + gens_.names[j] + ")";
        json pj{{"pair", {gens_.names[i], gens_.names[j]}}, {"s_operator", show(s)}};
        if (s.is_zero()) {
          pj["exp"] = nullptr;
          pj["in_cone"] = nullptr;
          pj["remainder"] = "0";
          pj["reduces_to_zero"] = true;
          text_ << label << " = 0\n";
          pairs.push_back(pj);
          continue;
        }
        const ExpVec e = exp_full(s, w).joined();
        bool in_cone = std::any_of(exps.begin(), exps.end(), [&](const WeylExp& x) { return divides(x.joined(), e); });
        DiffOp rem = divide_weyl(s, g, w).remainder;
        pj["exp"] = exp_json(e);
        pj["in_cone"] = in_cone;
        pj["remainder"] = show(rem);
        pj["reduces_to_zero"] = rem.is_zero();
        input_gb = input_gb && rem.is_zero();
        text_ << label << ": exp = " << to_string(e) << (in_cone ? " inside" : " outside")
              << " the exponent cone, remainder " << (rem.is_zero() ? "0" : "nonzero") << "\n";
        pairs.push_back(pj);
      }
    text_ << "is_gb: " << (input_gb ? "true" : "false") << "\n";
    WeylStats stats;
    WeylGB out = buchberger_weyl(g, ring_, opts_.cap, &stats);
    json basis = json::array();
    text_ << "reduced Groebner basis (" << out.ops.size() << " elements):\n";
    for (const auto& p : out.ops) {
      basis.push_back({{"op", show(p)}, {"exp", exp_json(exp_full(p, w).joined())}});
      text_ << "  " << show(p) << "\n";
    }
    auto& o = doc_["outputs"];
    o["leading_exponents"] = leads;
    o["pairs"] = pairs;
    o["is_gb"] = input_gb;
    o["basis"] = basis;
    o["stats"] = {{"s_pairs", stats.s_pairs}, {"reduction_steps", stats.reduction_steps}, {"additions", stats.additions}};
  }

  void reduce_cmd() {
    const DiffOp& p = target();
    DeltaStats stats;
    auto tr = reduce(p, generator_set(), reduce_options(), &stats);
    doc_["outputs"] = trace_json(tr, gens_.names);
    text_ << "reduction of " << *target_ << ":\n";
    print_trace(tr, gens_.names);
  }

  void member_cmd() {
    const DiffOp& p = target();
    auto [b, names] = completed();
    auto r = member(p, b, reduce_options());
    auto& o = doc_["outputs"];
    o["basis"] = basis_json(b.ops(), names);
    o["stair"] = stair_json(b.stair());
    text_ << "Groebner delta-base:\n";
    print_basis(b.ops(), names);
    verdict(r.member);
    text_ << *target_ << (r.member ? " is" : " is not") << " in the ideal\n";
    if (r.member) {
      doc_["certificate"] = trace_json(*r.certificate, names);
      text_ << "certificate:\n";
      print_trace(*r.certificate, names);
    }
  }

  void stair() {
    auto [b, names] = completed();
    doc_["outputs"]["stair"] = stair_json(b.stair());
    print_stair(b.stair());
  }

  void cone() {
    const ExpVec a = alpha();
    GeneratorSet f = generator_set();
    auto k = cone_coefficients(a, f);
    PolyIdeal c = cone_ideal(a, f);
    auto& o = doc_["outputs"];
    o["alpha"] = exp_json(a);
    o["coefficients"] = show_all(k);
    o["groebner_basis"] = show_all(c.groebner_basis());
    o["zero"] = c.is_zero();
    o["unit"] = is_unit_ideal(c);
    text_ << "K(" << to_string(a) << "; F) = {";
    for (std::size_t i = 0; i < k.size(); ++i) text_ << (i ? ", " : "") << show(k[i]);
    text_ << "}\nC(" << to_string(a) << "; F) = " << show_ideal(c.groebner_basis()) << "\n";
  }

  json sdelta_json(const SDeltaOp& s, const GeneratorSet& f, DeltaStats* stats) {
    json lam = json::array();
    for (std::size_t i = 0; i < s.lambda.size(); ++i)
      if (!s.lambda[i].is_zero()) lam.push_back({{"name", gens_.names[i]}, {"lambda", show(s.lambda[i])}});
    auto tr = reduce(s.op, f, reduce_options(), stats);
    json j{{"alpha", exp_json(s.alpha)}, {"lambda", lam}, {"op", show(s.op)}};
    j["exp"] = s.op.is_zero() ? json(nullptr) : exp_json(exp_delta(s.op, ring_.order_delta));
    j["reduction"] = trace_json(tr, gens_.names);
    text_ << "S_" << to_string(s.alpha) << " = " << show(s.op) << "\n";
    for (const auto& l : lam) text_ << "  lambda[" << l["name"].get<std::string>() << "] = " << l["lambda"].get<std::string>() << "\n";
    print_trace(tr, gens_.names);
    return j;
  }

  void sdelta() {
    const ExpVec a = alpha();
    GeneratorSet f = generator_set();
    auto ops = s_delta_operators(f, a);
    json list = json::array();
    json part = json::array();
    for (auto i : f.participating(a)) part.push_back(gens_.names[i]);
    for (const auto& s : ops) list.push_back(sdelta_json(s, f, nullptr));
    auto& o = doc_["outputs"];
    o["alpha"] = exp_json(a);
    o["participating"] = part;
    o["operators"] = list;
    if (ops.empty()) text_ << "no S-delta operators at " << to_string(a) << "\n";
  }

  void verify() {
    GeneratorSet f = generator_set();
    DeltaStats stats;
    bool ok = true;
    json targets = json::array();
    for (const auto& a : lcm_targets(f)) {
      json list = json::array();
      for (const auto& s : s_delta_operators(f, a, &stats)) {
        json j = sdelta_json(s, f, &stats);
        ok = ok && j["reduction"]["remainder"] == "0";
        list.push_back(j);
      }
      targets.push_back({{"alpha", exp_json(a)}, {"operators", list}});
    }
    doc_["outputs"]["targets"] = targets;
    doc_["outputs"]["stats"] = stats_json(stats);
    verdict(ok);
    text_ << "Groebner delta-base: " << (ok ? "true" : "false") << "\n";
  }

  void flatness() {
    auto [b, names] = completed();
    FlatnessReport r = flatness_report(b);
    json cones = json::array();
    text_ << "Groebner delta-base:\n";
    print_basis(b.ops(), names);
    print_stair(r.stair);
    for (const auto& [a, c] : r.cone_ideals) {
      cones.push_back({{"alpha", exp_json(a)}, {"generators", show_all(c.generators())}, {"unit", is_unit_ideal(c)}});
      text_ << "C(" << to_string(a) << "; I) = " << show_ideal(c.generators()) << "\n";
    }
    text_ << "J = " << show_ideal(r.J.generators()) << "\n";
    text_ << "C(0; I) = " << show_ideal(r.zero_cone.generators()) << "\n";
    text_ << "globally flat: " << (r.globally_flat ? "true" : "false") << "\n";
    text_ << "maximal flat open set known: " << (r.maximal_set_known ? "true" : "false") << "\n";
    auto& o = doc_["outputs"];
    o["basis"] = basis_json(b.ops(), names);
    o["stair"] = stair_json(r.stair);
    o["cone_ideals"] = cones;
    o["J"] = show_all(r.J.generators());
    o["zero_cone"] = show_all(r.zero_cone.generators());
    o["globally_flat"] = r.globally_flat;
    o["maximal_set_known"] = r.maximal_set_known;
    verdict(r.globally_flat);
  }

  void finiteness() {
    auto [b, names] = completed();
    FinitenessReport r = finiteness_test(b);
    json wit = json::array();
    for (const auto& w : r.witnesses) {
      wit.push_back({{"coordinate", w.coordinate + 1},
                     {"power", w.power ? json(*w.power) : json(nullptr)},
                     {"ideal", show_all(w.ideal.groebner_basis())},
                     {"unit", w.unit}});
      text_ << ring_.d_names[w.coordinate] << ": ";
      if (w.power) text_ << "pure power " << *w.power << ", coefficient ideal " << show_ideal(w.ideal.groebner_basis());
      else text_ << "no pure power";
      text_ << (w.unit ? " (unit)" : "") << "\n";
    }
    doc_["outputs"]["basis"] = basis_json(b.ops(), names);
    doc_["outputs"]["finite"] = r.finite;
    doc_["certificate"] = wit;
    text_ << "finite over H: " << (r.finite ? "true" : "false") << "\n";
    verdict(r.finite);
  }

  void syzygy() {
    std::vector<Poly> polys;
    for (std::size_t i = 0; i < gens_.ops.size(); ++i) {
      const DiffOp& op = gens_.ops[i];
      if (op.term_count() && (op.terms().size() != 1 || !op.terms().begin()->first.is_zero()))
        throw UsageError("syzygy needs generators without derivations; " + gens_.names[i] + " has some");
      polys.push_back(op.coefficient(ExpVec(ring_.n)));
    }
    if (polys.empty()) throw UsageError("no nonzero generators");
    auto syz = syzygies(polys, ring_.order_x);
    json list = json::array();
    text_ << "syzygies of (";
    for (std::size_t i = 0; i < polys.size(); ++i) text_ << (i ? ", " : "") << show(polys[i]);
    text_ << "):\n";
    for (const auto& v : syz) {
      list.push_back(show_all(v));
      text_ << "  (";
      for (std::size_t i = 0; i < v.size(); ++i) text_ << (i ? ", " : "") << show(v[i]);
      text_ << ")\n";
    }
    doc_["outputs"]["syzygies"] = list;
  }

  void compare() {
    const WeylOrder w(ring_);
    GeneratorSet f = generator_set();
    DeltaStats ds;
    auto [b, names] = completed(&ds);
    WeylStats ws;
    WeylGB wg = buchberger_weyl(gens_.ops, ring_, opts_.cap, &ws);
    const bool input_gb = is_gb(gens_.ops, w);
    const bool input_delta = is_delta_groebner(f, reduce_options());
    const bool weyl_delta = is_delta_groebner(GeneratorSet(ring_, wg.ops), reduce_options());
    const bool consistent = (!input_gb || input_delta) && weyl_delta;
    auto& o = doc_["outputs"];
    o["delta"] = {{"basis_size", b.ops().size()}, {"stats", stats_json(ds)}};
    o["weyl"] = {{"basis_size", wg.ops.size()},
                 {"stats", {{"s_pairs", ws.s_pairs}, {"reduction_steps", ws.reduction_steps}, {"additions", ws.additions}}}};
    o["input_is_gb"] = input_gb;
    o["input_is_delta_gb"] = input_delta;
    o["weyl_basis_is_delta_gb"] = weyl_delta;
    text_ << "delta pipeline: " << b.ops().size() << " elements, " << ds.reductions << " reductions, "
          << ds.reduction_steps << " reduction steps, " << ds.s_operators << " S-delta operators, " << ds.additions
          << " additions\n";
    text_ << "Weyl pipeline:  " << wg.ops.size() << " elements, " << ws.s_pairs << " S-pairs, "
          << ws.reduction_steps << " reduction steps, " << ws.additions << " additions\n";
    text_ << "input is a Groebner base: " << (input_gb ? "true" : "false") << "\n";
    text_ << "input is a Groebner delta-base: " << (input_delta ? "true" : "false") << "\n";
    text_ << "Weyl basis is a Groebner delta-base: " << (weyl_delta ? "true" : "false") << "\n";
    verdict(consistent);
  }

  const ProblemFile& problem_;
  const CommandOptions& opts_;
  RingSpec ring_;
  Environment env_;
  std::optional<std::string> target_;
  Named gens_;
  json doc_;
  std::ostringstream text_;
  int exit_ = 0;
};

}  // namespace

ResultDocument run_command(const ProblemFile& problem, const CommandOptions& options) {
  return Runner(problem, options).run();
}

}  // namespace dgb
