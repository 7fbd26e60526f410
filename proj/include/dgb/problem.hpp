#pragma once

// Problem files, the operator expression language and the command
// dispatcher behind the `dgb` executable.
//
//   ring x1 x2 y        # coefficient variables; the first n pair with dvars
//   dvars d1 d2
//   order deglex        # derivation order, optional precedence: order lex d2 d1
//   order-x deglex      # order on the coefficient variables
//   P1 = x1*d1 + x1*d2 + x1
//   generators P1, P2
//   command delta-gb --tail-reduce
//
// Statements end at ';' or a newline, '#' starts a comment.

#include "dgb/deltagb.hpp"
#include "dgb/weylops.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dgb {

class ParseError : public UsageError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct ProblemFile {
  RingSpec ring;
  std::vector<std::pair<std::string, DiffOp>> definitions;  // in file order
  std::optional<std::vector<std::string>> generators;       // names, if declared
  std::vector<std::string> command;                         // words of the command statement

  const DiffOp* find(std::string_view name) const;
};

ProblemFile parse_problem(std::string_view text);

using Environment = std::map<std::string, DiffOp, std::less<>>;

/// Parses one expression. Products are taken left to right through the
/// Leibniz rule, so the result is always in normal form.
DiffOp parse_operator(std::string_view text, const RingSpec& ring, const Environment& env = {});

/// The same ring with the given orders replacing the current ones.
RingSpec with_orders(const RingSpec& ring, std::optional<MonomialOrder> order_delta,
                     std::optional<MonomialOrder> order_x);

struct CommandOptions {
  std::string command;
  std::optional<OrderKind> order;
  std::optional<OrderKind> order_x;
  std::size_t cap = 10000;
  bool tail_reduce = false;
  std::optional<std::string> alpha;   // "a,b,..."
  std::optional<std::string> target;  // name of the operator acted on
  std::vector<std::string> definitions;  // "NAME=EXPR" from the command line
};

const std::vector<std::string>& command_names();

struct ResultDocument {
  nlohmann::ordered_json json;
  std::string text;
  int exit_code = 0;
};

/// Exit codes: 0 success, 1 negative verdict, 2 usage or parse error,
/// 3 iteration cap exceeded. Errors are reported in the document.
ResultDocument run_command(const ProblemFile& problem, const CommandOptions& options);

}  // namespace dgb
