// dgb: command-line front end for Gröbner delta-bases.

#include "dgb/problem.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw dgb::UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void add_flags(CLI::App& app, dgb::CommandOptions& opts, std::string& file, bool& json) {
  const auto last = CLI::MultiOptionPolicy::TakeLast;
  std::vector<std::string> commands = dgb::command_names();
  commands.push_back("run");
  app.add_option("command", opts.command, "subcommand, or 'run' to use the file's command statement")
      ->required()
      ->check(CLI::IsMember(commands));
  app.add_option("file", file, "problem file ('-' for standard input)")->required();
  app.add_option("definitions", opts.definitions, "extra operators as NAME=EXPR");
  auto kind = [](std::optional<dgb::OrderKind>& slot) {
    return [&slot](const std::string& s) { slot = dgb::parse_order_kind(s); };
  };
  app.add_option_function<std::string>("--order", kind(opts.order), "derivation order: lex, deglex, degrevlex")
      ->multi_option_policy(last);
  app.add_option_function<std::string>("--order-x", kind(opts.order_x), "coefficient order")
      ->multi_option_policy(last);
  app.add_flag("--json", json, "print the structured result document");
  app.add_option("--cap", opts.cap, "maximum number of basis additions")->multi_option_policy(last);
  app.add_flag("--tail-reduce", opts.tail_reduce, "also reduce below the leading term");
  app.add_option_function<std::string>("--alpha", [&](const std::string& s) { opts.alpha = s; },
                                       "exponent a1,...,an")
      ->multi_option_policy(last);
  app.add_option_function<std::string>("--target", [&](const std::string& s) { opts.target = s; },
                                       "operator to reduce or test")
      ->multi_option_policy(last);
}

}  // namespace

int main(int argc, char** argv) {
  dgb::CommandOptions opts;
  std::string file;
  bool json = false;
  CLI::App app{"Gröbner delta-bases of left ideals of differential operators", "dgb"};
  add_flags(app, opts, file, json);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const dgb::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  dgb::ResultDocument doc;
  try {
    dgb::ProblemFile problem = dgb::parse_problem(read_input(file));
    if (opts.command == "run") {
      if (problem.command.empty()) throw dgb::UsageError("the problem file has no command statement");
      // Re-parse with the file's command words ahead of the given flags,
      // so flags on the command line win.
      std::vector<std::string> args(problem.command.begin(), problem.command.end());
      bool dropped = false;
      for (int i = 1; i < argc; ++i) {
        if (!dropped && std::string(argv[i]) == "run") {
          dropped = true;
          continue;
        }
        args.emplace_back(argv[i]);
      }
      std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
      dgb::CommandOptions fresh;
      CLI::App again{"", "dgb"};
      add_flags(again, fresh, file, json);
      again.parse(args);
      opts = fresh;
    }
    doc = dgb::run_command(problem, opts);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dgb::ParseError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return 2;
  } catch (const dgb::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (json) std::cout << doc.json.dump(2) << "\n";
  else if (doc.exit_code >= 2) std::cerr << doc.text;
  else std::cout << doc.text;
  return doc.exit_code;
}
