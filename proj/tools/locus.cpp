// locus: run scripts or an interactive session.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "locus/script/parser.hpp"
#include "locus/script/session.hpp"

namespace {

using locus::script::AnySession;
using locus::script::EvalError;
using locus::script::Record;
using locus::script::SyntaxError;

nlohmann::ordered_json to_json(const Record& r) {
  nlohmann::ordered_json j;
  j["line"] = r.line;
  j["op"] = r.op;
  j["inputs"] = r.inputs;
  j["result"] = r.result;
  j["type"] = r.type;
  if (!r.name.empty()) j["name"] = r.name;
  if (r.suppressed) j["suppressed"] = true;
  if (r.ranks) j["ranks"] = *r.ranks;
  if (r.values) {
    auto values = nlohmann::ordered_json::array();
    for (const auto& v : *r.values) {
      long long n = 0;
      std::size_t used = 0;
      try {
        n = std::stoll(v, &used);
      } catch (const std::out_of_range&) {
        used = 0;
      }
      if (used == v.size()) {
        values.push_back(n);
      } else {
        values.push_back(v);
      }
    }
    j["values"] = values;
  }
  return j;
}

void emit(const Record& r, bool json) {
  if (json) {
    std::cout << to_json(r).dump() << '\n';
  } else if (!r.suppressed && !r.result.empty()) {
    std::cout << r.result << '\n';
  }
}

int run_text(const std::string& text, const locus::script::Options& opts, bool json) {
  locus::script::Script script;
  try {
    script = locus::script::parse_script(text);
  } catch (const SyntaxError& e) {
    std::cerr << "locus: syntax error: " << e.what() << '\n';
    return 1;
  }
  AnySession session(opts);
  for (const auto& st : script.statements) {
    try {
      emit(session.execute(st), json);
    } catch (const EvalError& e) {
      std::cout.flush();
      if (json) {
        nlohmann::ordered_json j;
        j["line"] = e.pos().line;
        j["error"] = e.message();
        j["statement"] = locus::script::to_source(st);
        std::cout << j.dump() << '\n';
      }
      std::cerr << "locus: error: " << e.what() << "\n  in: " << locus::script::to_source(st) << '\n';
      return 2;
    }
  }
  return 0;
}

int repl(const locus::script::Options& opts, bool json) {
  AnySession session(opts);
  std::string line;
  int n = 1;
  for (;;) {
    std::cout << "i" << n << " : " << std::flush;
    if (!std::getline(std::cin, line)) break;
    locus::script::Script script;
    try {
      script = locus::script::parse_script(line);
    } catch (const SyntaxError& e) {
      std::cout << "syntax error: " << e.what() << '\n';
      continue;
    }
    for (const auto& st : script.statements) {
      try {
        Record r = session.execute(st);
        if (json) {
          emit(r, true);
        } else if (!r.suppressed && !r.result.empty()) {
          std::cout << "o" << n << " = " << r.result << '\n';
        }
      } catch (const EvalError& e) {
        std::cout << "error: " << e.message() << '\n';
      }
    }
    ++n;
  }
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"locus: local commutative algebra scripts"};
  app.require_subcommand(1);

  locus::script::Options opts;
  bool json = false;
  unsigned prime = 0;
  std::size_t cap = opts.cap;
  std::string order = "grevlex";
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "Emit one JSON record per statement");
    sub->add_option("--prime", prime, "Characteristic used for every ZZ/p ring");
    sub->add_option("--cap", cap, "Iteration cap for length computations")->check(CLI::PositiveNumber);
    sub->add_option("--order", order, "Default monomial order")
        ->check(CLI::IsMember({"grevlex", "lex", "glex"}));
  };

  std::string path;
  auto* run = app.add_subcommand("run", "Run a script file ('-' reads stdin)");
  run->add_option("script", path, "Script file")->required();
  add_common(run);
  auto* rep = app.add_subcommand("repl", "Interactive session");
  add_common(rep);

  CLI11_PARSE(app, argc, argv);

  try {
    if (prime != 0) opts.prime = locus::PrimeField(prime).characteristic();
  } catch (const std::exception& e) {
    std::cerr << "locus: --prime: " << e.what() << '\n';
    return 2;
  }
  opts.cap = cap;
  opts.order = locus::parse_order(order);

  if (*rep) return repl(opts, json);

  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "locus: cannot open " << path << '\n';
      return 2;
    }
    buf << in.rdbuf();
  }
  return run_text(buf.str(), opts, json);
}
