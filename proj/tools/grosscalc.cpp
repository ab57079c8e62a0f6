// grosscalc: calculator for numbers written in the positional system with
// radix grossone.

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "grossone/error.hpp"
#include "grossone/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for grossone numerals"};
  std::optional<std::string> expression;
  std::optional<std::string> script;
  std::size_t max_div_terms = 20;
  std::string format = "exact";
  app.add_option("--eval", expression, "Evaluate one line and exit");
  app.add_option("--script", script, "Run a file of calculator lines")->check(CLI::ExistingFile);
  app.add_option("--max-div-terms", max_div_terms, "Quotient terms before division stops")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "exact or decimal:D");
  CLI11_PARSE(app, argc, argv);

  grossone::Session session;
  try {
    session.Execute(":set max_div_terms " + std::to_string(max_div_terms));
    session.Execute(":set format " + format);
  } catch (const grossone::Error& e) {
    std::cerr << "grosscalc: " << e.what() << "\n";
    return 2;
  }

  if (expression) {
    try {
      const std::string result = session.Execute(*expression);
      if (!result.empty()) std::cout << result << "\n";
      return 0;
    } catch (const grossone::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  if (script) {
    std::ifstream in(*script);
    if (!in) {
      std::cerr << "grosscalc: cannot read " << *script << "\n";
      return 2;
    }
    return grossone::run_batch(in, std::cout, std::cerr, session);
  }
  return grossone::run_repl(std::cin, std::cout, std::cerr, session, isatty(STDIN_FILENO) != 0);
}
