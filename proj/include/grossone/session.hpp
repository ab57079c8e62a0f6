#ifndef GROSSONE_SESSION_HPP
#define GROSSONE_SESSION_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "grossone/expr.hpp"
#include "grossone/format.hpp"

namespace grossone {

// State of one calculator run: variables bound with `let` and the display
// and division settings changed with `:set`.
class Session {
 public:
  struct Settings {
    std::size_t max_div_terms = 20;
    FormatOptions format;
    bool strict = true;
  };

  Session() = default;
  explicit Session(Settings settings) : settings_(settings) {}

  // Runs one input line and returns what it prints (possibly several lines,
  // possibly empty). Throws Error; the session stays usable afterwards.
  std::string Execute(std::string_view line);

  bool quit_requested() const { return quit_; }
  const Settings& settings() const { return settings_; }
  const Environment& environment() const { return env_; }

 private:
  std::string Command(std::string_view name, std::string_view args);
  ExtendedValue Evaluate(std::string_view text) const;
  GrossNumber EvaluateGross(std::string_view text) const;
  Rational EvaluateRational(std::string_view text) const;
  std::string Show(const ExtendedValue& v) const { return format(v, settings_.format); }
  std::string Show(const GrossNumber& v) const { return format(v, settings_.format); }

  Settings settings_;
  Environment env_;
  bool quit_ = false;
};

std::string HelpText();

// Interactive loop; errors are reported on `err` and the loop continues.
// Returns 0 unless reading or writing fails.
int run_repl(std::istream& in, std::ostream& out, std::ostream& err, Session& session, bool prompt);

// Runs every line of a script; blank lines and lines starting with '#' are
// skipped. Errors are reported as "line N: ..." on `err`. Returns 0 iff no
// line failed.
int run_batch(std::istream& in, std::ostream& out, std::ostream& err, Session& session);

}  // namespace grossone

#endif  // GROSSONE_SESSION_HPP
