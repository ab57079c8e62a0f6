#include "grossone/session.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>
#include <vector>

#include "grossone/error.hpp"
#include "grossone/seq_series.hpp"
#include "grossone/set_measure.hpp"

namespace grossone {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(Trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

std::vector<std::string_view> Args(std::string_view args, std::size_t min, std::size_t max, std::string_view usage) {
  auto parts = Split(args, ';');
  if (parts.size() < min || parts.size() > max) {
    throw Error(ErrorKind::kInvalidArgument, "usage: " + std::string(usage));
  }
  return parts;
}

std::int64_t ToInt(const std::string& digits) {
  if (digits.empty() || digits.size() > 18) throw Error(ErrorKind::kInvalidArgument, "bad integer '" + digits + "'");
  return std::stoll(digits);
}

bool IsIdentifier(std::string_view s) {
  if (s.empty() || (std::isalpha(static_cast<unsigned char>(s[0])) == 0 && s[0] != '_') || s == "G") return false;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_') return false;
  }
  return true;
}

std::string ParityName(Parity p) { return p == Parity::kEven ? "Even" : "Odd"; }

constexpr std::string_view kHelp =
    "Expressions: numbers (exact decimals), G (grossone), + - * / ^, parentheses, 2G^3 style juxtaposition.\n"
    "  let NAME = EXPR                     bind a variable\n"
    "  EXPR                                evaluate and print\n"
    "  :div A ; B [; MAXTERMS]             long division with partial remainders R1, R2, ...\n"
    "  :card SETEXPR                       count N(k,n), {a,b,...} combined with | & \\\n"
    "  :card Z | Q1 | Q2 | R(b) | N^m      counts of integers, fraction numerals, radix-b numerals, m-tuples\n"
    "  :card grid(j) | line(b)             points on the line: grid 1/G^j (j = 1, 2), or radix-b numerals\n"
    "  :count linear(k,n) ; BOUND          #{k + n(i-1) <= BOUND}\n"
    "  :count power(k,n,j) ; BOUND         #{k + n i^j <= BOUND}\n"
    "  :sum const ; C ; k=EXPR             C * k\n"
    "  :sum poly ; C0, C1, C2, C3 ; k=EXPR sum over i = 1..k of C0 + C1 i + C2 i^2 + C3 i^3\n"
    "  :sum geom ; R ; k=EXPR              sum over i = 1..k of R^i\n"
    "  :concat L1 ; L2                     split a concatenation into a sequence of at most G members and the rest\n"
    "  :e N                                (1 + 1/N)^N\n"
    "  :classify EXPR                      Zero, FinitePure, Infinitesimal, Infinite or FiniteMixed\n"
    "  :parity EXPR                        Even or Odd\n"
    "  :cmp A ; B                          Less, Equal, Greater or Incomparable\n"
    "  :set max_div_terms N | format exact|decimal:D | strict on|off\n"
    "  :help                               this text\n"
    "  :quit                               leave";

}  // namespace

std::string HelpText() { return std::string(kHelp); }

ExtendedValue Session::Evaluate(std::string_view text) const {
  return eval(parse(text), env_, DivisionOptions{settings_.max_div_terms, settings_.strict});
}

GrossNumber Session::EvaluateGross(std::string_view text) const {
  const ExtendedValue v = Evaluate(text);
  if (auto g = v.as_gross()) return *g;
  throw Error(ErrorKind::kInvalidArgument, "'" + std::string(text) + "' is not a positional grossnumber");
}

Rational Session::EvaluateRational(std::string_view text) const {
  if (auto r = EvaluateGross(text).as_rational()) return *r;
  throw Error(ErrorKind::kInvalidArgument, "'" + std::string(text) + "' is not a finite number");
}

std::string Session::Execute(std::string_view raw) {
  const std::string_view line = Trim(raw);
  if (line.empty()) return {};
  if (line.front() == ':') {
    std::size_t end = 1;
    while (end < line.size() && std::isspace(static_cast<unsigned char>(line[end])) == 0) ++end;
    return Command(line.substr(1, end - 1), Trim(line.substr(end)));
  }
  if (line.starts_with("let") && line.size() > 3 && std::isspace(static_cast<unsigned char>(line[3])) != 0) {
    const std::string_view rest = Trim(line.substr(3));
    const auto eq = rest.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorKind::kInvalidArgument, "usage: let NAME = EXPR");
    const std::string name(Trim(rest.substr(0, eq)));
    if (!IsIdentifier(name)) throw Error(ErrorKind::kInvalidArgument, "'" + name + "' is not a variable name");
    ExtendedValue value = Evaluate(rest.substr(eq + 1));
    std::string shown = name + " = " + Show(value);
    env_.insert_or_assign(name, std::move(value));
    return shown;
  }
  return Show(Evaluate(line));
}

std::string Session::Command(std::string_view name, std::string_view args) {
  if (name == "quit" || name == "q") {
    quit_ = true;
    return {};
  }
  if (name == "help") return HelpText();
  if (name == "div") {
    const auto parts = Args(args, 2, 3, ":div A ; B [; MAXTERMS]");
    std::size_t max_terms = settings_.max_div_terms;
    if (parts.size() == 3) {
      const auto n = ToInt(std::string(parts[2]));
      if (n < 1) throw Error(ErrorKind::kInvalidArgument, "MAXTERMS must be at least 1");
      max_terms = static_cast<std::size_t>(n);
    }
    const DivisionResult r = div(EvaluateGross(parts[0]), EvaluateGross(parts[1]), max_terms);
    std::ostringstream out;
    for (std::size_t i = 0; i < r.partial_remainders.size(); ++i) {
      out << "R" << i + 1 << " = " << Show(r.partial_remainders[i]) << "\n";
    }
    out << "quotient = " << Show(r.quotient) << "\n";
    out << "remainder = " << Show(r.remainder) << "\n";
    out << "exact = " << (r.exact ? "true" : "false");
    return out.str();
  }
  if (name == "card") {
    static const std::regex kRadix(R"(R\s*\(\s*(\d+)\s*\))");
    static const std::regex kTuples(R"(N\s*\^\s*(\d+))");
    static const std::regex kGrid(R"(grid\s*\(\s*(\d+)\s*\))");
    static const std::regex kLine(R"(line\s*\(\s*(\d+)\s*\))");
    const std::string text(args);
    std::smatch m;
    if (text == "Z") return Show(card_integers());
    if (text == "Q1") return Show(card_Q1());
    if (text == "Q2") return Show(card_Q2());
    if (std::regex_match(text, m, kRadix)) return Show(ExtendedValue::Atom(card_Rb(ToInt(m[1]))));
    if (std::regex_match(text, m, kTuples)) {
      return Show(card_tuples(static_cast<unsigned long>(ToInt(m[1]))));
    }
    if (std::regex_match(text, m, kGrid)) return Show(card_line(GridLevel{static_cast<int>(ToInt(m[1]))}));
    if (std::regex_match(text, m, kLine)) return Show(card_line(Positional{ToInt(m[1])}));
    return Show(card(parse_set_expr(args)));
  }
  if (name == "count") {
    static const std::regex kLinear(R"(linear\s*\(\s*(\d+)\s*,\s*(\d+)\s*\))");
    static const std::regex kPower(R"(power\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\))");
    const auto parts = Args(args, 2, 2, ":count linear(k,n) ; BOUND  or  :count power(k,n,j) ; BOUND");
    const std::string form(parts[0]);
    const GrossNumber bound = EvaluateGross(parts[1]);
    std::smatch m;
    if (std::regex_match(form, m, kLinear)) return Show(count_by_inverse(LinearForm{ToInt(m[1]), ToInt(m[2])}, bound));
    if (std::regex_match(form, m, kPower)) {
      return Show(count_by_inverse(
          PowerForm{ToInt(m[1]), ToInt(m[2]), static_cast<unsigned long>(ToInt(m[3]))}, bound));
    }
    throw Error(ErrorKind::kUnsupportedForm, "unknown form '" + form + "'");
  }
  if (name == "sum") {
    const auto parts = Args(args, 3, 3, ":sum const|poly|geom ; PARAMS ; k=EXPR");
    const std::string_view count = parts[2];
    if (!count.starts_with("k") || Trim(count.substr(1)).empty() || Trim(count.substr(1)).front() != '=') {
      throw Error(ErrorKind::kInvalidArgument, "the item count is written k=EXPR");
    }
    const GrossNumber k = EvaluateGross(Trim(count.substr(1)).substr(1));
    if (parts[0] == "const") return Show(sum_const(EvaluateRational(parts[1]), k));
    if (parts[0] == "poly") {
      std::vector<Rational> coefficients;
      for (const auto c : Split(parts[1], ',')) coefficients.push_back(EvaluateRational(c));
      return Show(sum_poly(coefficients, k));
    }
    if (parts[0] == "geom") return Show(sum_geometric(EvaluateRational(parts[1]), k));
    throw Error(ErrorKind::kUnsupportedForm, "series family must be const, poly or geom");
  }
  if (name == "concat") {
    const auto parts = Args(args, 2, 2, ":concat L1 ; L2");
    const Concatenation c = concat(EvaluateGross(parts[0]), EvaluateGross(parts[1]));
    return "first = " + Show(c.first) + ", leftover = " + Show(c.leftover);
  }
  if (name == "e") return Show(e_approximant(EvaluateGross(args)));
  if (name == "classify") {
    const auto c = classify_extended(Evaluate(args));
    return c ? std::string(NumberClassName(*c)) : "Unclassified";
  }
  if (name == "parity") return ParityName(parity(EvaluateGross(args)));
  if (name == "cmp") {
    const auto parts = Args(args, 2, 2, ":cmp A ; B");
    return std::string(ExtendedOrderingName(cmp_extended(Evaluate(parts[0]), Evaluate(parts[1]))));
  }
  if (name == "set") {
    const auto space = args.find_first_of(" \t");
    const std::string_view key = args.substr(0, space);
    const std::string value(space == std::string_view::npos ? std::string_view{} : Trim(args.substr(space)));
    Settings next = settings_;
    if (key == "max_div_terms") {
      const auto n = ToInt(value);
      if (n < 1) throw Error(ErrorKind::kInvalidArgument, "max_div_terms must be at least 1");
      next.max_div_terms = static_cast<std::size_t>(n);
    } else if (key == "format") {
      if (value == "exact") {
        next.format = FormatOptions::Exact();
      } else if (value.starts_with("decimal:")) {
        const auto d = ToInt(value.substr(8));
        if (d < 1) throw Error(ErrorKind::kInvalidArgument, "decimal digits must be at least 1");
        next.format = FormatOptions::Decimal(static_cast<int>(d));
      } else {
        throw Error(ErrorKind::kInvalidArgument, "format must be exact or decimal:D");
      }
    } else if (key == "strict") {
      if (value != "on" && value != "off") throw Error(ErrorKind::kInvalidArgument, "strict must be on or off");
      next.strict = value == "on";
    } else {
      throw Error(ErrorKind::kInvalidArgument, "unknown setting '" + std::string(key) + "'");
    }
    settings_ = next;
    return {};
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown command ':" + std::string(name) + "' (try :help)");
}

int run_repl(std::istream& in, std::ostream& out, std::ostream& err, Session& session, bool prompt) {
  std::string line;
  for (;;) {
    if (prompt) out << "> " << std::flush;
    if (!std::getline(in, line)) break;
    try {
      const std::string result = session.Execute(line);
      if (!result.empty()) out << result << "\n";
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
    }
    if (session.quit_requested()) break;
  }
  out.flush();
  return out.good() ? 0 : 1;
}

int run_batch(std::istream& in, std::ostream& out, std::ostream& err, Session& session) {
  std::string line;
  std::size_t number = 0;
  std::size_t first_error = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    try {
      const std::string result = session.Execute(trimmed);
      if (!result.empty()) out << result << "\n";
    } catch (const Error& e) {
      err << "line " << number << ": " << e.what() << "\n";
      if (first_error == 0) first_error = number;
    }
    if (session.quit_requested()) break;
  }
  out.flush();
  if (first_error != 0) {
    err << "first error at line " << first_error << "\n";
    return 1;
  }
  return out.good() ? 0 : 1;
}

}  // namespace grossone
