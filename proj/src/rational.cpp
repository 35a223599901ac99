#include "spg/rational.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "spg/budget.hpp"
#include "spg/error.hpp"

namespace spg {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_text(s)) {
    throw InputError("malformed rational component '" + std::string(s) + "'");
  }
  std::string text(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(text, 10);
}

}  // namespace

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SPG_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    auto rest = text.substr(slash + 1);
    if (rest.empty() || rest[0] == '-' || rest[0] == '+') {
      throw InputError("malformed rational '" + std::string(text) + "'");
    }
    den = parse_integer(rest);
  }
  if (den == 0) {
    throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value.get_d());
  return buf;
}

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace spg
