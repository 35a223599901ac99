#include "spg/bounds.hpp"

#include <stdexcept>

#include "spg/error.hpp"

namespace spg {

namespace {

void require_alpha(const Rational& alpha) {
  if (alpha < 1) throw InputError("alpha must be at least 1");
}

const Rational& default_width() {
  static const Rational width(mpz_class(1), mpz_class("1000000000000000"));
  return width;
}

Interval reciprocal_form(const Interval& y) {
  // y / (y - 1) is decreasing for y > 1.
  return {y.hi / (y.hi - 1), y.lo / (y.lo - 1)};
}

}  // namespace

Rational bound_nash(const Rational& alpha) {
  require_alpha(alpha);
  return alpha + 1;
}

Rational bound_collusion(const Rational& alpha, std::size_t n, std::size_t k) {
  require_alpha(alpha);
  if (n < 2) throw InputError("the collusion bound needs at least two players");
  if (k < 1 || k > n) throw InputError("k must lie between 1 and n");
  return alpha + make_rational(static_cast<long>(n - k), static_cast<long>(n - 1));
}

Rational pow(const Rational& base, unsigned long exponent) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Interval exp_enclosure(const Rational& t, const Rational& max_width) {
  if (t < 0 || t > 1) throw InputError("exp enclosure needs 0 <= t <= 1");
  if (max_width <= 0) throw InputError("enclosure width must be positive");
  Rational sum = 1;
  Rational term = 1;
  for (unsigned long k = 1;; ++k) {
    term = term * t / Rational(static_cast<long>(k));
    sum += term;
    // Tail after term k: term * t/(k+1) / (1 - t/(k+2)).
    const Rational next = term * t / Rational(static_cast<long>(k + 1));
    const Rational tail = next / (1 - t / Rational(static_cast<long>(k + 2)));
    if (tail <= max_width) return {sum, sum + tail};
  }
}

Interval bound_sequential_symmetric(const Rational& alpha) {
  return bound_sequential_symmetric(alpha, default_width());
}

Interval bound_sequential_symmetric(const Rational& alpha, const Rational& max_width) {
  require_alpha(alpha);
  const Rational t = 1 / alpha;
  Rational inner = max_width;
  for (;;) {
    const Interval result = reciprocal_form(exp_enclosure(t, inner));
    if (result.width() <= max_width) return result;
    inner /= 16;
  }
}

bool at_most_sequential_bound(const Rational& value, const Rational& alpha) {
  Rational width = default_width();
  for (int round = 0; round < 16; ++round) {
    const Interval b = bound_sequential_symmetric(alpha, width);
    if (value <= b.lo) return true;
    if (value > b.hi) return false;
    width /= Rational(mpz_class("10000000000"));
  }
  throw std::logic_error("sequential bound comparison did not separate");
}

Rational greedy_share(const Rational& gamma, std::size_t x) {
  const Rational top = pow(gamma, x);
  return (top - pow(gamma - 1, x)) / top;
}

Rational bound_series_b(const Rational& alpha, std::size_t x) {
  require_alpha(alpha);
  if (x < 1) throw InputError("x must be at least 1");
  return 1 / greedy_share(Rational(static_cast<long>(x)) * alpha, x);
}

bool share_base_inequality(const Rational& gamma, std::size_t x1) {
  return Rational(static_cast<long>(x1)) / gamma >= greedy_share(gamma, x1);
}

bool share_step_inequality(const Rational& gamma, std::size_t x_k, std::size_t x_prev) {
  const Rational xk(static_cast<long>(x_k));
  const Rational lhs = xk / gamma + (gamma - xk) / gamma * greedy_share(gamma, x_prev);
  return lhs >= greedy_share(gamma, x_prev + x_k);
}

}  // namespace spg
