#pragma once

#include <cstddef>

#include "spg/rational.hpp"

namespace spg {

/// alpha + 1, the price of anarchy of alpha-approximate Nash equilibria.
Rational bound_nash(const Rational& alpha);

/// alpha + (n - k) / (n - 1); needs n >= 2 and 1 <= k <= n.
Rational bound_collusion(const Rational& alpha, std::size_t n, std::size_t k);

/// Rational power with a nonnegative exponent.
Rational pow(const Rational& base, unsigned long exponent);

/// Enclosure of exp(t) for 0 <= t <= 1 from the Taylor series with a
/// geometric tail bound; width at most max_width.
Interval exp_enclosure(const Rational& t, const Rational& max_width);

/// Enclosure of e^(1/alpha) / (e^(1/alpha) - 1) of width at most max_width
/// (default 1e-15).
Interval bound_sequential_symmetric(const Rational& alpha);
Interval bound_sequential_symmetric(const Rational& alpha, const Rational& max_width);

/// Decides value <= e^(1/alpha)/(e^(1/alpha)-1), refining the enclosure
/// until it separates the two. The bound is irrational, so this terminates.
bool at_most_sequential_bound(const Rational& value, const Rational& alpha);

/// b_x = (x alpha)^x / ((x alpha)^x - (x alpha - 1)^x).
Rational bound_series_b(const Rational& alpha, std::size_t x);

/// (gamma^x - (gamma-1)^x) / gamma^x, the guaranteed welfare share after x
/// selections with gamma = x_total * alpha.
Rational greedy_share(const Rational& gamma, std::size_t x);

/// x1 / gamma >= greedy_share(gamma, x1).
bool share_base_inequality(const Rational& gamma, std::size_t x1);

/// x_k/gamma + (gamma - x_k)/gamma * greedy_share(gamma, x_prev)
///   >= greedy_share(gamma, x_prev + x_k).
bool share_step_inequality(const Rational& gamma, std::size_t x_k, std::size_t x_prev);

}  // namespace spg
