#pragma once

#include <cstdint>
#include <string>

#include "spg/model.hpp"
#include "spg/rational.hpp"

namespace spg {

enum class Family {
  ex_trivial,        ///< two players, two items, PoA 2
  ex_asym,           ///< unrelated machines attaining alpha + 1
  ex_sym,            ///< identical machines, ratio (p+q)/q - 1/n
  ex_seq,            ///< n^2 unit jobs with n deadline classes
  ex_collusion,      ///< explicit families attaining alpha + (n-k)/(n-1)
  random_explicit,
  random_symmetric,
};

std::string to_string(Family family);
Family parse_family(const std::string& name);

struct GeneratorSpec {
  Family family = Family::ex_trivial;
  unsigned p = 1;
  unsigned q = 1;
  unsigned n = 2;
  unsigned k = 1;
  Rational alpha{1};        ///< ex_collusion and the ex_seq reference play
  unsigned items = 4;       ///< random families
  unsigned max_weight = 8;  ///< random families
  unsigned copies = 1;      ///< random_symmetric: copies drawn from 1..copies
  std::uint64_t seed = 0;
};

/// The alpha a family is built for: p/q for ex_asym and ex_sym, the spec's
/// alpha for ex_collusion and ex_seq, 1 otherwise.
Rational family_alpha(const GeneratorSpec& spec);

/// Throws InputError when parameters are out of range.
Instance generate(const GeneratorSpec& spec);

struct ReferenceProfiles {
  Profile opt;
  Profile bad;  ///< the low-welfare equilibrium of the construction
};

/// Unsupported for random families.
ReferenceProfiles reference_profiles(const GeneratorSpec& spec);

}  // namespace spg
