#pragma once

#include <cstdint>
#include <optional>

#include "qtheta/codes.hpp"
#include "qtheta/coset_theta.hpp"
#include "qtheta/qseries.hpp"
#include "qtheta/quadring.hpp"

namespace qtheta {

// Throws LevelMismatch unless the code is a linear code over O_K/pO_K at
// this level: same p and closed under multiplication by that level's w.
void require_compatible(const LinearCode& code, const Level& level);
bool is_compatible(const LinearCode& code, const Level& level);

// Theta series of the Construction A lattice, as cwe(C) evaluated at the p^2
// coset theta series (z_{a + p*b + 1} <-> coset (a, b)).
ScaledSeries theta_via_cwe(const LinearCode& code, const Level& level, std::int64_t precision,
                           CosetThetaCache& cache = CosetThetaCache::shared());

// Same series as swe(C) evaluated at one theta series per Klein orbit.
ScaledSeries theta_via_swe(const LinearCode& code, const Level& level, std::int64_t precision,
                           CosetThetaCache& cache = CosetThetaCache::shared());

// Direct count of lattice vectors of O_K^n by norm: depth-first over the
// components, keeping only prefixes that reduce into a prefix of some
// codeword. Does not use weight enumerators.
ScaledSeries theta_via_enum(const LinearCode& code, const Level& level, std::int64_t precision);

struct LevelAgreement {
  std::optional<std::int64_t> first_difference;
  // (min(ell1, ell2) + 1) / 4: the two series must agree below this exponent.
  std::int64_t bound = 0;
};

LevelAgreement level_agreement_prefix(const LinearCode& code, const Level& first,
                                      const Level& second, std::int64_t precision);

}  // namespace qtheta
