#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace qtheta {

using BigInt = mpz_class;
using Rational = mpq_class;

// A power series sum_k c_k q^(k/scale), known for every exponent strictly
// below precision(). Terms are keyed by the exponent numerator k >= 0; zero
// coefficients are never stored.
//
// A ScaledSeries is a truncation, not an exact object: equality compares the
// two series only below the smaller of the two precisions.
class ScaledSeries {
 public:
  using Terms = std::map<std::int64_t, BigInt>;

  // The zero series on scale 1 with precision 0 (nothing known).
  ScaledSeries();

  // Terms at or beyond the precision are discarded, zero coefficients dropped.
  // Throws std::invalid_argument for scale < 1, negative precision or a
  // negative exponent numerator.
  ScaledSeries(std::int64_t scale, Rational precision, Terms terms = {});

  static ScaledSeries zero(Rational precision, std::int64_t scale = 1);
  static ScaledSeries one(Rational precision, std::int64_t scale = 1);

  std::int64_t scale() const noexcept { return scale_; }
  const Rational& precision() const noexcept { return precision_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Coefficient of q^exponent. Throws std::out_of_range when the exponent is
  // not below the precision (the coefficient is unknown there).
  BigInt coefficient(const Rational& exponent) const;

  // ceil(precision * scale): every stored numerator k satisfies
  // k < numerator_bound().
  std::int64_t numerator_bound() const;

  // Same series expressed over a multiple of the current scale.
  ScaledSeries rescaled(std::int64_t new_scale) const;

  // Lowers precision; a no-op when new_precision >= precision().
  ScaledSeries truncated(const Rational& new_precision) const;

  // Dense coefficient vector c_0..c_{P-1} of a scale-1 series with integral
  // precision P.
  std::vector<BigInt> dense() const;

 private:
  std::int64_t scale_ = 1;
  Rational precision_ = 0;
  Terms terms_;
};

ScaledSeries operator+(const ScaledSeries& lhs, const ScaledSeries& rhs);
ScaledSeries operator-(const ScaledSeries& lhs, const ScaledSeries& rhs);
ScaledSeries operator*(const ScaledSeries& lhs, const ScaledSeries& rhs);
ScaledSeries operator*(const BigInt& factor, const ScaledSeries& series);

// Shared-precision equality: both series are brought to a common scale and
// compared on all exponents below min(P1, P2).
bool operator==(const ScaledSeries& lhs, const ScaledSeries& rhs);

ScaledSeries power(const ScaledSeries& base, unsigned exponent);

// s(q) -> s(q^k) for a positive rational k. Exponents and precision are
// multiplied by k; the scale becomes the least denominator of the new
// exponents. Throws std::invalid_argument for k <= 0.
ScaledSeries substitute_power(const ScaledSeries& series, const Rational& k);

// Re-expresses the series on scale 1. Throws NonIntegerSupport if some stored
// exponent is not an integer.
ScaledSeries integerize(const ScaledSeries& series);

std::optional<Rational> min_exponent(const ScaledSeries& series);

// First exponent below min(P1, P2) where the two series differ.
std::optional<Rational> first_difference(const ScaledSeries& lhs, const ScaledSeries& rhs);

}  // namespace qtheta
