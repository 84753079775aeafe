#include "qtheta/qseries.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "qtheta/errors.hpp"

namespace qtheta {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("exponent numerator overflows 64 bits");
  }
  return out;
}

std::int64_t to_int64(const BigInt& value) {
  if (!value.fits_slong_p()) {
    throw std::overflow_error("value does not fit in 64 bits: " + value.get_str());
  }
  return value.get_si();
}

std::int64_t ceil_to_int64(const Rational& value) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return to_int64(out);
}

std::int64_t common_scale(const ScaledSeries& a, const ScaledSeries& b) {
  return checked_mul(a.scale() / std::gcd(a.scale(), b.scale()), b.scale());
}

// Coefficient accumulator that switches to a dense buffer when the exponent
// range is small enough.
class Accumulator {
 public:
  explicit Accumulator(std::int64_t bound) : bound_(bound) {
    if (bound_ <= kDenseLimit) dense_.resize(static_cast<std::size_t>(bound_));
  }

  void add_product(std::int64_t k, const BigInt& x, const BigInt& y) {
    if (bound_ <= kDenseLimit) {
      mpz_addmul(dense_[static_cast<std::size_t>(k)].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    } else {
      BigInt& slot = sparse_[k];
      mpz_addmul(slot.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    }
  }

  ScaledSeries::Terms take() {
    if (bound_ > kDenseLimit) return std::move(sparse_);
    ScaledSeries::Terms out;
    for (std::size_t k = 0; k < dense_.size(); ++k) {
      if (dense_[k] != 0) out.emplace_hint(out.end(), static_cast<std::int64_t>(k), std::move(dense_[k]));
    }
    return out;
  }

 private:
  static constexpr std::int64_t kDenseLimit = std::int64_t{1} << 22;
  std::int64_t bound_;
  std::vector<BigInt> dense_;
  ScaledSeries::Terms sparse_;
};

}  // namespace

ScaledSeries::ScaledSeries() = default;

ScaledSeries::ScaledSeries(std::int64_t scale, Rational precision, Terms terms)
    : scale_(scale), precision_(std::move(precision)), terms_(std::move(terms)) {
  precision_.canonicalize();
  if (scale_ < 1) throw std::invalid_argument("series scale must be positive");
  if (precision_ < 0) throw std::invalid_argument("series precision must be non-negative");
  const std::int64_t bound = numerator_bound();
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first < 0) throw std::invalid_argument("negative exponents are not supported");
    if (it->first >= bound || it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

ScaledSeries ScaledSeries::zero(Rational precision, std::int64_t scale) {
  return ScaledSeries(scale, std::move(precision));
}

ScaledSeries ScaledSeries::one(Rational precision, std::int64_t scale) {
  return ScaledSeries(scale, std::move(precision), Terms{{0, BigInt(1)}});
}

std::int64_t ScaledSeries::numerator_bound() const {
  return ceil_to_int64(precision_ * scale_);
}

BigInt ScaledSeries::coefficient(const Rational& exponent) const {
  if (exponent >= precision_) {
    throw std::out_of_range("coefficient requested at or beyond the series precision");
  }
  Rational k = exponent * scale_;
  k.canonicalize();
  if (k.get_den() != 1 || k < 0) return 0;
  const auto it = terms_.find(to_int64(k.get_num()));
  return it == terms_.end() ? BigInt(0) : it->second;
}

ScaledSeries ScaledSeries::rescaled(std::int64_t new_scale) const {
  if (new_scale < 1 || new_scale % scale_ != 0) {
    throw std::invalid_argument("rescale target must be a positive multiple of the scale");
  }
  const std::int64_t factor = new_scale / scale_;
  if (factor == 1) return *this;
  Terms out;
  for (const auto& [k, c] : terms_) out.emplace_hint(out.end(), checked_mul(k, factor), c);
  return ScaledSeries(new_scale, precision_, std::move(out));
}

ScaledSeries ScaledSeries::truncated(const Rational& new_precision) const {
  if (new_precision >= precision_) return *this;
  return ScaledSeries(scale_, new_precision, terms_);
}

std::vector<BigInt> ScaledSeries::dense() const {
  if (scale_ != 1 || precision_.get_den() != 1) {
    throw std::invalid_argument("dense() needs a scale-1 series with integral precision");
  }
  std::vector<BigInt> out(static_cast<std::size_t>(to_int64(precision_.get_num())));
  for (const auto& [k, c] : terms_) out[static_cast<std::size_t>(k)] = c;
  return out;
}

ScaledSeries operator+(const ScaledSeries& lhs, const ScaledSeries& rhs) {
  const std::int64_t scale = common_scale(lhs, rhs);
  const ScaledSeries a = lhs.rescaled(scale);
  const ScaledSeries b = rhs.rescaled(scale);
  ScaledSeries::Terms out = a.terms();
  for (const auto& [k, c] : b.terms()) out[k] += c;
  return ScaledSeries(scale, std::min(a.precision(), b.precision()), std::move(out));
}

ScaledSeries operator*(const BigInt& factor, const ScaledSeries& series) {
  ScaledSeries::Terms out;
  if (factor != 0) {
    for (const auto& [k, c] : series.terms()) out.emplace_hint(out.end(), k, factor * c);
  }
  return ScaledSeries(series.scale(), series.precision(), std::move(out));
}

ScaledSeries operator-(const ScaledSeries& lhs, const ScaledSeries& rhs) {
  return lhs + BigInt(-1) * rhs;
}

ScaledSeries operator*(const ScaledSeries& lhs, const ScaledSeries& rhs) {
  const std::int64_t scale = common_scale(lhs, rhs);
  const ScaledSeries a = lhs.rescaled(scale);
  const ScaledSeries b = rhs.rescaled(scale);
  const Rational precision = std::min(a.precision(), b.precision());
  const ScaledSeries shape(scale, precision);
  const std::int64_t bound = shape.numerator_bound();

  Accumulator acc(bound);
  for (const auto& [ka, ca] : a.terms()) {
    if (ka >= bound) break;
    for (const auto& [kb, cb] : b.terms()) {
      const std::int64_t k = ka + kb;
      if (k >= bound) break;
      acc.add_product(k, ca, cb);
    }
  }
  return ScaledSeries(scale, precision, acc.take());
}

bool operator==(const ScaledSeries& lhs, const ScaledSeries& rhs) {
  return !first_difference(lhs, rhs).has_value();
}

ScaledSeries power(const ScaledSeries& base, unsigned exponent) {
  ScaledSeries result = ScaledSeries::one(base.precision(), base.scale());
  ScaledSeries square = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1U;
    if (exponent > 0) square = square * square;
  }
  return result;
}

ScaledSeries substitute_power(const ScaledSeries& series, const Rational& k) {
  Rational factor = k;
  factor.canonicalize();
  if (factor <= 0) throw std::invalid_argument("substitute_power needs a positive power");
  const std::int64_t num = to_int64(factor.get_num());
  const std::int64_t den = to_int64(factor.get_den());

  // exponent k_i / scale becomes (k_i * num) / (scale * den); divide out the
  // common factor so the new scale is minimal.
  const std::int64_t raw_scale = checked_mul(series.scale(), den);
  std::int64_t g = raw_scale;
  for (const auto& [e, c] : series.terms()) g = std::gcd(g, checked_mul(e, num));

  ScaledSeries::Terms out;
  for (const auto& [e, c] : series.terms()) {
    out.emplace_hint(out.end(), checked_mul(e, num) / g, c);
  }
  return ScaledSeries(raw_scale / g, series.precision() * factor, std::move(out));
}

ScaledSeries integerize(const ScaledSeries& series) {
  const std::int64_t scale = series.scale();
  ScaledSeries::Terms out;
  for (const auto& [k, c] : series.terms()) {
    if (k % scale != 0) {
      throw NonIntegerSupport("exponent " + std::to_string(k) + "/" + std::to_string(scale) +
                              " is not an integer");
    }
    out.emplace_hint(out.end(), k / scale, c);
  }
  return ScaledSeries(1, series.precision(), std::move(out));
}

std::optional<Rational> min_exponent(const ScaledSeries& series) {
  if (series.is_zero()) return std::nullopt;
  Rational e{BigInt(series.terms().begin()->first), BigInt(series.scale())};
  e.canonicalize();
  return e;
}

std::optional<Rational> first_difference(const ScaledSeries& lhs, const ScaledSeries& rhs) {
  const std::int64_t scale = common_scale(lhs, rhs);
  const ScaledSeries a = lhs.rescaled(scale).truncated(rhs.precision());
  const ScaledSeries b = rhs.rescaled(scale).truncated(lhs.precision());
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  const auto ea = a.terms().end();
  const auto eb = b.terms().end();
  while (ia != ea || ib != eb) {
    std::int64_t k = 0;
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      k = ia->first;
    } else if (ia == ea || ib->first < ia->first) {
      k = ib->first;
    } else if (ia->second != ib->second) {
      k = ia->first;
    } else {
      ++ia;
      ++ib;
      continue;
    }
    Rational e{BigInt(k), BigInt(scale)};
    e.canonicalize();
    return e;
  }
  return std::nullopt;
}

}  // namespace qtheta
