#include "qtheta/coset_theta.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qtheta {
namespace {

std::int64_t mod(std::int64_t x, std::int64_t p) {
  const std::int64_t r = x % p;
  return r < 0 ? r + p : r;
}

// floor(sqrt(n)) for n >= 0.
std::int64_t isqrt(std::int64_t n) {
  if (n <= 0) return 0;
  BigInt r;
  const BigInt value(static_cast<long>(n));
  mpz_sqrt(r.get_mpz_t(), value.get_mpz_t());
  return r.get_si();
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t index_of(std::int64_t p, CosetLabel l) { return l.a + p * l.b; }

}  // namespace

ScaledSeries theta_1d(std::int64_t p, std::int64_t j, const Rational& precision) {
  if (p < 2) throw std::invalid_argument("theta_1d needs p >= 2");
  const std::int64_t scale = 4 * p * p;
  ScaledSeries shape(scale, precision);
  // Exponent numerator of the n-th term is t^2 with t = 2pn + j.
  const std::int64_t bound = shape.numerator_bound();
  const std::int64_t reach = isqrt(bound) + 1;
  const std::int64_t step = 2 * p;
  ScaledSeries::Terms terms;
  for (std::int64_t n = floor_div(-reach - j, step); n * step + j <= reach; ++n) {
    const std::int64_t t = n * step + j;
    const std::int64_t k = t * t;
    if (k < bound) terms[k] += 1;
  }
  return ScaledSeries(scale, precision, std::move(terms));
}

ScaledSeries coset_theta_formula(const Level& level, std::int64_t a, std::int64_t b,
                                 std::int64_t precision) {
  if (precision < 0) throw std::invalid_argument("precision must be non-negative");
  const std::int64_t p = level.p;
  const Rational P(precision);
  const Rational outer(p * p * level.ell);
  const Rational inner(p * p);

  // theta_{p,j}(q^k) truncated at P needs theta_{p,j} itself to precision P/k.
  auto lifted = [&](std::int64_t j, const Rational& k) {
    Rational base_precision = P / k;
    base_precision.canonicalize();
    return substitute_power(theta_1d(p, j, base_precision), k);
  };

  const ScaledSeries even = lifted(b, outer) * lifted(2 * a + b, inner);
  const ScaledSeries odd = lifted(b + p, outer) * lifted(2 * a + b + p, inner);
  return integerize(even + odd);
}

ScaledSeries coset_theta_enum(const Level& level, std::int64_t a, std::int64_t b,
                              std::int64_t precision) {
  if (precision < 0) throw std::invalid_argument("precision must be non-negative");
  const std::int64_t p = level.p;
  const std::int64_t d = level.d;
  ScaledSeries::Terms terms;
  if (precision == 0) return ScaledSeries(1, 0);

  // Q_d(x, y) = (x + y/2)^2 + ell y^2 / 4, so 4Q = (2x + y)^2 + ell y^2 and
  // Q < P forces ell y^2 < 4P and (2x + y)^2 < 4P.
  const std::int64_t four_p = 4 * precision;
  const std::int64_t y_reach = isqrt(four_p / level.ell) + 1;
  const std::int64_t x_reach = isqrt(four_p) + 1;
  for (std::int64_t n = floor_div(-y_reach - b, p); n * p + b <= y_reach; ++n) {
    const std::int64_t y = n * p + b;
    if (level.ell * y * y >= four_p) continue;
    // 2x + y in [-x_reach, x_reach].
    const std::int64_t x_lo = floor_div(-x_reach - y, 2);
    const std::int64_t x_hi = floor_div(x_reach - y, 2) + 1;
    for (std::int64_t m = floor_div(x_lo - a, p); m * p + a <= x_hi; ++m) {
      const std::int64_t x = m * p + a;
      const std::int64_t q = x * x + x * y + d * y * y;
      if (q < precision) terms[q] += 1;
    }
  }
  return ScaledSeries(1, Rational(precision), std::move(terms));
}

bool CosetClass::contains(CosetLabel label) const {
  const CosetLabel l{mod(label.a, p), mod(label.b, p)};
  return std::find(members.begin(), members.end(), l) != members.end();
}

CosetClass klein_orbit(std::int64_t p, std::int64_t a, std::int64_t b) {
  if (p < 2) throw std::invalid_argument("klein_orbit needs p >= 2");
  CosetClass out;
  out.p = p;
  const CosetLabel images[] = {
      {mod(a, p), mod(b, p)},
      {mod(-a - b, p), mod(b, p)},
      {mod(-a, p), mod(-b, p)},
      {mod(a + b, p), mod(-b, p)},
  };
  for (const CosetLabel& l : images) {
    if (std::find(out.members.begin(), out.members.end(), l) == out.members.end()) {
      out.members.push_back(l);
    }
  }
  std::sort(out.members.begin(), out.members.end(), [p](CosetLabel x, CosetLabel y) {
    return index_of(p, x) < index_of(p, y);
  });
  out.canonical = out.members.front();
  return out;
}

std::vector<CosetClass> orbit_representatives(std::int64_t p) {
  std::vector<CosetClass> out;
  std::vector<bool> seen(static_cast<std::size_t>(p * p), false);
  for (std::int64_t k = 0; k < p * p; ++k) {
    if (seen[static_cast<std::size_t>(k)]) continue;
    CosetClass orbit = klein_orbit(p, k % p, k / p);
    for (const CosetLabel& l : orbit.members) seen[static_cast<std::size_t>(index_of(p, l))] = true;
    out.push_back(std::move(orbit));
  }
  return out;
}

std::size_t orbit_position(const std::vector<CosetClass>& classes, std::int64_t a,
                           std::int64_t b) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].contains({a, b})) return i;
  }
  throw std::out_of_range("label not covered by the orbit list");
}

std::int64_t min_exponent_closed_form(const Level& level, std::int64_t a, std::int64_t b) {
  const std::int64_t p = level.p;
  if (a < 0 || a >= p || b < 0 || b >= p) {
    throw std::invalid_argument("min_exponent_closed_form needs 0 <= a, b < p");
  }
  return std::min({norm_form(level, a, b), norm_form(level, a - p, b),
                   norm_form(level, a, b - p), norm_form(level, a - p, b - p)});
}

std::size_t distinct_theta_count(const Level& level, std::int64_t precision) {
  std::set<ScaledSeries::Terms> seen;
  for (std::int64_t b = 0; b < level.p; ++b) {
    for (std::int64_t a = 0; a < level.p; ++a) {
      seen.insert(coset_theta_formula(level, a, b, precision).terms());
    }
  }
  return seen.size();
}

CosetThetaTable make_coset_theta_table(const Level& level, std::int64_t precision) {
  CosetThetaTable table;
  table.level = level;
  table.precision = precision;
  table.classes = orbit_representatives(level.p);
  for (const CosetClass& c : table.classes) {
    table.by_class.push_back(coset_theta_formula(level, c.canonical.a, c.canonical.b, precision));
  }
  table.by_index.resize(static_cast<std::size_t>(level.p * level.p));
  for (std::size_t i = 0; i < table.classes.size(); ++i) {
    for (const CosetLabel& l : table.classes[i].members) {
      table.by_index[static_cast<std::size_t>(index_of(level.p, l))] = table.by_class[i];
    }
  }
  return table;
}

std::shared_ptr<const CosetThetaTable> CosetThetaCache::get(const Level& level,
                                                           std::int64_t precision) {
  const auto key = std::make_tuple(level.p, level.ell, precision);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = tables_.find(key); it != tables_.end()) return it->second;
  }
  // Built outside the lock; a racing thread may build the same table, and the
  // first insert wins.
  auto table = std::make_shared<const CosetThetaTable>(make_coset_theta_table(level, precision));
  std::lock_guard<std::mutex> lock(mutex_);
  return tables_.emplace(key, std::move(table)).first->second;
}

CosetThetaCache& CosetThetaCache::shared() {
  static CosetThetaCache cache;
  return cache;
}

}  // namespace qtheta
