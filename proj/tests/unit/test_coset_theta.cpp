#include "doctest.h"
#include "helpers.hpp"
#include "qtheta/coset_theta.hpp"

using namespace qtheta;
using qtheta::testing::counts_of;
using qtheta::testing::series;

TEST_CASE("one-dimensional thetas") {
  // theta_{3,0} * theta_{3,3} on the q^{1/4} grid: exponents numerators over 4
  const ScaledSeries prod = theta_1d(3, 0, 5) * theta_1d(3, 3, 5);
  oracle::Counts expected;
  for (std::int64_t n = -20; n <= 20; ++n) {
    for (std::int64_t m = -20; m <= 20; ++m) {
      const std::int64_t s = 6 * n, t = 6 * m + 3;  // exponent (s^2 + t^2)/36
      if (s * s + t * t < 5 * 36) ++expected[(s * s + t * t) / 9];
    }
  }
  oracle::Counts got;
  const ScaledSeries quarter = prod.rescaled(36).truncated(5);
  for (const auto& [k, c] : quarter.terms()) {
    REQUIRE(k % 9 == 0);
    got[k / 9] = c.get_si();
  }
  CHECK(got == oracle::Counts{{1, 2}, {5, 4}, {9, 2}, {13, 4}, {17, 4}});
  CHECK(got == expected);
}

TEST_CASE("theta_{p,j} equals theta_{p,k} iff j = +-k mod 2p") {
  for (std::int64_t p : {3, 5}) {
    for (std::int64_t j = -2 * p; j <= 2 * p; ++j) {
      for (std::int64_t k = -2 * p; k <= 2 * p; ++k) {
        const bool same = theta_1d(p, j, 30) == theta_1d(p, k, 30);
        const bool related = ((j - k) % (2 * p) == 0) || ((j + k) % (2 * p) == 0);
        CHECK(same == related);
      }
    }
  }
}

TEST_CASE("coset thetas: frozen enumeration values") {
  const Level l7 = make_level(3, 7);
  const Level l11 = make_level(3, 11);
  CHECK(coset_theta_formula(l7, 0, 0, 20) == series(20, {{0, 1}, {9, 2}, {18, 4}}));
  CHECK(coset_theta_formula(l7, 1, 0, 10) == series(10, {{1, 1}, {4, 1}}));
  CHECK(coset_theta_formula(l11, 0, 1, 12) == series(12, {{3, 1}, {9, 1}}));
  CHECK(coset_theta_enum(l7, 0, 0, 20) == series(20, {{0, 1}, {9, 2}, {18, 4}}));
  CHECK(coset_theta_formula(l7, 0, 0, 0).is_zero());
  CHECK(coset_theta_formula(l7, 0, 0, 1) == series(1, {{0, 1}}));
}

TEST_CASE("formula agrees with enumeration and with the brute-force oracle") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (std::int64_t ell : admissible_levels(p, 47)) {
      const Level level = make_level(p, ell);
      for (std::int64_t a = 0; a < p; ++a) {
        for (std::int64_t b = 0; b < p; ++b) {
          const ScaledSeries f = coset_theta_formula(level, a, b, 60);
          CHECK(f == coset_theta_enum(level, a, b, 60));
          CHECK(counts_of(f) == oracle::coset_counts(p, level.d, a, b, 60));
        }
      }
    }
  }
}

TEST_CASE("Klein orbits") {
  const auto reps = orbit_representatives(3);
  REQUIRE(reps.size() == 4);
  CHECK(reps[0].canonical == CosetLabel{0, 0});
  CHECK(reps[1].canonical == CosetLabel{1, 0});
  CHECK(reps[2].canonical == CosetLabel{0, 1});
  CHECK(reps[3].canonical == CosetLabel{1, 1});
  CHECK(reps[2].members.size() == 4);
  CHECK(klein_orbit(3, 2, 1).canonical == CosetLabel{0, 1});
  CHECK(klein_orbit(5, 0, 0).members.size() == 1);
  CHECK(klein_orbit(5, 1, 1).members.size() == 4);
  CHECK(klein_orbit(5, 1, 3).members.size() == 2);  // -a - b = a mod 5
  CHECK(orbit_position(reps, 2, 2) == 3);
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    const auto classes = orbit_representatives(p);
    CHECK(classes.size() == static_cast<std::size_t>((p + 1) * (p + 1) / 4));
    std::size_t covered = 0;
    for (const auto& c : classes) covered += c.members.size();
    CHECK(covered == static_cast<std::size_t>(p * p));
  }
}

TEST_CASE("coset theta is constant on Klein orbits") {
  for (std::int64_t ell : {7, 11, 19}) {
    const Level level = make_level(5, ell);
    for (const auto& c : orbit_representatives(5)) {
      const ScaledSeries ref = coset_theta_formula(level, c.canonical.a, c.canonical.b, 80);
      for (const auto& m : c.members) CHECK(coset_theta_formula(level, m.a, m.b, 80) == ref);
    }
  }
}

TEST_CASE("minimum exponents") {
  CHECK(min_exponent_closed_form(make_level(3, 7), 1, 0) == 1);
  CHECK(min_exponent_closed_form(make_level(3, 7), 0, 1) == 2);
  CHECK(min_exponent_closed_form(make_level(3, 7), 1, 1) == 4);
  CHECK(min_exponent_closed_form(make_level(3, 11), 0, 1) == 3);
  for (std::int64_t p : {3, 5}) {
    for (std::int64_t ell : admissible_levels(p, 360)) {
      const Level level = make_level(p, ell);
      if (ell > 59 && level.d <= 3 * p * p) continue;
      for (std::int64_t a = 0; a < p; ++a) {
        for (std::int64_t b = 0; b < p; ++b) {
          const std::int64_t closed = min_exponent_closed_form(level, a, b);
          const std::int64_t actual =
              oracle::coset_counts(p, level.d, a, b, closed + 1).begin()->first;
          // the closed form is always attained; it is the minimum once d > 3p^2
          CHECK(actual <= closed);
          if (level.d > 3 * p * p) CHECK(actual == closed);
          CHECK(*min_exponent(coset_theta_formula(level, a, b, closed + 1)) == actual);
        }
      }
    }
  }
  // ell = 115: the four class minima are 0, 1, 29, 31
  const Level l115 = make_level(3, 115);
  const auto reps = orbit_representatives(3);
  std::vector<std::int64_t> minima;
  for (const auto& c : reps) {
    minima.push_back(
        min_exponent(coset_theta_formula(l115, c.canonical.a, c.canonical.b, 200))->get_num().get_si());
  }
  CHECK(minima == std::vector<std::int64_t>{0, 1, 29, 31});
}

TEST_CASE("distinct theta count equals the number of orbits for generic levels") {
  for (std::int64_t p : {3, 5, 7}) {
    CHECK(distinct_theta_count(make_level(p, p == 7 ? 11 : 7), 300) ==
          static_cast<std::size_t>((p + 1) * (p + 1) / 4));
  }
}

TEST_CASE("coset theta tables and cache") {
  CosetThetaCache cache;
  const Level level = make_level(3, 7);
  const auto t = cache.get(level, 30);
  CHECK(t == cache.get(level, 30));
  REQUIRE(t->by_index.size() == 9);
  REQUIRE(t->by_class.size() == 4);
  CHECK(t->by_index[level.ring().index(level.ring().from_label({1, 0})) - 1] ==
        coset_theta_formula(level, 1, 0, 30));
  CHECK(t->by_class[2] == coset_theta_formula(level, 0, 1, 30));
  ScaledSeries total = ScaledSeries::zero(30);
  for (const auto& s : t->by_index) total = total + s;
  CHECK(counts_of(total) == oracle::coset_counts(1, level.d, 0, 0, 30));
}
