#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "qtheta/qseries.hpp"
#include "qtheta/quadring.hpp"

namespace qtheta {

// One-dimensional theta series sum_{n in Z} q^{(n + j/2p)^2}, on scale 4p^2.
ScaledSeries theta_1d(std::int64_t p, std::int64_t j, const Rational& precision);

// Theta series of the coset a - b*w + pO_K, assembled from products of
// one-dimensional thetas at q^{p^2 ell} and q^{p^2}. Integer supported.
ScaledSeries coset_theta_formula(const Level& level, std::int64_t a, std::int64_t b,
                                 std::int64_t precision);

// Same series by direct summation of q^{Q_d(mp + a, np + b)} over all (m, n).
ScaledSeries coset_theta_enum(const Level& level, std::int64_t a, std::int64_t b,
                              std::int64_t precision);

// Orbit of (a, b) mod p under the Klein four-group generated by
// (a, b) -> (-a, -b) and (a, b) -> (a + b, -b).
struct CosetClass {
  std::int64_t p = 0;
  std::vector<CosetLabel> members;  // sorted by element index a + p*b
  CosetLabel canonical;             // member with the least index

  bool contains(CosetLabel label) const;
};

CosetClass klein_orbit(std::int64_t p, std::int64_t a, std::int64_t b);

// Every orbit of (Z/p)^2, ordered by the index of its canonical member. For
// odd p there are (p + 1)^2 / 4 of them; for p = 3 the order is
// (0,0), (1,0), (0,1), (1,1).
std::vector<CosetClass> orbit_representatives(std::int64_t p);

// Position of the orbit containing (a, b) in orbit_representatives(p).
std::size_t orbit_position(const std::vector<CosetClass>& classes, std::int64_t a, std::int64_t b);

// Least exponent of the coset theta series as the minimum of the norms of the
// four lifts (a or a - p, b or b - p). Requires 0 <= a, b < p.
std::int64_t min_exponent_closed_form(const Level& level, std::int64_t a, std::int64_t b);

// Number of distinct truncated series among the p^2 coset thetas.
std::size_t distinct_theta_count(const Level& level, std::int64_t precision);

// Coset thetas for one (level, precision): one series per ring index
// (z_{a + p*b + 1} <-> theta of (a, b)) and one per orbit class.
struct CosetThetaTable {
  Level level;
  std::int64_t precision = 0;
  std::vector<CosetClass> classes;
  std::vector<ScaledSeries> by_class;   // orbit_representatives order
  std::vector<ScaledSeries> by_index;   // index 1..p^2 stored at 0..p^2-1
};

// Memoises coset theta tables keyed by (p, ell, precision). Safe for
// concurrent use.
class CosetThetaCache {
 public:
  std::shared_ptr<const CosetThetaTable> get(const Level& level, std::int64_t precision);

  static CosetThetaCache& shared();

 private:
  std::mutex mutex_;
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>,
           std::shared_ptr<const CosetThetaTable>>
      tables_;
};

CosetThetaTable make_coset_theta_table(const Level& level, std::int64_t precision);

}  // namespace qtheta
