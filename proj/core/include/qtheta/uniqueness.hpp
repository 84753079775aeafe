#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qtheta/codes.hpp"
#include "qtheta/coset_theta.hpp"
#include "qtheta/qseries.hpp"
#include "qtheta/quadring.hpp"

namespace qtheta {

// C(n + r - 1, n): monomials of degree n in r variables.
BigInt monomial_count(std::uint64_t degree, std::uint64_t num_vars);

// Degree-n monomials in r variables in descending lexicographic order of the
// exponent vectors: x1^n, x1^(n-1) x2, ..., xr^n.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t degree, std::size_t num_vars);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<WeightEnumerator::Exponents>& monomials() const noexcept { return monomials_; }

 private:
  std::size_t degree_;
  std::size_t num_vars_;
  std::vector<WeightEnumerator::Exponents> monomials_;
};

// Dense row-major matrix of big integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix top_rows(std::size_t count) const;
  IntMatrix with_columns(const std::vector<std::size_t>& order) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

// Entry (i, m) is the coefficient of q^i in the m-th monomial of the degree-n
// basis evaluated at the orbit-class theta series of the level.
IntMatrix build_matrix(const Level& level, std::size_t degree, std::size_t rows,
                       CosetThetaCache& cache = CosetThetaCache::shared());

// Rank over Q by fraction-free (Bareiss) elimination, choosing as pivot the
// entry of least absolute value in each column.
std::size_t exact_rank(const IntMatrix& matrix);

// ranks[k] = rank of the first k + 1 rows, from one pass of incremental
// elimination against a primitive integer echelon basis.
std::vector<std::size_t> prefix_ranks(const IntMatrix& matrix);

struct RankReport {
  std::int64_t p = 0;
  std::size_t n = 0;
  std::int64_t ell = 0;
  RingType type = RingType::Inert;
  std::size_t s = 0;
  std::size_t rows_used = 0;
  std::size_t rank = 0;
  std::size_t nullity = 0;
  // Least B such that the first B rows already reach the final rank.
  std::size_t b_estimate = 0;
};

// Rows of coefficients that must follow b_estimate with no rank change.
inline constexpr std::size_t kStabilizationWindow = 20;

// Builds the matrix with max(2s, 120) rows, measures rank and nullity and
// doubles the row count until the rank has been constant over the last
// kStabilizationWindow rows. Throws NotAdmissible for invalid (p, ell).
RankReport nullity_experiment(std::int64_t p, std::size_t n, std::int64_t ell,
                              CosetThetaCache& cache = CosetThetaCache::shared());

// Thresholds on ell beyond which a zero nullity is conjectured.
struct ConjectureFlags {
  bool above_shifted_ratio = false;  // ell >= p(n+1)(n+2)/n - 1
  bool above_ratio = false;          // ell >= p(n+1)(n+2)/n
  bool above_half_product = false;   // ell >  p(n+1)(n+2)/2

  bool violates_shifted_ratio = false;
  bool violates_ratio = false;
  bool violates_half_product = false;

  bool any_violation() const noexcept {
    return violates_shifted_ratio || violates_ratio || violates_half_product;
  }
};

ConjectureFlags conjecture_flags(const RankReport& report);

struct SweepRow {
  RankReport report;
  ConjectureFlags flags;
};

// One row per (n, admissible ell <= ell_max), sorted by (n, ell). Cells run on
// up to `jobs` threads (0 = hardware concurrency); output order is fixed.
std::vector<SweepRow> conjecture_sweep(std::int64_t p, const std::vector<std::size_t>& degrees,
                                       std::int64_t ell_max, unsigned jobs = 0,
                                       CosetThetaCache& cache = CosetThetaCache::shared());

}  // namespace qtheta
