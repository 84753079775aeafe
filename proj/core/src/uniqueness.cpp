#include "qtheta/uniqueness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace qtheta {
namespace {

void fill_monomials(std::size_t var, std::size_t remaining, WeightEnumerator::Exponents& current,
                    std::vector<WeightEnumerator::Exponents>& out) {
  if (var + 1 == current.size()) {
    current[var] = static_cast<std::uint32_t>(remaining);
    out.push_back(current);
    return;
  }
  for (std::size_t e = remaining + 1; e-- > 0;) {
    current[var] = static_cast<std::uint32_t>(e);
    fill_monomials(var + 1, remaining - e, current, out);
  }
}

std::size_t to_size(const BigInt& value) {
  if (!value.fits_ulong_p()) throw std::overflow_error("count does not fit in size_t");
  return value.get_ui();
}

}  // namespace

BigInt monomial_count(std::uint64_t degree, std::uint64_t num_vars) {
  if (num_vars == 0) throw std::invalid_argument("monomial_count needs at least one variable");
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), degree + num_vars - 1, degree);
  return out;
}

MonomialBasis::MonomialBasis(std::size_t degree, std::size_t num_vars)
    : degree_(degree), num_vars_(num_vars) {
  if (num_vars == 0) throw std::invalid_argument("monomial basis needs at least one variable");
  WeightEnumerator::Exponents current(num_vars, 0);
  fill_monomials(0, degree, current, monomials_);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::top_rows(std::size_t count) const {
  count = std::min(count, rows_);
  IntMatrix out(count, cols_);
  std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(count * cols_),
            out.data_.begin());
  return out;
}

IntMatrix IntMatrix::with_columns(const std::vector<std::size_t>& order) const {
  IntMatrix out(rows_, order.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < order.size(); ++c) out.at(r, c) = at(r, order.at(c));
  }
  return out;
}

IntMatrix build_matrix(const Level& level, std::size_t degree, std::size_t rows,
                       CosetThetaCache& cache) {
  if (rows == 0) throw std::invalid_argument("build_matrix needs at least one row");
  const auto table = cache.get(level, static_cast<std::int64_t>(rows));
  const std::vector<ScaledSeries>& thetas = table->by_class;
  const MonomialBasis basis(degree, thetas.size());

  std::vector<std::vector<ScaledSeries>> powers(thetas.size());
  for (std::size_t v = 0; v < thetas.size(); ++v) {
    powers[v].push_back(ScaledSeries::one(Rational(static_cast<long>(rows))));
    for (std::size_t e = 1; e <= degree; ++e) powers[v].push_back(powers[v].back() * thetas[v]);
  }

  IntMatrix m(rows, basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const WeightEnumerator::Exponents& mono = basis.monomials()[col];
    ScaledSeries value = ScaledSeries::one(Rational(static_cast<long>(rows)));
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] > 0) value = value * powers[v][mono[v]];
    }
    for (const auto& [k, c] : value.terms()) m.at(static_cast<std::size_t>(k), col) = c;
  }
  return m;
}

std::size_t exact_rank(const IntMatrix& matrix) {
  IntMatrix a = matrix;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t rank = 0;
  BigInt previous = 1;
  BigInt scratch;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (a.at(r, col) == 0) continue;
      if (pivot == rows || mpz_cmpabs(a.at(r, col).get_mpz_t(), a.at(pivot, col).get_mpz_t()) < 0) pivot = r;
    }
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = col; c < cols; ++c) std::swap(a.at(pivot, c), a.at(rank, c));
    }
    const BigInt& lead = a.at(rank, col);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const BigInt factor = a.at(r, col);
      for (std::size_t c = col + 1; c < cols; ++c) {
        // a[r][c] = (lead * a[r][c] - factor * a[rank][c]) / previous, exact.
        scratch = lead * a.at(r, c);
        mpz_submul(scratch.get_mpz_t(), factor.get_mpz_t(), a.at(rank, c).get_mpz_t());
        if (!mpz_divisible_p(scratch.get_mpz_t(), previous.get_mpz_t())) {
          throw std::logic_error("fraction-free elimination produced an inexact quotient");
        }
        mpz_divexact(a.at(r, c).get_mpz_t(), scratch.get_mpz_t(), previous.get_mpz_t());
      }
      a.at(r, col) = 0;
    }
    previous = lead;
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> prefix_ranks(const IntMatrix& matrix) {
  struct BasisRow {
    std::size_t pivot;
    std::vector<BigInt> values;
  };
  std::vector<BasisRow> basis;  // sorted by pivot; row i is zero left of its pivot
  std::vector<std::size_t> ranks;
  ranks.reserve(matrix.rows());
  const std::size_t cols = matrix.cols();
  BigInt g;
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    std::vector<BigInt> v(cols);
    for (std::size_t c = 0; c < cols; ++c) v[c] = matrix.at(r, c);
    for (const BasisRow& b : basis) {
      if (v[b.pivot] == 0) continue;
      const BigInt lead = b.values[b.pivot];
      const BigInt factor = v[b.pivot];
      // v <- lead * v - factor * b; b vanishes left of its pivot but v need not.
      for (std::size_t c = 0; c < b.pivot; ++c) v[c] *= lead;
      for (std::size_t c = b.pivot; c < cols; ++c) {
        v[c] *= lead;
        mpz_submul(v[c].get_mpz_t(), factor.get_mpz_t(), b.values[c].get_mpz_t());
      }
      g = 0;
      for (const BigInt& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g > 1) {
        for (BigInt& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
      }
    }
    const auto first = std::find_if(v.begin(), v.end(), [](const BigInt& x) { return x != 0; });
    if (first != v.end()) {
      const auto pivot = static_cast<std::size_t>(first - v.begin());
      const auto pos = std::lower_bound(basis.begin(), basis.end(), pivot,
                                        [](const BasisRow& b, std::size_t p) { return b.pivot < p; });
      basis.insert(pos, BasisRow{pivot, std::move(v)});
    }
    ranks.push_back(basis.size());
  }
  return ranks;
}

RankReport nullity_experiment(std::int64_t p, std::size_t n, std::int64_t ell,
                              CosetThetaCache& cache) {
  const Level level = make_level(p, ell);
  const std::size_t num_classes = orbit_representatives(p).size();
  RankReport report;
  report.p = p;
  report.n = n;
  report.ell = ell;
  report.type = level.type;
  report.s = to_size(monomial_count(n, num_classes));

  std::size_t rows = std::max<std::size_t>(2 * report.s, 120);
  while (true) {
    const IntMatrix m = build_matrix(level, n, rows, cache);
    const std::vector<std::size_t> ranks = prefix_ranks(m);
    const std::size_t rank = ranks.back();
    if (exact_rank(m) != rank) {
      throw std::logic_error("incremental and Bareiss ranks disagree");
    }
    const std::size_t b = static_cast<std::size_t>(
        std::find(ranks.begin(), ranks.end(), rank) - ranks.begin()) + 1;
    if (rows - b >= kStabilizationWindow) {
      report.rows_used = rows;
      report.rank = rank;
      report.nullity = report.s - rank;
      report.b_estimate = b;
      return report;
    }
    rows *= 2;
  }
}

ConjectureFlags conjecture_flags(const RankReport& r) {
  ConjectureFlags f;
  if (r.n == 0) return f;
  const BigInt ell(static_cast<long>(r.ell));
  const BigInt n(static_cast<unsigned long>(r.n));
  const BigInt product = BigInt(static_cast<long>(r.p)) * (n + 1) * (n + 2);
  f.above_shifted_ratio = ell * n >= product - n;
  f.above_ratio = ell * n >= product;
  f.above_half_product = 2 * ell > product;
  const bool singular = r.nullity > 0;
  f.violates_shifted_ratio = f.above_shifted_ratio && singular;
  f.violates_ratio = f.above_ratio && singular;
  f.violates_half_product = f.above_half_product && singular;
  return f;
}

std::vector<SweepRow> conjecture_sweep(std::int64_t p, const std::vector<std::size_t>& degrees,
                                       std::int64_t ell_max, unsigned jobs,
                                       CosetThetaCache& cache) {
  std::vector<std::size_t> sorted = degrees;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<std::pair<std::size_t, std::int64_t>> cells;
  const std::vector<std::int64_t> levels = admissible_levels(p, ell_max);
  for (std::size_t n : sorted) {
    for (std::int64_t ell : levels) cells.emplace_back(n, ell);
  }

  std::vector<SweepRow> rows(cells.size());
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        RankReport report = nullity_experiment(p, cells[i].first, cells[i].second, cache);
        rows[i] = SweepRow{report, conjecture_flags(report)};
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace qtheta
