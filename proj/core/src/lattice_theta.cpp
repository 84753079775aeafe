#include "qtheta/lattice_theta.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "qtheta/errors.hpp"

namespace qtheta {

bool is_compatible(const LinearCode& code, const Level& level) {
  return code.ring().p() == level.p && code.is_module_over(level.ring());
}

void require_compatible(const LinearCode& code, const Level& level) {
  if (code.ring().p() != level.p) {
    throw LevelMismatch("code is defined over p = " + std::to_string(code.ring().p()) +
                        " but the level has p = " + std::to_string(level.p));
  }
  if (!code.is_module_over(level.ring())) {
    throw LevelMismatch("code is not a submodule over O_K/pO_K at ell = " +
                        std::to_string(level.ell) + " (" + to_string(level.type) + ")");
  }
}

ScaledSeries theta_via_cwe(const LinearCode& code, const Level& level, std::int64_t precision,
                           CosetThetaCache& cache) {
  require_compatible(code, level);
  const auto table = cache.get(level, precision);
  return cwe(code).evaluate(table->by_index);
}

ScaledSeries theta_via_swe(const LinearCode& code, const Level& level, std::int64_t precision,
                           CosetThetaCache& cache) {
  require_compatible(code, level);
  const auto table = cache.get(level, precision);
  return swe(code).evaluate(table->by_class);
}

namespace {

struct Candidate {
  std::int64_t norm;
  std::uint64_t digit;  // ring index - 1 of the reduction
};

class LatticeCounter {
 public:
  LatticeCounter(const LinearCode& code, const Level& level, std::int64_t precision)
      : code_(code), precision_(precision), counts_(static_cast<std::size_t>(precision)) {
    const QuotientRing ring = level.ring();
    base_ = static_cast<std::uint64_t>(ring.size());
    // Every x - y*w in O_K with Q_d(x, y) < P, sorted by norm.
    const std::int64_t four_p = 4 * precision;
    std::int64_t reach = 0;
    while (reach * reach < four_p) ++reach;
    for (std::int64_t y = 0; level.ell * y * y < four_p; ++y) {
      const std::vector<std::int64_t> ys = y == 0 ? std::vector<std::int64_t>{0}
                                                  : std::vector<std::int64_t>{y, -y};
      for (const std::int64_t yy : ys) {
        // (2x + y)^2 < 4P bounds x on both sides.
        for (std::int64_t x = (-reach - yy) / 2 - 1; 2 * x + yy <= reach; ++x) {
          push(ring, level, x, yy);
        }
      }
    }
    std::sort(candidates_.begin(), candidates_.end(),
              [](const Candidate& l, const Candidate& r) { return l.norm < r.norm; });

    // prefixes_[j] holds keys of the first j components of each codeword.
    const std::size_t n = code.length();
    prefixes_.resize(n + 1);
    for (const Word& w : code.codewords()) {
      const std::uint64_t full = code.key(w);
      std::uint64_t modulus = 1;
      for (std::size_t j = 0; j <= n; ++j) {
        prefixes_[j].insert(j == n ? full : full % modulus);
        if (j < n) modulus *= base_;
      }
    }
  }

  std::vector<BigInt> run() {
    if (precision_ > 0) descend(0, 0, 0, 1);
    return std::move(counts_);
  }

 private:
  void push(const QuotientRing& ring, const Level& level, std::int64_t x, std::int64_t y) {
    const std::int64_t q = norm_form(level, x, y);
    if (q >= precision_) return;
    candidates_.push_back({q, static_cast<std::uint64_t>(ring.index(ring.reduce(x, y)) - 1)});
  }

  // key holds the digits of components 0..depth-1 (little-endian base p^2).
  void descend(std::size_t depth, std::int64_t norm, std::uint64_t key, std::uint64_t place) {
    if (depth == code_.length()) {
      ++counts_[static_cast<std::size_t>(norm)];
      return;
    }
    const auto& allowed = prefixes_[depth + 1];
    for (const Candidate& c : candidates_) {
      const std::int64_t total = norm + c.norm;
      if (total >= precision_) break;
      const std::uint64_t next = key + c.digit * place;
      if (!allowed.contains(next)) continue;
      descend(depth + 1, total, next, place * base_);
    }
  }

  const LinearCode& code_;
  std::int64_t precision_;
  std::uint64_t base_ = 1;
  std::vector<Candidate> candidates_;
  std::vector<std::unordered_set<std::uint64_t>> prefixes_;
  std::vector<BigInt> counts_;
};

}  // namespace

ScaledSeries theta_via_enum(const LinearCode& code, const Level& level, std::int64_t precision) {
  require_compatible(code, level);
  if (precision < 0) throw std::invalid_argument("precision must be non-negative");
  std::vector<BigInt> counts = LatticeCounter(code, level, precision).run();
  ScaledSeries::Terms terms;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != 0) terms.emplace_hint(terms.end(), static_cast<std::int64_t>(k), counts[k]);
  }
  return ScaledSeries(1, Rational(precision), std::move(terms));
}

LevelAgreement level_agreement_prefix(const LinearCode& code, const Level& first,
                                      const Level& second, std::int64_t precision) {
  const ScaledSeries a = theta_via_cwe(code, first, precision);
  const ScaledSeries b = theta_via_cwe(code, second, precision);
  LevelAgreement out;
  out.bound = (std::min(first.ell, second.ell) + 1) / 4;
  if (const auto diff = first_difference(a, b)) out.first_difference = diff->get_num().get_si();
  return out;
}

}  // namespace qtheta
