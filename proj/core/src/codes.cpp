#include "qtheta/codes.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "qtheta/coset_theta.hpp"

namespace qtheta {
namespace {

void check_word_capacity(const QuotientRing& ring, std::size_t length) {
  // key() packs one base-p^2 digit per position into 64 bits.
  long double capacity = 1;
  for (std::size_t i = 0; i < length; ++i) capacity *= static_cast<long double>(ring.size());
  if (capacity > static_cast<long double>(std::numeric_limits<std::uint64_t>::max())) {
    throw std::invalid_argument("code length too large for codeword keys");
  }
}

Word scale_word(const QuotientRing& ring, RingElem r, const Word& w) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = ring.mul(r, w[i]);
  return out;
}

Word add_words(const QuotientRing& ring, const Word& u, const Word& v) {
  Word out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = ring.add(u[i], v[i]);
  return out;
}

Word canonical_word(const QuotientRing& ring, const Word& w) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = ring.make(w[i].a, w[i].b);
  return out;
}

}  // namespace

LinearCode::LinearCode(QuotientRing ring, std::size_t length, std::vector<Word> generators,
                       std::vector<Word> codewords)
    : ring_(ring), length_(length), generators_(std::move(generators)) {
  keys_.reserve(codewords.size());
  std::vector<std::pair<std::uint64_t, Word>> keyed;
  keyed.reserve(codewords.size());
  for (Word& w : codewords) {
    const std::uint64_t k = key(w);
    keys_.insert(k);
    keyed.emplace_back(k, std::move(w));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  codewords_.reserve(keyed.size());
  for (auto& [k, w] : keyed) codewords_.push_back(std::move(w));
}

LinearCode LinearCode::span(const QuotientRing& ring, std::vector<Word> generators) {
  if (generators.empty()) throw std::invalid_argument("span needs at least one generator");
  const std::size_t length = generators.front().size();
  if (length == 0) throw std::invalid_argument("code length must be positive");
  for (Word& g : generators) {
    if (g.size() != length) throw std::invalid_argument("generators have inconsistent lengths");
    g = canonical_word(ring, g);
  }
  check_word_capacity(ring, length);

  LinearCode probe(ring, length, {}, {});
  const std::vector<RingElem> scalars = ring.elements();
  std::vector<Word> words{Word(length)};
  std::unordered_set<std::uint64_t> seen{probe.key(words.front())};
  for (const Word& g : generators) {
    std::vector<Word> multiples;
    for (RingElem r : scalars) multiples.push_back(scale_word(ring, r, g));
    const std::size_t current = words.size();
    for (std::size_t i = 0; i < current; ++i) {
      for (const Word& m : multiples) {
        Word w = add_words(ring, words[i], m);
        if (seen.insert(probe.key(w)).second) words.push_back(std::move(w));
      }
    }
  }
  return LinearCode(ring, length, std::move(generators), std::move(words));
}

LinearCode LinearCode::full(const QuotientRing& ring, std::size_t length) {
  std::vector<Word> gens;
  const RingElem one = ring.make(1, 0);
  for (std::size_t i = 0; i < length; ++i) {
    Word e(length);
    e[i] = one;
    gens.push_back(std::move(e));
  }
  return span(ring, std::move(gens));
}

std::uint64_t LinearCode::key(const Word& word) const {
  if (word.size() != length_) throw std::invalid_argument("word length does not match the code");
  std::uint64_t k = 0;
  const auto base = static_cast<std::uint64_t>(ring_.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const RingElem e = ring_.make(it->a, it->b);
    k = k * base + static_cast<std::uint64_t>(ring_.index(e) - 1);
  }
  return k;
}

bool LinearCode::contains(const Word& word) const {
  return word.size() == length_ && keys_.contains(key(word));
}

bool LinearCode::is_module_over(const QuotientRing& other) const {
  if (other.p() != ring_.p()) return false;
  const RingElem w = other.make(0, 1);
  return std::all_of(codewords_.begin(), codewords_.end(), [&](const Word& c) {
    return contains(scale_word(other, w, c));
  });
}

bool operator==(const LinearCode& lhs, const LinearCode& rhs) {
  return lhs.ring_.p() == rhs.ring_.p() && lhs.length_ == rhs.length_ &&
         lhs.keys_ == rhs.keys_;
}

WeightEnumerator::WeightEnumerator(std::size_t num_vars, std::size_t degree)
    : num_vars_(num_vars), degree_(degree) {}

void WeightEnumerator::add_term(const Exponents& exponents, const BigInt& coefficient) {
  if (exponents.size() != num_vars_) throw std::invalid_argument("monomial arity mismatch");
  std::size_t total = 0;
  for (std::uint32_t e : exponents) total += e;
  if (total != degree_) throw std::invalid_argument("monomial degree mismatch");
  if (coefficient == 0) return;
  BigInt& slot = terms_[exponents];
  slot += coefficient;
  if (slot == 0) terms_.erase(exponents);
}

BigInt WeightEnumerator::coefficient(const Exponents& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt WeightEnumerator::total_mass() const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

ScaledSeries WeightEnumerator::evaluate(const std::vector<ScaledSeries>& values) const {
  if (values.size() != num_vars_) throw std::invalid_argument("need one series per variable");
  if (values.empty()) throw std::invalid_argument("cannot evaluate a polynomial in no variables");
  Rational precision = values.front().precision();
  for (const ScaledSeries& v : values) precision = std::min(precision, v.precision());

  // powers[i][e] = values[i]^e, filled lazily up to the largest exponent used.
  std::vector<std::vector<ScaledSeries>> powers(num_vars_);
  auto power_of = [&](std::size_t i, std::uint32_t e) -> const ScaledSeries& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(ScaledSeries::one(precision, values[i].scale()));
    while (cache.size() <= e) cache.push_back(cache.back() * values[i]);
    return cache[e];
  };

  ScaledSeries total = ScaledSeries::zero(precision);
  for (const auto& [exponents, coeff] : terms_) {
    ScaledSeries term = ScaledSeries::one(precision);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (exponents[i] > 0) term = term * power_of(i, exponents[i]);
    }
    total = total + coeff * term;
  }
  return total;
}

WeightEnumerator::Exponents counting_vector(const QuotientRing& ring, const Word& word) {
  WeightEnumerator::Exponents counts(static_cast<std::size_t>(ring.size()), 0);
  for (const RingElem& e : word) {
    ++counts[static_cast<std::size_t>(ring.index(ring.make(e.a, e.b)) - 1)];
  }
  return counts;
}

WeightEnumerator cwe(const LinearCode& code) {
  const QuotientRing& ring = code.ring();
  WeightEnumerator out(static_cast<std::size_t>(ring.size()), code.length());
  for (const Word& w : code.codewords()) out.add_term(counting_vector(ring, w), 1);
  return out;
}

WeightEnumerator swe(const LinearCode& code) {
  const QuotientRing& ring = code.ring();
  const std::int64_t p = ring.p();
  const std::vector<CosetClass> classes = orbit_representatives(p);
  std::vector<std::size_t> class_of(static_cast<std::size_t>(ring.size()));
  for (std::int64_t k = 0; k < ring.size(); ++k) {
    class_of[static_cast<std::size_t>(k)] = orbit_position(classes, k % p, k / p);
  }

  const WeightEnumerator complete = cwe(code);
  WeightEnumerator out(classes.size(), code.length());
  for (const auto& [exponents, coeff] : complete.terms()) {
    WeightEnumerator::Exponents merged(classes.size(), 0);
    for (std::size_t k = 0; k < exponents.size(); ++k) merged[class_of[k]] += exponents[k];
    out.add_term(merged, coeff);
  }
  return out;
}

RingElem hermitian_inner(const QuotientRing& ring, const Word& u, const Word& v) {
  if (u.size() != v.size()) throw std::invalid_argument("inner product of unequal lengths");
  RingElem acc{};
  for (std::size_t i = 0; i < u.size(); ++i) {
    acc = ring.add(acc, ring.mul(ring.make(u[i].a, u[i].b), ring.conj(ring.make(v[i].a, v[i].b))));
  }
  return acc;
}

LinearCode dual_code(const LinearCode& code) {
  const QuotientRing& ring = code.ring();
  const std::size_t n = code.length();
  const std::vector<RingElem> elems = ring.elements();
  const RingElem zero{};

  // Orthogonality to the generators implies orthogonality to their span.
  std::vector<Word> generators = code.generators();
  if (generators.empty()) generators = code.codewords();

  std::vector<Word> dual_words;
  Word u(n, zero);
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    const bool orthogonal = std::all_of(generators.begin(), generators.end(), [&](const Word& g) {
      return hermitian_inner(ring, u, g) == zero;
    });
    if (orthogonal) dual_words.push_back(u);
    std::size_t pos = 0;
    while (pos < n && ++digits[pos] == elems.size()) {
      digits[pos] = 0;
      u[pos] = elems[0];
      ++pos;
    }
    if (pos == n) break;
    u[pos] = elems[digits[pos]];
  }

  // Greedy generator selection: keep a word whenever it enlarges the span.
  std::vector<Word> dual_generators;
  LinearCode current = LinearCode::span(ring, {Word(n, zero)});
  for (const Word& w : dual_words) {
    if (current.contains(w)) continue;
    dual_generators.push_back(w);
    current = LinearCode::span(ring, dual_generators);
    if (current.size() == dual_words.size()) break;
  }
  if (dual_generators.empty()) dual_generators.push_back(Word(n, zero));
  return LinearCode::span(ring, std::move(dual_generators));
}

bool is_self_dual(const LinearCode& code) { return code == dual_code(code); }

}  // namespace qtheta
