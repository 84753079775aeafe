#pragma once

#include <cstdint>
#include <map>
#include <unordered_set>
#include <vector>

#include "qtheta/qseries.hpp"
#include "qtheta/quadring.hpp"

namespace qtheta {

using Word = std::vector<RingElem>;

// An R-submodule of R^n with every codeword materialised.
class LinearCode {
 public:
  // Smallest submodule containing the generators: the sum of the cyclic
  // modules R*g, built one generator at a time. No row reduction is involved,
  // so zero divisors in split rings are handled. Throws std::invalid_argument
  // for an empty generator list or inconsistent lengths.
  static LinearCode span(const QuotientRing& ring, std::vector<Word> generators);

  // The whole space R^n.
  static LinearCode full(const QuotientRing& ring, std::size_t length);

  const QuotientRing& ring() const noexcept { return ring_; }
  std::size_t length() const noexcept { return length_; }
  const std::vector<Word>& generators() const noexcept { return generators_; }
  // Sorted by key.
  const std::vector<Word>& codewords() const noexcept { return codewords_; }
  std::size_t size() const noexcept { return codewords_.size(); }

  bool contains(const Word& word) const;
  bool contains_key(std::uint64_t key) const { return keys_.contains(key); }

  // Injective encoding of a word: digits (index - 1) in base p^2.
  std::uint64_t key(const Word& word) const;

  // Whether the codeword set is closed under multiplication by w in `other`
  // (i.e. is also a submodule over that presentation of R).
  bool is_module_over(const QuotientRing& other) const;

  friend bool operator==(const LinearCode& lhs, const LinearCode& rhs);

 private:
  LinearCode(QuotientRing ring, std::size_t length, std::vector<Word> generators,
             std::vector<Word> codewords);

  QuotientRing ring_;
  std::size_t length_;
  std::vector<Word> generators_;
  std::vector<Word> codewords_;
  std::unordered_set<std::uint64_t> keys_;
};

// Homogeneous polynomial with non-negative integer coefficients, stored as
// exponent vector -> coefficient.
class WeightEnumerator {
 public:
  using Exponents = std::vector<std::uint32_t>;

  WeightEnumerator(std::size_t num_vars, std::size_t degree);

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::map<Exponents, BigInt>& terms() const noexcept { return terms_; }

  // Throws std::invalid_argument on wrong arity or degree.
  void add_term(const Exponents& exponents, const BigInt& coefficient);

  BigInt coefficient(const Exponents& exponents) const;
  BigInt total_mass() const;

  // Substitutes one series per variable. All series must share a precision.
  ScaledSeries evaluate(const std::vector<ScaledSeries>& values) const;

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;

 private:
  std::size_t num_vars_;
  std::size_t degree_;
  std::map<Exponents, BigInt> terms_;
};

// Entry i - 1 counts the positions j with u_j = r_i.
WeightEnumerator::Exponents counting_vector(const QuotientRing& ring, const Word& word);

// Complete weight enumerator in p^2 variables z_1..z_{p^2}.
WeightEnumerator cwe(const LinearCode& code);

// cwe with z_{a + p*b + 1} replaced by the variable of the Klein orbit of
// (a, b); variables follow orbit_representatives(p).
WeightEnumerator swe(const LinearCode& code);

// sum_i u_i * conj(v_i).
RingElem hermitian_inner(const QuotientRing& ring, const Word& u, const Word& v);

// Hermitian dual, by exhaustive search over R^n.
LinearCode dual_code(const LinearCode& code);
bool is_self_dual(const LinearCode& code);

}  // namespace qtheta
