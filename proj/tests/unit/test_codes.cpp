#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "qtheta/codes.hpp"

using namespace qtheta;

namespace {

std::int64_t ipow(std::int64_t base, std::size_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

Word random_word(std::mt19937& rng, const QuotientRing& r, std::size_t n) {
  Word w;
  for (std::size_t j = 0; j < n; ++j) {
    w.push_back(r.make(static_cast<std::int64_t>(rng() % r.p()), static_cast<std::int64_t>(rng() % r.p())));
  }
  return w;
}

}  // namespace

TEST_CASE("span examples") {
  const QuotientRing r7 = make_level(3, 7).ring();
  const LinearCode rep = LinearCode::span(r7, {{r7.make(1, 0), r7.make(1, 0)}});
  CHECK(rep.size() == 9);
  for (const RingElem& x : r7.elements()) CHECK(rep.contains({x, x}));
  CHECK_FALSE(rep.contains({r7.make(1, 0), r7.make(0, 0)}));

  const LinearCode trivial = LinearCode::span(r7, {{RingElem{}, RingElem{}, RingElem{}}});
  CHECK(trivial.size() == 1);

  // at ell = 11, w(w + 1) = 0, so w generates a submodule of size 3
  const QuotientRing r11 = make_level(3, 11).ring();
  const RingElem w = r11.make(0, 1);
  CHECK(r11.mul(w, r11.make(1, 1)) == RingElem{});
  CHECK(LinearCode::span(r11, {{w, RingElem{}}}).size() == 3);
  CHECK(LinearCode::span(r7, {{r7.make(0, 1), RingElem{}}}).size() == 9);

  CHECK(LinearCode::full(r7, 2).size() == 81);
  CHECK_THROWS_AS(LinearCode::span(r7, {}), std::invalid_argument);
  CHECK_THROWS_AS(LinearCode::span(r7, {{RingElem{}}, {RingElem{}, RingElem{}}}), std::invalid_argument);
}

TEST_CASE("random spans are submodules whose size divides p^{2n}") {
  std::mt19937 rng(5);
  for (std::int64_t ell : {7, 11}) {
    const QuotientRing r = make_level(3, ell).ring();
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 1 + rng() % 3;
      std::vector<Word> gens;
      for (std::size_t g = 0; g < 1 + rng() % 3; ++g) gens.push_back(random_word(rng, r, n));
      const LinearCode c = LinearCode::span(r, gens);
      CHECK(ipow(3, 2 * n) % static_cast<std::int64_t>(c.size()) == 0);
      CHECK(c.contains(Word(n, RingElem{})));
      CHECK(c.is_module_over(r));
      for (const Word& g : gens) CHECK(c.contains(g));
      for (int k = 0; k < 10; ++k) {
        const Word& u = c.codewords()[rng() % c.size()];
        const Word& v = c.codewords()[rng() % c.size()];
        const RingElem s = r.from_index(1 + static_cast<std::int64_t>(rng() % 9));
        Word combo;
        for (std::size_t j = 0; j < n; ++j) combo.push_back(r.add(r.mul(s, u[j]), v[j]));
        CHECK(c.contains(combo));
      }
    }
  }
}

TEST_CASE("counting vectors") {
  const QuotientRing r = make_level(3, 7).ring();
  using E = WeightEnumerator::Exponents;
  CHECK(counting_vector(r, {RingElem{}, RingElem{}}) == E{2, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(counting_vector(r, {r.make(1, 0), r.make(1, 0)}) == E{0, 2, 0, 0, 0, 0, 0, 0, 0});
  // 1 - w has label (1, 1), index 5; 2 has index 3
  CHECK(counting_vector(r, {r.make(1, -1), r.make(2, 0)}) == E{0, 0, 1, 0, 1, 0, 0, 0, 0});
}

TEST_CASE("complete and symmetrized weight enumerators") {
  const QuotientRing r = make_level(3, 7).ring();
  const LinearCode rep = LinearCode::span(r, {{r.make(1, 0), r.make(1, 0)}});
  const WeightEnumerator c = cwe(rep);
  CHECK(c.degree() == 2);
  CHECK(c.terms().size() == 9);
  for (std::size_t k = 0; k < 9; ++k) {
    WeightEnumerator::Exponents e(9, 0);
    e[k] = 2;
    CHECK(c.coefficient(e) == 1);
  }
  const WeightEnumerator s = swe(rep);
  CHECK(s.coefficient({2, 0, 0, 0}) == 1);
  CHECK(s.coefficient({0, 2, 0, 0}) == 2);
  CHECK(s.coefficient({0, 0, 2, 0}) == 4);
  CHECK(s.coefficient({0, 0, 0, 2}) == 2);
  CHECK(s.terms().size() == 4);

  const LinearCode trivial = LinearCode::span(r, {Word(3, RingElem{})});
  CHECK(cwe(trivial).terms().size() == 1);
  CHECK(cwe(trivial).coefficient({3, 0, 0, 0, 0, 0, 0, 0, 0}) == 1);
  CHECK(swe(trivial).coefficient({3, 0, 0, 0}) == 1);

  WeightEnumerator w(2, 2);
  CHECK_THROWS_AS(w.add_term({1, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(w.add_term({1, 1, 0}, 1), std::invalid_argument);
}

TEST_CASE("enumerator mass equals code size; swe is cwe with merged variables") {
  std::mt19937 rng(9);
  for (const auto& rc : qtheta::testing::random_code_suite(24, 99)) {
    const WeightEnumerator c = cwe(rc.code);
    const WeightEnumerator s = swe(rc.code);
    CHECK(c.total_mass() == rc.code.size());
    CHECK(s.total_mass() == rc.code.size());
    for (const auto& [e, coeff] : c.terms()) CHECK(coeff > 0);
    // evaluate both at random integer points that are constant on orbits
    const auto classes = orbit_representatives(3);
    std::vector<ScaledSeries> by_class, by_index(9);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      by_class.push_back(qtheta::testing::series(6, {{0, static_cast<long>(rng() % 7)}, {static_cast<std::int64_t>(1 + i), 1}}));
      for (const auto& m : classes[i].members) by_index[static_cast<std::size_t>(m.a + 3 * m.b)] = by_class.back();
    }
    CHECK(c.evaluate(by_index) == s.evaluate(by_class));
  }
}

TEST_CASE("hermitian inner product") {
  const QuotientRing r = make_level(3, 7).ring();
  CHECK(hermitian_inner(r, {RingElem{}, RingElem{}}, {RingElem{}, RingElem{}}) == RingElem{});
  CHECK(hermitian_inner(r, {r.make(1, 0), r.make(1, 0)}, {r.make(1, 0), r.make(1, 0)}) == r.make(2, 0));
  const RingElem w = r.make(0, 1);
  // <w, w> = w conj(w) = N(w) = d = 2
  CHECK(hermitian_inner(r, {w}, {w}) == r.make(2, 0));
}

TEST_CASE("duals: sizes, double dual, trivial and full codes") {
  for (std::int64_t ell : {7, 11}) {
    const QuotientRing r = make_level(3, ell).ring();
    CHECK(dual_code(LinearCode::span(r, {Word(2, RingElem{})})) == LinearCode::full(r, 2));
    CHECK(dual_code(LinearCode::full(r, 2)).size() == 1);
    // every one-generator code of length 2
    for (const RingElem& x : r.elements()) {
      for (const RingElem& y : r.elements()) {
        const LinearCode c = LinearCode::span(r, {{x, y}});
        const LinearCode dual = dual_code(c);
        CHECK(c.size() * dual.size() == 81);
        CHECK(dual_code(dual) == c);
        for (const Word& u : c.codewords()) {
          for (const Word& v : dual.codewords()) CHECK(hermitian_inner(r, u, v) == RingElem{});
        }
      }
    }
  }
}

TEST_CASE("repetition code over an inert ring is not self-dual") {
  const QuotientRing r = make_level(3, 7).ring();
  const LinearCode rep = LinearCode::span(r, {{r.make(1, 0), r.make(1, 0)}});
  CHECK_FALSE(is_self_dual(rep));
  // (1, 1) . (1, 1) = 2 != 0; (1, i) with N(i) = -1 is self-orthogonal of size p^n
  for (const RingElem& i : r.elements()) {
    if (r.mul(i, r.conj(i)) == r.make(2, 0)) {
      const LinearCode c = LinearCode::span(r, {{r.make(1, 0), i}});
      CHECK(is_self_dual(c));
      break;
    }
  }
}

TEST_CASE("enumerators are invariant under coordinate permutations") {
  std::mt19937 rng(13);
  const QuotientRing r = make_level(3, 11).ring();
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 3;
    std::vector<Word> gens = {random_word(rng, r, n), random_word(rng, r, n)};
    std::vector<std::size_t> perm = {0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Word> permuted;
    for (const Word& g : gens) {
      Word h(n);
      for (std::size_t j = 0; j < n; ++j) h[perm[j]] = g[j];
      permuted.push_back(h);
    }
    const LinearCode a = LinearCode::span(r, gens);
    const LinearCode b = LinearCode::span(r, permuted);
    CHECK(a.size() == b.size());
    CHECK(cwe(a) == cwe(b));
    CHECK(swe(a) == swe(b));
  }
}
