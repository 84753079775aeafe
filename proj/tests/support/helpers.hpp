#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "qtheta/qtheta.hpp"

namespace qtheta::testing {

// Integer series {k: c} with scale 1 and precision P.
inline ScaledSeries series(std::int64_t precision, const std::map<std::int64_t, long>& terms) {
  ScaledSeries::Terms t;
  for (const auto& [k, c] : terms) t[k] = c;
  return ScaledSeries(1, Rational(static_cast<long>(precision)), t);
}

inline oracle::Counts counts_of(const ScaledSeries& s) {
  oracle::Counts out;
  const ScaledSeries integral = integerize(s);
  for (const auto& [k, c] : integral.terms()) out[k] = c.get_si();
  return out;
}

inline std::set<oracle::LabelWord> label_set(const LinearCode& code) {
  std::set<oracle::LabelWord> out;
  for (const Word& w : code.codewords()) {
    oracle::LabelWord lw;
    for (const RingElem& e : w) {
      const CosetLabel l = code.ring().label(e);
      lw.emplace_back(l.a, l.b);
    }
    out.insert(lw);
  }
  return out;
}

struct RandomCode {
  Level level;  // level the code was generated over
  LinearCode code;
};

// Deterministic suite of random linear codes over p = 3, lengths 1..3, one or
// two random generators, rings taken from ell in {7, 11, 19}.
inline std::vector<RandomCode> random_code_suite(std::size_t count, unsigned seed = 20240531) {
  std::mt19937 rng(seed);
  const std::int64_t ells[] = {7, 11, 19};
  std::vector<RandomCode> out;
  for (std::size_t i = 0; i < count; ++i) {
    const Level level = make_level(3, ells[i % 3]);
    const QuotientRing ring = level.ring();
    const std::size_t length = 1 + (i / 3) % 3;
    const std::size_t gens = 1 + rng() % 2;
    std::vector<Word> generators;
    for (std::size_t g = 0; g < gens; ++g) {
      Word w;
      for (std::size_t j = 0; j < length; ++j) {
        w.push_back(ring.make(static_cast<std::int64_t>(rng() % 3), static_cast<std::int64_t>(rng() % 3)));
      }
      generators.push_back(std::move(w));
    }
    out.push_back({level, LinearCode::span(ring, std::move(generators))});
  }
  return out;
}

}  // namespace qtheta::testing
