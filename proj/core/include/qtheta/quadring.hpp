#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qtheta {

enum class RingType {
  Split,  // O_K/pO_K ~ F_p x F_p
  Inert,  // O_K/pO_K ~ F_{p^2}
};

const char* to_string(RingType type) noexcept;

// Element a + b*w of Z[w]/(p), where w^2 + w + d = 0. Always canonical:
// 0 <= a, b < p.
struct RingElem {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const RingElem&, const RingElem&) = default;
  friend auto operator<=>(const RingElem&, const RingElem&) = default;
};

// Coset label (a, b) denoting a - b*w mod p. This is the convention used for
// coset theta series and element indices; RingElem stores a + b*w.
struct CosetLabel {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const CosetLabel&, const CosetLabel&) = default;
};

// R = O_K/pO_K presented as F_p[w]/(w^2 + w + d).
class QuotientRing {
 public:
  // Accepts any prime p (including 2) and any integer d; arithmetic only
  // depends on d mod p. Throws std::invalid_argument if p < 2.
  QuotientRing(std::int64_t p, std::int64_t d);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t d_mod_p() const noexcept { return d_; }
  std::int64_t size() const noexcept { return p_ * p_; }

  std::int64_t residue(std::int64_t x) const noexcept;

  // Canonical a + b*w for arbitrary integers a, b.
  RingElem make(std::int64_t a, std::int64_t b) const noexcept;

  RingElem add(RingElem u, RingElem v) const noexcept;
  RingElem sub(RingElem u, RingElem v) const noexcept;
  RingElem neg(RingElem u) const noexcept;
  RingElem mul(RingElem u, RingElem v) const noexcept;
  // Complex conjugation; w maps to -1 - w.
  RingElem conj(RingElem u) const noexcept;
  bool is_unit(RingElem u) const noexcept;

  // Class of x - y*w in R.
  RingElem reduce(std::int64_t x, std::int64_t y) const noexcept;

  CosetLabel label(RingElem u) const noexcept;
  RingElem from_label(CosetLabel label) const noexcept;

  // 1-based index with r_{a + p*b + 1} = a - b*w.
  std::int64_t index(RingElem u) const noexcept;
  RingElem from_index(std::int64_t index) const;

  // All p^2 elements in index order.
  std::vector<RingElem> elements() const;

  friend bool operator==(const QuotientRing&, const QuotientRing&) = default;

 private:
  std::int64_t p_;
  std::int64_t d_;
};

// An admissible level: square-free ell = 4d - 1 with p not dividing ell.
struct Level {
  std::int64_t p = 0;
  std::int64_t ell = 0;
  std::int64_t d = 0;
  RingType type = RingType::Inert;

  QuotientRing ring() const { return QuotientRing(p, d); }

  friend bool operator==(const Level&, const Level&) = default;
};

// Validates (p, ell). Throws NotAdmissible naming the failed condition.
Level make_level(std::int64_t p, std::int64_t ell);

// All admissible ell <= bound in ascending order.
std::vector<std::int64_t> admissible_levels(std::int64_t p, std::int64_t bound);

// x^2 + x*y + d*y^2, the norm of x - y*w.
std::int64_t norm_form(std::int64_t d, std::int64_t x, std::int64_t y) noexcept;
inline std::int64_t norm_form(const Level& level, std::int64_t x, std::int64_t y) noexcept {
  return norm_form(level.d, x, y);
}

bool is_prime(std::int64_t n) noexcept;
bool is_square_free(std::int64_t n) noexcept;
// Legendre symbol (a | p) for an odd prime p.
int legendre_symbol(std::int64_t a, std::int64_t p) noexcept;

}  // namespace qtheta
