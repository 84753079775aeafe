#include "qtheta/quadring.hpp"

#include <stdexcept>
#include <string>

#include "qtheta/errors.hpp"

namespace qtheta {

const char* to_string(RingType type) noexcept {
  return type == RingType::Split ? "split" : "inert";
}

QuotientRing::QuotientRing(std::int64_t p, std::int64_t d) : p_(p), d_(0) {
  if (p < 2) throw std::invalid_argument("ring characteristic must be at least 2");
  d_ = residue(d);
}

std::int64_t QuotientRing::residue(std::int64_t x) const noexcept {
  const std::int64_t r = x % p_;
  return r < 0 ? r + p_ : r;
}

RingElem QuotientRing::make(std::int64_t a, std::int64_t b) const noexcept {
  return {residue(a), residue(b)};
}

RingElem QuotientRing::add(RingElem u, RingElem v) const noexcept {
  return make(u.a + v.a, u.b + v.b);
}

RingElem QuotientRing::sub(RingElem u, RingElem v) const noexcept {
  return make(u.a - v.a, u.b - v.b);
}

RingElem QuotientRing::neg(RingElem u) const noexcept { return make(-u.a, -u.b); }

RingElem QuotientRing::mul(RingElem u, RingElem v) const noexcept {
  // (a + bw)(c + ew) = ac + (ae + bc) w + be w^2, with w^2 = -w - d.
  const std::int64_t be = residue(u.b * v.b);
  return make(u.a * v.a - be * d_, u.a * v.b + u.b * v.a - be);
}

RingElem QuotientRing::conj(RingElem u) const noexcept { return make(u.a - u.b, -u.b); }

bool QuotientRing::is_unit(RingElem u) const noexcept {
  // Norm of a + bw is a^2 - ab + d b^2; u is a unit iff the norm is nonzero mod p.
  return residue(u.a * u.a - u.a * u.b + residue(d_ * u.b) * u.b) != 0;
}

RingElem QuotientRing::reduce(std::int64_t x, std::int64_t y) const noexcept {
  return make(x, -y);
}

CosetLabel QuotientRing::label(RingElem u) const noexcept { return {u.a, residue(-u.b)}; }

RingElem QuotientRing::from_label(CosetLabel label) const noexcept {
  return reduce(label.a, label.b);
}

std::int64_t QuotientRing::index(RingElem u) const noexcept {
  const CosetLabel l = label(u);
  return l.a + p_ * l.b + 1;
}

RingElem QuotientRing::from_index(std::int64_t index) const {
  if (index < 1 || index > size()) throw std::out_of_range("ring element index out of range");
  const std::int64_t k = index - 1;
  return from_label({k % p_, k / p_});
}

std::vector<RingElem> QuotientRing::elements() const {
  std::vector<RingElem> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::int64_t i = 1; i <= size(); ++i) out.push_back(from_index(i));
  return out;
}

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

bool is_square_free(std::int64_t n) noexcept {
  if (n < 1) return false;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % (f * f) == 0) return false;
    if (n % f == 0) n /= f;
  }
  return true;
}

int legendre_symbol(std::int64_t a, std::int64_t p) noexcept {
  std::int64_t base = a % p;
  if (base < 0) base += p;
  if (base == 0) return 0;
  // Euler's criterion.
  std::int64_t result = 1;
  std::int64_t e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = (result * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

Level make_level(std::int64_t p, std::int64_t ell) {
  if (!is_prime(p)) throw NotAdmissible("p = " + std::to_string(p) + " is not prime");
  if (ell <= 0 || ell % 4 != 3) throw NotAdmissible("ell is not congruent to 3 mod 4");
  if (!is_square_free(ell)) throw NotAdmissible("ell is not square-free");
  if (ell % p == 0) throw NotAdmissible("p divides ell");

  Level level;
  level.p = p;
  level.ell = ell;
  level.d = (ell + 1) / 4;
  if (p == 2) {
    // w^2 + w + d has a root mod 2 iff d is even.
    level.type = level.d % 2 == 0 ? RingType::Split : RingType::Inert;
  } else {
    level.type = legendre_symbol(-ell, p) == 1 ? RingType::Split : RingType::Inert;
  }
  return level;
}

std::vector<std::int64_t> admissible_levels(std::int64_t p, std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t ell = 3; ell <= bound; ell += 4) {
    try {
      make_level(p, ell);
      out.push_back(ell);
    } catch (const NotAdmissible&) {
    }
  }
  return out;
}

std::int64_t norm_form(std::int64_t d, std::int64_t x, std::int64_t y) noexcept {
  return x * x + x * y + d * y * y;
}

}  // namespace qtheta
