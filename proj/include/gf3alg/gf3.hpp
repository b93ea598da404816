#ifndef GF3ALG_GF3_HPP
#define GF3ALG_GF3_HPP

#include <cstdint>
#include <iosfwd>

#include "gf3alg/errors.hpp"

namespace gf3alg {

/// Element of the field with three elements. All arithmetic is exact;
/// the value is always one of {0, 1, 2}.
class Gf3 {
 public:
  constexpr Gf3() = default;
  constexpr Gf3(int v) : v_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

  constexpr int value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  constexpr Gf3 operator+(Gf3 o) const { return Gf3(v_ + o.v_); }
  constexpr Gf3 operator-(Gf3 o) const { return Gf3(v_ + 3 - o.v_); }
  constexpr Gf3 operator-() const { return Gf3(3 - v_); }
  constexpr Gf3 operator*(Gf3 o) const { return Gf3(v_ * o.v_); }

  constexpr Gf3& operator+=(Gf3 o) { return *this = *this + o; }
  constexpr Gf3& operator-=(Gf3 o) { return *this = *this - o; }
  constexpr Gf3& operator*=(Gf3 o) { return *this = *this * o; }

  /// Multiplicative inverse; nonzero elements are their own inverse
  /// (1*1 = 1 and 2*2 = 4 = 1).
  Gf3 inverse() const {
    if (v_ == 0) throw Error("Gf3: inverse of zero");
    return *this;
  }

  constexpr bool operator==(const Gf3&) const = default;

 private:
  std::uint8_t v_ = 0;
};

/// Binomial coefficient C(i, j) mod 3 by Lucas' rule: the product of the
/// base-3 digitwise binomials. Returns 0 when j > i.
Gf3 binom_mod3(std::uint64_t i, std::uint64_t j);

std::ostream& operator<<(std::ostream&, Gf3);

}  // namespace gf3alg

#endif
