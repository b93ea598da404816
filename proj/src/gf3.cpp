#include "gf3alg/gf3.hpp"

#include <ostream>

namespace gf3alg {

Gf3 binom_mod3(std::uint64_t i, std::uint64_t j) {
  if (j > i) return Gf3(0);
  // digit binomials: C(0,0)=C(1,0)=C(2,0)=C(1,1)=C(2,2)=1, C(2,1)=2,
  // anything with a top digit smaller than the bottom digit kills the product
  int acc = 1;
  while (j > 0 || i > 0) {
    const int a = static_cast<int>(i % 3);
    const int b = static_cast<int>(j % 3);
    if (b > a) return Gf3(0);
    if (a == 2 && b == 1) acc = (acc * 2) % 3;
    i /= 3;
    j /= 3;
  }
  return Gf3(acc);
}

std::ostream& operator<<(std::ostream& os, Gf3 x) { return os << x.value(); }

}  // namespace gf3alg
