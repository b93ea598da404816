#ifndef GF3ALG_DIVIDED_POWER_HPP
#define GF3ALG_DIVIDED_POWER_HPP

#include <string>

#include "gf3alg/algebra.hpp"
#include "gf3alg/linalg.hpp"

namespace gf3alg {

/// The truncated divided power algebra O(1;n) over the three-element field:
/// basis x^(0), ..., x^(3^n - 1), product x^(i) x^(j) = C(i+j, i) x^(i+j),
/// with x^(k) = 0 outside the index range.
class DividedPowerAlgebra {
 public:
  explicit DividedPowerAlgebra(int n);

  int n() const { return n_; }
  std::size_t dim() const { return dim_; }

  TermList multiply(std::size_t i, std::size_t j) const;
  Vec multiply(const Vec& f, const Vec& g) const;

  /// The derivation x^(i) -> x^(i-1), x^(0) -> 0.
  Vec partial(const Vec& f) const;
  Mat partial_matrix() const;

  /// The second module action of f d on g: d(f g).
  Vec div_action(const Vec& f, const Vec& g) const;
  /// Matrix of g -> d(x^(i) g).
  Mat div_operator(std::size_t i) const;

  /// The codimension-1 submodule spanned by x^(i), i <= 3^n - 2.
  Mat o_prime() const;

  std::string label(std::size_t i) const;
  std::vector<std::string> labels() const;

 private:
  int n_;
  std::size_t dim_;
};

}  // namespace gf3alg

#endif
