#ifndef GF3ALG_FRANK_HPP
#define GF3ALG_FRANK_HPP

#include "gf3alg/algebra.hpp"
#include "gf3alg/divided_power.hpp"

namespace gf3alg {

struct JordanType;

/// phi(a, b)(c) = lambda(a, c) b + lambda(b, c) a, a symmetric bilinear map
/// into trace-zero 2x2 matrices; a, b are coordinates in the symplectic
/// basis (u, v) with lambda(u, v) = 1. Returned in that basis.
Mat phi(const Vec& a, const Vec& b);

/// The Frank Lie algebra F(n) on U (x) O (+) sl(U) (x) O (+) Id (x) W,
/// dimension 6*3^n. Basis blocks in order: u*x^(i), v*x^(i), e*x^(i),
/// h*x^(i), f*x^(i), Id*x^(i)d. The degree vector carries the integer
/// weights (1, -1, 2, 0, -2, 0) of the torus spanned by h; the weights
/// mod 2 give the parity-style grading with U (x) O odd.
struct FrankAlgebra {
  int n = 0;
  StructureAlgebra alg;

  std::size_t block() const { return alg.dim() / 6; }  // 3^n
  std::size_t idx_u(std::size_t i) const { return i; }
  std::size_t idx_v(std::size_t i) const { return block() + i; }
  std::size_t idx_e(std::size_t i) const { return 2 * block() + i; }
  std::size_t idx_h(std::size_t i) const { return 3 * block() + i; }
  std::size_t idx_f(std::size_t i) const { return 4 * block() + i; }
  std::size_t idx_w(std::size_t i) const { return 5 * block() + i; }
};

FrankAlgebra build_frank(int n);

/// d = ad(e (x) 1) with e the matrix unit E_12; a derivation that cubes
/// to zero.
Mat frank_derivation(const FrankAlgebra& fr);

JordanType frank_jordan_type(const FrankAlgebra& fr);

}  // namespace gf3alg

#endif
