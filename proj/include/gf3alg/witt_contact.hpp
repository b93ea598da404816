#ifndef GF3ALG_WITT_CONTACT_HPP
#define GF3ALG_WITT_CONTACT_HPP

#include "gf3alg/algebra.hpp"
#include "gf3alg/divided_power.hpp"
#include "gf3alg/meataxe.hpp"

namespace gf3alg {

/// Witt algebra W(1;n): basis x^(i)d with
/// [f d, g d] = (f d(g) - g d(f)) d. Labels are "x^(i)d".
StructureAlgebra build_witt(int n);

/// The superization O(1,1;n) = O(1;n) tensor the Grassmann algebra on one
/// odd generator t: even basis x^(i) (indices 0..3^n-1), odd basis x^(i)t
/// (indices 3^n..2*3^n-1).
class SuperO {
 public:
  explicit SuperO(int n);

  int n() const { return n_; }
  std::size_t dim() const { return 2 * o_.dim(); }
  std::size_t even_dim() const { return o_.dim(); }
  const DividedPowerAlgebra& base() const { return o_; }

  Vec multiply(const Vec& a, const Vec& b) const;
  /// d acts through the even variable only: d(f t) = (d f) t.
  Vec partial(const Vec& a) const;
  Mat partial_matrix() const;

  int parity(std::size_t i) const { return i < o_.dim() ? 0 : 1; }
  std::string label(std::size_t i) const;
  std::vector<std::string> labels() const;
  std::vector<int> parities() const;

 private:
  int n_;
  DividedPowerAlgebra o_;
};

/// The contact map on basis monomials:
///   D_K(x^(i))   = t x^(i-1) d_t + 2 x^(i) d,
///   D_K(x^(i) t) = x^(i) d_t + x^(i) t d,
/// returned as a matrix acting on O(1,1;n) coordinates.
Mat dk_basis_operator(int n, std::size_t index);
Mat dk_operator(int n, const Vec& a);

/// Contact superalgebra K(1,1;n) realized on O(1,1;n) with bracket
/// [a, b] = D_K(a)(b) - 2 d(a) b.
StructureAlgebra build_contact_K(int n);

/// The presentation W(1;n) (+) O: even part the Witt algebra, odd part O
/// with the div action, and odd-odd bracket [x, y] = -x y d. The derived
/// variant restricts the odd part to O'.
StructureAlgebra build_contact_presentation(int n, bool derived);

struct ContactIso {
  StructureAlgebra source;  // K(1,1;n)
  StructureAlgebra target;  // W (+) O presentation
  Mat matrix;               // x^(i) -> -x^(i)d, x^(j)t -> x^(j)
};

ContactIso contact_isomorphism(int n);

struct DerivedContactReport {
  std::size_t dim = 0;
  bool dimension_ok = false;
  bool equals_w_plus_oprime = false;
  SuperSimplicityReport criterion;
  bool passed = false;
};

/// The derived algebra of the presentation: dimension 2*3^n - 1, equal to
/// W (+) O' as a subspace, and simple by the sufficient criterion.
DerivedContactReport verify_derived_contact(int n, const MeatAxeConfig& cfg = {});

struct DkCompatibilityReport {
  bool passed = true;
  std::vector<PairWitness> violations;
};

/// [D_K(a), D_K(b)] = D_K([a, b]) as operators, super-commutator on the
/// left; a pass certifies the image of D_K is closed under the bracket.
DkCompatibilityReport verify_dk_compatibility(int n);

}  // namespace gf3alg

#endif
