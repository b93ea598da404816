#ifndef GF3ALG_REP_ALPHA3_HPP
#define GF3ALG_REP_ALPHA3_HPP

#include "gf3alg/algebra.hpp"
#include "gf3alg/linalg.hpp"

namespace gf3alg {

struct JordanType {
  std::size_t m1 = 0, m2 = 0, m3 = 0;  // multiplicities of blocks 1, 2, 3
  bool operator==(const JordanType&) const = default;
};

/// A space with a distinguished endomorphism f satisfying f^3 = 0.
class RepAlpha3Object {
 public:
  explicit RepAlpha3Object(Mat f);  // throws CubeNotZero

  std::size_t dim() const { return f_.rows(); }
  const Mat& endo() const { return f_; }

 private:
  Mat f_;
};

/// Block multiplicities from ranks: m3 = rank f^2, m2 = rank f - 2 rank f^2,
/// m1 = dim - 2 rank f + rank f^2.
JordanType jordan_type(const RepAlpha3Object& obj);

/// Kronecker-product space with endomorphism f (x) 1 + 1 (x) f.
RepAlpha3Object tensor(const RepAlpha3Object& a, const RepAlpha3Object& b);
RepAlpha3Object rep_direct_sum(const RepAlpha3Object& a, const RepAlpha3Object& b);

/// Nilpotent single Jordan block of the given size (f e_i = e_{i+1}).
RepAlpha3Object indecomposable(std::size_t size);

/// The swap a (x) b -> b (x) a on Kronecker coordinates.
Mat tensor_swap(std::size_t dim_a, std::size_t dim_b);

struct BraidingReport {
  bool annihilated = false;    // f(e1 (x) e2 - e2 (x) e1) = 0
  bool not_in_image = false;   // the antisymmetric vector avoids im f
  bool negated_by_swap = false;
  bool passed = false;
};

/// In (2) (x) (2): the antisymmetric vector spans the surviving line and the
/// swap acts on it by -1.
BraidingReport braiding_sign_check();

/// ker d / (ker d ∩ im d): the classes surviving as even elements.
Subquotient even_subquotient(const Mat& d);
/// ker d^2 / (ker d + (im d ∩ ker d^2)): the classes surviving as odd
/// elements, represented by top vectors of the 2-blocks.
Subquotient odd_subquotient(const Mat& d);

struct SemisimplifiedAlgebra {
  StructureAlgebra super;  // even classes first, then odd classes
  Subquotient even_part;
  Subquotient odd_part;
  Mat derivation;
};

/// Sends a Lie algebra with a derivation d, d^3 = 0, to its image under the
/// semisimplification: even and odd subquotients as above, brackets
///   even,even -> pi_0([x, y])
///   even,odd  -> pi_1([x, y])
///   odd,odd   -> pi_0([d x, y] - [x, d y]).
SemisimplifiedAlgebra semisimplify(const StructureAlgebra& lie, const Mat& d);
/// Same with caller-chosen representatives (rows); used to confirm the
/// result does not depend on the choice.
SemisimplifiedAlgebra semisimplify_with(const StructureAlgebra& lie, const Mat& d,
                                        const Mat& even_reps, const Mat& odd_reps);

struct FrankSemisimplificationReport {
  JordanType type;
  std::size_t even_dim = 0, odd_dim = 0;
  HomReport iso;
  bool passed = false;
};

/// The semisimplified Frank algebra is isomorphic to the contact
/// presentation via class(Id (x) w) -> w, class(v (x) o) -> o.
FrankSemisimplificationReport verify_frank_semisimplification(int n);

}  // namespace gf3alg

#endif
