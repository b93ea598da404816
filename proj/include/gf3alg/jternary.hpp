#ifndef GF3ALG_JTERNARY_HPP
#define GF3ALG_JTERNARY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gf3alg/algebra.hpp"
#include "gf3alg/linalg.hpp"
#include "gf3alg/meataxe.hpp"

namespace gf3alg {

/// A space with a trilinear product given by sparse 4-index constants
/// b_i b_j b_k = sum_l t_{ijk}^l b_l.
class JTernaryAlgebra {
 public:
  JTernaryAlgebra(std::string name, std::vector<std::string> labels);

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }

  void set_product(std::size_t i, std::size_t j, std::size_t k, TermList terms);
  const TermList& product_terms(std::size_t i, std::size_t j, std::size_t k) const;
  Vec product_basis(std::size_t i, std::size_t j, std::size_t k) const;
  Vec product(const Vec& x, const Vec& y, const Vec& z) const;

  Mat op_outer_left(std::size_t i, std::size_t j) const;   // z -> b_i b_j z
  Mat op_middle(std::size_t i, std::size_t j) const;       // z -> b_i z b_j
  Mat op_outer_right(std::size_t i, std::size_t j) const;  // z -> z b_i b_j

  bool has_nonzero_product() const;

  template <class F>
  void for_each_constant(F&& f) const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          for (const Term& t : table_[(i * dim_ + j) * dim_ + k]) f(i, j, k, t.index, t.coeff);
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::size_t dim_;
  std::vector<TermList> table_;
};

/// O(1;n) with the trilinear product L_{f,g} h = f g d(h) - h g d(f).
JTernaryAlgebra build_O_jternary(int n);

JTernaryAlgebra jternary_direct_sum(const JTernaryAlgebra& a, const JTernaryAlgebra& b,
                                    const std::string& name);

struct AxiomMode {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000000;
};

struct AxiomReport {
  bool axiom1 = true;  // xy(uvw) - uv(xyw) = (xyu)vw + u(yxv)w
  bool axiom2 = true;  // xyz - zyx = zxy - xzy
  std::vector<std::vector<std::size_t>> axiom1_witnesses;
  std::vector<std::vector<std::size_t>> axiom2_witnesses;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;  // tuples checked in randomized mode
  bool passed = true;
};

/// Axiom 2 over all basis triples; axiom 1 over all basis 6-tuples when
/// dim <= 9, otherwise over seeded random 6-tuples.
AxiomReport check_axioms(const JTernaryAlgebra& x, const AxiomMode& mode = {});

/// The operator z -> z y x - x y z.
Mat angle_operator(const JTernaryAlgebra& x, const Vec& a, const Vec& b);

struct AngleFormulaReport {
  bool passed = true;
  std::vector<TripleWitness> violations;
};

/// For the O-case: <f, h> g = g (f d(h) - h d(f)) on all basis triples.
AngleFormulaReport verify_angle_formula(int n);

/// The Jordan algebra J spanned by the operators <x, y>, with product
/// (a . b) = 2 (a b + b a) (division by 2 is multiplication by 2).
struct JordanAlgebraData {
  std::size_t ambient_dim = 0;           // dim of the underlying ternary space
  std::size_t dim = 0;                   // dim of J
  Mat basis_vectorized;                  // echelon rows, each an operator
  std::vector<Mat> basis_ops;            // the same operators as matrices
  std::vector<TermList> table;           // product constants, dim*dim

  Vec product(const Vec& a, const Vec& b) const;
  Vec product_basis(std::size_t i, std::size_t j) const;
  Mat mult_operator(std::size_t i) const;   // a -> b_i . a
  Mat op_of(const Vec& coords) const;       // operator on the ternary space
};

JordanAlgebraData build_jordan_J(const JTernaryAlgebra& x);

struct JordanIdentityReport {
  bool commutative = true;
  bool jordan_identity = true;  // (a.b).(a.a) = a.(b.(a.a)) on basis pairs
  std::vector<PairWitness> violations;
  bool passed = true;
};

JordanIdentityReport check_jordan_identity(const JordanAlgebraData& j);

struct TernarySimplicityVerdict {
  bool simple = false;
  std::optional<Mat> ideal_witness;
  std::uint64_t seed = 0;
};

/// Simple iff the product is nonzero and no proper nonzero subspace is
/// invariant under all position operators.
TernarySimplicityVerdict check_jternary_simple(const JTernaryAlgebra& x,
                                               const MeatAxeConfig& cfg = {});

struct JordanSimplicityVerdict {
  bool simple = false;
  std::optional<Mat> ideal_witness;  // maximal proper ideal containing the find
  std::uint64_t seed = 0;
};

JordanSimplicityVerdict check_jordan_simple(const JordanAlgebraData& j,
                                            const MeatAxeConfig& cfg = {});

/// Searches for nonzero b with U_b = 0, U_b a = 2 b.(b.a) - (b.b).a: basis
/// vectors first (descending index, so filtered algebras report the deepest
/// monomial), all vectors when dim <= 4, else seeded random draws.
std::optional<Vec> check_jordan_degenerate(const JordanAlgebraData& j,
                                           std::uint64_t seed = 0,
                                           std::uint64_t samples = 10000);

struct JordanIdentificationReport {
  bool dim_ok = false;                // dim J = 3^n
  bool all_multiplications = false;   // every element acts as R_b: a -> a b
  bool bijective = false;
  bool product_preserving = false;
  JordanIdentityReport identity;
  bool passed = false;
};

/// For the O-case: identifies J with (O, .) via R_b -> b and verifies the
/// map is a Jordan-algebra isomorphism; over a commutative base the dotted
/// product coincides with the divided power product.
JordanIdentificationReport verify_jordan_O_identification(int n);

struct FormReport {
  bool nondegenerate = false;
  std::size_t left_radical_dim = 0;
  std::size_t right_radical_dim = 0;
  std::optional<Vec> radical_witness;
};

/// Left radical {x : <x, b_j> = 0 for all j} by linear solve; the right
/// radical is computed as a cross-check.
FormReport check_form_nondegenerate(const JTernaryAlgebra& x);

struct FrankLinkReport {
  bool triple_u = true;       // [[u*f, v*g], u*h] = u * L_{f,g} h
  bool triple_v = true;       // [[v*f, u*g], v*h] = -v * L_{f,g} h
  bool operator_identity = true;  // [L_{x,y}, L_{a,b}] = L_{(L_{x,y}a),b} + L_{a,(L_{y,x}b)}
  std::vector<std::vector<std::size_t>> witnesses;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  bool passed = true;
};

/// The three identities tying the ternary product to the Frank bracket;
/// exhaustive for n <= 2, the operator identity is sampled for n = 3.
FrankLinkReport verify_frank_link(int n, std::uint64_t seed = 0,
                                  std::uint64_t samples = 10000);

struct HeinReport {
  AxiomReport axioms;
  TernarySimplicityVerdict ternary_simple;
  FormReport form;
  bool jordan_built = false;
  std::size_t jordan_dim = 0;
  JordanSimplicityVerdict jordan_simple;
  std::size_t ideal_witness_dim = 0;
  std::optional<Vec> degeneracy_witness;
  bool counterexample_established = false;
  std::string conclusion;
};

/// Runs the whole pipeline on any J-ternary algebra: axioms, ternary
/// simplicity, form nondegeneracy, Jordan non-simplicity with an ideal
/// witness, and a degeneracy witness.
HeinReport hein_pipeline(const JTernaryAlgebra& x, const MeatAxeConfig& cfg = {},
                         const AxiomMode& mode = {});

/// The pipeline on the O-case; when every step lands as expected the
/// conjunction contradicts the classical simplicity criterion for
/// J-ternary algebras (simple iff J simple and the form nondegenerate).
HeinReport hein_counterexample(int n, const MeatAxeConfig& cfg = {},
                               const AxiomMode& mode = {});

}  // namespace gf3alg

#endif
