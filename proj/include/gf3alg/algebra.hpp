#ifndef GF3ALG_ALGEBRA_HPP
#define GF3ALG_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gf3alg/linalg.hpp"

namespace gf3alg {

struct Term {
  std::size_t index;
  Gf3 coeff;
  bool operator==(const Term&) const = default;
};
using TermList = std::vector<Term>;

Vec terms_to_vec(const TermList& t, std::size_t dim);
TermList vec_to_terms(const Vec& v);

/// Finite-dimensional (super)algebra presented by a labeled basis, a parity
/// per basis element, an optional integer degree, and sparse structure
/// constants [b_i, b_j] = sum_k c_{ij}^k b_k.
class StructureAlgebra {
 public:
  StructureAlgebra(std::string name, std::vector<std::string> labels,
                   std::vector<int> parity,
                   std::optional<std::vector<int>> degree = std::nullopt);

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int parity(std::size_t i) const { return parity_[i]; }
  const std::vector<int>& parities() const { return parity_; }
  const std::optional<std::vector<int>>& degrees() const { return degree_; }

  void set_bracket(std::size_t i, std::size_t j, TermList terms);
  const TermList& bracket_terms(std::size_t i, std::size_t j) const;

  /// Bilinear extension of the structure constants.
  Vec bracket(const Vec& x, const Vec& y) const;
  Vec bracket_basis(std::size_t i, std::size_t j) const;

  Mat ad(std::size_t i) const;
  Mat ad(const Vec& x) const;

  bool has_nonzero_bracket() const;

  /// Visits every nonzero constant as f(i, j, k, c), (i, j) ascending.
  template <class F>
  void for_each_constant(F&& f) const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (const Term& t : table_[i * dim_ + j]) f(i, j, t.index, t.coeff);
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<int> parity_;
  std::optional<std::vector<int>> degree_;
  std::size_t dim_;
  std::vector<TermList> table_;
};

StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b,
                            const std::string& name);

struct PairWitness {
  std::size_t i, j;
  Vec lhs, rhs;
};

struct TripleWitness {
  std::size_t i, j, k;
  Vec lhs, rhs;
};

struct SkewReport {
  bool passed = true;
  std::vector<PairWitness> violations;
};

/// [x,y] = -(-1)^{|x||y|} [y,x] on all basis pairs. With all parities zero
/// this is plain anticommutativity.
SkewReport check_super_skew(const StructureAlgebra& a);

struct JacobiReport {
  bool multilinear_passed = true;
  std::vector<TripleWitness> violations;
  /// [[x,x],x] = 0 on odd basis vectors; informational in characteristic 3,
  /// an operadic Lie superalgebra may fail it.
  bool cubic_passed = true;
  std::vector<std::size_t> cubic_violations;
};

/// Graded Jacobi identity in derivation form on all basis triples:
/// [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]].
JacobiReport check_super_jacobi(const StructureAlgebra& a);

/// Span of all brackets of basis pairs, as canonical rows.
Mat derived_algebra(const StructureAlgebra& a);

/// Smallest subspace containing the rows of seed and closed under
/// bracketing with every basis element.
Mat ideal_closure(const StructureAlgebra& a, const Mat& seed);

struct GradingViolation {
  std::size_t i, j, k;
  int lhs_degree, rhs_degree;
};

struct GradingReport {
  bool passed = true;
  std::vector<GradingViolation> violations;
};

/// c_{ij}^k != 0 implies deg_k = deg_i + deg_j; with modulus m > 0 the
/// comparison is taken mod m.
GradingReport check_grading(const StructureAlgebra& a, const std::vector<int>& degrees,
                            int modulus = 0);

struct DerivationReport {
  bool passed = true;
  std::vector<PairWitness> violations;
};

/// D[x,y] = [Dx,y] + [x,Dy] on all basis pairs.
DerivationReport check_derivation(const StructureAlgebra& a, const Mat& d);

/// Least k >= 1 with D^k = 0, or nullopt when D is not nilpotent.
std::optional<std::size_t> nilpotency_index(const Mat& d);

struct HomReport {
  bool homomorphism = true;
  bool parity_ok = true;
  bool invertible = false;   // only meaningful for verify_isomorphism
  bool passed = true;
  std::vector<PairWitness> violations;
};

/// phi([x,y]) = [phi(x), phi(y)] on all basis pairs of the source; the
/// matrix is target-dim x source-dim.
HomReport verify_homomorphism(const StructureAlgebra& source, const StructureAlgebra& target,
                              const Mat& matrix);
HomReport verify_isomorphism(const StructureAlgebra& source, const StructureAlgebra& target,
                             const Mat& matrix);

/// Human-readable combination such as "x^(0) + 2*x^(2)".
std::string pretty_combination(const std::vector<std::string>& labels, const Vec& v);

}  // namespace gf3alg

#endif
