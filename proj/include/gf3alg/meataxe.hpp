#ifndef GF3ALG_MEATAXE_HPP
#define GF3ALG_MEATAXE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gf3alg/algebra.hpp"
#include "gf3alg/linalg.hpp"

namespace gf3alg {

struct MeatAxeConfig {
  std::uint64_t seed = 0;
  int max_draws = 64;
  /// Kernel vectors are enumerated up to scalar; redraw when the nullity
  /// of the random element exceeds this.
  int nullity_cap = 4;
  /// Spin every standard basis vector first when the module is small;
  /// catches reducible modules deterministically.
  std::size_t prepass_dim_limit = 64;
};

struct IrreducibilityVerdict {
  bool irreducible = false;
  /// Proper nonzero invariant subspace (canonical rows) when reducible.
  Mat witness;
  std::uint64_t seed = 0;
  int draws = 0;
};

/// Smallest subspace containing the rows of seed and invariant under all
/// operators.
Mat spin(const std::vector<Mat>& ops, const Mat& seed);

/// Randomized MeatAxe with Norton certification. For each random element
/// of the generated operator algebra with small nonzero nullity, every
/// kernel vector (up to scalar) is spun up, and likewise for the transposed
/// operators; a full sweep either certifies irreducibility or exhibits an
/// invariant subspace. Verdicts are never wrong; RetriesExhausted signals
/// an inconclusive run.
IrreducibilityVerdict is_irreducible(const std::vector<Mat>& ops, std::size_t dim,
                                     const MeatAxeConfig& cfg = {});

struct SimplicityVerdict {
  bool simple = false;
  std::optional<Mat> ideal_witness;
  std::uint64_t seed = 0;
};

/// A Lie algebra is simple iff it is nonabelian and its adjoint module is
/// irreducible (an ideal is exactly an ad-invariant subspace).
SimplicityVerdict check_simple(const StructureAlgebra& a, const MeatAxeConfig& cfg = {});

struct SuperSimplicityReport {
  bool even_simple = false;
  bool odd_irreducible = false;
  bool odd_odd_nonzero = false;
  bool passed = false;
  std::optional<Mat> even_witness;  // ambient coordinates
  std::optional<Mat> odd_witness;   // ambient coordinates
  std::uint64_t seed = 0;
};

/// Sufficient criterion for simplicity of a Lie superalgebra: the even part
/// is a simple Lie algebra, the odd part is an irreducible even-part module,
/// and [odd, odd] != 0.
SuperSimplicityReport check_super_simple_criterion(const StructureAlgebra& a,
                                                   const MeatAxeConfig& cfg = {});

/// Greedily chosen basis indices that generate a as a Lie algebra; any
/// subspace invariant under their ad operators is an ideal.
std::vector<std::size_t> lie_generators(const StructureAlgebra& a);

}  // namespace gf3alg

#endif
