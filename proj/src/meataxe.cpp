#include "gf3alg/meataxe.hpp"

#include <random>

#include "gf3alg/errors.hpp"

namespace gf3alg {

Mat spin(const std::vector<Mat>& ops, const Mat& seed) {
  if (seed.rows() == 0) return Mat(0, seed.cols());
  const std::size_t n = seed.cols();
  EchelonBasis span(n);
  std::vector<Vec> queue;
  for (std::size_t r = 0; r < seed.rows(); ++r) {
    Vec v = seed.row_vec(r);
    if (span.insert(v)) queue.push_back(v);
  }
  while (!queue.empty() && span.dim() < n) {
    const Vec w = std::move(queue.back());
    queue.pop_back();
    for (const Mat& op : ops) {
      Vec v = op.apply(w);
      if (span.insert(v)) queue.push_back(span.reduce(v));
    }
  }
  return span.to_mat();
}

namespace {

Mat random_algebra_element(const std::vector<Mat>& ops, std::size_t dim,
                           std::mt19937_64& rng) {
  // sum of a few random words in the generators with random nonzero scalars
  Mat acc(dim, dim);
  const int terms = 2 + static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    const int len = 1 + static_cast<int>(rng() % 3);
    Mat word = ops[rng() % ops.size()];
    for (int l = 1; l < len; ++l) word = word * ops[rng() % ops.size()];
    const Gf3 c(1 + static_cast<int>(rng() % 2));
    acc = acc + word * c;
  }
  return acc;
}

bool invariant_under(const std::vector<Mat>& ops, const Mat& subspace) {
  for (std::size_t r = 0; r < subspace.rows(); ++r) {
    const Vec v = subspace.row_vec(r);
    for (const Mat& op : ops)
      if (!subspace_contains(subspace, op.apply(v))) return false;
  }
  return true;
}

/// Enumerates representatives of the nonzero vectors of a row space up to
/// scalar: coefficient tuples whose first nonzero entry is 1.
std::vector<Vec> kernel_representatives(const Mat& basis) {
  std::vector<Vec> out;
  const std::size_t k = basis.rows();
  std::vector<int> coeff(k, 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < k && coeff[pos] == 2) coeff[pos++] = 0;
    if (pos == k) break;
    ++coeff[pos];
    std::size_t first = 0;
    while (first < k && coeff[first] == 0) ++first;
    if (first == k || coeff[first] != 1) continue;
    Vec v(basis.cols());
    for (std::size_t r = 0; r < k; ++r) add_scaled(v, Gf3(coeff[r]), basis.row_vec(r));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

IrreducibilityVerdict is_irreducible(const std::vector<Mat>& ops, std::size_t dim,
                                     const MeatAxeConfig& cfg) {
  if (ops.empty()) throw Error("is_irreducible: at least one operator required");
  for (const Mat& op : ops)
    if (op.rows() != dim || op.cols() != dim)
      throw DimensionMismatch("is_irreducible: operator dimension mismatch");
  IrreducibilityVerdict verdict;
  verdict.seed = cfg.seed;
  if (dim == 0) throw Error("is_irreducible: zero module");
  if (dim == 1) {
    verdict.irreducible = true;
    return verdict;
  }

  if (dim <= cfg.prepass_dim_limit) {
    for (std::size_t i = 0; i < dim; ++i) {
      Mat s = spin(ops, Mat::from_row(unit_vec(dim, i)));
      if (s.rows() < dim) {
        verdict.witness = std::move(s);
        return verdict;
      }
    }
  }

  std::vector<Mat> ops_t;
  ops_t.reserve(ops.size());
  for (const Mat& op : ops) ops_t.push_back(op.transpose());

  std::mt19937_64 rng(cfg.seed);
  for (int draw = 0; draw < cfg.max_draws; ++draw) {
    verdict.draws = draw + 1;
    const Mat theta = random_algebra_element(ops, dim, rng);
    const Mat ker = kernel(theta);
    if (ker.rows() == 0 || ker.rows() > static_cast<std::size_t>(cfg.nullity_cap)) continue;
    // Norton: with a singular algebra element in hand, spinning every kernel
    // vector and every transpose-kernel vector decides the module.
    for (const Vec& v : kernel_representatives(ker)) {
      Mat s = spin(ops, Mat::from_row(v));
      if (s.rows() < dim) {
        if (!invariant_under(ops, s)) throw Error("is_irreducible: spin not invariant");
        verdict.witness = std::move(s);
        return verdict;
      }
    }
    const Mat ker_t = kernel(theta.transpose());
    for (const Vec& w : kernel_representatives(ker_t)) {
      Mat s = spin(ops_t, Mat::from_row(w));
      if (s.rows() < dim) {
        Mat witness = kernel(s);  // annihilator of a transpose-invariant subspace
        if (witness.rows() == 0 || witness.rows() >= dim || !invariant_under(ops, witness))
          throw Error("is_irreducible: transpose witness invalid");
        verdict.witness = std::move(witness);
        return verdict;
      }
    }
    verdict.irreducible = true;
    return verdict;
  }
  throw RetriesExhausted("is_irreducible: no usable singular element found");
}

std::vector<std::size_t> lie_generators(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::size_t> chosen;
  EchelonBasis closure(n);
  while (closure.dim() < n) {
    std::size_t next = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!closure.contains(unit_vec(n, i))) {
        next = i;
        break;
      }
    }
    if (next == n) break;
    chosen.push_back(next);
    // left-normed brackets: closure = spin of span(chosen) under ad(chosen)
    std::vector<Mat> ad_ops;
    std::vector<Vec> seeds;
    for (std::size_t g : chosen) {
      ad_ops.push_back(a.ad(g));
      seeds.push_back(unit_vec(n, g));
    }
    closure = EchelonBasis(spin(ad_ops, Mat::from_rows(seeds, n)));
  }
  return chosen;
}

SimplicityVerdict check_simple(const StructureAlgebra& a, const MeatAxeConfig& cfg) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.parity(i) != 0) throw Error("check_simple: expects an ungraded Lie algebra");
  SimplicityVerdict out;
  out.seed = cfg.seed;
  if (a.dim() == 0 || !a.has_nonzero_bracket()) return out;  // abelian, not simple
  const auto gens = lie_generators(a);
  std::vector<Mat> ops;
  for (std::size_t g : gens) ops.push_back(a.ad(g));
  const auto verdict = is_irreducible(ops, a.dim(), cfg);
  if (verdict.irreducible) {
    out.simple = true;
    return out;
  }
  // invariance under generating ad operators makes the witness an ideal;
  // cross-check against the full basis anyway
  for (std::size_t r = 0; r < verdict.witness.rows(); ++r) {
    const Vec v = verdict.witness.row_vec(r);
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!subspace_contains(verdict.witness, a.bracket(unit_vec(a.dim(), i), v)))
        throw Error("check_simple: witness is not an ideal");
  }
  out.ideal_witness = verdict.witness;
  return out;
}

SuperSimplicityReport check_super_simple_criterion(const StructureAlgebra& a,
                                                   const MeatAxeConfig& cfg) {
  SuperSimplicityReport rep;
  rep.seed = cfg.seed;
  const std::size_t n = a.dim();
  std::vector<std::size_t> even_idx, odd_idx;
  for (std::size_t i = 0; i < n; ++i)
    (a.parity(i) == 0 ? even_idx : odd_idx).push_back(i);
  if (even_idx.empty() || odd_idx.empty())
    throw Error("check_super_simple_criterion: needs nontrivial parity");

  // (i) even part is a simple Lie algebra
  std::vector<std::string> elabels;
  std::vector<int> eparity(even_idx.size(), 0);
  for (std::size_t i : even_idx) elabels.push_back(a.labels()[i]);
  StructureAlgebra even(a.name() + ".even", elabels, eparity);
  std::vector<std::size_t> pos(n, n);
  for (std::size_t p = 0; p < even_idx.size(); ++p) pos[even_idx[p]] = p;
  for (std::size_t p = 0; p < even_idx.size(); ++p) {
    for (std::size_t q = 0; q < even_idx.size(); ++q) {
      TermList terms;
      for (const Term& t : a.bracket_terms(even_idx[p], even_idx[q])) {
        if (pos[t.index] == n)
          throw Error("check_super_simple_criterion: even part not closed");
        terms.push_back({pos[t.index], t.coeff});
      }
      even.set_bracket(p, q, std::move(terms));
    }
  }
  auto sv = check_simple(even, cfg);
  rep.even_simple = sv.simple;
  if (sv.ideal_witness) {
    Mat w(sv.ideal_witness->rows(), n);
    for (std::size_t r = 0; r < w.rows(); ++r)
      for (std::size_t c = 0; c < even_idx.size(); ++c)
        w.at(r, even_idx[c]) = sv.ideal_witness->at(r, c);
    rep.even_witness = canonical_rows(w);
  }

  // (ii) odd part irreducible under the even part
  const auto egens = lie_generators(even);
  std::vector<Mat> odd_ops;
  for (std::size_t g : egens) {
    Mat op(odd_idx.size(), odd_idx.size());
    for (std::size_t q = 0; q < odd_idx.size(); ++q) {
      const Vec img = a.bracket_basis(even_idx[g], odd_idx[q]);
      for (std::size_t p = 0; p < odd_idx.size(); ++p) op.at(p, q) = img[odd_idx[p]];
      for (std::size_t k = 0; k < n; ++k)
        if (!img[k].is_zero() && a.parity(k) == 0)
          throw Error("check_super_simple_criterion: [even, odd] leaves the odd part");
    }
    odd_ops.push_back(std::move(op));
  }
  const auto odd_verdict = is_irreducible(odd_ops, odd_idx.size(), cfg);
  rep.odd_irreducible = odd_verdict.irreducible;
  if (!odd_verdict.irreducible) {
    Mat w(odd_verdict.witness.rows(), n);
    for (std::size_t r = 0; r < w.rows(); ++r)
      for (std::size_t c = 0; c < odd_idx.size(); ++c)
        w.at(r, odd_idx[c]) = odd_verdict.witness.at(r, c);
    rep.odd_witness = canonical_rows(w);
  }

  // (iii) [odd, odd] != 0
  for (std::size_t p = 0; p < odd_idx.size() && !rep.odd_odd_nonzero; ++p)
    for (std::size_t q = 0; q < odd_idx.size(); ++q)
      if (!a.bracket_terms(odd_idx[p], odd_idx[q]).empty()) {
        rep.odd_odd_nonzero = true;
        break;
      }

  rep.passed = rep.even_simple && rep.odd_irreducible && rep.odd_odd_nonzero;
  return rep;
}

}  // namespace gf3alg
