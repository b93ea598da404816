#include "gf3alg/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "gf3alg/errors.hpp"

namespace gf3alg {

Vec terms_to_vec(const TermList& t, std::size_t dim) {
  Vec v(dim);
  for (const Term& term : t) v.at(term.index) += term.coeff;
  return v;
}

TermList vec_to_terms(const Vec& v) {
  TermList t;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) t.push_back({i, v[i]});
  return t;
}

StructureAlgebra::StructureAlgebra(std::string name, std::vector<std::string> labels,
                                   std::vector<int> parity,
                                   std::optional<std::vector<int>> degree)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      parity_(std::move(parity)),
      degree_(std::move(degree)),
      dim_(labels_.size()),
      table_(dim_ * dim_) {
  if (parity_.size() != dim_)
    throw DimensionMismatch("StructureAlgebra: parity size mismatch");
  if (degree_ && degree_->size() != dim_)
    throw DimensionMismatch("StructureAlgebra: degree size mismatch");
}

void StructureAlgebra::set_bracket(std::size_t i, std::size_t j, TermList terms) {
  if (i >= dim_ || j >= dim_)
    throw DimensionMismatch("set_bracket: basis index out of range");
  TermList clean;
  for (const Term& t : terms) {
    if (t.index >= dim_)
      throw DimensionMismatch("set_bracket: structure constant index out of range");
    if (!t.coeff.is_zero()) clean.push_back(t);
  }
  std::sort(clean.begin(), clean.end(),
            [](const Term& a, const Term& b) { return a.index < b.index; });
  table_[i * dim_ + j] = std::move(clean);
}

const TermList& StructureAlgebra::bracket_terms(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_)
    throw DimensionMismatch("bracket_terms: basis index out of range");
  return table_[i * dim_ + j];
}

Vec StructureAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw DimensionMismatch("bracket: vector dimension mismatch");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      const Gf3 c = x[i] * y[j];
      if (c.is_zero()) continue;
      for (const Term& t : table_[i * dim_ + j]) out[t.index] += c * t.coeff;
    }
  }
  return out;
}

Vec StructureAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  return terms_to_vec(bracket_terms(i, j), dim_);
}

Mat StructureAlgebra::ad(std::size_t i) const {
  Mat m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (const Term& t : bracket_terms(i, j)) m.at(t.index, j) += t.coeff;
  return m;
}

Mat StructureAlgebra::ad(const Vec& x) const {
  if (x.size() != dim_) throw DimensionMismatch("ad: vector dimension mismatch");
  Mat m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const Term& t : table_[i * dim_ + j]) m.at(t.index, j) += x[i] * t.coeff;
  }
  return m;
}

bool StructureAlgebra::has_nonzero_bracket() const {
  for (const TermList& t : table_)
    if (!t.empty()) return true;
  return false;
}

StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b,
                            const std::string& name) {
  std::vector<std::string> labels;
  std::vector<int> parity;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    labels.push_back(a.labels()[i] + "#1");
    parity.push_back(a.parity(i));
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    labels.push_back(b.labels()[i] + "#2");
    parity.push_back(b.parity(i));
  }
  StructureAlgebra out(name, std::move(labels), std::move(parity));
  a.for_each_constant([&](std::size_t i, std::size_t j, std::size_t k, Gf3 c) {
    auto t = out.bracket_terms(i, j);
    t.push_back({k, c});
    out.set_bracket(i, j, std::move(t));
  });
  const std::size_t off = a.dim();
  b.for_each_constant([&](std::size_t i, std::size_t j, std::size_t k, Gf3 c) {
    auto t = out.bracket_terms(i + off, j + off);
    t.push_back({k + off, c});
    out.set_bracket(i + off, j + off, std::move(t));
  });
  return out;
}

SkewReport check_super_skew(const StructureAlgebra& a) {
  SkewReport rep;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Vec lhs = a.bracket_basis(i, j);
      Vec rhs = a.bracket_basis(j, i);
      const bool both_odd = a.parity(i) == 1 && a.parity(j) == 1;
      // [x,y] = -(-1)^{|x||y|}[y,x]: symmetric on odd pairs, antisymmetric else
      if (!both_odd) rhs = scaled(Gf3(-1), rhs);
      if (lhs != rhs) {
        rep.passed = false;
        rep.violations.push_back({i, j, lhs, rhs});
      }
    }
  }
  return rep;
}

JacobiReport check_super_jacobi(const StructureAlgebra& a) {
  JacobiReport rep;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Gf3 sign = (a.parity(i) == 1 && a.parity(j) == 1) ? Gf3(-1) : Gf3(1);
      const Vec bij = a.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]
        Vec lhs(n);
        for (const Term& t : a.bracket_terms(j, k))
          add_scaled(lhs, t.coeff, a.bracket_basis(i, t.index));
        Vec rhs = a.bracket(bij, unit_vec(n, k));
        for (const Term& t : a.bracket_terms(i, k))
          add_scaled(rhs, sign * t.coeff, a.bracket_basis(j, t.index));
        if (lhs != rhs) {
          rep.multilinear_passed = false;
          if (rep.violations.size() < 16) rep.violations.push_back({i, j, k, lhs, rhs});
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a.parity(i) != 1) continue;
    const Vec sq = a.bracket_basis(i, i);
    if (!is_zero(a.bracket(sq, unit_vec(n, i)))) {
      rep.cubic_passed = false;
      rep.cubic_violations.push_back(i);
    }
  }
  return rep;
}

Mat derived_algebra(const StructureAlgebra& a) {
  EchelonBasis span(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) span.insert(a.bracket_basis(i, j));
  return span.to_mat();
}

Mat ideal_closure(const StructureAlgebra& a, const Mat& seed) {
  if (seed.rows() > 0 && seed.cols() != a.dim())
    throw DimensionMismatch("ideal_closure: ambient mismatch");
  EchelonBasis span(a.dim());
  std::vector<Vec> queue;
  for (std::size_t r = 0; r < seed.rows(); ++r) {
    Vec v = seed.row_vec(r);
    if (span.insert(v)) queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vec w = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vec v = a.bracket(unit_vec(a.dim(), i), w);
      if (span.insert(v)) queue.push_back(span.reduce(v));
      Vec u = a.bracket(w, unit_vec(a.dim(), i));
      if (span.insert(u)) queue.push_back(span.reduce(u));
    }
  }
  return span.to_mat();
}

GradingReport check_grading(const StructureAlgebra& a, const std::vector<int>& degrees,
                            int modulus) {
  if (degrees.size() != a.dim())
    throw DimensionMismatch("check_grading: degree vector size mismatch");
  GradingReport rep;
  a.for_each_constant([&](std::size_t i, std::size_t j, std::size_t k, Gf3) {
    int want = degrees[i] + degrees[j];
    int got = degrees[k];
    if (modulus > 0) {
      want = ((want % modulus) + modulus) % modulus;
      got = ((got % modulus) + modulus) % modulus;
    }
    if (want != got) {
      rep.passed = false;
      rep.violations.push_back({i, j, k, got, want});
    }
  });
  return rep;
}

DerivationReport check_derivation(const StructureAlgebra& a, const Mat& d) {
  if (d.rows() != a.dim() || d.cols() != a.dim())
    throw DimensionMismatch("check_derivation: matrix dimension mismatch");
  DerivationReport rep;
  const std::size_t n = a.dim();
  std::vector<Vec> dcol(n);
  for (std::size_t i = 0; i < n; ++i) dcol[i] = d.col_vec(i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec lhs = d.apply(a.bracket_basis(i, j));
      Vec rhs = a.bracket(dcol[i], unit_vec(n, j));
      const Vec second = a.bracket(unit_vec(n, i), dcol[j]);
      for (std::size_t t = 0; t < n; ++t) rhs[t] += second[t];
      if (lhs != rhs) {
        rep.passed = false;
        if (rep.violations.size() < 16) rep.violations.push_back({i, j, lhs, rhs});
      }
    }
  }
  return rep;
}

std::optional<std::size_t> nilpotency_index(const Mat& d) {
  if (d.rows() != d.cols()) throw DimensionMismatch("nilpotency_index: square required");
  Mat p = Mat::identity(d.rows());
  for (std::size_t k = 1; k <= d.rows() || k == 1; ++k) {
    p = p * d;
    if (p.is_zero()) return k;
  }
  return std::nullopt;
}

HomReport verify_homomorphism(const StructureAlgebra& source, const StructureAlgebra& target,
                              const Mat& matrix) {
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
    throw DimensionMismatch("verify_homomorphism: matrix shape mismatch");
  HomReport rep;
  const std::size_t n = source.dim();
  std::vector<Vec> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = matrix.col_vec(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < target.dim(); ++k)
      if (!img[i][k].is_zero() && target.parity(k) != source.parity(i)) rep.parity_ok = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec lhs = matrix.apply(source.bracket_basis(i, j));
      const Vec rhs = target.bracket(img[i], img[j]);
      if (lhs != rhs) {
        rep.homomorphism = false;
        if (rep.violations.size() < 16) rep.violations.push_back({i, j, lhs, rhs});
      }
    }
  }
  rep.passed = rep.homomorphism && rep.parity_ok;
  return rep;
}

HomReport verify_isomorphism(const StructureAlgebra& source, const StructureAlgebra& target,
                             const Mat& matrix) {
  HomReport rep = verify_homomorphism(source, target, matrix);
  rep.invertible =
      source.dim() == target.dim() && rank_of(matrix) == source.dim();
  rep.passed = rep.passed && rep.invertible;
  return rep;
}

std::string pretty_combination(const std::vector<std::string>& labels, const Vec& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << " + ";
    if (v[i].value() != 1) os << v[i].value() << "*";
    os << labels.at(i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace gf3alg
