#include "gf3alg/witt_contact.hpp"

#include "gf3alg/errors.hpp"

namespace gf3alg {

namespace {

void require_n(int n) {
  if (n < 1 || n > 3) throw Error("supported range is 1 <= n <= 3");
}

}  // namespace

StructureAlgebra build_witt(int n) {
  require_n(n);
  const DividedPowerAlgebra o(n);
  const std::size_t dim = o.dim();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back(o.label(i) + "d");
  StructureAlgebra w("W(1;" + std::to_string(n) + ")", labels, std::vector<int>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const Vec fi = unit_vec(dim, i), fj = unit_vec(dim, j);
      Vec coeff = o.multiply(fi, o.partial(fj));
      const Vec second = o.multiply(fj, o.partial(fi));
      for (std::size_t k = 0; k < dim; ++k) coeff[k] -= second[k];
      w.set_bracket(i, j, vec_to_terms(coeff));
    }
  }
  return w;
}

SuperO::SuperO(int n) : n_(n), o_(n) {}

Vec SuperO::multiply(const Vec& a, const Vec& b) const {
  const std::size_t m = o_.dim();
  if (a.size() != dim() || b.size() != dim())
    throw DimensionMismatch("SuperO::multiply: size mismatch");
  const Vec a0(a.begin(), a.begin() + m), a1(a.begin() + m, a.end());
  const Vec b0(b.begin(), b.begin() + m), b1(b.begin() + m, b.end());
  const Vec even = o_.multiply(a0, b0);
  Vec odd = o_.multiply(a0, b1);
  const Vec odd2 = o_.multiply(a1, b0);  // t is central and t^2 = 0
  Vec out(dim());
  for (std::size_t i = 0; i < m; ++i) {
    out[i] = even[i];
    out[m + i] = odd[i] + odd2[i];
  }
  return out;
}

Vec SuperO::partial(const Vec& a) const {
  const std::size_t m = o_.dim();
  Vec out(dim());
  for (std::size_t i = 1; i < m; ++i) {
    out[i - 1] = a[i];
    out[m + i - 1] = a[m + i];
  }
  return out;
}

Mat SuperO::partial_matrix() const {
  const std::size_t m = o_.dim();
  Mat p(dim(), dim());
  for (std::size_t i = 1; i < m; ++i) {
    p.at(i - 1, i) = Gf3(1);
    p.at(m + i - 1, m + i) = Gf3(1);
  }
  return p;
}

std::string SuperO::label(std::size_t i) const {
  const std::size_t m = o_.dim();
  return i < m ? o_.label(i) : o_.label(i - m) + "t";
}

std::vector<std::string> SuperO::labels() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(label(i));
  return out;
}

std::vector<int> SuperO::parities() const {
  std::vector<int> p(dim(), 0);
  for (std::size_t i = o_.dim(); i < dim(); ++i) p[i] = 1;
  return p;
}

Mat dk_basis_operator(int n, std::size_t index) {
  require_n(n);
  const DividedPowerAlgebra o(n);
  const std::size_t m = o.dim();
  Mat op(2 * m, 2 * m);
  if (index < m) {
    const std::size_t i = index;
    // t x^(i-1) d_t: x^(j)t -> x^(i-1) x^(j) t, vanishes on the even part
    if (i >= 1) {
      for (std::size_t j = 0; j < m; ++j)
        for (const Term& t : o.multiply(i - 1, j)) op.at(m + t.index, m + j) += t.coeff;
    }
    // 2 x^(i) d on both parities
    for (std::size_t j = 1; j < m; ++j)
      for (const Term& t : o.multiply(i, j - 1)) {
        op.at(t.index, j) += Gf3(2) * t.coeff;
        op.at(m + t.index, m + j) += Gf3(2) * t.coeff;
      }
  } else {
    const std::size_t i = index - m;
    // x^(i) d_t: x^(j)t -> x^(i) x^(j)
    for (std::size_t j = 0; j < m; ++j)
      for (const Term& t : o.multiply(i, j)) op.at(t.index, m + j) += t.coeff;
    // x^(i) t d: x^(j) -> x^(i) x^(j-1) t; kills the odd part (t^2 = 0)
    for (std::size_t j = 1; j < m; ++j)
      for (const Term& t : o.multiply(i, j - 1)) op.at(m + t.index, j) += t.coeff;
  }
  return op;
}

Mat dk_operator(int n, const Vec& a) {
  const DividedPowerAlgebra o(n);
  const std::size_t dim = 2 * o.dim();
  if (a.size() != dim) throw DimensionMismatch("dk_operator: size mismatch");
  Mat acc(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    if (!a[i].is_zero()) acc = acc + dk_basis_operator(n, i) * a[i];
  return acc;
}

StructureAlgebra build_contact_K(int n) {
  require_n(n);
  const SuperO so(n);
  const std::size_t dim = so.dim();
  StructureAlgebra k("K(1,1;" + std::to_string(n) + ")", so.labels(), so.parities());
  std::vector<Mat> dk;
  for (std::size_t i = 0; i < dim; ++i) dk.push_back(dk_basis_operator(n, i));
  for (std::size_t i = 0; i < dim; ++i) {
    const Vec da = so.partial(unit_vec(dim, i));
    for (std::size_t j = 0; j < dim; ++j) {
      Vec v = dk[i].apply(unit_vec(dim, j));
      const Vec corr = so.multiply(da, unit_vec(dim, j));
      for (std::size_t t = 0; t < dim; ++t) v[t] -= Gf3(2) * corr[t];
      k.set_bracket(i, j, vec_to_terms(v));
    }
  }
  return k;
}

StructureAlgebra build_contact_presentation(int n, bool derived) {
  require_n(n);
  const DividedPowerAlgebra o(n);
  const std::size_t m = o.dim();
  const std::size_t odd = derived ? m - 1 : m;
  std::vector<std::string> labels;
  std::vector<int> parity;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(o.label(i) + "d");
    parity.push_back(0);
  }
  for (std::size_t j = 0; j < odd; ++j) {
    labels.push_back(o.label(j));
    parity.push_back(1);
  }
  std::string name = derived ? "K(1,1;" + std::to_string(n) + ")^(1)"
                             : "W+O(1;" + std::to_string(n) + ")";
  StructureAlgebra p(name, labels, parity);
  const StructureAlgebra w = build_witt(n);
  const std::size_t dim = m + odd;
  auto clip = [&](const Vec& full, std::size_t offset) {
    // embed an O-coordinate vector into the odd block, checking truncation
    Vec out(dim);
    for (std::size_t t = 0; t < m; ++t) {
      if (full[t].is_zero()) continue;
      if (t >= odd) throw Error("contact presentation: bracket leaves the odd part");
      out[offset + t] = full[t];
    }
    return out;
  };
  for (std::size_t i = 0; i < m; ++i) {
    // even-even: Witt bracket
    for (std::size_t j = 0; j < m; ++j) p.set_bracket(i, j, w.bracket_terms(i, j));
    // even-odd: div action, odd-even by super-skew
    for (std::size_t j = 0; j < odd; ++j) {
      const Vec img = o.div_action(unit_vec(m, i), unit_vec(m, j));
      const Vec embedded = clip(img, m);
      p.set_bracket(i, m + j, vec_to_terms(embedded));
      p.set_bracket(m + j, i, vec_to_terms(scaled(Gf3(-1), embedded)));
    }
  }
  // odd-odd: [x, y] = -x y d, symmetric
  for (std::size_t i = 0; i < odd; ++i) {
    for (std::size_t j = 0; j < odd; ++j) {
      TermList terms;
      for (const Term& t : o.multiply(i, j)) terms.push_back({t.index, -t.coeff});
      p.set_bracket(m + i, m + j, std::move(terms));
    }
  }
  return p;
}

ContactIso contact_isomorphism(int n) {
  require_n(n);
  StructureAlgebra k = build_contact_K(n);
  StructureAlgebra p = build_contact_presentation(n, false);
  const std::size_t m = DividedPowerAlgebra(n).dim();
  Mat phi(p.dim(), k.dim());
  for (std::size_t i = 0; i < m; ++i) phi.at(i, i) = Gf3(-1);        // x^(i) -> -x^(i)d
  for (std::size_t j = 0; j < m; ++j) phi.at(m + j, m + j) = Gf3(1); // x^(j)t -> x^(j)
  return {std::move(k), std::move(p), std::move(phi)};
}

DerivedContactReport verify_derived_contact(int n, const MeatAxeConfig& cfg) {
  require_n(n);
  DerivedContactReport rep;
  const std::size_t m = DividedPowerAlgebra(n).dim();
  const StructureAlgebra full = build_contact_presentation(n, false);
  const Mat derived = derived_algebra(full);
  rep.dim = derived.rows();
  rep.dimension_ok = rep.dim == 2 * m - 1;
  Mat expected(2 * m - 1, 2 * m);
  for (std::size_t i = 0; i < m; ++i) expected.at(i, i) = Gf3(1);
  for (std::size_t j = 0; j + 1 < m; ++j) expected.at(m + j, m + j) = Gf3(1);
  rep.equals_w_plus_oprime = subspace_equal(derived, expected);
  rep.criterion = check_super_simple_criterion(build_contact_presentation(n, true), cfg);
  rep.passed = rep.dimension_ok && rep.equals_w_plus_oprime && rep.criterion.passed;
  return rep;
}

DkCompatibilityReport verify_dk_compatibility(int n) {
  require_n(n);
  DkCompatibilityReport rep;
  const SuperO so(n);
  const std::size_t dim = so.dim();
  const StructureAlgebra k = build_contact_K(n);
  std::vector<Mat> dk;
  for (std::size_t i = 0; i < dim; ++i) dk.push_back(dk_basis_operator(n, i));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const Gf3 sign = (so.parity(i) == 1 && so.parity(j) == 1) ? Gf3(-1) : Gf3(1);
      const Mat lhs = dk[i] * dk[j] - (dk[j] * dk[i]) * sign;
      const Mat rhs = dk_operator(n, k.bracket_basis(i, j));
      if (!(lhs == rhs)) {
        rep.passed = false;
        if (rep.violations.size() < 8)
          rep.violations.push_back({i, j, lhs.col_vec(0), rhs.col_vec(0)});
      }
    }
  }
  return rep;
}

}  // namespace gf3alg
