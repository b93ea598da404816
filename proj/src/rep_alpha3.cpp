#include "gf3alg/rep_alpha3.hpp"

#include "gf3alg/errors.hpp"
#include "gf3alg/frank.hpp"
#include "gf3alg/witt_contact.hpp"

namespace gf3alg {

RepAlpha3Object::RepAlpha3Object(Mat f) : f_(std::move(f)) {
  if (f_.rows() != f_.cols()) throw DimensionMismatch("RepAlpha3Object: square matrix required");
  if (!f_.pow(3).is_zero()) throw CubeNotZero("RepAlpha3Object: f^3 != 0");
}

JordanType jordan_type(const RepAlpha3Object& obj) {
  const std::size_t r1 = rank_of(obj.endo());
  const std::size_t r2 = rank_of(obj.endo() * obj.endo());
  const std::size_t dim = obj.dim();
  if (r1 < 2 * r2 || dim + r2 < 2 * r1)
    throw Error("jordan_type: inconsistent ranks");  // impossible for f^3 = 0
  return {dim - 2 * r1 + r2, r1 - 2 * r2, r2};
}

RepAlpha3Object tensor(const RepAlpha3Object& a, const RepAlpha3Object& b) {
  const std::size_t da = a.dim(), db = b.dim();
  Mat f(da * db, da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      const std::size_t col = i * db + j;
      for (std::size_t k = 0; k < da; ++k) {
        const Gf3 c = a.endo().at(k, i);
        if (!c.is_zero()) f.at(k * db + j, col) += c;
      }
      for (std::size_t k = 0; k < db; ++k) {
        const Gf3 c = b.endo().at(k, j);
        if (!c.is_zero()) f.at(i * db + k, col) += c;
      }
    }
  return RepAlpha3Object(std::move(f));
}

RepAlpha3Object rep_direct_sum(const RepAlpha3Object& a, const RepAlpha3Object& b) {
  const std::size_t da = a.dim(), db = b.dim();
  Mat f(da + db, da + db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) f.at(i, j) = a.endo().at(i, j);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) f.at(da + i, da + j) = b.endo().at(i, j);
  return RepAlpha3Object(std::move(f));
}

RepAlpha3Object indecomposable(std::size_t size) {
  if (size < 1 || size > 3) throw Error("indecomposable: size must be 1, 2 or 3");
  Mat f(size, size);
  for (std::size_t i = 0; i + 1 < size; ++i) f.at(i + 1, i) = Gf3(1);
  return RepAlpha3Object(std::move(f));
}

Mat tensor_swap(std::size_t dim_a, std::size_t dim_b) {
  Mat s(dim_a * dim_b, dim_a * dim_b);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_b; ++j) s.at(j * dim_a + i, i * dim_b + j) = Gf3(1);
  return s;
}

BraidingReport braiding_sign_check() {
  BraidingReport rep;
  const RepAlpha3Object two = indecomposable(2);
  const RepAlpha3Object sq = tensor(two, two);
  // e1 (x) e2 - e2 (x) e1 in Kronecker coordinates (indices 1 and 2)
  Vec anti(4);
  anti[1] = Gf3(1);
  anti[2] = Gf3(-1);
  rep.annihilated = is_zero(sq.endo().apply(anti));
  rep.not_in_image = !subspace_contains(image(sq.endo()), anti);
  rep.negated_by_swap = tensor_swap(2, 2).apply(anti) == scaled(Gf3(-1), anti);
  rep.passed = rep.annihilated && rep.not_in_image && rep.negated_by_swap;
  return rep;
}

Subquotient even_subquotient(const Mat& d) {
  const Mat ker = kernel(d);
  const Mat im = image(d);
  return Subquotient(ker, subspace_intersection(ker, im));
}

Subquotient odd_subquotient(const Mat& d) {
  const Mat ker = kernel(d);
  const Mat ker2 = kernel(d * d);
  const Mat im = image(d);
  return Subquotient(ker2, subspace_sum(ker, subspace_intersection(im, ker2)));
}

namespace {

SemisimplifiedAlgebra semisimplify_impl(const StructureAlgebra& lie, const Mat& d,
                                        Subquotient even, Subquotient odd) {
  const std::size_t m1 = even.dim(), m2 = odd.dim();
  std::vector<std::string> labels;
  std::vector<int> parity;
  for (std::size_t i = 0; i < m1; ++i) {
    labels.push_back("[" + pretty_combination(lie.labels(), even.representatives().row_vec(i)) + "]");
    parity.push_back(0);
  }
  for (std::size_t j = 0; j < m2; ++j) {
    labels.push_back("[" + pretty_combination(lie.labels(), odd.representatives().row_vec(j)) + "]");
    parity.push_back(1);
  }
  StructureAlgebra super("ss(" + lie.name() + ")", labels, parity);

  std::vector<Vec> er, orp, dor;  // even reps, odd reps, d(odd reps)
  for (std::size_t i = 0; i < m1; ++i) er.push_back(even.representatives().row_vec(i));
  for (std::size_t j = 0; j < m2; ++j) {
    orp.push_back(odd.representatives().row_vec(j));
    dor.push_back(d.apply(orp.back()));
  }

  auto to_terms = [](const Vec& coords, std::size_t offset) {
    TermList out;
    for (std::size_t t = 0; t < coords.size(); ++t)
      if (!coords[t].is_zero()) out.push_back({t + offset, coords[t]});
    return out;
  };

  for (std::size_t i = 0; i < m1; ++i)
    for (std::size_t j = 0; j < m1; ++j)
      super.set_bracket(i, j, to_terms(even.project(lie.bracket(er[i], er[j])), 0));
  for (std::size_t i = 0; i < m1; ++i)
    for (std::size_t j = 0; j < m2; ++j) {
      super.set_bracket(i, m1 + j, to_terms(odd.project(lie.bracket(er[i], orp[j])), m1));
      super.set_bracket(m1 + j, i, to_terms(odd.project(lie.bracket(orp[j], er[i])), m1));
    }
  for (std::size_t i = 0; i < m2; ++i)
    for (std::size_t j = 0; j < m2; ++j) {
      Vec z = lie.bracket(dor[i], orp[j]);
      const Vec z2 = lie.bracket(orp[i], dor[j]);
      for (std::size_t t = 0; t < z.size(); ++t) z[t] -= z2[t];
      super.set_bracket(m1 + i, m1 + j, to_terms(even.project(z), 0));
    }

  return {std::move(super), std::move(even), std::move(odd), d};
}

}  // namespace

SemisimplifiedAlgebra semisimplify(const StructureAlgebra& lie, const Mat& d) {
  if (!check_derivation(lie, d).passed)
    throw NotDerivation("semisimplify: d is not a derivation");
  if (!d.pow(3).is_zero()) throw CubeNotZero("semisimplify: d^3 != 0");
  return semisimplify_impl(lie, d, even_subquotient(d), odd_subquotient(d));
}

SemisimplifiedAlgebra semisimplify_with(const StructureAlgebra& lie, const Mat& d,
                                        const Mat& even_reps, const Mat& odd_reps) {
  if (!check_derivation(lie, d).passed)
    throw NotDerivation("semisimplify: d is not a derivation");
  if (!d.pow(3).is_zero()) throw CubeNotZero("semisimplify: d^3 != 0");
  Subquotient even0 = even_subquotient(d);
  Subquotient odd0 = odd_subquotient(d);
  Subquotient even(even0.numerator(), even0.denominator(), even_reps);
  Subquotient odd(odd0.numerator(), odd0.denominator(), odd_reps);
  return semisimplify_impl(lie, d, std::move(even), std::move(odd));
}

FrankSemisimplificationReport verify_frank_semisimplification(int n) {
  FrankSemisimplificationReport rep;
  const FrankAlgebra fr = build_frank(n);
  const Mat d = frank_derivation(fr);
  rep.type = frank_jordan_type(fr);
  const SemisimplifiedAlgebra ss = semisimplify(fr.alg, d);
  rep.even_dim = ss.even_part.dim();
  rep.odd_dim = ss.odd_part.dim();
  const StructureAlgebra pres = build_contact_presentation(n, false);
  const std::size_t m = fr.block();
  if (rep.even_dim != m || rep.odd_dim != m)
    throw Error("verify_frank_semisimplification: unexpected subquotient dimensions");
  // the pivot rule picks the Id (x) W block as even representatives and the
  // v (x) O block as odd ones; the stated map is the index correspondence
  Mat map(pres.dim(), ss.super.dim());
  for (std::size_t i = 0; i < m; ++i) {
    if (ss.even_part.representatives().row_vec(i) != unit_vec(fr.alg.dim(), fr.idx_w(i)))
      throw Error("verify_frank_semisimplification: unexpected even representative");
    map.at(i, i) = Gf3(1);  // class(Id (x) x^(i)d) -> x^(i)d
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (ss.odd_part.representatives().row_vec(j) != unit_vec(fr.alg.dim(), fr.idx_v(j)))
      throw Error("verify_frank_semisimplification: unexpected odd representative");
    map.at(m + j, m + j) = Gf3(1);  // class(v (x) x^(j)) -> x^(j)
  }
  rep.iso = verify_isomorphism(ss.super, pres, map);
  rep.passed = rep.iso.passed;
  return rep;
}

}  // namespace gf3alg
