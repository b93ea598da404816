#include "gf3alg/frank.hpp"

#include "gf3alg/errors.hpp"
#include "gf3alg/rep_alpha3.hpp"

namespace gf3alg {

namespace {

Gf3 lambda(const Vec& a, const Vec& b) {  // lambda(u,v) = 1 on basis (u,v)
  return a[0] * b[1] - a[1] * b[0];
}

// trace-zero 2x2 matrix -> coordinates in (e, h, f) = (E12, E11-E22, E21)
struct SlCoords {
  Gf3 e, h, f;
};

SlCoords sl_coords(const Mat& m) {
  if (!(m.at(0, 0) + m.at(1, 1)).is_zero()) throw Error("sl_coords: trace nonzero");
  return {m.at(0, 1), m.at(0, 0), m.at(1, 0)};
}

}  // namespace

Mat phi(const Vec& a, const Vec& b) {
  if (a.size() != 2 || b.size() != 2) throw DimensionMismatch("phi: 2-vectors expected");
  Mat m(2, 2);
  for (std::size_t c = 0; c < 2; ++c) {
    const Vec basis = unit_vec(2, c);
    const Gf3 la = lambda(a, basis), lb = lambda(b, basis);
    // column c: lambda(a, e_c) b + lambda(b, e_c) a
    m.at(0, c) = la * b[0] + lb * a[0];
    m.at(1, c) = la * b[1] + lb * a[1];
  }
  return m;
}

FrankAlgebra build_frank(int n) {
  if (n < 1 || n > 3) throw Error("build_frank: supported range is 1 <= n <= 3");
  const DividedPowerAlgebra o(n);
  const std::size_t m = o.dim();
  const std::size_t dim = 6 * m;

  std::vector<std::string> labels(dim);
  std::vector<int> weight(dim, 0);
  const char* block_name[6] = {"u", "v", "e", "h", "f", "Id"};
  const int block_weight[6] = {1, -1, 2, 0, -2, 0};
  for (std::size_t b = 0; b < 6; ++b)
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t idx = b * m + i;
      labels[idx] = std::string(block_name[b]) + "*" + o.label(i) + (b == 5 ? "d" : "");
      weight[idx] = block_weight[b];
    }

  FrankAlgebra fr{n, StructureAlgebra("F(" + std::to_string(n) + ")", labels,
                                      std::vector<int>(dim, 0), weight)};
  StructureAlgebra& A = fr.alg;

  // sl(2) structure: [e,h] = e, [e,f] = h, [h,f] = f (characteristic 3);
  // action on U in the basis (u, v): e: v->u, h: u->u, v->-v, f: u->v
  const StructureAlgebra w = build_witt(n);

  auto add_terms = [&](std::size_t i, std::size_t j, const TermList& extra) {
    TermList t = A.bracket_terms(i, j);
    t.insert(t.end(), extra.begin(), extra.end());
    A.set_bracket(i, j, std::move(t));
  };
  auto set_pair = [&](std::size_t i, std::size_t j, const TermList& t) {
    add_terms(i, j, t);
    TermList neg;
    for (const Term& x : t) neg.push_back({x.index, -x.coeff});
    add_terms(j, i, neg);
  };
  auto shift = [&](const TermList& t, std::size_t offset) {
    TermList out;
    for (const Term& x : t) out.push_back({x.index + offset, x.coeff});
    return out;
  };

  // [Id (x) w, Id (x) w'] = Id (x) [w, w']
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      add_terms(fr.idx_w(p), fr.idx_w(q), shift(w.bracket_terms(p, q), 5 * m));

  // [Id (x) x^(p)d, s (x) x^(j)] = s (x) x^(p) d(x^(j))
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t j = 1; j < m; ++j) {
      const TermList prod = o.multiply(p, j - 1);
      for (std::size_t s = 0; s < 3; ++s)
        set_pair(fr.idx_w(p), fr.idx_e(j) + s * m, shift(prod, (2 + s) * m));
    }

  // [Id (x) x^(p)d, a (x) x^(j)] = a (x) d(x^(p) x^(j))  (div action)
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t j = 0; j < m; ++j) {
      const Vec img = o.div_action(unit_vec(m, p), unit_vec(m, j));
      for (std::size_t a = 0; a < 2; ++a)
        set_pair(fr.idx_w(p), fr.idx_u(j) + a * m, shift(vec_to_terms(img), a * m));
    }

  // [s (x) f, t (x) g] = [s,t] (x) f g, with sl(2) brackets above
  struct SlBracket {
    std::size_t i, j, k;
    int c;
  };
  const SlBracket sl_table[] = {{0, 1, 0, 1}, {0, 2, 1, 1}, {1, 2, 2, 1}};
  for (const auto& sb : sl_table)
    for (std::size_t fi = 0; fi < m; ++fi)
      for (std::size_t gj = 0; gj < m; ++gj) {
        TermList out;
        for (const Term& t : o.multiply(fi, gj))
          out.push_back({(2 + sb.k) * m + t.index, t.coeff * Gf3(sb.c)});
        set_pair(fr.idx_e(fi) + sb.i * m, fr.idx_e(gj) + sb.j * m, out);
      }

  // [s (x) f, a (x) g] = s(a) (x) f g
  // s(a) in the (u, v) block: e: (u,v)->(0,u), h: (u,v)->(u,-v), f: (u,v)->(v,0)
  struct SlAction {
    std::size_t s, a, target;
    int c;
  };
  const SlAction act_table[] = {
      {0, 1, 0, 1},   // e(v) = u
      {1, 0, 0, 1},   // h(u) = u
      {1, 1, 1, -1},  // h(v) = -v
      {2, 0, 1, 1},   // f(u) = v
  };
  for (const auto& ac : act_table)
    for (std::size_t fi = 0; fi < m; ++fi)
      for (std::size_t gj = 0; gj < m; ++gj) {
        TermList out;
        for (const Term& t : o.multiply(fi, gj))
          out.push_back({ac.target * m + t.index, t.coeff * Gf3(ac.c)});
        set_pair(fr.idx_e(fi) + ac.s * m, fr.idx_u(gj) + ac.a * m, out);
      }

  // odd-odd:
  // [a (x) f, b (x) g] = phi(a,b) (x) (f d(g) - g d(f)) + lambda(a,b) Id (x) (f g) d
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      const Vec va = unit_vec(2, a), vb = unit_vec(2, b);
      const SlCoords sc = sl_coords(phi(va, vb));
      const Gf3 lam = lambda(va, vb);
      for (std::size_t fi = 0; fi < m; ++fi)
        for (std::size_t gj = 0; gj < m; ++gj) {
          Vec coeff = o.multiply(unit_vec(m, fi), o.partial(unit_vec(m, gj)));
          const Vec second = o.multiply(unit_vec(m, gj), o.partial(unit_vec(m, fi)));
          for (std::size_t t = 0; t < m; ++t) coeff[t] -= second[t];
          TermList out;
          for (std::size_t t = 0; t < m; ++t) {
            if (!(sc.e * coeff[t]).is_zero()) out.push_back({2 * m + t, sc.e * coeff[t]});
            if (!(sc.h * coeff[t]).is_zero()) out.push_back({3 * m + t, sc.h * coeff[t]});
            if (!(sc.f * coeff[t]).is_zero()) out.push_back({4 * m + t, sc.f * coeff[t]});
          }
          if (!lam.is_zero())
            for (const Term& t : o.multiply(fi, gj)) out.push_back({5 * m + t.index, lam * t.coeff});
          add_terms(fr.idx_u(fi) + a * m, fr.idx_u(gj) + b * m, out);
        }
    }

  return fr;
}

Mat frank_derivation(const FrankAlgebra& fr) {
  return fr.alg.ad(fr.idx_e(0));
}

JordanType frank_jordan_type(const FrankAlgebra& fr) {
  return jordan_type(RepAlpha3Object(frank_derivation(fr)));
}

}  // namespace gf3alg
