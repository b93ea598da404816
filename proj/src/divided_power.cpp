#include "gf3alg/divided_power.hpp"

#include "gf3alg/errors.hpp"

namespace gf3alg {

namespace {

std::size_t pow3(int n) {
  std::size_t p = 1;
  for (int i = 0; i < n; ++i) p *= 3;
  return p;
}

}  // namespace

DividedPowerAlgebra::DividedPowerAlgebra(int n) : n_(n), dim_(pow3(n)) {
  if (n < 1) throw Error("DividedPowerAlgebra: n must be positive");
}

TermList DividedPowerAlgebra::multiply(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw DimensionMismatch("dp multiply: index out of range");
  if (i + j >= dim_) return {};
  const Gf3 c = binom_mod3(i + j, i);
  if (c.is_zero()) return {};
  return {{i + j, c}};
}

Vec DividedPowerAlgebra::multiply(const Vec& f, const Vec& g) const {
  if (f.size() != dim_ || g.size() != dim_)
    throw DimensionMismatch("dp multiply: vector size mismatch");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; j + i < dim_; ++j) {
      if (g[j].is_zero()) continue;
      out[i + j] += f[i] * g[j] * binom_mod3(i + j, i);
    }
  }
  return out;
}

Vec DividedPowerAlgebra::partial(const Vec& f) const {
  if (f.size() != dim_) throw DimensionMismatch("partial: vector size mismatch");
  Vec out(dim_);
  for (std::size_t i = 1; i < dim_; ++i) out[i - 1] = f[i];
  return out;
}

Mat DividedPowerAlgebra::partial_matrix() const {
  Mat m(dim_, dim_);
  for (std::size_t i = 1; i < dim_; ++i) m.at(i - 1, i) = Gf3(1);
  return m;
}

Vec DividedPowerAlgebra::div_action(const Vec& f, const Vec& g) const {
  return partial(multiply(f, g));
}

Mat DividedPowerAlgebra::div_operator(std::size_t i) const {
  if (i >= dim_) throw DimensionMismatch("div_operator: index out of range");
  Mat m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const Vec img = div_action(unit_vec(dim_, i), unit_vec(dim_, j));
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = img[k];
  }
  return m;
}

Mat DividedPowerAlgebra::o_prime() const {
  Mat m(dim_ - 1, dim_);
  for (std::size_t i = 0; i + 1 < dim_; ++i) m.at(i, i) = Gf3(1);
  return m;
}

std::string DividedPowerAlgebra::label(std::size_t i) const {
  return "x^(" + std::to_string(i) + ")";
}

std::vector<std::string> DividedPowerAlgebra::labels() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim_; ++i) out.push_back(label(i));
  return out;
}

}  // namespace gf3alg
