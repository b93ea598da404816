#include "gf3alg/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "gf3alg/errors.hpp"

namespace gf3alg {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = Gf3(1);
  return v;
}

bool is_zero(const Vec& v) {
  for (Gf3 x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec add: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec sub: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scaled(Gf3 c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

void add_scaled(Vec& acc, Gf3 c, const Vec& v) {
  if (acc.size() != v.size()) throw DimensionMismatch("add_scaled: size mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].value();
  }
  os << ")";
  return os.str();
}

Mat::Mat(std::initializer_list<std::initializer_list<int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.resize(rows_ * cols_);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("Mat: ragged initializer");
    std::size_t c = 0;
    for (int x : row) at(r, c++) = Gf3(x);
    ++r;
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Gf3(1);
  return m;
}

Mat Mat::from_row(const Vec& v) {
  Mat m(1, v.size());
  m.set_row(0, v);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Vec Mat::row_vec(std::size_t r) const {
  Vec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Mat::col_vec(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void Mat::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw DimensionMismatch("set_row: size mismatch");
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("mat add");
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("mat sub");
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("mat mul");
  Mat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Gf3 a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  }
  return r;
}

Mat Mat::operator*(Gf3 c) const {
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = c * data_[i];
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::pow(std::size_t k) const {
  if (rows_ != cols_) throw DimensionMismatch("pow: square required");
  Mat acc = identity(rows_);
  for (std::size_t i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

Vec Mat::apply(const Vec& x) const {
  if (x.size() != cols_) throw DimensionMismatch("apply: size mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Gf3 acc(0);
    for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * x[j];
    r[i] = acc;
  }
  return r;
}

bool Mat::is_zero() const {
  for (Gf3 x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "\n" : "") << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << " ";
      os << at(r, c).value();
    }
    os << "]";
  }
  return os.str();
}

RowReduceResult row_reduce(const Mat& m) {
  Mat a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pr = r;
    while (pr < a.rows() && a.at(pr, c).is_zero()) ++pr;
    if (pr == a.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(pr, j));
    const Gf3 inv = a.at(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const Gf3 f = a.at(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots), r};
}

std::size_t rank_of(const Mat& m) { return row_reduce(m).rank; }

Mat canonical_rows(const Mat& m) {
  auto rr = row_reduce(m);
  Mat out(rr.rank, m.cols());
  for (std::size_t r = 0; r < rr.rank; ++r) out.set_row(r, rr.reduced.row_vec(r));
  return out;
}

Mat kernel(const Mat& m) {
  auto rr = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = Gf3(1);
    for (std::size_t r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = -rr.reduced.at(r, f);
    basis.push_back(std::move(v));
  }
  return canonical_rows(Mat::from_rows(basis, m.cols()));
}

Mat image(const Mat& m) { return canonical_rows(m.transpose()); }

Mat subspace_sum(const Mat& u, const Mat& v) {
  if (u.cols() != v.cols()) throw DimensionMismatch("subspace_sum: ambient mismatch");
  return canonical_rows(vstack(u, v));
}

Mat subspace_intersection(const Mat& u, const Mat& v) {
  if (u.cols() != v.cols()) throw DimensionMismatch("subspace_intersection: ambient mismatch");
  const std::size_t n = u.cols();
  // Zassenhaus: reduce [U|U; V|0]; rows with zero left half carry the
  // intersection in the right half.
  Mat block(u.rows() + v.rows(), 2 * n);
  for (std::size_t r = 0; r < u.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) {
      block.at(r, c) = u.at(r, c);
      block.at(r, n + c) = u.at(r, c);
    }
  for (std::size_t r = 0; r < v.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) block.at(u.rows() + r, c) = v.at(r, c);
  auto rr = row_reduce(block);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < rr.rank; ++r) {
    bool left_zero = true;
    for (std::size_t c = 0; c < n && left_zero; ++c)
      if (!rr.reduced.at(r, c).is_zero()) left_zero = false;
    if (!left_zero) continue;
    Vec w(n);
    for (std::size_t c = 0; c < n; ++c) w[c] = rr.reduced.at(r, n + c);
    rows.push_back(std::move(w));
  }
  return canonical_rows(Mat::from_rows(rows, n));
}

Vec reduce_against(const Mat& echelon, Vec v) {
  if (echelon.cols() != v.size()) throw DimensionMismatch("reduce_against: size mismatch");
  for (std::size_t r = 0; r < echelon.rows(); ++r) {
    std::size_t p = 0;
    while (p < echelon.cols() && echelon.at(r, p).is_zero()) ++p;
    if (p == echelon.cols()) continue;
    const Gf3 f = v[p] * echelon.at(r, p).inverse();
    if (f.is_zero()) continue;
    for (std::size_t c = p; c < echelon.cols(); ++c) v[c] -= f * echelon.at(r, c);
  }
  return v;
}

bool subspace_contains(const Mat& echelon, const Vec& v) {
  return is_zero(reduce_against(echelon, v));
}

bool subspace_contains_all(const Mat& echelon, const Mat& rows) {
  for (std::size_t r = 0; r < rows.rows(); ++r)
    if (!subspace_contains(echelon, rows.row_vec(r))) return false;
  return true;
}

bool subspace_equal(const Mat& u, const Mat& v) {
  return canonical_rows(u) == canonical_rows(v);
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("solve: rhs size mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  auto rr = row_reduce(aug);
  Vec x(a.cols());
  for (std::size_t r = 0; r < rr.rank; ++r) {
    if (rr.pivots[r] == a.cols()) return std::nullopt;  // inconsistent
    x[rr.pivots[r]] = rr.reduced.at(r, a.cols());
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse: square required");
  const std::size_t n = m.rows();
  auto rr = row_reduce(hstack(m, Mat::identity(n)));
  for (std::size_t r = 0; r < n; ++r)
    if (r >= rr.rank || rr.pivots[r] != r) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = rr.reduced.at(r, n + c);
  return inv;
}

Mat right_inverse(const Mat& m) {
  const std::size_t rk = m.rows();
  auto rr = row_reduce(hstack(m, Mat::identity(rk)));
  if (rr.rank != rk) throw Error("right_inverse: matrix does not have full row rank");
  for (std::size_t r = 0; r < rk; ++r)
    if (rr.pivots[r] >= m.cols())
      throw Error("right_inverse: matrix does not have full row rank");
  // particular solution per unit column: x[pivot_r] = reduced rhs
  Mat g(m.cols(), rk);
  for (std::size_t r = 0; r < rk; ++r)
    for (std::size_t c = 0; c < rk; ++c) g.at(rr.pivots[r], c) = rr.reduced.at(r, m.cols() + c);
  return g;
}

Mat vstack(const Mat& top, const Mat& bottom) {
  if (top.rows() == 0) {
    if (top.cols() != 0 && bottom.rows() != 0 && top.cols() != bottom.cols())
      throw DimensionMismatch("vstack: width mismatch");
    if (bottom.rows() != 0 || bottom.cols() != 0) return bottom;
    return top;
  }
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw DimensionMismatch("vstack: width mismatch");
  Mat r(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i) r.set_row(i, top.row_vec(i));
  for (std::size_t i = 0; i < bottom.rows(); ++i) r.set_row(top.rows() + i, bottom.row_vec(i));
  return r;
}

Mat hstack(const Mat& left, const Mat& right) {
  if (left.rows() != right.rows()) throw DimensionMismatch("hstack: height mismatch");
  Mat r(left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t c = 0; c < left.cols(); ++c) r.at(i, c) = left.at(i, c);
    for (std::size_t c = 0; c < right.cols(); ++c) r.at(i, left.cols() + c) = right.at(i, c);
  }
  return r;
}

EchelonBasis::EchelonBasis(const Mat& rows) : ambient_(rows.cols()) {
  for (std::size_t r = 0; r < rows.rows(); ++r) insert(rows.row_vec(r));
}

Vec EchelonBasis::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Gf3 f = v[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t c = pivots_[r]; c < ambient_; ++c) v[c] -= f * rows_[r][c];
  }
  return v;
}

bool EchelonBasis::insert(Vec v) {
  if (v.size() != ambient_) throw DimensionMismatch("EchelonBasis::insert");
  v = reduce(v);
  std::size_t p = 0;
  while (p < ambient_ && v[p].is_zero()) ++p;
  if (p == ambient_) return false;
  const Gf3 inv = v[p].inverse();
  for (std::size_t c = p; c < ambient_; ++c) v[c] *= inv;
  // keep full reduction: clear column p in the stored rows
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Gf3 f = rows_[r][p];
    if (f.is_zero()) continue;
    for (std::size_t c = p; c < ambient_; ++c) rows_[r][c] -= f * v[c];
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool EchelonBasis::contains(const Vec& v) const { return is_zero(reduce(v)); }

Mat EchelonBasis::to_mat() const { return Mat::from_rows(rows_, ambient_); }

namespace {

std::vector<std::size_t> pivot_columns(const Mat& echelon) {
  std::vector<std::size_t> ps;
  for (std::size_t r = 0; r < echelon.rows(); ++r) {
    std::size_t p = 0;
    while (p < echelon.cols() && echelon.at(r, p).is_zero()) ++p;
    ps.push_back(p);
  }
  return ps;
}

}  // namespace

Subquotient::Subquotient(const Mat& numerator, const Mat& denominator)
    : num_(canonical_rows(numerator)), den_(canonical_rows(denominator)) {
  if (num_.cols() != den_.cols())
    throw DimensionMismatch("Subquotient: ambient mismatch");
  if (!subspace_contains_all(num_, den_))
    throw InclusionViolated("Subquotient: denominator not contained in numerator");
  const auto num_piv = pivot_columns(num_);
  const auto den_piv = pivot_columns(den_);
  std::vector<Vec> reps;
  for (std::size_t r = 0; r < num_.rows(); ++r)
    if (std::find(den_piv.begin(), den_piv.end(), num_piv[r]) == den_piv.end())
      reps.push_back(num_.row_vec(r));
  init(Mat::from_rows(reps, num_.cols()));
}

Subquotient::Subquotient(const Mat& numerator, const Mat& denominator,
                         const Mat& representatives)
    : num_(canonical_rows(numerator)), den_(canonical_rows(denominator)) {
  if (num_.cols() != den_.cols() || representatives.cols() != num_.cols())
    throw DimensionMismatch("Subquotient: ambient mismatch");
  if (!subspace_contains_all(num_, den_))
    throw InclusionViolated("Subquotient: denominator not contained in numerator");
  if (!subspace_contains_all(num_, representatives))
    throw Error("Subquotient: representatives outside numerator");
  init(representatives);
}

void Subquotient::init(const Mat& representatives) {
  reps_ = representatives;
  const std::size_t k = reps_.rows();
  if (k + den_.rows() != num_.rows())
    throw Error("Subquotient: representative count does not match quotient dimension");
  Mat stacked = vstack(reps_, den_);
  if (stacked.rows() == 0) {
    proj_ = Mat(0, num_.cols());
    return;
  }
  if (rank_of(stacked) != stacked.rows())
    throw Error("Subquotient: representatives do not span the quotient");
  // coordinates w.r.t. rows of [reps; den]: left-invert the transpose
  const Mat g = right_inverse(stacked);  // stacked * g = I
  const Mat gt = g.transpose();          // gt * stacked^T = I
  Mat proj(k, num_.cols());
  for (std::size_t r = 0; r < k; ++r) proj.set_row(r, gt.row_vec(r));
  proj_ = std::move(proj);
}

Vec Subquotient::project(const Vec& w) const {
  if (w.size() != ambient()) throw DimensionMismatch("Subquotient::project");
  if (!subspace_contains(num_, w))
    throw ProjectionUndefined("Subquotient::project: vector outside numerator");
  return proj_.apply(w);
}

Vec Subquotient::lift(const Vec& coords) const {
  if (coords.size() != dim()) throw DimensionMismatch("Subquotient::lift");
  Vec out(ambient());
  for (std::size_t r = 0; r < reps_.rows(); ++r) add_scaled(out, coords[r], reps_.row_vec(r));
  return out;
}

Subquotient make_subquotient(const Mat& numerator, const Mat& denominator) {
  return Subquotient(numerator, denominator);
}

}  // namespace gf3alg
