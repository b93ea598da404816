#ifndef GF3ALG_LINALG_HPP
#define GF3ALG_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "gf3alg/gf3.hpp"

namespace gf3alg {

using Vec = std::vector<Gf3>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(Gf3 c, const Vec& v);
void add_scaled(Vec& acc, Gf3 c, const Vec& v);  // acc += c*v
std::string to_string(const Vec& v);

/// Dense row-major matrix over the three-element field.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<int>> rows);

  static Mat identity(std::size_t n);
  static Mat from_row(const Vec& v);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Gf3& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Gf3 at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row_vec(std::size_t r) const;
  Vec col_vec(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator*(Gf3 c) const;
  bool operator==(const Mat& o) const = default;

  Mat transpose() const;
  Mat pow(std::size_t k) const;  // square matrices
  Vec apply(const Vec& x) const; // matrix * column vector
  bool is_zero() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Gf3> data_;
};

struct RowReduceResult {
  Mat reduced;                       // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column per nonzero row
  std::size_t rank;
};

/// Deterministic reduced row echelon form with leftmost-pivot selection
/// and pivots normalized to 1.
RowReduceResult row_reduce(const Mat& m);
std::size_t rank_of(const Mat& m);

/// Rows of the reduced echelon form with zero rows stripped; the canonical
/// representation of the row space used for all subspace arguments below.
Mat canonical_rows(const Mat& m);

/// Basis (as canonical rows) of {x : m x = 0}.
Mat kernel(const Mat& m);
/// Basis (as canonical rows) of the column space of m.
Mat image(const Mat& m);

Mat subspace_sum(const Mat& u, const Mat& v);
Mat subspace_intersection(const Mat& u, const Mat& v);
bool subspace_contains(const Mat& echelon, const Vec& v);
bool subspace_contains_all(const Mat& echelon, const Mat& rows);
bool subspace_equal(const Mat& u, const Mat& v);

/// Residue of v after elimination against echelon rows; zero iff contained.
Vec reduce_against(const Mat& echelon, Vec v);

std::optional<Vec> solve(const Mat& a, const Vec& b);  // a x = b
std::optional<Mat> inverse(const Mat& m);
/// G with m*G = I for a matrix of full row rank; throws Error otherwise.
Mat right_inverse(const Mat& m);

Mat vstack(const Mat& top, const Mat& bottom);
Mat hstack(const Mat& left, const Mat& right);

/// Incrementally maintained reduced echelon basis, for spin-up loops.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient) : ambient_(ambient) {}
  explicit EchelonBasis(const Mat& rows);

  /// Reduces v against the basis and inserts the residue if nonzero.
  /// Returns true when the dimension grew; v is replaced by the residue.
  bool insert(Vec v);
  bool contains(const Vec& v) const;
  Vec reduce(Vec v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  Mat to_mat() const;  // canonical rows

 private:
  std::size_t ambient_;
  std::vector<Vec> rows_;             // ordered by pivot column
  std::vector<std::size_t> pivots_;
};

/// A subspace modulo a subspace of it, with a chosen representative basis
/// and the projection taking a numerator vector to the coordinates of its
/// class in that basis.
class Subquotient {
 public:
  /// Representatives picked by the pivot rule: echelon vectors of the
  /// numerator whose pivot column is not a pivot column of the denominator.
  Subquotient(const Mat& numerator, const Mat& denominator);
  /// Same quotient with caller-chosen representatives (rows must lie in the
  /// numerator and represent a basis of the quotient).
  Subquotient(const Mat& numerator, const Mat& denominator, const Mat& representatives);

  std::size_t ambient() const { return num_.cols(); }
  std::size_t dim() const { return reps_.rows(); }
  const Mat& numerator() const { return num_; }
  const Mat& denominator() const { return den_; }
  const Mat& representatives() const { return reps_; }
  const Mat& projection() const { return proj_; }

  /// Coordinates of the class of w; throws ProjectionUndefined when w is
  /// not in the numerator subspace.
  Vec project(const Vec& w) const;
  /// Representative vector with the given class coordinates.
  Vec lift(const Vec& coords) const;

 private:
  void init(const Mat& representatives);
  Mat num_, den_, reps_, proj_;
};

Subquotient make_subquotient(const Mat& numerator, const Mat& denominator);

}  // namespace gf3alg

#endif
