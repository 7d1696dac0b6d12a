#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ficat/ring.hpp"

namespace ficat {

// Row-major matrix over a finite ring. A map R^m -> R^n is an n x m matrix
// acting on column vectors.
struct Mat {
  RingPtr ring;
  int rows = 0;
  int cols = 0;
  std::vector<Elem> a;

  Mat() = default;
  Mat(RingPtr r, int rows_, int cols_);
  Mat(RingPtr r, int rows_, int cols_, std::vector<Elem> entries);

  static Mat identity(RingPtr r, int n);
  // Entries given as integers, reduced into the ring.
  static Mat from_ints(RingPtr r, const std::vector<std::vector<long long>>& rows);

  Elem operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  Elem& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }

  Mat transpose() const;
  Mat row(int i) const;
  Mat col(int j) const;
  Mat select_cols(const std::vector<int>& idx) const;
  Mat select_rows(const std::vector<int>& idx) const;
  bool is_identity() const;
  std::string str() const;

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a &&
           (x.ring == y.ring || (x.ring && y.ring && *x.ring == *y.ring));
  }
};

Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_add(const Mat& x, const Mat& y);
Mat mat_sub(const Mat& x, const Mat& y);
Mat mat_scale(Elem s, const Mat& x);
Mat hstack(const Mat& x, const Mat& y);
Mat vstack(const Mat& x, const Mat& y);
Mat block_diag(const Mat& x, const Mat& y);

// Leibniz determinant via memoized cofactor expansion. Requires a square
// matrix of size at most 8.
Elem det(const Mat& m);
// Same, without the size bound (exponential in the size).
Elem det_unbounded(const Mat& m);
// Inverse by unit-pivot elimination on each local factor; empty if singular.
std::optional<Mat> inverse(const Mat& m);

// Componentwise views along the local decomposition of the ring.
Mat project(const Mat& m, std::size_t factor);
Mat lift(const RingPtr& parent, const std::vector<Mat>& parts);

struct ColumnProfile {
  // S_c, 0-based; present when every local factor has the same pivot set.
  std::optional<std::vector<int>> s;
  std::vector<std::vector<int>> per_factor;
};

// Pivot set of a column-adapted matrix over a local ring, or empty.
std::optional<std::vector<int>> column_pivots_local(const Mat& m);
std::optional<ColumnProfile> column_adapted(const Mat& m);
std::optional<ColumnProfile> row_adapted(const Mat& m);

// True when some maximal minor is a unit on every local factor.
bool is_surjective(const Mat& m);

struct SurjectionFactors {
  Mat f1;  // column-adapted
  Mat f2;  // invertible, f = f2 * f1
};
SurjectionFactors factor_surjection(const Mat& f);

// Lexicographic successor over k-subsets of {0..n-1}; false after the last.
bool next_combination(std::vector<int>& c, int n);

}  // namespace ficat
