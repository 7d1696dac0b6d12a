#include "ficat/matrix.hpp"

#include <numeric>
#include <sstream>

#include "ficat/error.hpp"

namespace ficat {

namespace {

void require_same_ring(const Mat& x, const Mat& y, const char* op) {
  if (!x.ring || !y.ring || !(*x.ring == *y.ring))
    throw PreconditionError("ring_mismatch", std::string(op) + ": matrices over different rings");
}

// Gauss-Jordan over a local ring: a matrix is invertible iff each column has a
// unit pivot among the remaining rows.
std::optional<Mat> inverse_local(const Mat& m) {
  const auto& R = *m.ring;
  const int n = m.rows;
  Mat w = m;
  Mat inv = Mat::identity(m.ring, n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (R.is_unit(w(r, c))) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(w.at(c, j), w.at(piv, j));
        std::swap(inv.at(c, j), inv.at(piv, j));
      }
    Elem s = *R.inverse(w(c, c));
    for (int j = 0; j < n; ++j) {
      w.at(c, j) = R.mul(s, w(c, j));
      inv.at(c, j) = R.mul(s, inv(c, j));
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || w(r, c) == 0) continue;
      Elem t = w(r, c);
      for (int j = 0; j < n; ++j) {
        w.at(r, j) = R.sub(w(r, j), R.mul(t, w(c, j)));
        inv.at(r, j) = R.sub(inv(r, j), R.mul(t, inv(c, j)));
      }
    }
  }
  return inv;
}

}  // namespace

Mat::Mat(RingPtr r, int rows_, int cols_) : ring(std::move(r)), rows(rows_), cols(cols_) {
  if (rows < 0 || cols < 0) throw PreconditionError("bad_matrix", "negative dimension");
  a.assign(static_cast<std::size_t>(rows) * cols, 0);
}

Mat::Mat(RingPtr r, int rows_, int cols_, std::vector<Elem> entries)
    : ring(std::move(r)), rows(rows_), cols(cols_), a(std::move(entries)) {
  if (rows < 0 || cols < 0 || a.size() != static_cast<std::size_t>(rows) * cols)
    throw PreconditionError("bad_matrix", "entry count does not match dimensions");
  for (Elem x : a) ring->check_elem(x);
}

Mat Mat::identity(RingPtr r, int n) {
  Mat m(r, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = r->one();
  return m;
}

Mat Mat::from_ints(RingPtr r, const std::vector<std::vector<long long>>& rows) {
  int nr = static_cast<int>(rows.size());
  int nc = nr ? static_cast<int>(rows[0].size()) : 0;
  Mat m(r, nr, nc);
  for (int i = 0; i < nr; ++i) {
    if (static_cast<int>(rows[i].size()) != nc) throw PreconditionError("bad_matrix", "ragged rows");
    for (int j = 0; j < nc; ++j) m.at(i, j) = r->from_int(rows[i][j]);
  }
  return m;
}

Mat Mat::transpose() const {
  Mat t(ring, cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::row(int i) const { return select_rows({i}); }
Mat Mat::col(int j) const { return select_cols({j}); }

Mat Mat::select_cols(const std::vector<int>& idx) const {
  Mat s(ring, rows, static_cast<int>(idx.size()));
  for (int i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s.at(i, static_cast<int>(j)) = (*this)(i, idx[j]);
  return s;
}

Mat Mat::select_rows(const std::vector<int>& idx) const {
  Mat s(ring, static_cast<int>(idx.size()), cols);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < cols; ++j) s.at(static_cast<int>(i), j) = (*this)(idx[i], j);
  return s;
}

bool Mat::is_identity() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if ((*this)(i, j) != (i == j ? ring->one() : Elem{0})) return false;
  return true;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

Mat mat_mul(const Mat& x, const Mat& y) {
  require_same_ring(x, y, "mat_mul");
  if (x.cols != y.rows)
    throw PreconditionError("dim_mismatch", "mat_mul: " + std::to_string(x.rows) + "x" + std::to_string(x.cols) +
                                                " times " + std::to_string(y.rows) + "x" + std::to_string(y.cols));
  const auto& R = *x.ring;
  Mat out(x.ring, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      Elem xik = x(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) = R.add(out(i, j), R.mul(xik, y(k, j)));
    }
  return out;
}

Mat mat_add(const Mat& x, const Mat& y) {
  require_same_ring(x, y, "mat_add");
  if (x.rows != y.rows || x.cols != y.cols) throw PreconditionError("dim_mismatch", "mat_add");
  Mat out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = x.ring->add(x.a[i], y.a[i]);
  return out;
}

Mat mat_sub(const Mat& x, const Mat& y) {
  require_same_ring(x, y, "mat_sub");
  if (x.rows != y.rows || x.cols != y.cols) throw PreconditionError("dim_mismatch", "mat_sub");
  Mat out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = x.ring->sub(x.a[i], y.a[i]);
  return out;
}

Mat mat_scale(Elem s, const Mat& x) {
  Mat out = x;
  for (auto& e : out.a) e = x.ring->mul(s, e);
  return out;
}

Mat hstack(const Mat& x, const Mat& y) {
  require_same_ring(x, y, "hstack");
  if (x.rows != y.rows) throw PreconditionError("dim_mismatch", "hstack");
  Mat out(x.ring, x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) out.at(i, j) = x(i, j);
    for (int j = 0; j < y.cols; ++j) out.at(i, x.cols + j) = y(i, j);
  }
  return out;
}

Mat vstack(const Mat& x, const Mat& y) {
  require_same_ring(x, y, "vstack");
  if (x.cols != y.cols) throw PreconditionError("dim_mismatch", "vstack");
  Mat out(x.ring, x.rows + y.rows, x.cols);
  std::copy(x.a.begin(), x.a.end(), out.a.begin());
  std::copy(y.a.begin(), y.a.end(), out.a.begin() + static_cast<std::ptrdiff_t>(x.a.size()));
  return out;
}

Mat block_diag(const Mat& x, const Mat& y) {
  require_same_ring(x, y, "block_diag");
  Mat out(x.ring, x.rows + y.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) out.at(i, j) = x(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < y.cols; ++j) out.at(x.rows + i, x.cols + j) = y(i, j);
  return out;
}

Elem det_unbounded(const Mat& m) {
  if (m.rows != m.cols) throw PreconditionError("not_square", "det of a non-square matrix");
  const int n = m.rows;
  if (n > 20) throw PreconditionError("too_large", "det: size above 20");
  const auto& R = *m.ring;
  // memo[mask] = determinant of rows 0..popcount(mask)-1 restricted to columns in mask
  std::vector<Elem> memo(std::size_t{1} << n, 0);
  memo[0] = R.one();
  for (std::size_t mask = 1; mask < memo.size(); ++mask) {
    int k = __builtin_popcountll(mask);
    int row = k - 1;
    Elem acc = 0;
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      Elem e = m(row, j);
      if (e != 0) {
        Elem term = R.mul(e, memo[mask & ~(std::size_t{1} << j)]);
        // cofactor sign (-1)^(row + pos)
        acc = ((row + pos) % 2) ? R.sub(acc, term) : R.add(acc, term);
      }
      ++pos;
    }
    memo[mask] = acc;
  }
  return memo.back();
}

Elem det(const Mat& m) {
  if (m.rows != m.cols) throw PreconditionError("not_square", "det of a non-square matrix");
  if (m.rows > 8) throw PreconditionError("too_large", "det: size above 8");
  return det_unbounded(m);
}

Mat project(const Mat& m, std::size_t factor) {
  const auto& dec = m.ring->local_factors();
  Mat out(dec.factors.at(factor), m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) out.a[i] = dec.projection[factor][m.a[i]];
  return out;
}

Mat lift(const RingPtr& parent, const std::vector<Mat>& parts) {
  const auto& dec = parent->local_factors();
  if (parts.size() != dec.count()) throw PreconditionError("bad_matrix", "lift: wrong number of factors");
  Mat out(parent, parts[0].rows, parts[0].cols);
  std::vector<Elem> tuple(parts.size());
  for (std::size_t i = 0; i < out.a.size(); ++i) {
    for (std::size_t q = 0; q < parts.size(); ++q) tuple[q] = parts[q].a[i];
    out.a[i] = dec.lift(tuple);
  }
  return out;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows != m.cols) throw PreconditionError("not_square", "inverse of a non-square matrix");
  if (m.ring->is_local()) return inverse_local(m);
  const auto& dec = m.ring->local_factors();
  std::vector<Mat> parts;
  for (std::size_t q = 0; q < dec.count(); ++q) {
    auto inv = inverse_local(project(m, q));
    if (!inv) return std::nullopt;
    parts.push_back(std::move(*inv));
  }
  return lift(m.ring, parts);
}

std::optional<std::vector<int>> column_pivots_local(const Mat& m) {
  const auto& R = *m.ring;
  std::vector<int> s;
  int prev = -1;
  for (int i = 0; i < m.rows; ++i) {
    // Entries left of the pivot are non-units and the pivot is 1, so the
    // pivot is the first unit in the row.
    int p = -1;
    for (int j = 0; j < m.cols; ++j)
      if (R.is_unit(m(i, j))) { p = j; break; }
    if (p <= prev) return std::nullopt;
    for (int r = 0; r < m.rows; ++r)
      if (m(r, p) != (r == i ? R.one() : Elem{0})) return std::nullopt;
    s.push_back(p);
    prev = p;
  }
  return s;
}

std::optional<ColumnProfile> column_adapted(const Mat& m) {
  ColumnProfile prof;
  const auto& dec = m.ring->local_factors();
  for (std::size_t q = 0; q < dec.count(); ++q) {
    auto s = column_pivots_local(dec.count() == 1 ? m : project(m, q));
    if (!s) return std::nullopt;
    prof.per_factor.push_back(std::move(*s));
  }
  bool same = true;
  for (const auto& s : prof.per_factor) same = same && s == prof.per_factor.front();
  if (same && !prof.per_factor.empty()) prof.s = prof.per_factor.front();
  return prof;
}

std::optional<ColumnProfile> row_adapted(const Mat& m) { return column_adapted(m.transpose()); }

bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

namespace {

// Lexicographically least column subset with a unit maximal minor.
std::optional<std::vector<int>> unit_minor_local(const Mat& f) {
  if (f.rows > f.cols) return std::nullopt;
  std::vector<int> c(f.rows);
  std::iota(c.begin(), c.end(), 0);
  do {
    if (f.ring->is_unit(det_unbounded(f.select_cols(c)))) return c;
  } while (next_combination(c, f.cols));
  return std::nullopt;
}

}  // namespace

bool is_surjective(const Mat& m) {
  const auto& dec = m.ring->local_factors();
  for (std::size_t q = 0; q < dec.count(); ++q)
    if (!unit_minor_local(dec.count() == 1 ? m : project(m, q))) return false;
  return true;
}

SurjectionFactors factor_surjection(const Mat& f) {
  const auto& dec = f.ring->local_factors();
  std::vector<Mat> f1s, f2s;
  for (std::size_t q = 0; q < dec.count(); ++q) {
    Mat fq = dec.count() == 1 ? f : project(f, q);
    auto I = unit_minor_local(fq);
    if (!I) throw PreconditionError("not_surjective", "factor_surjection: no unit maximal minor in local factor " +
                                                          fq.ring->spec());
    Mat f2 = fq.select_cols(*I);
    auto h = inverse_local(f2);
    if (!h) throw InvariantViolation("unit minor without inverse");
    f1s.push_back(mat_mul(*h, fq));
    f2s.push_back(std::move(f2));
  }
  if (dec.count() == 1) {
    f1s[0].ring = f.ring;
    f2s[0].ring = f.ring;
    return {std::move(f1s[0]), std::move(f2s[0])};
  }
  return {lift(f.ring, f1s), lift(f.ring, f2s)};
}

}  // namespace ficat
