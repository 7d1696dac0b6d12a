#include "ficat/si.hpp"

#include <algorithm>
#include <limits>

#include "ficat/error.hpp"
#include "ficat/json_io.hpp"
#include "ficat/vic.hpp"

namespace ficat {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  return p > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                       : static_cast<std::uint64_t>(p);
}

std::uint64_t sat_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t out = 1;
  while (e--) out = sat_mul(out, b);
  return out;
}

Mat omega(const RingPtr& r, int pairs) { return SymplecticForm::standard(r, pairs).gram; }

// Symplectic Gram-Schmidt over a local ring: from spanning columns of a
// nondegenerate submodule of rank 2k, extract a symplectic basis a_1, b_1, ...
Mat symplectic_basis_local(Mat v, int k, const Mat& gram) {
  const auto& R = *v.ring;
  const int dim = v.rows;
  auto w = [&](int i, int j) {
    Elem acc = 0;
    for (int s = 0; s < dim; ++s) {
      if (!v(s, i)) continue;
      for (int t = 0; t < dim; ++t)
        if (gram(s, t) && v(t, j)) acc = R.add(acc, R.mul(v(s, i), R.mul(gram(s, t), v(t, j))));
    }
    return acc;
  };
  Mat out(v.ring, dim, 2 * k);
  for (int step = 0; step < k; ++step) {
    int ia = -1, ib = -1;
    for (int i = 0; i < v.cols && ia < 0; ++i)
      for (int j = i + 1; j < v.cols; ++j)
        if (R.is_unit(w(i, j))) { ia = i; ib = j; break; }
    if (ia < 0) throw PreconditionError("degenerate", "perp: submodule is not symplectic");
    Elem s = *R.inverse(w(ia, ib));
    for (int r = 0; r < dim; ++r) v.at(r, ib) = R.mul(s, v(r, ib));
    for (int r = 0; r < dim; ++r) {
      out.at(r, 2 * step) = v(r, ia);
      out.at(r, 2 * step + 1) = v(r, ib);
    }
    // v <- v - omega(v, b) a + omega(v, a) b
    std::vector<Elem> wa(v.cols), wb(v.cols);
    for (int j = 0; j < v.cols; ++j) {
      wa[j] = w(j, ia);
      wb[j] = w(j, ib);
    }
    Mat a = v.col(ia), b = v.col(ib);
    for (int j = 0; j < v.cols; ++j)
      for (int r = 0; r < dim; ++r)
        v.at(r, j) = R.add(R.sub(v(r, j), R.mul(wb[j], a(r, 0))), R.mul(wa[j], b(r, 0)));
  }
  return out;
}

// Columns spanning W^perp: (I - pi) with pi = w * G_W^{-1} * w^T * omega.
Mat perp_projector(const Mat& w, const Mat& gram) {
  Mat gw = mat_mul(mat_mul(w.transpose(), gram), w);
  auto gwinv = inverse(gw);
  if (!gwinv) throw PreconditionError("degenerate", "perp: submodule is not symplectic");
  Mat pi = mat_mul(mat_mul(mat_mul(w, *gwinv), w.transpose()), gram);
  return mat_sub(Mat::identity(w.ring, w.rows), pi);
}

}  // namespace

// ---------------------------------------------------------------- forms

SymplecticForm SymplecticForm::standard(RingPtr r, int pairs) {
  if (pairs < 0) throw PreconditionError("bad_rank", "negative rank");
  Mat g(r, 2 * pairs, 2 * pairs);
  for (int i = 0; i < pairs; ++i) {
    g.at(2 * i, 2 * i + 1) = r->one();
    g.at(2 * i + 1, 2 * i) = r->neg(r->one());
  }
  return {r, g};
}

bool SymplecticForm::valid() const {
  const auto& R = *ring;
  if (gram.rows != gram.cols || gram.rows % 2) return false;
  for (int i = 0; i < gram.rows; ++i) {
    if (gram(i, i)) return false;
    for (int j = 0; j < i; ++j)
      if (gram(i, j) != R.neg(gram(j, i))) return false;
  }
  return gram.rows == 0 || R.is_unit(det_unbounded(gram));
}

Elem SymplecticForm::pair(const Mat& u, int i, const Mat& v, int j) const {
  const auto& R = *ring;
  Elem acc = 0;
  for (int s = 0; s < gram.rows; ++s)
    for (int t = 0; t < gram.cols; ++t) acc = R.add(acc, R.mul(u(s, i), R.mul(gram(s, t), v(t, j))));
  return acc;
}

nlohmann::json SymplecticForm::to_json() const { return {{"ring", ring->spec()}, {"gram", mat_to_json(gram)}}; }

SymplecticForm SymplecticForm::from_json(const RingPtr& r, const nlohmann::json& j) {
  SymplecticForm f{r, mat_from_json(r, j.is_object() && j.contains("gram") ? j.at("gram") : j)};
  if (!f.valid()) throw PreconditionError("bad_form", "Gram matrix is not alternating and nondegenerate");
  return f;
}

bool symplectic_check(const Mat& f, const SymplecticForm& src, const SymplecticForm& dst) {
  if (f.rows != dst.dim() || f.cols != src.dim())
    throw PreconditionError("dim_mismatch", "symplectic_check: dimensions do not match the forms");
  return mat_mul(mat_mul(f.transpose(), dst.gram), f) == src.gram;
}

bool symplectic_basis_check(const Mat& basis, const SymplecticForm& form) {
  if (basis.rows != form.dim()) throw PreconditionError("dim_mismatch", "basis vectors have the wrong length");
  if (basis.cols != form.dim() || !inverse(basis)) return false;
  return mat_mul(mat_mul(basis.transpose(), form.gram), basis) == omega(basis.ring, basis.cols / 2);
}

Mat perp(const Mat& w, const SymplecticForm& form) {
  if (w.rows != form.dim()) throw PreconditionError("dim_mismatch", "perp: vectors have the wrong length");
  if (w.cols % 2) throw PreconditionError("degenerate", "perp: odd rank submodule");
  const int k = (w.rows - w.cols) / 2;
  Mat p = perp_projector(w, form.gram);
  const auto& R = w.ring;
  Mat out;
  if (R->is_local()) {
    out = symplectic_basis_local(p, k, form.gram);
  } else {
    std::vector<Mat> parts;
    for (std::size_t q = 0; q < R->local_factors().count(); ++q)
      parts.push_back(symplectic_basis_local(project(p, q), k, project(form.gram, q)));
    out = lift(R, parts);
  }
  if (!inverse(hstack(w, out)))
    throw InvariantViolation("perp: V is not the direct sum of W and its perpendicular");
  return out;
}

std::uint64_t sp_order(const FiniteRing& r, int n) {
  std::uint64_t out = 1;
  for (const auto& f : r.local_factors().factors) {
    std::uint64_t p = 2;
    while (f->size() % p) ++p;
    std::uint64_t mi = f->size() / p;
    out = sat_mul(out, sat_pow(p, static_cast<std::uint64_t>(n) * n));
    for (int i = 1; i <= n; ++i) out = sat_mul(out, sat_pow(p, 2 * i) - 1);
    out = sat_mul(out, sat_pow(mi, static_cast<std::uint64_t>(n) * (2 * n + 1)));
  }
  return out;
}

// ---------------------------------------------------------------- category

SiCategory::SiCategory(RingPtr r, bool ordered, std::uint64_t budget)
    : Category(budget), ring_(std::move(r)), ordered_(ordered) {}

std::uint64_t SiCategory::hom_count(int m, int n) const {
  if (m > n || m < 0) return 0;
  if (ordered_) return Category::hom_count(m, n);
  return enumeration_bound(m, n);
}

std::uint64_t SiCategory::enumeration_bound(int m, int n) const {
  if (m > n || m < 0) return 0;
  return sp_order(*ring_, n) / sp_order(*ring_, n - m);
}

Mat SiCategory::mat_of(const Morphism& mor) const { return Mat(ring_, 2 * mor.dst, 2 * mor.src, mor.data); }

Morphism SiCategory::make(const Mat& f) const {
  if (f.rows % 2 || f.cols % 2) throw PreconditionError("dim_mismatch", "SI matrices have even dimensions");
  return Morphism{f.cols / 2, f.rows / 2, f.a};
}

Morphism SiCategory::compose(const Morphism& g, const Morphism& f) const {
  if (f.dst != g.src) throw PreconditionError("rank_mismatch", "SI compose: target of f is not source of g");
  return make(mat_mul(mat_of(g), mat_of(f)));
}

Morphism SiCategory::identity(int n) const { return make(Mat::identity(ring_, 2 * n)); }

Morphism SiCategory::sum(const Morphism& f, const Morphism& g) const {
  return make(block_diag(mat_of(f), mat_of(g)));
}

Morphism SiCategory::factor_map(int n, const std::vector<int>& positions) const {
  const int k = static_cast<int>(positions.size());
  Mat f(ring_, 2 * n, 2 * k);
  std::vector<char> seen(n, 0);
  for (int j = 0; j < k; ++j) {
    int p = positions[j];
    if (p < 0 || p >= n || seen[p]) throw PreconditionError("bad_positions", "factor_map: positions must be distinct and < n");
    seen[p] = 1;
    f.at(2 * p, 2 * j) = ring_->one();
    f.at(2 * p + 1, 2 * j + 1) = ring_->one();
  }
  Morphism mor = make(f);
  if (!is_member(mor)) throw PreconditionError("not_a_morphism", "factor_map is not a morphism of " + name());
  return mor;
}

std::optional<Morphism> SiCategory::join(const Morphism& f, const Morphism& g) const {
  if (f.dst != g.dst) throw PreconditionError("rank_mismatch", "SI join: different targets");
  Morphism mor = make(hstack(mat_of(f), mat_of(g)));
  if (!is_member(mor)) return std::nullopt;
  return mor;
}

Morphism SiCategory::complement_of(const Morphism& mor) const {
  if (ordered_) throw PreconditionError("not_complemented", name() + " has no complements");
  check_member(mor, "complement_of");
  Morphism out = make(perp(mat_of(mor), SymplecticForm::standard(ring_, mor.dst)));
  check_member(out, "complement_of");
  return out;
}

std::optional<Morphism> SiCategory::factor_through(const Morphism& big, const Morphism& small) const {
  if (big.dst != small.dst || big.src < small.src) return std::nullopt;
  // psi = omega_a^{-1} B^T omega_n s, the unique candidate since B is injective.
  Mat B = mat_of(big);
  Mat psi = mat_mul(mat_mul(mat_mul(*inverse(omega(ring_, big.src)), B.transpose()), omega(ring_, big.dst)),
                    mat_of(small));
  Morphism out = make(psi);
  if (!is_member(out) || compose(big, out) != small) return std::nullopt;
  return out;
}

bool SiCategory::is_member(const Morphism& mor) const {
  const int m = mor.src, n = mor.dst;
  if (m < 0 || n < m || mor.data.size() != 4 * static_cast<std::size_t>(m) * n) return false;
  for (Elem x : mor.data)
    if (!ring_->valid(x)) return false;
  Mat f = mat_of(mor);
  if (mat_mul(mat_mul(f.transpose(), omega(ring_, n)), f) != omega(ring_, m)) return false;
  if (ordered_ && !row_adapted(f)) return false;
  return true;
}

nlohmann::json SiCategory::payload_json(const Morphism& mor) const { return {{"f", mat_to_json(mat_of(mor))}}; }

Morphism SiCategory::from_payload(int src, int dst, const nlohmann::json& payload) const {
  const auto& j = payload.is_object() && payload.contains("f") ? payload.at("f") : payload;
  Mat f = mat_from_json(ring_, j, dst >= 0 ? 2 * dst : -1, src >= 0 ? 2 * src : -1);
  if ((src >= 0 && f.cols != 2 * src) || (dst >= 0 && f.rows != 2 * dst))
    throw PreconditionError("bad_morphism", "SI payload shape does not match src/dst");
  return make(f);
}

std::vector<Morphism> SiCategory::enumerate(int m, int n) const {
  const auto& R = *ring_;
  const int dim = 2 * n, k = 2 * m;
  std::vector<Morphism> out;
  const auto vecs = all_vectors(R, dim);
  const std::size_t nvec = dim ? vecs.size() / dim : 1;
  const Mat gram = omega(ring_, n);
  // Omega * v for every vector, so pairings are dot products.
  std::vector<Elem> ov(vecs.size());
  for (std::size_t v = 0; v < nvec; ++v)
    for (int i = 0; i < dim; ++i) {
      Elem acc = 0;
      for (int t = 0; t < dim; ++t)
        if (gram(i, t)) acc = R.add(acc, R.mul(gram(i, t), vecs[v * dim + t]));
      ov[v * dim + i] = acc;
    }
  auto w = [&](std::size_t u, std::size_t v) {
    Elem acc = 0;
    for (int i = 0; i < dim; ++i) acc = R.add(acc, R.mul(vecs[u * dim + i], ov[v * dim + i]));
    return acc;
  };
  std::vector<std::size_t> cols(k);
  auto rec = [&](auto&& self, int c) -> void {
    if (c == k) {
      Morphism mor{m, n, std::vector<Elem>(static_cast<std::size_t>(dim) * k)};
      for (int j = 0; j < k; ++j)
        for (int i = 0; i < dim; ++i) mor.data[static_cast<std::size_t>(i) * k + j] = vecs[cols[j] * dim + i];
      if (!ordered_ || row_adapted(mat_of(mor))) out.push_back(std::move(mor));
      return;
    }
    for (std::size_t v = 0; v < nvec; ++v) {
      bool ok = true;
      for (int j = 0; j < c && ok; ++j) {
        Elem want = (c % 2 == 1 && j == c - 1) ? R.neg(R.one()) : Elem(0);
        ok = w(v, cols[j]) == want;  // omega(c_c, c_j)
      }
      if (!ok) continue;
      cols[c] = v;
      self(self, c + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

SiPtr make_si(RingPtr r, std::uint64_t budget) { return std::make_shared<SiCategory>(std::move(r), false, budget); }
SiPtr make_osi(RingPtr r, std::uint64_t budget) { return std::make_shared<SiCategory>(std::move(r), true, budget); }

// ---------------------------------------------------------------- factorization

OsiFactorization osi_factor(const Mat& f) {
  if (f.rows % 2 || f.cols % 2 || f.cols > f.rows) throw PreconditionError("dim_mismatch", "osi_factor: bad shape");
  const auto& r = f.ring;
  auto src = SymplecticForm::standard(r, f.cols / 2);
  auto dst = SymplecticForm::standard(r, f.rows / 2);
  if (!symplectic_check(f, src, dst)) throw PreconditionError("bad_morphism", "osi_factor: not a symplectic map");
  auto s = factor_surjection(f.transpose());
  Mat f1 = s.f1.transpose(), f2 = s.f2.transpose();
  auto f2inv = inverse(f2);
  if (!f2inv) throw InvariantViolation("osi_factor: f2 not invertible");
  SymplecticForm lambda{r, mat_mul(mat_mul(f2inv->transpose(), src.gram), *f2inv)};
  if (mat_mul(f1, f2) != f || !symplectic_check(f1, lambda, dst) || !symplectic_check(f2, src, lambda))
    throw InvariantViolation("osi_factor: recomposition failed");
  return {f1, f2, lambda};
}

}  // namespace ficat
