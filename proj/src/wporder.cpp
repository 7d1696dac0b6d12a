#include "ficat/wporder.hpp"

#include <algorithm>
#include <set>

#include "ficat/error.hpp"
#include "ficat/si.hpp"

namespace ficat {

namespace {

constexpr int kSpade = -1;

std::vector<Mat> local_parts(const Mat& m) {
  const auto& dec = m.ring->local_factors();
  if (dec.count() == 1) return {m};
  std::vector<Mat> out;
  for (std::size_t q = 0; q < dec.count(); ++q) out.push_back(project(m, q));
  return out;
}

Mat lift_parts(const RingPtr& r, std::vector<Mat> parts) {
  if (parts.size() == 1) {
    parts[0].ring = r;
    return parts[0];
  }
  return lift(r, parts);
}

std::vector<int> pivots_or_throw(const Mat& m, const char* what) {
  auto s = column_pivots_local(m);
  if (!s) throw PreconditionError("not_adapted", std::string(what) + ": matrix is not adapted");
  return *s;
}

std::vector<int> row_vec(const Mat& m, int i) {
  std::vector<int> out(m.cols);
  for (int j = 0; j < m.cols; ++j) out[j] = m(i, j);
  return out;
}

std::vector<int> col_vec(const Mat& m, int j) {
  std::vector<int> out(m.rows);
  for (int i = 0; i < m.rows; ++i) out[i] = m(i, j);
  return out;
}

std::strong_ordering lex(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

// Insert column `src` of fp at position l and row `src` of f at position l,
// then solve the dependent rows of f from fp f = 1.
std::pair<Mat, Mat> insertion_step(const Mat& f, const Mat& fp, int k, int l) {
  const auto& R = *f.ring;
  const int n = f.rows, d = f.cols;
  Mat np(f.ring, d, n + 1);
  for (int i = 0; i < d; ++i)
    for (int c = 0; c <= n; ++c) np.at(i, c) = c < l ? fp(i, c) : c == l ? fp(i, k) : fp(i, c - 1);
  auto s = pivots_or_throw(np, "insertion step");
  std::vector<char> pivot(n + 1, 0);
  for (int p : s) pivot[p] = 1;
  Mat nf(f.ring, n + 1, d);
  for (int r = 0; r <= n; ++r) {
    if (pivot[r]) continue;
    int from = r < l ? r : r == l ? k : r - 1;
    for (int j = 0; j < d; ++j) nf.at(r, j) = f(from, j);
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Elem acc = i == j ? R.one() : Elem(0);
      for (int c = 0; c <= n; ++c)
        if (!pivot[c]) acc = R.sub(acc, R.mul(np(i, c), nf(c, j)));
      nf.at(s[i], j) = acc;
    }
  }
  return {nf, np};
}

std::strong_ordering ovic_local_cmp(const Mat& f, const Mat& fp, const Mat& g, const Mat& gp) {
  auto sf = pivots_or_throw(fp, "ovic order");
  auto sg = pivots_or_throw(gp, "ovic order");
  if (auto c = lex(sf, sg); c != 0) return c;
  for (int j = 0; j < fp.cols; ++j)
    if (auto c = lex(col_vec(fp, j), col_vec(gp, j)); c != 0) return c;
  std::vector<char> pivot(f.rows, 0);
  for (int p : sf) pivot[p] = 1;
  for (int i = 0; i < f.rows; ++i) {
    if (pivot[i]) continue;
    if (auto c = lex(row_vec(f, i), row_vec(g, i)); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void check_same_source(const Morphism& f, const Morphism& g) {
  if (f.src != g.src) throw PreconditionError("rank_mismatch", "order comparison needs a shared source rank");
}

}  // namespace

bool word_leq(WordVariant variant, const Word& a, const Word& b) {
  std::size_t i = 0;
  std::set<Letter> matched;
  for (const auto& letter : b) {
    if (i < a.size() && a[i] == letter) {
      if (variant == WordVariant::Tilde) matched.insert(letter);
      ++i;
      continue;
    }
    if (variant == WordVariant::Tilde && !matched.count(letter)) return false;
  }
  return i == a.size();
}

// ---------------------------------------------------------------- OVIC

Word ovic_key(const Mat& f, const Mat& fp) {
  auto s = pivots_or_throw(fp, "ovic_key");
  std::vector<char> pivot(f.rows, 0);
  for (int p : s) pivot[p] = 1;
  Word w;
  for (int i = 0; i < f.rows; ++i) {
    if (pivot[i]) {
      w.push_back({kSpade, kSpade});
      continue;
    }
    Letter l = row_vec(f, i);
    auto c = col_vec(fp, i);
    l.insert(l.end(), c.begin(), c.end());
    w.push_back(std::move(l));
  }
  return w;
}

std::vector<Word> ovic_keys(const VicCategory& cat, const Morphism& mor) {
  auto fs = local_parts(cat.f_of(mor));
  auto ps = local_parts(cat.fp_of(mor));
  std::vector<Word> out;
  for (std::size_t q = 0; q < fs.size(); ++q) out.push_back(ovic_key(fs[q], ps[q]));
  return out;
}

bool ovic_preceq(const VicCategory& cat, const Morphism& f, const Morphism& g) {
  check_same_source(f, g);
  if (f.dst > g.dst) return false;
  auto a = ovic_keys(cat, f), b = ovic_keys(cat, g);
  for (std::size_t q = 0; q < a.size(); ++q)
    if (!word_leq(WordVariant::Tilde, a[q], b[q])) return false;
  return true;
}

bool ovic_preceq_bfs(const VicCategory& cat, const Morphism& f, const Morphism& g, bool allow_append) {
  check_same_source(f, g);
  if (f.dst > g.dst) return false;
  auto fs = local_parts(cat.f_of(f)), fps = local_parts(cat.fp_of(f));
  auto gs = local_parts(cat.f_of(g)), gps = local_parts(cat.fp_of(g));
  for (std::size_t q = 0; q < fs.size(); ++q) {
    std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> level{{fs[q].a, fps[q].a}};
    const int d = f.src;
    for (int t = f.dst; t < g.dst; ++t) {
      std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> next;
      for (const auto& [fa, pa] : level) {
        Mat h(fs[q].ring, t, d, fa), hp(fs[q].ring, d, t, pa);
        auto s = pivots_or_throw(hp, "bfs");
        for (int k = 0; k < t; ++k) {
          if (std::find(s.begin(), s.end(), k) != s.end()) continue;
          for (int l = k; l < (allow_append ? t + 1 : t); ++l) {
            auto [nf, np] = insertion_step(h, hp, k, l);
            next.insert({nf.a, np.a});
          }
        }
      }
      level = std::move(next);
    }
    if (!level.count({gs[q].a, gps[q].a})) return false;
  }
  return true;
}

std::strong_ordering ovic_total_cmp(const VicCategory& cat, const Morphism& f, const Morphism& g) {
  check_same_source(f, g);
  if (f.dst != g.dst) return f.dst <=> g.dst;
  auto fs = local_parts(cat.f_of(f)), fps = local_parts(cat.fp_of(f));
  auto gs = local_parts(cat.f_of(g)), gps = local_parts(cat.fp_of(g));
  for (std::size_t q = 0; q < fs.size(); ++q)
    if (auto c = ovic_local_cmp(fs[q], fps[q], gs[q], gps[q]); c != 0) return c;
  return std::strong_ordering::equal;
}

InsertionMap ovic_insertion(const RingPtr& r, int n, int k, int l, const std::vector<int>& s, const std::vector<Elem>& v) {
  if (!r->is_local()) throw PreconditionError("not_local", "ovic_insertion needs a local ring");
  if (!(0 <= k && k <= l && l <= n && k < n)) throw PreconditionError("bad_insertion", "need k <= l <= n and k < n");
  if (s.size() != v.size()) throw PreconditionError("bad_insertion", "S and v differ in length");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= n || (i && s[i] <= s[i - 1])) throw PreconditionError("bad_insertion", "S must increase within [0, n)");
    if (s[i] >= l && r->is_unit(v[i])) throw PreconditionError("bad_insertion", "v has a unit at or after the insertion point");
  }
  std::vector<Elem> vhat(n, 0);
  for (std::size_t i = 0; i < s.size(); ++i) vhat[s[i]] = v[i];
  InsertionMap out{Mat(r, n + 1, n), Mat(r, n, n + 1)};
  for (int i = 0; i < n; ++i) {
    int pos = i < l ? i : i + 1;
    out.phip.at(i, pos) = r->one();
    out.phip.at(i, l) = vhat[i];
    out.phi.at(pos, i) = r->one();
    out.phi.at(pos, k) = r->sub(out.phi(pos, k), vhat[i]);
  }
  out.phi.at(l, k) = r->one();
  if (!mat_mul(out.phip, out.phi).is_identity() || !column_pivots_local(out.phip))
    throw InvariantViolation("ovic_insertion: result is not an OVIC morphism");
  return out;
}

Morphism ovic_phi_for(const VicCategory& cat, const Morphism& f, const Morphism& g) {
  if (!ovic_preceq(cat, f, g)) throw PreconditionError("not_preceq", "ovic_phi_for: f is not below g");
  auto fs = local_parts(cat.f_of(f)), fps = local_parts(cat.fp_of(f));
  auto gs = local_parts(cat.f_of(g)), gps = local_parts(cat.fp_of(g));
  std::vector<Mat> phis, phips;
  for (std::size_t q = 0; q < fs.size(); ++q) {
    const auto& R = fs[q].ring;
    const Word target = ovic_key(gs[q], gps[q]);
    Mat h = fs[q], hp = fps[q];
    Mat phi = Mat::identity(R, f.dst), phip = Mat::identity(R, f.dst);
    for (int t = f.dst; t < g.dst; ++t) {
      auto s = pivots_or_throw(hp, "ovic_phi_for");
      bool stepped = false;
      for (int k = 0; k < t && !stepped; ++k) {
        if (std::find(s.begin(), s.end(), k) != s.end()) continue;
        for (int l = k; l <= t && !stepped; ++l) {
          std::vector<Elem> v(hp.rows);
          for (int i = 0; i < hp.rows; ++i) v[i] = hp(i, k);
          auto ins = ovic_insertion(R, t, k, l, s, v);
          Mat nh = mat_mul(ins.phi, h), nhp = mat_mul(hp, ins.phip);
          if (!word_leq(WordVariant::Tilde, ovic_key(nh, nhp), target)) continue;
          h = nh;
          hp = nhp;
          phi = mat_mul(ins.phi, phi);
          phip = mat_mul(phip, ins.phip);
          stepped = true;
        }
      }
      if (!stepped) throw InvariantViolation("ovic_phi_for: no insertion step stays below g");
    }
    if (!(h == gs[q]) || !(hp == gps[q])) throw InvariantViolation("ovic_phi_for: insertion path missed g");
    phis.push_back(phi);
    phips.push_back(phip);
  }
  Morphism out = cat.make(lift_parts(cat.ring(), phis), lift_parts(cat.ring(), phips));
  cat.check_member(out, "ovic_phi_for");
  if (cat.compose(out, f) != g) throw InvariantViolation("ovic_phi_for: g != phi ∘ f");
  return out;
}

// ---------------------------------------------------------------- OSI

Word osi_key(const Mat& f) {
  if (f.rows % 2) throw PreconditionError("dim_mismatch", "osi_key: odd row count");
  auto s = pivots_or_throw(f.transpose(), "osi_key");
  std::vector<char> pivot(f.rows, 0);
  for (int p : s) pivot[p] = 1;
  auto part = [&](int i) { return pivot[i] ? Letter{kSpade} : row_vec(f, i); };
  Word w;
  for (int i = 0; i < f.rows / 2; ++i) {
    Letter l = part(2 * i);
    l.push_back(-2);
    auto b = part(2 * i + 1);
    l.insert(l.end(), b.begin(), b.end());
    w.push_back(std::move(l));
  }
  return w;
}

std::vector<Word> osi_keys(const Mat& f) {
  std::vector<Word> out;
  for (const auto& p : local_parts(f)) out.push_back(osi_key(p));
  return out;
}

bool osi_preceq(const Mat& f, const Mat& g) {
  if (f.cols != g.cols) throw PreconditionError("rank_mismatch", "order comparison needs a shared source");
  if (f.rows > g.rows) return false;
  auto a = osi_keys(f), b = osi_keys(g);
  for (std::size_t q = 0; q < a.size(); ++q)
    if (!word_leq(WordVariant::Higman, a[q], b[q])) return false;
  return true;
}

namespace {

// Pair indices of g (0-based) deleted so that g becomes f, earliest match.
std::optional<std::vector<int>> osi_deleted_pairs(const Mat& f, const Mat& g) {
  Word a = osi_key(f), b = osi_key(g);
  std::vector<int> deleted;
  std::size_t i = 0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (i < a.size() && a[i] == b[j]) {
      ++i;
      continue;
    }
    for (int x : b[j])
      if (x == kSpade) return std::nullopt;
    deleted.push_back(static_cast<int>(j));
  }
  if (i != a.size()) return std::nullopt;
  return deleted;
}

Mat delete_pairs(const Mat& g, const std::vector<int>& pairs) {
  std::vector<int> keep;
  for (int r = 0; r < g.rows; ++r)
    if (std::find(pairs.begin(), pairs.end(), r / 2) == pairs.end()) keep.push_back(r);
  return g.select_rows(keep);
}

}  // namespace

bool osi_preceq_deletion(const Mat& f, const Mat& g) {
  if (f.cols != g.cols) throw PreconditionError("rank_mismatch", "order comparison needs a shared source");
  if (f.rows > g.rows || f.rows % 2 || g.rows % 2) return false;
  auto fs = local_parts(f), gs = local_parts(g);
  const int np = g.rows / 2, k = (g.rows - f.rows) / 2;
  for (std::size_t q = 0; q < fs.size(); ++q) {
    auto sg = pivots_or_throw(gs[q].transpose(), "osi order");
    std::vector<int> allowed;
    for (int i = 0; i < np; ++i)
      if (std::find(sg.begin(), sg.end(), 2 * i) == sg.end() && std::find(sg.begin(), sg.end(), 2 * i + 1) == sg.end())
        allowed.push_back(i);
    if (static_cast<int>(allowed.size()) < k) return false;
    bool found = false;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    do {
      std::vector<int> pairs;
      for (int i : c) pairs.push_back(allowed[i]);
      if (delete_pairs(gs[q], pairs) == fs[q]) found = true;
    } while (!found && next_combination(c, static_cast<int>(allowed.size())));
    if (!found) return false;
  }
  return true;
}

std::strong_ordering osi_total_cmp(const Mat& f, const Mat& g) {
  if (f.cols != g.cols) throw PreconditionError("rank_mismatch", "order comparison needs a shared source");
  if (f.rows != g.rows) return f.rows <=> g.rows;
  auto fs = local_parts(f), gs = local_parts(g);
  for (std::size_t q = 0; q < fs.size(); ++q) {
    auto sf = pivots_or_throw(fs[q].transpose(), "osi order");
    auto sg = pivots_or_throw(gs[q].transpose(), "osi order");
    if (auto c = lex(sf, sg); c != 0) return c;
    for (int i = 0; i < f.rows; ++i)
      if (auto c = lex(row_vec(fs[q], i), row_vec(gs[q], i)); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Mat osi_insertion_phi(const Mat& f, const Mat& g) {
  if (!osi_preceq(f, g)) throw PreconditionError("not_preceq", "osi_insertion_phi: f is not below g");
  auto fs = local_parts(f), gs = local_parts(g);
  const int n2 = f.rows, np2 = g.rows;
  std::vector<Mat> parts;
  for (std::size_t q = 0; q < fs.size(); ++q) {
    const auto& R = fs[q].ring;
    auto pairs = osi_deleted_pairs(fs[q], gs[q]);
    if (!pairs) throw InvariantViolation("osi_insertion_phi: no deletable pairs");
    auto s = pivots_or_throw(fs[q].transpose(), "osi_insertion_phi");
    Mat phi(R, np2, n2);
    int kept = 0;
    for (int r = 0; r < np2; ++r) {
      if (std::find(pairs->begin(), pairs->end(), r / 2) != pairs->end()) {
        // Deleted row j: r̂_j carries row j of g at the pivot positions of f.
        for (std::size_t t = 0; t < s.size(); ++t) phi.at(r, s[t]) = gs[q](r, static_cast<int>(t));
      } else {
        phi.at(r, kept++) = R->one();
      }
    }
    parts.push_back(std::move(phi));
  }
  Mat phi = lift_parts(f.ring, parts);
  const int n = n2 / 2, np = np2 / 2;
  if (!symplectic_check(phi, SymplecticForm::standard(f.ring, n), SymplecticForm::standard(f.ring, np)))
    throw InvariantViolation("osi_insertion_phi: phi is not symplectic");
  if (!row_adapted(phi)) throw InvariantViolation("osi_insertion_phi: phi is not row-adapted");
  if (mat_mul(phi, f) != g) throw InvariantViolation("osi_insertion_phi: g != phi f");
  return phi;
}

}  // namespace ficat
