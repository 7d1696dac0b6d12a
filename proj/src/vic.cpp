#include "ficat/vic.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "ficat/error.hpp"
#include "ficat/json_io.hpp"

namespace ficat {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  return p > kMax ? kMax : static_cast<std::uint64_t>(p);
}

std::uint64_t sat_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t out = 1;
  while (e--) out = sat_mul(out, b);
  return out;
}

// Residue field size q and maximal ideal size for a local ring Z/p^k.
std::pair<std::uint64_t, std::uint64_t> local_params(const FiniteRing& r) {
  std::uint64_t n = r.size(), p = 2;
  while (n % p) ++p;
  return {p, n / p};
}

// Row-major product of raw arrays: out (ar x bc) = A (ar x ac) * B (ac x bc).
void mul_raw(const FiniteRing& R, const Elem* A, int ar, int ac, const Elem* B, int bc, Elem* out) {
  for (int i = 0; i < ar; ++i)
    for (int j = 0; j < bc; ++j) {
      Elem acc = 0;
      for (int k = 0; k < ac; ++k) {
        Elem x = A[i * ac + k];
        if (x) acc = R.add(acc, R.mul(x, B[k * bc + j]));
      }
      out[i * bc + j] = acc;
    }
}

}  // namespace

// ---------------------------------------------------------------- units

UnitSubgroup UnitSubgroup::all(RingPtr r) {
  UnitSubgroup u{r, {}};
  for (std::size_t x = 0; x < r->size(); ++x)
    if (r->is_unit(static_cast<Elem>(x))) u.members.push_back(static_cast<Elem>(x));
  return u;
}

UnitSubgroup UnitSubgroup::make(RingPtr r, const std::vector<long long>& ints) {
  if (ints.empty()) return all(r);
  UnitSubgroup u{r, {}};
  for (long long v : ints) u.members.push_back(r->from_int(v));
  std::sort(u.members.begin(), u.members.end());
  u.members.erase(std::unique(u.members.begin(), u.members.end()), u.members.end());
  auto fail = [&](const std::string& why) { return PreconditionError("bad_units", "unit subgroup: " + why); };
  if (!u.contains(r->one())) throw fail("must contain 1");
  for (Elem a : u.members) {
    if (!r->is_unit(a)) throw fail(std::to_string(a) + " is not a unit");
    if (!u.contains(*r->inverse(a))) throw fail("not closed under inverses");
    for (Elem b : u.members)
      if (!u.contains(r->mul(a, b))) throw fail("not closed under products");
  }
  return u;
}

bool UnitSubgroup::contains(Elem x) const { return std::binary_search(members.begin(), members.end(), x); }

bool UnitSubgroup::is_all() const { return members.size() == all(ring).members.size(); }

nlohmann::json UnitSubgroup::to_json() const {
  auto m = nlohmann::json::array();
  for (Elem x : members) m.push_back(elem_to_json(*ring, x));
  return {{"ring", ring->spec()}, {"members", m}};
}

// ---------------------------------------------------------------- counts

std::uint64_t gl_order(const FiniteRing& r, int n) {
  std::uint64_t out = 1;
  for (const auto& f : r.local_factors().factors) {
    auto [q, mi] = local_params(*f);
    out = sat_mul(out, sat_pow(mi, static_cast<std::uint64_t>(n) * n));
    for (int i = 0; i < n; ++i) out = sat_mul(out, sat_pow(q, n) - sat_pow(q, i));
  }
  return out;
}

std::uint64_t vic_hom_formula(const FiniteRing& r, int m, int n) {
  if (m > n) return 0;
  std::uint64_t out = 1;
  for (const auto& f : r.local_factors().factors) {
    auto [q, mi] = local_params(*f);
    out = sat_mul(out, sat_pow(mi, static_cast<std::uint64_t>(n) * m));
    for (int i = 0; i < m; ++i) out = sat_mul(out, sat_pow(q, n) - sat_pow(q, i));
    out = sat_mul(out, sat_pow(f->size(), static_cast<std::uint64_t>(m) * (n - m)));
  }
  return out;
}

std::vector<Elem> all_vectors(const FiniteRing& r, int k) {
  std::uint64_t count = sat_pow(r.size(), k);
  if (count > 50'000'000) throw BudgetExceeded(count, 50'000'000, "vectors of " + r.spec() + "^" + std::to_string(k));
  std::vector<Elem> out;
  out.reserve(count * k);
  std::vector<Elem> cur(k, 0);
  for (std::uint64_t c = 0; c < count; ++c) {
    out.insert(out.end(), cur.begin(), cur.end());
    for (int i = k - 1; i >= 0; --i) {
      if (++cur[i] < r.size()) break;
      cur[i] = 0;
    }
  }
  return out;
}

// ---------------------------------------------------------------- category

VicCategory::VicCategory(RingPtr r, UnitSubgroup u, bool ordered, std::uint64_t budget)
    : Category(budget), ring_(std::move(r)), units_(std::move(u)), ordered_(ordered) {
  if (!units_.ring || !(*units_.ring == *ring_)) throw PreconditionError("bad_units", "unit subgroup over another ring");
  if (ordered_ && !units_.is_all()) throw PreconditionError("bad_units", "OVIC takes no unit subgroup");
}

std::string VicCategory::name() const {
  std::string out = kind() + "(" + ring_->spec();
  if (!units_.is_all()) {
    out += ",{";
    for (std::size_t i = 0; i < units_.members.size(); ++i) {
      if (i) out += ",";
      out += elem_to_json(*ring_, units_.members[i]).dump();
    }
    out += "}";
  }
  return out + ")";
}

bool VicCategory::symmetric() const { return !ordered_ && units_.contains(ring_->neg(ring_->one())); }

std::uint64_t VicCategory::hom_count(int m, int n) const {
  if (m > n) return 0;
  if (ordered_) return vic_hom_formula(*ring_, m, n) / gl_order(*ring_, m);
  if (m < n) return vic_hom_formula(*ring_, m, n);
  if (n == 0) return 1;
  auto all_units = UnitSubgroup::all(ring_).members.size();
  return gl_order(*ring_, n) / all_units * units_.members.size();
}

const std::vector<std::shared_ptr<const VicCategory>>& VicCategory::factor_categories() const {
  std::lock_guard<std::mutex> lock(factor_mu_);
  if (factor_cats_.empty())
    for (const auto& f : ring_->local_factors().factors)
      factor_cats_.push_back(std::make_shared<VicCategory>(f, UnitSubgroup::all(f), ordered_, budget()));
  return factor_cats_;
}

std::uint64_t VicCategory::count_via_factors(int m, int n) const {
  if (m > n) return 0;
  if (ring_->is_local()) return hom(m, n).size();
  const auto& cats = factor_categories();
  if (m < n || ordered_ || units_.is_all() || n == 0) {
    std::uint64_t out = 1;
    for (const auto& c : cats) out = sat_mul(out, c->hom(m, n).size());
    return out;
  }
  // Histogram of determinants per factor, then sum over tuples lifting into U.
  const auto& dec = ring_->local_factors();
  std::vector<std::map<Elem, std::uint64_t>> hist(cats.size());
  for (std::size_t q = 0; q < cats.size(); ++q)
    for (const auto& mor : cats[q]->hom(n, n)) ++hist[q][det_unbounded(cats[q]->f_of(mor))];
  std::uint64_t total = 0;
  std::vector<Elem> tuple(cats.size());
  auto rec = [&](auto&& self, std::size_t q, std::uint64_t acc) -> void {
    if (q == cats.size()) {
      if (units_.contains(dec.lift(tuple))) total += acc;
      return;
    }
    for (auto [d, c] : hist[q]) {
      tuple[q] = d;
      self(self, q + 1, sat_mul(acc, c));
    }
  };
  rec(rec, 0, 1);
  return total;
}

Mat VicCategory::f_of(const Morphism& mor) const {
  std::size_t k = static_cast<std::size_t>(mor.src) * mor.dst;
  return Mat(ring_, mor.dst, mor.src, std::vector<Elem>(mor.data.begin(), mor.data.begin() + k));
}

Mat VicCategory::fp_of(const Morphism& mor) const {
  std::size_t k = static_cast<std::size_t>(mor.src) * mor.dst;
  return Mat(ring_, mor.src, mor.dst, std::vector<Elem>(mor.data.begin() + k, mor.data.end()));
}

Morphism VicCategory::make(const Mat& f, const Mat& fp) const {
  if (fp.rows != f.cols || fp.cols != f.rows) throw PreconditionError("dim_mismatch", "VIC pair with mismatched shapes");
  Morphism mor{f.cols, f.rows, f.a};
  mor.data.insert(mor.data.end(), fp.a.begin(), fp.a.end());
  return mor;
}

Morphism VicCategory::compose(const Morphism& g, const Morphism& f) const {
  if (f.dst != g.src) throw PreconditionError("rank_mismatch", "VIC compose: target of f is not source of g");
  const int a = f.src, b = f.dst, c = g.dst;
  Morphism h{a, c, std::vector<Elem>(2 * static_cast<std::size_t>(a) * c)};
  const Elem* ff = f.data.data();
  const Elem* fp = ff + static_cast<std::size_t>(a) * b;
  const Elem* gg = g.data.data();
  const Elem* gp = gg + static_cast<std::size_t>(b) * c;
  mul_raw(*ring_, gg, c, b, ff, a, h.data.data());                                  // g f
  mul_raw(*ring_, fp, a, b, gp, c, h.data.data() + static_cast<std::size_t>(a) * c);  // f' g'
  return h;
}

Morphism VicCategory::identity(int n) const {
  Mat id = Mat::identity(ring_, n);
  return make(id, id);
}

Morphism VicCategory::sum(const Morphism& f, const Morphism& g) const {
  return make(block_diag(f_of(f), f_of(g)), block_diag(fp_of(f), fp_of(g)));
}

Morphism VicCategory::factor_map(int n, const std::vector<int>& positions) const {
  const int k = static_cast<int>(positions.size());
  Mat f(ring_, n, k);
  std::vector<char> seen(n, 0);
  for (int j = 0; j < k; ++j) {
    int p = positions[j];
    if (p < 0 || p >= n || seen[p]) throw PreconditionError("bad_positions", "factor_map: positions must be distinct and < n");
    seen[p] = 1;
    f.at(p, j) = ring_->one();
  }
  Morphism mor = make(f, f.transpose());
  if (!is_member(mor)) throw PreconditionError("not_a_morphism", "factor_map is not a morphism of " + name());
  return mor;
}

std::optional<Morphism> VicCategory::join(const Morphism& f, const Morphism& g) const {
  if (f.dst != g.dst) throw PreconditionError("rank_mismatch", "VIC join: different targets");
  Morphism mor = make(hstack(f_of(f), f_of(g)), vstack(fp_of(f), fp_of(g)));
  if (!is_member(mor)) return std::nullopt;
  return mor;
}

std::pair<Mat, Mat> VicCategory::complement_local(const Mat& f, const Mat& fp) const {
  const auto& R = f.ring;
  const int n = f.rows, m = f.cols, k = n - m;
  if (k == 0) return {Mat(R, n, 0), Mat(R, 0, n)};
  Mat P = mat_sub(Mat::identity(R, n), mat_mul(f, fp));
  std::vector<int> I(k);
  std::iota(I.begin(), I.end(), 0);
  do {
    Mat B = hstack(f, P.select_cols(I));
    if (!R->is_unit(det_unbounded(B))) continue;
    auto inv = inverse(B);
    std::vector<int> last(k);
    std::iota(last.begin(), last.end(), m);
    Mat cp = inv->select_rows(last);
    auto [c1, f2] = factor_surjection(cp);
    return {mat_mul(P.select_cols(I), f2), c1};
  } while (next_combination(I, n));
  throw InvariantViolation("VIC complement: kernel of f' has no basis among projected columns");
}

Morphism VicCategory::complement_of(const Morphism& mor) const {
  if (ordered_) throw PreconditionError("not_complemented", name() + " has no complements");
  Mat f = f_of(mor), fp = fp_of(mor);
  Mat c, c1;
  if (ring_->is_local()) {
    std::tie(c, c1) = complement_local(f, fp);
  } else {
    const auto& dec = ring_->local_factors();
    std::vector<Mat> cs, c1s;
    for (std::size_t q = 0; q < dec.count(); ++q) {
      auto [cq, c1q] = complement_local(project(f, q), project(fp, q));
      cs.push_back(std::move(cq));
      c1s.push_back(std::move(c1q));
    }
    c = lift(ring_, cs);
    c1 = lift(ring_, c1s);
  }
  c.ring = c1.ring = ring_;
  const int k = c.cols;
  if (k > 0) {
    // Orientation: rescale the first complement vector so that [f c] lands in U.
    Elem d = det_unbounded(hstack(f, c));
    if (!units_.contains(d)) {
      Elem u = *ring_->inverse(d);
      for (int i = 0; i < c.rows; ++i) c.at(i, 0) = ring_->mul(u, c(i, 0));
      for (int j = 0; j < c1.cols; ++j) c1.at(0, j) = ring_->mul(d, c1(0, j));
    }
  }
  Morphism out = make(c, c1);
  check_member(out, "complement_of");
  return out;
}

std::optional<Morphism> VicCategory::factor_through(const Morphism& big, const Morphism& small) const {
  if (big.dst != small.dst || big.src < small.src) return std::nullopt;
  // psi = (C' c, c' C) for big = (C, C') and small = (c, c').
  Mat C = f_of(big), Cp = fp_of(big), c = f_of(small), cp = fp_of(small);
  Morphism psi = make(mat_mul(Cp, c), mat_mul(cp, C));
  if (!is_member(psi) || compose(big, psi) != small) return std::nullopt;
  return psi;
}

bool VicCategory::is_member(const Morphism& mor) const {
  const int m = mor.src, n = mor.dst;
  if (m < 0 || n < m || mor.data.size() != 2 * static_cast<std::size_t>(m) * n) return false;
  for (Elem x : mor.data)
    if (!ring_->valid(x)) return false;
  Mat f = f_of(mor), fp = fp_of(mor);
  if (!mat_mul(fp, f).is_identity()) return false;
  if (m == n && m > 0 && !units_.contains(det_unbounded(f))) return false;
  if (ordered_ && !column_adapted(fp)) return false;
  return true;
}

nlohmann::json VicCategory::payload_json(const Morphism& mor) const {
  return {{"f", mat_to_json(f_of(mor))}, {"fp", mat_to_json(fp_of(mor))}};
}

Morphism VicCategory::from_payload(int src, int dst, const nlohmann::json& payload) const {
  if (!payload.is_object() || !payload.contains("f") || !payload.contains("fp"))
    throw PreconditionError("bad_morphism", "VIC payload needs f and fp");
  Mat f = mat_from_json(ring_, payload.at("f"), dst, src);
  Mat fp = mat_from_json(ring_, payload.at("fp"), f.cols, f.rows);
  if ((src >= 0 && f.cols != src) || (dst >= 0 && f.rows != dst))
    throw PreconditionError("bad_morphism", "VIC payload shape does not match src/dst");
  return make(f, fp);
}

std::vector<Morphism> VicCategory::enumerate(int m, int n) const {
  return ring_->is_local() ? enumerate_local(m, n) : enumerate_product(m, n);
}

std::vector<Morphism> VicCategory::enumerate_local(int m, int n) const {
  const auto& R = *ring_;
  const Elem S = static_cast<Elem>(R.size());
  std::vector<Morphism> out;
  const int fn = n * m;
  std::vector<Elem> f(fn, 0);
  const auto vecs = all_vectors(R, n);
  const std::size_t nvec = n ? vecs.size() / n : 1;
  std::vector<std::vector<std::uint32_t>> sol(m);
  std::vector<Elem> prod(m);
  bool more = true;
  while (more) {
    if (m == n) {
      Mat F(ring_, n, n, f);
      if (units_.contains(det_unbounded(F)) || n == 0) {
        auto inv = inverse(F);
        Morphism mor = make(F, *inv);
        if (!ordered_ || column_pivots_local(*inv)) out.push_back(std::move(mor));
      }
    } else {
      for (auto& s : sol) s.clear();
      for (std::size_t v = 0; v < nvec; ++v) {
        const Elem* r = vecs.data() + v * n;
        mul_raw(R, r, 1, n, f.data(), m, prod.data());
        int one_at = -1;
        bool ok = true;
        for (int j = 0; j < m && ok; ++j) {
          if (prod[j] == R.one()) {
            if (one_at >= 0) ok = false;
            one_at = j;
          } else if (prod[j] != 0) {
            ok = false;
          }
        }
        if (ok && one_at >= 0) sol[one_at].push_back(static_cast<std::uint32_t>(v));
      }
      bool all = true;
      for (const auto& s : sol) all = all && !s.empty();
      if (all) {
        // Lexicographic product of the row solution lists.
        std::vector<std::size_t> pick(m, 0);
        while (true) {
          Morphism mor{m, n, f};
          for (int j = 0; j < m; ++j) {
            const Elem* r = vecs.data() + static_cast<std::size_t>(sol[j][pick[j]]) * n;
            mor.data.insert(mor.data.end(), r, r + n);
          }
          if (!ordered_ || column_pivots_local(fp_of(mor))) out.push_back(std::move(mor));
          int j = m - 1;
          while (j >= 0 && ++pick[j] == sol[j].size()) pick[j--] = 0;
          if (j < 0) break;
        }
      }
    }
    more = false;
    for (int i = fn - 1; i >= 0; --i) {
      if (++f[i] < S) { more = true; break; }
      f[i] = 0;
    }
  }
  return out;
}

std::vector<Morphism> VicCategory::enumerate_product(int m, int n) const {
  const auto& cats = factor_categories();
  const auto& dec = ring_->local_factors();
  std::vector<const std::vector<Morphism>*> sets;
  for (const auto& c : cats) sets.push_back(&c->hom(m, n));
  std::vector<Morphism> out;
  for (const auto* s : sets)
    if (s->empty()) return out;
  const std::size_t len = 2 * static_cast<std::size_t>(m) * n;
  std::vector<std::size_t> pick(sets.size(), 0);
  std::vector<Elem> tuple(sets.size());
  while (true) {
    Morphism mor{m, n, std::vector<Elem>(len)};
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t q = 0; q < sets.size(); ++q) tuple[q] = (*sets[q])[pick[q]].data[i];
      mor.data[i] = dec.lift(tuple);
    }
    if (m != n || m == 0 || units_.is_all() || units_.contains(det_unbounded(f_of(mor)))) out.push_back(std::move(mor));
    int q = static_cast<int>(sets.size()) - 1;
    while (q >= 0 && ++pick[q] == sets[q]->size()) pick[q--] = 0;
    if (q < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

VicPtr make_vic(RingPtr r, std::uint64_t budget) {
  auto u = UnitSubgroup::all(r);
  return std::make_shared<VicCategory>(std::move(r), std::move(u), false, budget);
}

VicPtr make_vic(RingPtr r, UnitSubgroup u, std::uint64_t budget) {
  return std::make_shared<VicCategory>(std::move(r), std::move(u), false, budget);
}

VicPtr make_ovic(RingPtr r, std::uint64_t budget) {
  auto u = UnitSubgroup::all(r);
  return std::make_shared<VicCategory>(std::move(r), std::move(u), true, budget);
}

// ---------------------------------------------------------------- factorization

VicFactorization vic_factor(const VicCategory& cat, const Morphism& mor) {
  if (!cat.is_member(mor)) throw PreconditionError("bad_morphism", "vic_factor: not a VIC morphism");
  Mat f = cat.f_of(mor), fp = cat.fp_of(mor);
  auto [f1, f2] = factor_surjection(fp);
  auto f2inv = inverse(f2);
  if (!f2inv) throw InvariantViolation("vic_factor: f2 not invertible");
  VicFactorization out{cat.make(mat_mul(f, f2), f1), cat.make(*f2inv, f2)};
  if (!mat_mul(f1, mat_mul(f, f2)).is_identity() || !column_adapted(f1))
    throw InvariantViolation("vic_factor: first factor is not an OVIC morphism");
  if (cat.compose(out.ovic, out.aut) != mor) throw InvariantViolation("vic_factor: recomposition mismatch");
  return out;
}

// ---------------------------------------------------------------- VI and V

namespace {

template <class Fn>
void for_each_matrix(const RingPtr& r, int rows, int cols, std::uint64_t budget, const char* what, Fn&& fn) {
  std::uint64_t count = sat_pow(r->size(), static_cast<std::uint64_t>(rows) * cols);
  if (count > budget) throw BudgetExceeded(count, budget, what);
  Mat m(r, rows, cols);
  for (std::uint64_t c = 0; c < count; ++c) {
    fn(m);
    for (int i = rows * cols - 1; i >= 0; --i) {
      if (++m.a[i] < r->size()) break;
      m.a[i] = 0;
    }
  }
}

bool has_left_inverse(const Mat& f) {
  // Over each local factor: f is split injective iff some maximal minor is a unit.
  return is_surjective(f.transpose());
}

std::uint64_t vi_count(const RingPtr& r, int m, int n, std::uint64_t budget) {
  if (m > n) return 0;
  std::uint64_t c = 0;
  for_each_matrix(r, n, m, budget, "VI maps", [&](const Mat& f) { c += has_left_inverse(f); });
  return c;
}

std::uint64_t surj_count(const RingPtr& r, int m, int k, std::uint64_t budget) {
  if (k > m) return 0;
  std::uint64_t c = 0;
  for_each_matrix(r, k, m, budget, "surjections", [&](const Mat& g) { c += is_surjective(g); });
  return c;
}

// Rank of a matrix over Z/p^e reduced into the residue field F_p.
int residue_rank(const Mat& f) {
  int p = 2;
  while (f.ring->size() % p) ++p;
  std::vector<std::vector<int>> a(f.rows, std::vector<int>(f.cols));
  for (int i = 0; i < f.rows; ++i)
    for (int j = 0; j < f.cols; ++j) a[i][j] = f.ring->components(f(i, j))[0] % p;
  int rank = 0;
  for (int c = 0; c < f.cols && rank < f.rows; ++c) {
    int piv = -1;
    for (int i = rank; i < f.rows; ++i)
      if (a[i][c]) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    int inv = 1;
    while (a[rank][c] * inv % p != 1) ++inv;
    for (int i = 0; i < f.rows; ++i) {
      if (i == rank || !a[i][c]) continue;
      int t = a[i][c] * inv % p;
      for (int j = 0; j < f.cols; ++j) a[i][j] = ((a[i][j] - t * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

ViVCounts vi_v_hom_counts(const RingPtr& r, int m, int n, std::uint64_t budget) {
  ViVCounts out;
  out.vi = vi_count(r, m, n, budget);
  for (int k = 0; k <= std::min(m, n); ++k) {
    std::uint64_t num = sat_mul(surj_count(r, m, k, budget), vi_count(r, k, n, budget));
    std::uint64_t gl = gl_order(*r, k);
    if (num % gl) throw InvariantViolation("V count: GL_k does not act freely");
    out.v += num / gl;
  }
  return out;
}

std::uint64_t v_hom_count_bruteforce(const RingPtr& r, int m, int n, std::uint64_t budget) {
  const auto& dec = r->local_factors();
  std::uint64_t work = sat_mul(sat_pow(r->size(), static_cast<std::uint64_t>(n) * m), sat_pow(r->size(), static_cast<std::uint64_t>(n) * m));
  if (work > budget * 64) throw BudgetExceeded(work, budget * 64, "V brute force");
  std::uint64_t c = 0;
  for_each_matrix(r, n, m, budget, "V maps", [&](const Mat& f) {
    // Free cokernel: f is regular (f g f = f for some g) on every factor and
    // the image rank agrees across factors.
    int rank = -1;
    for (std::size_t q = 0; q < dec.count(); ++q) {
      Mat fq = dec.count() == 1 ? f : project(f, q);
      bool regular = false;
      for_each_matrix(fq.ring, m, n, sat_pow(fq.ring->size(), static_cast<std::uint64_t>(m) * n), "inner", [&](const Mat& g) {
        if (!regular && mat_mul(mat_mul(fq, g), fq) == fq) regular = true;
      });
      if (!regular) return;
      int rq = residue_rank(fq);
      if (rank >= 0 && rq != rank) return;
      rank = rq;
    }
    ++c;
  });
  return c;
}

}  // namespace ficat
