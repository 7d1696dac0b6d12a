#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "ficat/category.hpp"
#include "ficat/error.hpp"
#include "ficat/matrix.hpp"
#include "ficat/vic.hpp"

using namespace ficat;

namespace {

// Naive permutation-sum determinant.
Elem det_naive(const Mat& m) {
  const auto& R = *m.ring;
  std::vector<int> p(m.rows);
  std::iota(p.begin(), p.end(), 0);
  Elem acc = 0;
  do {
    int inv = 0;
    for (int i = 0; i < m.rows; ++i)
      for (int j = i + 1; j < m.rows; ++j) inv += p[i] > p[j];
    Elem t = R.one();
    for (int i = 0; i < m.rows; ++i) t = R.mul(t, m(i, p[i]));
    acc = inv % 2 ? R.sub(acc, t) : R.add(acc, t);
  } while (std::next_permutation(p.begin(), p.end()));
  return acc;
}

template <class Fn>
void each_matrix(const RingPtr& r, int rows, int cols, Fn&& fn) {
  Mat m(r, rows, cols);
  std::size_t total = 1;
  for (int i = 0; i < rows * cols; ++i) total *= r->size();
  for (std::size_t c = 0; c < total; ++c) {
    fn(m);
    for (int i = rows * cols - 1; i >= 0; --i) {
      if (++m.a[i] < r->size()) break;
      m.a[i] = 0;
    }
  }
}

// Count pairs (f, f') with f' f = 1 by scanning all matrix pairs.
std::size_t vic_pairs_naive(const RingPtr& r, int m, int n, bool square_det_any = true) {
  std::size_t c = 0;
  each_matrix(r, n, m, [&](const Mat& f) {
    each_matrix(r, m, n, [&](const Mat& fp) {
      if (mat_mul(fp, f).is_identity() && (square_det_any || m != n)) ++c;
    });
  });
  return c;
}

}  // namespace

TEST_CASE("ring parsing and arithmetic") {
  auto z6 = FiniteRing::make("Z/6");
  CHECK(z6->size() == 6);
  CHECK(!z6->is_local());
  CHECK(z6->mul(5, 5) == 1);
  CHECK(z6->inverse(5) == Elem(5));
  CHECK(!z6->inverse(2));
  CHECK(FiniteRing::make("Z/4")->is_local());
  CHECK(!FiniteRing::make("Z/2 x Z/2")->is_local());
  CHECK_THROWS_AS(FiniteRing::make("Z/1"), PreconditionError);
  CHECK_THROWS_AS(FiniteRing::make("Q"), PreconditionError);
  CHECK_THROWS_AS(FiniteRing::make("Z/5000"), PreconditionError);
}

TEST_CASE("local decomposition of Z/12 and Z/2 x Z/3") {
  auto r = FiniteRing::make("Z/12");
  const auto& d = r->local_factors();
  REQUIRE(d.count() == 2);
  CHECK(d.factors[0]->spec() == "Z/3");
  CHECK(d.factors[1]->spec() == "Z/4");
  for (Elem x = 0; x < 12; ++x) {
    auto parts = d.project(x);
    CHECK(parts[0] == x % 3);
    CHECK(parts[1] == x % 4);
    CHECK(d.lift(parts) == x);
  }
  auto p = FiniteRing::make("Z/2 x Z/3");
  const auto& dp = p->local_factors();
  REQUIRE(dp.count() == 2);
  // Multiplicative structure matches Z/6 under CRT.
  std::size_t units = 0;
  for (Elem x = 0; x < 6; ++x) units += p->is_unit(x);
  CHECK(units == 2);
}

TEST_CASE("det and inverse agree with naive oracles") {
  for (const char* spec : {"Z/4", "Z/6", "Z/2 x Z/2"}) {
    auto r = FiniteRing::make(spec);
    each_matrix(r, 2, 2, [&](const Mat& m) {
      Elem d = det(m);
      CHECK(d == det_naive(m));
      auto inv = inverse(m);
      CHECK(inv.has_value() == r->is_unit(d));
      if (inv) {
        CHECK(mat_mul(m, *inv).is_identity());
        CHECK(mat_mul(*inv, m).is_identity());
      }
    });
  }
  auto r = FiniteRing::make("Z/6");
  Mat m = Mat::from_ints(r, {{1, 2, 3}, {0, 5, 4}, {2, 1, 1}});
  CHECK(det(m) == det_naive(m));
  CHECK(det_unbounded(m) == det_naive(m));
}

TEST_CASE("factor_surjection examples") {
  auto z4 = FiniteRing::make("Z/4");
  auto s = factor_surjection(Mat::from_ints(z4, {{2, 3}}));
  CHECK(s.f1 == Mat::from_ints(z4, {{2, 1}}));
  CHECK(s.f2 == Mat::from_ints(z4, {{3}}));
  auto z6 = FiniteRing::make("Z/6");
  auto t = factor_surjection(Mat::from_ints(z6, {{3, 5}}));
  CHECK(t.f1 == Mat::from_ints(z6, {{3, 1}}));
  CHECK(t.f2 == Mat::from_ints(z6, {{5}}));
  CHECK(mat_mul(t.f2, t.f1) == Mat::from_ints(z6, {{3, 5}}));
}

TEST_CASE("factor_surjection over all surjective 2x3 matrices of Z/4") {
  auto r = FiniteRing::make("Z/4");
  std::size_t n = 0;
  each_matrix(r, 2, 3, [&](const Mat& f) {
    if (!is_surjective(f)) return;
    ++n;
    auto s = factor_surjection(f);
    CHECK(mat_mul(s.f2, s.f1) == f);
    CHECK(column_adapted(s.f1).has_value());
    CHECK(inverse(s.f2).has_value());
  });
  CHECK(n > 0);
}

TEST_CASE("FI counts and composition") {
  auto fi = fi_category();
  CHECK(fi->hom(2, 4).size() == 12);
  CHECK(fi->aut(3).size() == 6);
  CHECK(fi->hom(3, 2).empty());
  for (const auto& f : fi->hom(1, 3))
    for (const auto& g : fi->hom(3, 4)) CHECK(fi->is_member(fi->compose(g, f)));
}

TEST_CASE("VIC counts against pair scans") {
  auto z2 = FiniteRing::make("Z/2");
  auto z4 = FiniteRing::make("Z/4");
  auto v2 = make_vic(z2);
  auto v4 = make_vic(z4);
  CHECK(v2->hom(1, 2).size() == vic_pairs_naive(z2, 1, 2));
  CHECK(v2->hom(1, 2).size() == 6);
  CHECK(v4->hom(1, 2).size() == vic_pairs_naive(z4, 1, 2));
  CHECK(v4->hom(1, 2).size() == 48);
  CHECK(v4->aut(2).size() == 96);
  CHECK(v4->hom(1, 3).size() == 896);
  CHECK(vic_hom_formula(*z4, 1, 3) == 896);
  CHECK(vic_hom_formula(*z4, 2, 3) == 43008);
  CHECK(v4->hom_count(3, 3) == 86016);
  CHECK(make_ovic(z4)->hom(1, 2).size() == 24);
  CHECK(make_ovic(z2)->hom(1, 2).size() == 6);
  CHECK(make_ovic(z2)->hom(1, 3).size() == 28);
}

TEST_CASE("VIC over Z/6 agrees with formula and factor counts") {
  auto z6 = FiniteRing::make("Z/6");
  auto v = make_vic(z6);
  CHECK(v->hom(1, 2).size() == vic_hom_formula(*z6, 1, 2));
  CHECK(v->hom(1, 2).size() == vic_pairs_naive(z6, 1, 2));
  CHECK(v->aut(2).size() == gl_order(*z6, 2));
  CHECK(v->count_via_factors(2, 2) == gl_order(*z6, 2));
  CHECK(gl_order(*z6, 3) == 1886976);
  auto vu = make_vic(z6, UnitSubgroup::make(z6, {1}));
  CHECK(vu->aut(2).size() == gl_order(*z6, 2) / 2);
  CHECK(vu->count_via_factors(2, 2) == vu->hom_count(2, 2));
  for (const auto& f : v->hom(1, 2)) CHECK(v->is_member(f));
}

TEST_CASE("VIC composition, complements and factorization") {
  auto z4 = FiniteRing::make("Z/4");
  auto v = make_vic(z4);
  for (const auto& f : v->hom(1, 2)) {
    auto c = v->complement_of(f);
    auto j = v->join(f, c);
    REQUIRE(j.has_value());
    CHECK(v->is_member(*j));
    auto fac = vic_factor(*v, f);
    CHECK(v->compose(fac.ovic, fac.aut) == f);
  }
  auto vu = make_vic(z4, UnitSubgroup::make(z4, {1}));
  for (const auto& f : vu->hom(1, 3)) {
    auto j = vu->join(f, vu->complement_of(f));
    CHECK(j.has_value());
  }
  const auto& h12 = v->hom(1, 2);
  const auto& h23 = v->hom(2, 3);
  for (std::size_t i = 0; i < h12.size(); i += 7)
    for (std::size_t k = 0; k < h23.size(); k += 97) CHECK(v->is_member(v->compose(h23[k], h12[i])));
}

TEST_CASE("budget is enforced") {
  auto z6 = FiniteRing::make("Z/6");
  auto v = make_vic(z6, 1000);
  CHECK_THROWS_AS(v->aut(3), BudgetExceeded);
}

TEST_CASE("VI and V counts") {
  auto z2 = FiniteRing::make("Z/2");
  auto c = vi_v_hom_counts(z2, 1, 2);
  CHECK(c.vi == 3);
  // Over a field every linear map has free cokernel.
  CHECK(c.v == 4);
  CHECK(v_hom_count_bruteforce(z2, 1, 2) == 4);
  auto z4 = FiniteRing::make("Z/4");
  CHECK(vi_v_hom_counts(z4, 1, 2).v == v_hom_count_bruteforce(z4, 1, 2));
}
