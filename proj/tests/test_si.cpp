#include "doctest.h"

#include "ficat/error.hpp"
#include "ficat/si.hpp"
#include "ficat/vic.hpp"

using namespace ficat;

namespace {

// Brute-force count of 2n x 2m matrices preserving the standard form.
std::size_t sp_maps_naive(const RingPtr& r, int m, int n) {
  auto src = SymplecticForm::standard(r, m);
  auto dst = SymplecticForm::standard(r, n);
  Mat f(r, 2 * n, 2 * m);
  std::size_t total = 1, c = 0;
  for (std::size_t i = 0; i < f.a.size(); ++i) total *= r->size();
  for (std::size_t t = 0; t < total; ++t) {
    c += symplectic_check(f, src, dst);
    for (int i = static_cast<int>(f.a.size()) - 1; i >= 0; --i) {
      if (++f.a[i] < r->size()) break;
      f.a[i] = 0;
    }
  }
  return c;
}

}  // namespace

TEST_CASE("standard forms") {
  auto z2 = FiniteRing::make("Z/2");
  auto z4 = FiniteRing::make("Z/4");
  CHECK(SymplecticForm::standard(z2, 1).gram == Mat::from_ints(z2, {{0, 1}, {1, 0}}));
  CHECK(SymplecticForm::standard(z4, 1).gram == Mat::from_ints(z4, {{0, 1}, {3, 0}}));
  CHECK(SymplecticForm::standard(z4, 0).dim() == 0);
  CHECK(SymplecticForm::standard(z4, 2).valid());
  CHECK(symplectic_basis_check(Mat::identity(z4, 4), SymplecticForm::standard(z4, 2)));
  Mat swap = Mat::from_ints(z4, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK_FALSE(symplectic_basis_check(swap, SymplecticForm::standard(z4, 2)));
}

TEST_CASE("perp of a symplectic plane") {
  auto z2 = FiniteRing::make("Z/2");
  auto form = SymplecticForm::standard(z2, 2);
  Mat w = Mat::from_ints(z2, {{1, 0}, {0, 1}, {0, 0}, {0, 0}});
  Mat p = perp(w, form);
  CHECK(p == Mat::from_ints(z2, {{0, 0}, {0, 0}, {1, 0}, {0, 1}}));
  Mat back = perp(p, form);
  CHECK(back == w);
  CHECK_THROWS_AS(perp(Mat::from_ints(z2, {{1, 0}, {0, 0}, {0, 1}, {0, 0}}), form), PreconditionError);
}

TEST_CASE("SI counts against brute force") {
  auto z2 = FiniteRing::make("Z/2");
  auto si = make_si(z2);
  CHECK(si->aut(1).size() == 6);
  CHECK(sp_maps_naive(z2, 1, 1) == 6);
  CHECK(si->hom(1, 2).size() == 120);
  CHECK(sp_maps_naive(z2, 1, 2) == 120);
  CHECK(si->aut(2).size() == 720);
  CHECK(si->hom(2, 1).empty());
  CHECK(si->hom_count(1, 3) == 2016);
  CHECK(si->hom(1, 3).size() == 2016);
  auto z4 = FiniteRing::make("Z/4");
  CHECK(sp_order(*z4, 1) == 48);
  CHECK(make_si(z4)->aut(1).size() == 48);
  CHECK(sp_order(*z4, 2) == 737280);
  CHECK(make_si(z4)->hom(1, 2).size() == 15360);
  auto z6 = FiniteRing::make("Z/6");
  CHECK(make_si(z6)->aut(1).size() == sp_order(*z6, 1));
}

TEST_CASE("SI complements and factor_through") {
  auto z2 = FiniteRing::make("Z/2");
  auto si = make_si(z2);
  for (const auto& f : si->hom(1, 2)) {
    auto c = si->complement_of(f);
    auto j = si->join(f, c);
    REQUIRE(j.has_value());
    CHECK(si->is_member(*j));
    auto psi = si->factor_through(*j, f);
    REQUIRE(psi.has_value());
    CHECK(*psi == si->canonical(1, 2));
  }
  auto z6 = FiniteRing::make("Z/6");
  auto s6 = make_si(z6);
  const auto& h = s6->hom(1, 2);
  for (std::size_t i = 0; i < h.size(); i += 101) CHECK(s6->join(h[i], s6->complement_of(h[i])).has_value());
}

TEST_CASE("osi_factor") {
  auto z2 = FiniteRing::make("Z/2");
  Mat swap = Mat::from_ints(z2, {{0, 1}, {1, 0}});
  auto s = osi_factor(swap);
  CHECK(s.f1.is_identity());
  CHECK(s.f2 == swap);
  CHECK(s.lambda == SymplecticForm::standard(z2, 1));
  auto si = make_si(z2);
  auto osi = make_osi(z2);
  std::size_t adapted = 0;
  for (const auto& f : si->hom(1, 2)) {
    auto o = osi_factor(si->mat_of(f));
    CHECK(mat_mul(o.f1, o.f2) == si->mat_of(f));
    adapted += osi->is_member(f);
  }
  CHECK(adapted == osi->hom(1, 2).size());
  CHECK(osi->hom(1, 3).size() == 336);
}
