#include "doctest.h"

#include "ficat/error.hpp"
#include "ficat/si.hpp"
#include "ficat/wporder.hpp"

using namespace ficat;

namespace {

Word w(const std::string& s) {
  Word out;
  for (char c : s) out.push_back({c});
  return out;
}

std::vector<Morphism> poset(const VicCategory& c, int d, int nmax) {
  std::vector<Morphism> out;
  for (int n = d; n <= nmax; ++n)
    for (const auto& m : c.hom(d, n)) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("word orders") {
  CHECK(word_leq(WordVariant::Higman, w("ab"), w("acb")));
  CHECK_FALSE(word_leq(WordVariant::Higman, w("ba"), w("ab")));
  CHECK(word_leq(WordVariant::Tilde, w("ab"), w("aab")));
  CHECK_FALSE(word_leq(WordVariant::Tilde, w(""), w("a")));
  CHECK_FALSE(word_leq(WordVariant::Tilde, w("ab"), w("acb")));
  CHECK(word_leq(WordVariant::Tilde, w("ab"), w("abab")));
  CHECK_FALSE(word_leq(WordVariant::Tilde, w("ab"), w("ba")));
}

TEST_CASE("Z/16 compositions and order reversal") {
  auto r = FiniteRing::make("Z/16");
  auto c = make_ovic(r);
  Mat f = Mat::from_ints(r, {{0}, {1}});
  Mat g = Mat::from_ints(r, {{0, 0}, {1, 0}, {0, 1}});
  Morphism f1 = c->make(f, Mat::from_ints(r, {{2, 1}}));
  Morphism f2 = c->make(f, Mat::from_ints(r, {{6, 1}}));
  Morphism g1 = c->make(g, Mat::from_ints(r, {{2, 1, 0}, {0, 0, 1}}));
  Morphism g2 = c->make(g, Mat::from_ints(r, {{6, 1, 0}, {0, 0, 1}}));
  for (const auto* m : {&f1, &f2, &g1, &g2}) CHECK(c->is_member(*m));
  CHECK(c->fp_of(c->compose(g1, f1)) == Mat::from_ints(r, {{4, 2, 1}}));
  CHECK(c->fp_of(c->compose(g1, f2)) == Mat::from_ints(r, {{12, 6, 1}}));
  CHECK(c->fp_of(c->compose(g2, f1)) == Mat::from_ints(r, {{12, 2, 1}}));
  CHECK(c->fp_of(c->compose(g2, f2)) == Mat::from_ints(r, {{4, 6, 1}}));
  CHECK(ovic_total_cmp(*c, f1, f2) == std::strong_ordering::less);
  CHECK(ovic_total_cmp(*c, c->compose(g1, f1), c->compose(g1, f2)) == std::strong_ordering::less);
  CHECK(ovic_total_cmp(*c, c->compose(g2, f1), c->compose(g2, f2)) == std::strong_ordering::greater);
}

TEST_CASE("ovic examples") {
  auto r = FiniteRing::make("Z/2");
  auto c = make_ovic(r);
  for (int b = 0; b < 2; ++b) {
    Morphism f = c->make(Mat::from_ints(r, {{1}, {b}}), Mat::from_ints(r, {{1, 0}}));
    Morphism g = c->make(Mat::from_ints(r, {{1}, {b}, {b}}), Mat::from_ints(r, {{1, 0, 0}}));
    CHECK(ovic_preceq(*c, f, g));
    CHECK(ovic_preceq_bfs(*c, f, g, false));
    Morphism phi = ovic_phi_for(*c, f, g);
    CHECK(c->compose(phi, f) == g);
  }
  Morphism a = c->make(Mat::from_ints(r, {{1}, {0}}), Mat::from_ints(r, {{1, 0}}));
  Morphism b = c->make(Mat::from_ints(r, {{0}, {1}}), Mat::from_ints(r, {{0, 1}}));
  CHECK_FALSE(ovic_preceq(*c, a, b));
  CHECK_FALSE(ovic_preceq(*c, b, a));
  CHECK(ovic_total_cmp(*c, a, b) == std::strong_ordering::less);
  CHECK(ovic_phi_for(*c, a, a) == c->identity(2));
  auto ins = ovic_insertion(r, 1, 0, 0, {0}, {0});
  CHECK(ins.phi == Mat::from_ints(r, {{1}, {1}}));
  CHECK(ins.phip == Mat::from_ints(r, {{0, 1}}));
  CHECK_THROWS_AS(ovic_insertion(r, 1, 0, 0, {0}, {1}), PreconditionError);
}

TEST_CASE("append steps are needed for the word encoding") {
  // x♠ vs x♠x: only an insertion after the last column reaches the larger one.
  auto r = FiniteRing::make("Z/2");
  auto c = make_ovic(r);
  Morphism f = c->make(Mat::from_ints(r, {{1}, {1}}), Mat::from_ints(r, {{0, 1}}));
  Morphism g = c->make(Mat::from_ints(r, {{1}, {1}, {1}}), Mat::from_ints(r, {{0, 1, 0}}));
  REQUIRE(c->is_member(f));
  REQUIRE(c->is_member(g));
  CHECK(ovic_preceq(*c, f, g));
  CHECK(ovic_preceq_bfs(*c, f, g, true));
  CHECK_FALSE(ovic_preceq_bfs(*c, f, g, false));
}

TEST_CASE("ovic order laws, oracle agreement and phi exhaustively") {
  for (const char* spec : {"Z/2", "Z/4", "Z/6"}) {
    auto c = make_ovic(FiniteRing::make(spec));
    int nmax = std::string(spec) == "Z/2" ? 3 : 2;
    auto P = poset(*c, 1, nmax);
    for (const auto& f : P) {
      CHECK(ovic_preceq(*c, f, f));
      for (const auto& g : P) {
        bool le = ovic_preceq(*c, f, g);
        CHECK(le == ovic_preceq_bfs(*c, f, g));
        auto cmp = ovic_total_cmp(*c, f, g);
        CHECK((cmp == 0) == (f == g));
        CHECK((0 <=> cmp) == ovic_total_cmp(*c, g, f));
        if (le) {
          CHECK(cmp <= 0);
          if (f != g) CHECK_FALSE(ovic_preceq(*c, g, f));
          Morphism phi = ovic_phi_for(*c, f, g);
          for (const auto& f1 : c->hom(1, f.dst))
            if (ovic_total_cmp(*c, f1, f) < 0) CHECK(ovic_total_cmp(*c, c->compose(phi, f1), g) < 0);
        }
      }
    }
  }
}

TEST_CASE("osi examples and exhaustive checks") {
  auto r = FiniteRing::make("Z/2");
  auto osi = make_osi(r);
  Mat c2 = osi->mat_of(osi->canonical(1, 2));
  Mat c3 = osi->mat_of(osi->canonical(1, 3));
  CHECK(osi_preceq(c2, c3));
  CHECK(osi_insertion_phi(c2, c3) == osi->mat_of(osi->canonical(2, 3)));
  CHECK(osi_insertion_phi(c2, c2).is_identity());
  std::vector<Mat> P;
  for (int n = 1; n <= 3; ++n)
    for (const auto& m : osi->hom(1, n)) P.push_back(osi->mat_of(m));
  std::size_t comparable = 0;
  for (const auto& f : P)
    for (const auto& g : P) {
      bool le = osi_preceq(f, g);
      CHECK(le == osi_preceq_deletion(f, g));
      auto cmp = osi_total_cmp(f, g);
      CHECK((cmp == 0) == (f == g));
      if (!le) continue;
      ++comparable;
      CHECK(cmp <= 0);
      Mat phi = osi_insertion_phi(f, g);
      CHECK(mat_mul(phi, f) == g);
      for (const auto& m1 : osi->hom(1, f.rows / 2)) {
        Mat f1 = osi->mat_of(m1);
        if (osi_total_cmp(f1, f) < 0) CHECK(osi_total_cmp(mat_mul(phi, f1), g) < 0);
      }
    }
  CHECK(comparable > P.size());
}
