#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "ficat/error.hpp"
#include "ficat/shift.hpp"
#include "ficat/vic.hpp"

using namespace ficat;

namespace {

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Complex of injective words on [n]: words of distinct letters, the boundary
// deletes the i-th letter with sign (-1)^i. Homology dims over Q, degree = length.
std::vector<std::size_t> injective_words_homology(int n) {
  std::vector<std::vector<std::vector<int>>> words(n + 2);
  words[0].push_back({});
  for (int len = 1; len <= n; ++len)
    for (const auto& w : words[len - 1])
      for (int a = 0; a < n; ++a)
        if (std::find(w.begin(), w.end(), a) == w.end()) {
          auto v = w;
          v.push_back(a);
          words[len].push_back(v);
        }
  std::vector<std::size_t> rank(n + 3, 0);
  QOps ops;
  for (int len = 1; len <= n; ++len) {
    std::map<std::vector<int>, std::uint32_t> idx;
    for (std::uint32_t i = 0; i < words[len - 1].size(); ++i) idx[words[len - 1][i]] = i;
    std::vector<SparseVec<QOps>> cols;
    for (const auto& w : words[len]) {
      std::vector<std::pair<std::uint32_t, Rational>> t;
      for (int i = 0; i < len; ++i) {
        auto v = w;
        v.erase(v.begin() + i);
        t.emplace_back(idx.at(v), Rational(i % 2 ? -1 : 1));
      }
      cols.push_back(collect(ops, t));
    }
    rank[len] = rank_of(ops, cols);
  }
  std::vector<std::size_t> h;
  for (int p = 0; p <= n; ++p) h.push_back(words[p].size() - rank[p] - rank[p + 1]);
  return h;
}

CoefVec unit(std::uint32_t i) { return {{i, Rational(1)}}; }

}  // namespace

TEST_CASE("representable dimensions") {
  auto fi = fi_category();
  CHECK(representable(fi, 1, 4)->dims() == std::vector<std::size_t>{0, 1, 2, 3, 4});
  auto vic = make_category("VIC", "Z/2");
  CHECK(representable(vic, 1, 3)->dims() == std::vector<std::size_t>{0, 1, 6, 28});
  auto si = make_category("SI", "Z/2");
  CHECK(representable(si, 1, 2)->dims() == std::vector<std::size_t>{0, 6, 120});
  CHECK(check_functoriality(*representable(vic, 1, 2)) > 0);
  CHECK(check_functoriality(*representable(fi, 0, 3)) > 0);
}

TEST_CASE("field parsing") {
  CHECK(CoefField::parse("Q").is_rational());
  CHECK(CoefField::parse("F2").p == 2);
  CHECK(CoefField::parse("GF(5)").p == 5);
  CHECK_THROWS_AS(CoefField::parse("F4"), PreconditionError);
  CHECK(CoefField::prime(3).reduce(Rational(1, 2)) == 2);
}

TEST_CASE("submodule closure") {
  auto vic = make_category("VIC", "Z/2");
  auto P = representable(vic, 1, 3, CoefField::prime(2));
  auto full = submodule_closure(P, {{1, unit(0)}});
  CHECK(full->dims() == std::vector<std::size_t>{0, 1, 6, 28});
  auto zero = submodule_closure(P, {});
  CHECK(zero->dims() == std::vector<std::size_t>{0, 0, 0, 0});
  auto sub = submodule_closure(P, {{2, {{0, Rational(1)}, {1, Rational(1)}}}});
  auto dims = sub->dims();
  CHECK(dims[1] == 0);
  CHECK(dims[2] > 0);
  CHECK(dims[2] < 6);
  CHECK(closure_fixed_point(*sub));
  CHECK(check_functoriality(*sub, 20000) == 20000);

  auto ovic = make_category("OVIC", "Z/2");
  auto Q = representable(ovic, 1, 3, CoefField::prime(2));
  auto osub = submodule_closure(Q, {{2, {{0, Rational(1)}, {2, Rational(1)}}}});
  CHECK(closure_fixed_point(*osub));
}

TEST_CASE("initial terms") {
  auto r = FiniteRing::make("Z/2");
  auto ovic = make_ovic(r);
  auto P = representable(ovic, 1, 3, CoefField::prime(2));
  CHECK(init_of(*P, 2, {}).empty());
  Morphism a = ovic->make(Mat::from_ints(r, {{1}, {0}}), Mat::from_ints(r, {{1, 0}}));
  Morphism b = ovic->make(Mat::from_ints(r, {{0}, {1}}), Mat::from_ints(r, {{0, 1}}));
  auto ea = P->basis_vector(a), eb = P->basis_vector(b);
  CHECK(init_of(*P, 2, ea) == ea);
  CHECK(init_of(*P, 2, axpy(P->ops(), ea, Rational(1), eb)) == eb);
  CHECK_THROWS_AS(init_of(*representable(make_category("VIC", "Z/2"), 1, 2), 1, unit(0)), PreconditionError);

  auto M = submodule_closure(P, {{2, ea}, {2, eb}});
  auto rep = init_gap_check(*M, *M);
  CHECK(rep.implication_holds);
  CHECK_FALSE(rep.strict_init_somewhere);
  auto N = submodule_closure(P, {{2, ea}});
  auto strict = init_gap_check(*N, *M);
  CHECK(strict.implication_holds);
  CHECK(strict.strict_init_somewhere);
  CHECK_THROWS_AS(init_gap_check(*M, *N), PreconditionError);
  auto in = init_module(*M);
  for (int n = 0; n <= 3; ++n) CHECK(in[n].size() == M->dim(n));
}

TEST_CASE("shift complex dimensions") {
  auto fi = fi_category();
  auto triple = ShiftComplex::of_representable(fi, 0, ShiftVariant::Triple, 4);
  auto plain = ShiftComplex::of_representable(fi, 0, ShiftVariant::Plain, 4);
  for (int n = 0; n <= 4; ++n)
    for (int p = 0; p <= n; ++p) {
      CHECK(triple.dim(n, p) == binom(n, p));
      CHECK(plain.dim(n, p) == falling(n, p));
    }
  CHECK(plain.dim(2, 3) == 0);
  CHECK(triple.dd_checks() > 0);
  CHECK(triple.equivariance_checks() > 0);
  auto ovic = make_category("OVIC", "Z/2");
  CHECK_THROWS_AS(ShiftComplex::of_representable(ovic, 0, ShiftVariant::Triple, 2), PreconditionError);
}

TEST_CASE("homology examples") {
  auto fi = fi_category();
  auto triple = ShiftComplex::of_representable(fi, 0, ShiftVariant::Triple, 5);
  for (int n = 1; n <= 5; ++n)
    for (auto h : triple.homology(n)) CHECK(h == 0);
  auto j = complex_homology(triple, 3);
  CHECK(j["dims"]["H0"] == 0);
  CHECK(j["dims"]["H2"] == 0);
  CHECK(j["truncation"] == 5);
  CHECK(triple.homology(0)[0] == 1);

  auto plain = ShiftComplex::of_representable(fi, 0, ShiftVariant::Plain, 4);
  const std::size_t derangements[] = {1, 0, 1, 2, 9};
  for (int n = 0; n <= 4; ++n) {
    auto h = plain.homology(n);
    auto oracle = injective_words_homology(n);
    for (int p = 0; p <= n; ++p) CHECK(h[p] == oracle[p]);
    CHECK(h[n] == derangements[n]);
  }
  auto rep = exactness_report(plain);
  CHECK(rep["thresholds"]["H0"] == 1);
  CHECK(rep["thresholds"]["H2"] == 3);
  CHECK(rep["thresholds"]["H3"] == 4);

  auto vic = make_category("VIC", "Z/2");
  auto v0 = ShiftComplex::of_representable(vic, 0, ShiftVariant::Plain, 3, CoefField::rationals(), 1);
  for (int n = 1; n <= 3; ++n) CHECK(v0.homology(n)[0] == 0);
}

TEST_CASE("complement route agrees with the representable route") {
  struct Case {
    const char* kind;
    const char* ring;
    int d, N;
  };
  for (auto cs : {Case{"FI", "", 0, 3}, Case{"FI", "", 1, 3}, Case{"VIC", "Z/2", 0, 2}, Case{"VIC", "Z/2", 1, 3},
                  Case{"VIC", "Z/3", 1, 2}, Case{"SI", "Z/2", 1, 2}}) {
    auto cat = make_category(cs.kind, cs.ring);
    for (auto v : {ShiftVariant::Plain, ShiftVariant::Prime, ShiftVariant::Double, ShiftVariant::Triple}) {
      CAPTURE(cs.kind);
      CAPTURE(to_string(v));
      auto a = ShiftComplex::of_representable(cat, cs.d, v, cs.N);
      auto b = ShiftComplex::of_module(representable(cat, cs.d, cs.N), v);
      for (int n = 0; n <= cs.N; ++n) {
        for (int p = 0; p <= cs.N; ++p) CHECK(a.dim(n, p) == b.dim(n, p));
        CHECK(a.homology(n) == b.homology(n));
      }
      if (v == ShiftVariant::Plain)
        for (int n = 0; n <= cs.N; ++n)
          for (int p = 0; p + cs.d <= n; ++p) CHECK(a.dim(n, p) == cat->hom_count(p + cs.d, n));
    }
  }
}

TEST_CASE("shift complex of a submodule") {
  auto fi = fi_category();
  auto P = representable(fi, 1, 4);
  auto sub = submodule_closure(P, {{2, {{0, Rational(1)}, {1, Rational(-1)}}}});
  CHECK(sub->dims() == std::vector<std::size_t>{0, 0, 1, 2, 3});
  for (auto v : {ShiftVariant::Plain, ShiftVariant::Triple}) {
    auto c = ShiftComplex::of_module(sub, v);
    CHECK(c.dim(4, 0) == 3);
    CHECK(c.dim(4, 2) == (v == ShiftVariant::Plain ? 12 : 6));
    CHECK(c.dd_checks() > 0);
  }
}

TEST_CASE("chain homotopy") {
  auto fi = fi_category();
  for (auto v : {ShiftVariant::Plain, ShiftVariant::Prime, ShiftVariant::Double, ShiftVariant::Triple})
    for (int n = 0; n <= 3; ++n) {
      auto rep = chain_homotopy_check(fi, 0, v, n);
      CHECK(rep.ok());
      CHECK(rep.degrees.at(0).mode == "witness+rank");
    }
  auto vic = make_category("VIC", "Z/2");
  auto rep = chain_homotopy_check(vic, 1, ShiftVariant::Plain, 2);
  CHECK(rep.ok());
  std::size_t cycles = 0;
  for (const auto& d : rep.degrees) cycles += d.cycles;
  CHECK(cycles > 0);
  auto ovic = make_category("OVIC", "Z/2");
  CHECK_THROWS_AS(chain_homotopy_check(ovic, 0, ShiftVariant::Plain, 1), PreconditionError);
}

TEST_CASE("generation degree") {
  for (const char* kind : {"FI", "VIC"}) {
    auto cat = make_category(kind, std::string(kind) == "FI" ? "" : "Z/2");
    for (int d = 0; d <= 1; ++d) {
      auto rep = generation_degree(*representable(cat, d, 3));
      for (int n = 0; n <= 3; ++n) CHECK(rep.onto[n] == (n >= d + 1 || rep.dims[n] == 0));
      REQUIRE(rep.n0);
      CHECK(*rep.n0 == d + 1);
    }
  }
  auto vic = make_category("VIC", "Z/2");
  auto zero = submodule_closure(representable(vic, 1, 2), {});
  auto rz = generation_degree(*zero);
  CHECK(rz.n0 == 0);
}
