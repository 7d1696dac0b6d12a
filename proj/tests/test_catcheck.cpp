#include "doctest.h"

#include "ficat/catcheck.hpp"
#include "ficat/error.hpp"

using namespace ficat;

TEST_CASE("axioms at small ranks") {
  for (auto [kind, ring, N] : {std::tuple{"FI", "", 4}, std::tuple{"VIC", "Z/2", 3}, std::tuple{"VIC", "Z/4", 2},
                               std::tuple{"VIC", "Z/6", 2}, std::tuple{"SI", "Z/2", 2}}) {
    auto cat = make_category(kind, ring);
    auto rep = check_axioms(*cat, N);
    CAPTURE(rep.to_json().dump());
    CHECK(rep.ok());
  }
}

TEST_CASE("factored and direct checks agree") {
  auto cat = make_category("VIC", "Z/2");
  auto direct = check_axioms(*cat, 3);
  auto factored = check_axioms(*cat, 3, 0);
  CHECK(direct.ok());
  CHECK(factored.ok());
  for (const auto& c : factored.checks)
    if (c.name == "monomorphism" || c.name == "complements") CHECK(c.method == "factored");
}

TEST_CASE("axioms without symmetry or complements") {
  auto cat = make_category("VIC", "Z/4", {1});
  auto rep = check_axioms(*cat, 2);
  CHECK(rep.ok());
  auto ovic = make_category("OVIC", "Z/2");
  auto r2 = check_axioms(*ovic, 3);
  CHECK(r2.ok());
}

TEST_CASE("group structure reports") {
  auto fi = fi_category();
  auto a = group_structure_report(*fi, 1, 3);
  CHECK(a.orbit_size == 3);
  CHECK(a.stabilizer_size == 2);
  CHECK(a.aut_n == 6);
  CHECK(a.ok());
  auto v2 = group_structure_report(*make_category("VIC", "Z/2"), 1, 2);
  CHECK(v2.hom_size == 6);
  CHECK(v2.aut_complement == 1);
  CHECK(v2.aut_n == 6);
  CHECK(v2.ok());
  auto v4 = group_structure_report(*make_category("VIC", "Z/4"), 1, 2);
  CHECK(v4.hom_size == 48);
  CHECK(v4.aut_complement == 2);
  CHECK(v4.aut_n == 96);
  CHECK(v4.ok());
  auto s = group_structure_report(*make_category("SI", "Z/2"), 1, 2);
  CHECK(s.hom_size * s.aut_complement == 720);
  CHECK(s.ok());
  CHECK_THROWS_AS(group_structure_report(*fi, 3, 1), PreconditionError);
}
