#include "ficat/catcheck.hpp"

#include <random>
#include <unordered_map>
#include <unordered_set>

#include "ficat/error.hpp"

namespace ficat {

namespace {

using Set = std::unordered_set<std::vector<Elem>, ElemVecHash>;

// Block swap X^a ⊛ X^b -> X^b ⊛ X^a.
Morphism braid(const Category& cat, int a, int b) {
  std::vector<int> pos;
  for (int j = 0; j < a + b; ++j) pos.push_back(j < a ? b + j : j - a);
  return cat.factor_map(a + b, pos);
}

void fail(AxiomCheck& c, const std::string& why) {
  if (c.passed) c.detail = why;
  c.passed = false;
}

AxiomCheck unit_laws(const Category& cat, int N) {
  AxiomCheck c{"unit_laws"};
  for (int n = 0; n <= N; ++n) {
    if (!cat.is_member(cat.identity(n))) fail(c, "identity is not a morphism at rank " + std::to_string(n));
    for (int m = 0; m <= n; ++m)
      for (const auto& f : cat.hom(m, n)) {
        if (cat.compose(cat.identity(n), f) != f || cat.compose(f, cat.identity(m)) != f)
          fail(c, "identity law fails on hom(" + std::to_string(m) + "," + std::to_string(n) + ")");
        ++c.checked;
      }
  }
  return c;
}

AxiomCheck initial_object(const Category& cat, int N) {
  AxiomCheck c{"initial_object"};
  for (int n = 0; n <= N; ++n) {
    if (cat.hom(0, n).size() != 1) fail(c, "|hom(0," + std::to_string(n) + ")| != 1");
    ++c.checked;
  }
  return c;
}

AxiomCheck associativity(const Category& cat, int N, std::uint64_t limit) {
  AxiomCheck c{"associativity"};
  std::uint64_t work = 0;
  for (int a = 0; a <= N; ++a)
    for (int b = a; b <= N; ++b)
      for (int x = b; x <= N; ++x)
        for (int y = x; y <= N; ++y) work += cat.hom_count(a, b) * cat.hom_count(b, x) * cat.hom_count(x, y);
  auto check = [&](const Morphism& f, const Morphism& g, const Morphism& h) {
    if (cat.compose(h, cat.compose(g, f)) != cat.compose(cat.compose(h, g), f)) fail(c, "associativity fails");
    ++c.checked;
  };
  if (work <= limit) {
    for (int a = 0; a <= N; ++a)
      for (int b = a; b <= N; ++b)
        for (int x = b; x <= N; ++x)
          for (int y = x; y <= N; ++y)
            for (const auto& f : cat.hom(a, b))
              for (const auto& g : cat.hom(b, x))
                for (const auto& h : cat.hom(x, y)) check(f, g, h);
    return c;
  }
  c.method = "sampled";
  std::mt19937_64 rng(0);
  auto pick = [&](int m, int n) -> const Morphism& {
    const auto& s = cat.hom(m, n);
    return s[std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng)];
  };
  for (int t = 0; t < 200000; ++t) {
    int r[4];
    for (int& v : r) v = std::uniform_int_distribution<int>(0, N)(rng);
    std::sort(r, r + 4);
    check(pick(r[0], r[1]), pick(r[1], r[2]), pick(r[2], r[3]));
  }
  return c;
}

AxiomCheck monomorphisms(const Category& cat, int N, std::uint64_t limit) {
  AxiomCheck c{"monomorphism"};
  std::uint64_t work = 0;
  for (int n = 0; n <= N; ++n)
    for (int k = 0; k <= n; ++k)
      for (int m = 0; m <= k; ++m) work += cat.hom_count(k, n) * cat.hom_count(m, k);
  auto injective_on = [&](const Morphism& g, int m) {
    Set seen;
    for (const auto& f : cat.hom(m, g.src)) {
      if (!seen.insert(cat.compose(g, f).data).second) return false;
      ++c.checked;
    }
    return true;
  };
  if (work <= limit) {
    for (int n = 0; n <= N; ++n)
      for (int k = 0; k <= n; ++k)
        for (const auto& g : cat.hom(k, n))
          for (int m = 0; m <= k; ++m)
            if (!injective_on(g, m)) fail(c, "left cancellation fails into rank " + std::to_string(n));
    return c;
  }
  // g = α ∘ canonical with α invertible, so canonical alone must cancel.
  c.method = "factored";
  for (int n = 0; n <= N; ++n) {
    for (const auto& a : cat.aut(n)) {
      auto b = cat.factor_through(a, cat.identity(n));
      if (!b || cat.compose(a, *b) != cat.identity(n) || cat.compose(*b, a) != cat.identity(n))
        fail(c, "automorphism without two-sided inverse at rank " + std::to_string(n));
      ++c.checked;
    }
    for (int k = 0; k <= n; ++k) {
      Morphism can = cat.canonical(k, n);
      Set orbit;
      for (const auto& a : cat.aut(n)) orbit.insert(cat.compose(a, can).data);
      bool transitive = orbit.size() == cat.hom(k, n).size();
      for (const auto& g : cat.hom(k, n)) transitive = transitive && orbit.count(g.data);
      if (!transitive) fail(c, "Aut does not act transitively on hom(" + std::to_string(k) + "," + std::to_string(n) + ")");
      for (int m = 0; m <= k; ++m)
        if (!injective_on(can, m)) fail(c, "canonical morphism does not cancel");
    }
  }
  return c;
}

AxiomCheck restriction_injective(const Category& cat, int N) {
  AxiomCheck c{"restriction_injective"};
  for (int n = 0; n <= N; ++n)
    for (int s = 0; s <= n; ++s)
      for (int a = 0; a <= s; ++a) {
        Morphism c1 = cat.canonical(a, s), c2 = cat.canonical_second(a, s);
        Set seen;
        for (const auto& psi : cat.hom(s, n)) {
          auto key = cat.compose(psi, c1).data;
          auto second = cat.compose(psi, c2).data;
          key.push_back(0xFFFF);
          key.insert(key.end(), second.begin(), second.end());
          if (!seen.insert(std::move(key)).second) fail(c, "two morphisms share both restrictions");
          ++c.checked;
        }
      }
  return c;
}

AxiomCheck complements(const Category& cat, int N, std::uint64_t limit) {
  AxiomCheck c{"complements"};
  if (!cat.complemented()) {
    c.detail = "instance declares no complements";
    return c;
  }
  bool all_direct = true;
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= n; ++m) {
      const auto& aut_n = cat.aut(n);
      std::uint64_t expected = cat.aut(n - m).size();
      // Existence of the designated complement.
      for (const auto& f : cat.hom(m, n)) {
        Morphism g = cat.complement_of(f);
        if (g.src != n - m || g.dst != n || !cat.is_member(g)) {
          fail(c, "complement_of returned a non-morphism");
          continue;
        }
        auto j = cat.join(f, g);
        if (!j || !cat.find(*j)) fail(c, "f and its complement do not join to an isomorphism");
        if (cat.symmetric()) {
          Morphism cc = cat.complement_of(g);
          if (!cat.factor_through(f, cc) || !cat.factor_through(cc, f)) fail(c, "complement is not an involution on images");
        }
        ++c.checked;
      }
      // Uniqueness: complements of f correspond to isomorphisms restricting to f.
      std::uint64_t pairs = cat.hom_count(m, n) * cat.hom_count(n - m, n);
      if (pairs <= limit) {
        for (const auto& f : cat.hom(m, n)) {
          std::uint64_t count = 0;
          for (const auto& g : cat.hom(n - m, n)) {
            auto j = cat.join(f, g);
            if (j && cat.find(*j)) ++count;
            ++c.checked;
          }
          if (count != expected) fail(c, "complement of a morphism into rank " + std::to_string(n) + " is not unique");
        }
      } else {
        all_direct = false;
        Morphism c1 = cat.canonical(m, n), c2 = cat.canonical_second(m, n);
        std::unordered_map<std::vector<Elem>, std::uint64_t, ElemVecHash> count;
        for (const auto& a : aut_n) {
          Morphism f = cat.compose(a, c1), g = cat.compose(a, c2);
          auto j = cat.join(f, g);
          if (!j || *j != a) fail(c, "join does not recover an automorphism from its restrictions");
          ++count[f.data];
          ++c.checked;
        }
        for (const auto& f : cat.hom(m, n))
          if (count[f.data] != expected) fail(c, "complement of a morphism into rank " + std::to_string(n) + " is not unique");
      }
    }
  if (!all_direct) {
    c.method = "factored";
    c.detail = c.passed ? "large ranks count complements through the automorphisms that restrict to f" : c.detail;
  }
  return c;
}

AxiomCheck symmetry(const Category& cat, int N) {
  AxiomCheck c{"symmetry"};
  if (!cat.symmetric()) {
    c.detail = "instance declares no symmetric structure";
    return c;
  }
  for (int a = 0; a <= N; ++a)
    for (int b = 0; a + b <= N; ++b) {
      Morphism t = braid(cat, a, b);
      if (!cat.is_member(t)) fail(c, "braiding is not a morphism");
      if (cat.compose(braid(cat, b, a), t) != cat.identity(a + b)) fail(c, "braiding is not involutive");
      ++c.checked;
      for (int x = 0; a + b + x <= N; ++x) {
        Morphism lhs = braid(cat, a, b + x);
        Morphism rhs = cat.compose(cat.sum(cat.identity(b), braid(cat, a, x)), cat.sum(t, cat.identity(x)));
        if (lhs != rhs) fail(c, "hexagon identity fails");
        ++c.checked;
      }
    }
  for (int a2 = 0; a2 <= N; ++a2)
    for (int b2 = 0; a2 + b2 <= N; ++b2)
      for (int a = 0; a <= a2; ++a)
        for (int b = 0; b <= b2; ++b) {
          Morphism t = braid(cat, a, b), t2 = braid(cat, a2, b2);
          for (const auto& f : cat.hom(a, a2))
            for (const auto& g : cat.hom(b, b2)) {
              if (cat.compose(t2, cat.sum(f, g)) != cat.compose(cat.sum(g, f), t)) fail(c, "braiding is not natural");
              ++c.checked;
            }
        }
  return c;
}

}  // namespace

bool AxiomReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

nlohmann::json AxiomReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name}, {"passed", c.passed}, {"method", c.method}, {"checked", c.checked}, {"detail", c.detail}});
  return {{"cat", cat}, {"max_rank", max_rank}, {"checks", arr}, {"ok", ok()}};
}

AxiomReport check_axioms(const Category& cat, int max_rank, std::uint64_t direct_limit) {
  if (max_rank < 0) throw PreconditionError("bad_rank", "negative rank bound");
  AxiomReport rep;
  rep.cat = cat.name();
  rep.max_rank = max_rank;
  rep.checks.push_back(unit_laws(cat, max_rank));
  rep.checks.push_back(initial_object(cat, max_rank));
  rep.checks.push_back(associativity(cat, max_rank, direct_limit / 10));
  rep.checks.push_back(monomorphisms(cat, max_rank, direct_limit));
  rep.checks.push_back(restriction_injective(cat, max_rank));
  rep.checks.push_back(complements(cat, max_rank, direct_limit));
  rep.checks.push_back(symmetry(cat, max_rank));
  return rep;
}

bool GroupStructureReport::ok() const {
  return transitive && embedding_injective && stabilizer_is_image && counting_identity;
}

nlohmann::json GroupStructureReport::to_json() const {
  return {{"cat", cat},
          {"r", r},
          {"n", n},
          {"hom_size", hom_size},
          {"aut_n", aut_n},
          {"aut_complement", aut_complement},
          {"orbit_size", orbit_size},
          {"stabilizer_size", stabilizer_size},
          {"transitive", transitive},
          {"embedding_injective", embedding_injective},
          {"stabilizer_is_image", stabilizer_is_image},
          {"counting_identity", counting_identity},
          {"ok", ok()}};
}

GroupStructureReport group_structure_report(const Category& cat, int r, int n) {
  if (r < 0 || r > n) throw PreconditionError("bad_rank", "group_structure_report needs 0 <= r <= n");
  GroupStructureReport rep;
  rep.cat = cat.name();
  rep.r = r;
  rep.n = n;
  const auto& homs = cat.hom(r, n);
  const auto& aut = cat.aut(n);
  const auto& aut_c = cat.aut(n - r);
  rep.hom_size = homs.size();
  rep.aut_n = aut.size();
  rep.aut_complement = aut_c.size();
  Morphism can = cat.canonical(r, n);
  Set orbit, stab;
  for (const auto& a : aut) {
    Morphism f = cat.compose(a, can);
    if (f == can) stab.insert(a.data);
    orbit.insert(std::move(f.data));
  }
  rep.orbit_size = orbit.size();
  rep.stabilizer_size = stab.size();
  rep.transitive = orbit.size() == homs.size();
  for (const auto& f : homs) rep.transitive = rep.transitive && orbit.count(f.data);
  Set image;
  bool inside = true;
  for (const auto& b : aut_c) {
    Morphism e = cat.sum(cat.identity(r), b);
    inside = inside && stab.count(e.data);
    image.insert(std::move(e.data));
  }
  rep.embedding_injective = inside && image.size() == aut_c.size();
  rep.stabilizer_is_image = inside && image.size() == stab.size();
  rep.counting_identity = rep.hom_size * rep.aut_complement == rep.aut_n;
  return rep;
}

}  // namespace ficat
