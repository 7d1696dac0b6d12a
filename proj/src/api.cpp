#include "ficat/api.hpp"

#include <algorithm>

#include "ficat/catcheck.hpp"
#include "ficat/error.hpp"
#include "ficat/json_io.hpp"
#include "ficat/shift.hpp"
#include "ficat/si.hpp"
#include "ficat/vic.hpp"
#include "ficat/wporder.hpp"

namespace ficat::api {

using nlohmann::json;

namespace {

Morphism parse_morphism(const Category& cat, const json& j, int src, int dst) {
  if (j.is_string()) {
    json parsed;
    try {
      parsed = json::parse(j.get<std::string>());
    } catch (const json::parse_error& e) {
      throw PreconditionError("bad_json", std::string("morphism: ") + e.what());
    }
    return parse_morphism(cat, parsed, src, dst);
  }
  if (j.is_object() && j.contains("payload")) return cat.from_json(j);
  return cat.from_json({{"src", src}, {"dst", dst}, {"payload", j}});
}

const char* ord_name(std::strong_ordering o) { return o < 0 ? "Less" : o > 0 ? "Greater" : "Equal"; }

struct OrderPair {
  CategoryPtr cat;
  Morphism f, g;
};

OrderPair order_pair(const CatSpec& c, const json& fj, const json& gj) {
  auto cat = c.build();
  if (cat->kind() != "OVIC" && cat->kind() != "OSI")
    throw PreconditionError("unsupported_category", "orders are defined over OVIC and OSI");
  Morphism f = parse_morphism(*cat, fj, 1, -1), g = parse_morphism(*cat, gj, 1, -1);
  if (f.src != 1 || g.src != 1) throw PreconditionError("bad_morphism", "orders are defined on P(1)");
  return {cat, f, g};
}

}  // namespace

CategoryPtr CatSpec::build() const { return make_category(cat, ring, units); }

int parse_module(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'P' && s[0] != 'p') ||
      !std::all_of(s.begin() + 1, s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) || s.size() > 4)
    throw PreconditionError("bad_module", "module must be P<d>, got '" + s + "'");
  return std::stoi(s.substr(1));
}

json ring_info(const std::string& spec) {
  auto r = FiniteRing::make(spec);
  json units = json::array(), factors = json::array();
  for (std::size_t x = 0; x < r->size(); ++x)
    if (r->is_unit(static_cast<Elem>(x))) units.push_back(elem_to_json(*r, static_cast<Elem>(x)));
  const auto& ld = r->local_factors();
  for (std::size_t i = 0; i < ld.count(); ++i)
    factors.push_back({{"ring", ld.factors[i]->spec()}, {"idempotent", elem_to_json(*r, ld.idempotents[i])}});
  return {{"ring", r->spec()},  {"size", r->size()}, {"moduli", r->moduli()}, {"local", r->is_local()},
          {"units", units},     {"local_factors", factors}};
}

json hom_enum(const CatSpec& c, int src, int dst, bool count_only, long long limit) {
  auto cat = c.build();
  const auto& hs = cat->hom(src, dst);
  if (count_only) return {{"count", hs.size()}};
  std::size_t n = limit < 0 ? hs.size() : std::min<std::size_t>(hs.size(), static_cast<std::size_t>(limit));
  json out = json::array();
  for (std::size_t i = 0; i < n; ++i) out.push_back(cat->to_json(hs[i]));
  return out;
}

json factor(const std::string& ring, const json& matrix, bool symplectic) {
  auto r = FiniteRing::make(ring);
  Mat f = mat_from_json(r, matrix);
  if (symplectic) {
    auto o = osi_factor(f);
    return {{"f1", mat_entries_json(o.f1)}, {"f2", mat_entries_json(o.f2)}, {"lambda", o.lambda.to_json()}};
  }
  auto s = factor_surjection(f);
  return {{"f1", mat_entries_json(s.f1)}, {"f2", mat_entries_json(s.f2)}};
}

json compose(const CatSpec& c, const json& gj, const json& fj, int src, int dst) {
  auto cat = c.build();
  Morphism f = parse_morphism(*cat, fj, src, dst);
  Morphism g = parse_morphism(*cat, gj, f.dst, -1);
  if (g.src != f.dst) throw PreconditionError("bad_compose", "source of g differs from target of f");
  return cat->to_json(cat->compose(g, f));
}

json order_cmp(const CatSpec& c, const json& fj, const json& gj) {
  auto [cat, f, g] = order_pair(c, fj, gj);
  if (cat->kind() == "OSI") {
    const auto& si = dynamic_cast<const SiCategory&>(*cat);
    Mat a = si.mat_of(f), b = si.mat_of(g);
    return {{"preceq", osi_preceq(a, b)}, {"cmp", ord_name(osi_total_cmp(a, b))}};
  }
  const auto& ov = dynamic_cast<const VicCategory&>(*cat);
  return {{"preceq", ovic_preceq(ov, f, g)}, {"cmp", ord_name(ovic_total_cmp(ov, f, g))}};
}

json order_phi(const CatSpec& c, const json& fj, const json& gj) {
  auto [cat, f, g] = order_pair(c, fj, gj);
  if (cat->kind() == "OSI") {
    const auto& si = dynamic_cast<const SiCategory&>(*cat);
    Mat a = si.mat_of(f), b = si.mat_of(g);
    if (!osi_preceq(a, b)) throw PreconditionError("not_preceq", "f ≼ g fails");
    return cat->to_json(si.make(osi_insertion_phi(a, b)));
  }
  const auto& ov = dynamic_cast<const VicCategory&>(*cat);
  if (!ovic_preceq(ov, f, g)) throw PreconditionError("not_preceq", "f ≼ g fails");
  return cat->to_json(ovic_phi_for(ov, f, g));
}

json axioms(const CatSpec& c, int rank) { return check_axioms(*c.build(), rank).to_json(); }

json counts(const CatSpec& c, int rank) {
  auto cat = c.build();
  auto vic = dynamic_cast<const VicCategory*>(cat.get());
  auto size = [&](int a, int b) -> std::uint64_t {
    if (vic && cat->enumeration_bound(a, b) > cat->budget()) return vic->count_via_factors(a, b);
    return cat->hom(a, b).size();
  };
  json out = json::array();
  for (int n = 0; n <= rank; ++n)
    for (int r = 0; r <= n; ++r) {
      std::uint64_t h = size(r, n), ac = size(n - r, n - r), an = size(n, n);
      out.push_back({{"r", r}, {"n", n}, {"hom", h}, {"aut_complement", ac}, {"aut", an},
                     {"formula", cat->hom_count(r, n)}, {"identity", h * ac == an}});
    }
  return out;
}

json module_dims(const CatSpec& c, const std::string& module, int rank, const std::string& field) {
  auto P = representable(c.build(), parse_module(module), rank, CoefField::parse(field));
  return {{"cat", P->category()->name()}, {"module", P->name()}, {"field", P->field().name()}, {"dims", P->dims()}};
}

json homology(const CatSpec& c, const HomologyArgs& a) {
  int N = a.truncation < 0 ? a.rank : a.truncation;
  if (a.rank < 0 || N < a.rank) throw PreconditionError("bad_rank", "need 0 <= rank <= truncation");
  int q = a.degree < 0 ? std::max(a.rank - 1, 0) : a.degree;
  auto cx = ShiftComplex::of_representable(c.build(), parse_module(a.module), parse_shift_variant(a.variant), N,
                                           CoefField::parse(a.field), q);
  json out = json::array({complex_homology(cx, a.rank)});
  if (a.thresholds) out.push_back(exactness_report(cx));
  return out;
}

}  // namespace ficat::api
