// ficat command-line front end. Every subcommand prints JSON lines on stdout.
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ficat/api.hpp"
#include "ficat/checks.hpp"
#include "ficat/error.hpp"

using namespace ficat;
using nlohmann::json;

namespace {

bool g_pretty = false;

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit(const json& j) {
  if (!g_pretty) {
    std::cout << j.dump() << '\n';
    return;
  }
  if (!j.is_object()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::size_t w = 0;
  for (const auto& [k, v] : j.items()) w = std::max(w, k.size());
  for (const auto& [k, v] : j.items()) {
    std::cout << std::left << std::setw(static_cast<int>(w) + 2) << k;
    if (v.is_object()) {
      bool first = true;
      for (const auto& [k2, v2] : v.items()) {
        std::cout << (first ? "" : "  ") << k2 << "=" << scalar(v2);
        first = false;
      }
      std::cout << '\n';
    } else {
      std::cout << scalar(v) << '\n';
    }
  }
  std::cout << '\n';
}

void add_cat(CLI::App* sub, api::CatSpec& o) {
  sub->add_option("--cat", o.cat, "FI, VIC, OVIC, SI or OSI")->required();
  sub->add_option("--ring", o.ring, "ring, e.g. Z/4 or 'Z/2 x Z/3'");
  sub->add_option("--units", o.units, "unit subgroup for VIC, as integers")->delimiter(',');
}

void emit_all(const json& j) {
  if (j.is_array())
    for (const auto& x : j) emit(x);
  else
    emit(j);
}

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw PreconditionError("bad_json", std::string(what) + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ficat: complemented categories, their orders and shift complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", g_pretty, "human-readable table instead of JSON lines");

  std::string ring, matrix, f_text, g_text, module = "P0", field = "Q", profile = "full";
  api::HomologyArgs ha;
  api::CatSpec co;
  int src = -1, dst = -1, rank = 2;
  long long limit = -1;
  bool count_only = false, symplectic = false, timing = false;
  std::uint64_t seed = 0;
  std::vector<int> only;

  auto ring_info = app.add_subcommand("ring-info", "ring structure and local factors");
  ring_info->add_option("--ring", ring)->required();

  auto hom_enum = app.add_subcommand("hom-enum", "enumerate Hom(X^src, X^dst)");
  add_cat(hom_enum, co);
  hom_enum->add_option("--src", src)->required();
  hom_enum->add_option("--dst", dst)->required();
  hom_enum->add_flag("--count-only", count_only);
  hom_enum->add_option("--limit", limit, "print at most this many morphisms");

  auto factor = app.add_subcommand("factor", "unique factorization of a surjection or symplectic map");
  factor->add_option("--ring", ring)->required();
  factor->add_option("--matrix", matrix, "rows as JSON")->required();
  factor->add_flag("--symplectic", symplectic, "factor f = f1 f2 with f1 row-adapted");

  auto compose = app.add_subcommand("compose", "g ∘ f");
  add_cat(compose, co);
  compose->add_option("--g", g_text)->required();
  compose->add_option("--f", f_text)->required();
  compose->add_option("--src", src, "source rank of f for bare payloads");
  compose->add_option("--dst", dst, "target rank of f for bare payloads");

  auto order_cmp = app.add_subcommand("order-cmp", "≼ and ≤ on P(1) over OVIC or OSI");
  auto order_phi = app.add_subcommand("order-phi", "insertion morphism φ with g = φ ∘ f for f ≼ g");
  for (auto sub : {order_cmp, order_phi}) {
    add_cat(sub, co);
    sub->add_option("--f", f_text)->required();
    sub->add_option("--g", g_text)->required();
  }

  auto axioms = app.add_subcommand("axioms", "complemented-category axiom suite");
  add_cat(axioms, co);
  axioms->add_option("--rank", rank, "maximal rank");

  auto counts = app.add_subcommand("counts", "|Hom(X^r,X^n)|·|Aut(X^{n-r})| = |Aut(X^n)| up to a rank");
  add_cat(counts, co);
  counts->add_option("--rank", rank, "maximal rank");

  auto module_dims = app.add_subcommand("module-dims", "dimensions of a representable module");
  auto homology = app.add_subcommand("homology", "homology of a shift complex");
  add_cat(module_dims, co);
  module_dims->add_option("--module", module, "P<d>");
  module_dims->add_option("--field", field, "Q or F<p>");
  module_dims->add_option("--rank", rank, "truncation");
  add_cat(homology, co);
  homology->add_option("--module", ha.module, "P<d>");
  homology->add_option("--field", ha.field, "Q or F<p>");
  homology->add_option("--variant", ha.variant, "plain, prime, double or triple");
  homology->add_option("--rank", ha.rank, "rank n of the complex")->required();
  homology->add_option("--truncation", ha.truncation, "truncation N >= rank (default rank)");
  homology->add_option("--degree", ha.degree, "top homological degree (default rank - 1)");
  homology->add_flag("--thresholds", ha.thresholds, "per-degree exactness thresholds up to the truncation");

  auto checks = app.add_subcommand("checks", "acceptance criteria");
  checks->add_option("--profile", profile, "quick or full");
  checks->add_option("--seed", seed);
  checks->add_option("--only", only, "criterion ids")->delimiter(',');
  checks->add_flag("--timing", timing, "include wall-clock seconds (output no longer byte-stable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit({{"error", "bad_arguments"}, {"detail", e.what()}});
    return 1;
  }

  try {
    if (*ring_info) {
      emit(api::ring_info(ring));
    } else if (*hom_enum) {
      emit_all(api::hom_enum(co, src, dst, count_only, limit));
    } else if (*factor) {
      emit(api::factor(ring, parse_json(matrix, "matrix"), symplectic));
    } else if (*compose) {
      emit(api::compose(co, parse_json(g_text, "g"), parse_json(f_text, "f"), src, dst));
    } else if (*order_cmp) {
      emit(api::order_cmp(co, parse_json(f_text, "f"), parse_json(g_text, "g")));
    } else if (*order_phi) {
      emit(api::order_phi(co, parse_json(f_text, "f"), parse_json(g_text, "g")));
    } else if (*axioms) {
      emit(api::axioms(co, rank));
    } else if (*counts) {
      emit_all(api::counts(co, rank));
    } else if (*module_dims) {
      emit(api::module_dims(co, module, rank, field));
    } else if (*homology) {
      emit_all(api::homology(co, ha));
    } else if (*checks) {
      ChecksOptions opts{profile, seed};
      validate_checks_options(opts);
      auto results = run_checks(opts, only);
      int failed = 0;
      for (const auto& r : results) {
        emit(r.to_json(timing));
        failed += !r.passed;
      }
      emit({{"profile", profile}, {"seed", seed}, {"criteria", results.size()},
            {"failed", failed}, {"result", failed ? "fail" : "pass"}});
      return failed ? 3 : 0;
    }
  } catch (const PreconditionError& e) {
    emit({{"error", e.code()}, {"detail", e.what()}});
    return 1;
  } catch (const BudgetExceeded& e) {
    emit({{"error", e.code()}, {"detail", e.what()}});
    return 2;
  } catch (const InvariantViolation& e) {
    emit({{"error", e.code()}, {"detail", e.what()}});
    return 3;
  } catch (const Error& e) {
    emit({{"error", e.code()}, {"detail", e.what()}});
    return 1;
  }
  return 0;
}
