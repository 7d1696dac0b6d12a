#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "ficat/category.hpp"

namespace ficat::api {

// JSON-in, JSON-out operations shared by the command-line tool and the Python module.

struct CatSpec {
  std::string cat = "FI";
  std::string ring;
  std::vector<long long> units;
  CategoryPtr build() const;
};

nlohmann::json ring_info(const std::string& ring);
// One record per morphism, or {"count": n} when count_only.
nlohmann::json hom_enum(const CatSpec& c, int src, int dst, bool count_only, long long limit = -1);
nlohmann::json factor(const std::string& ring, const nlohmann::json& matrix, bool symplectic = false);
// Morphisms are {"src","dst","payload"} records or bare payloads; for a bare
// f the ranks come from `src`/`dst`, for a bare g the source is f's target.
nlohmann::json compose(const CatSpec& c, const nlohmann::json& g, const nlohmann::json& f, int src = -1,
                       int dst = -1);
nlohmann::json order_cmp(const CatSpec& c, const nlohmann::json& f, const nlohmann::json& g);
nlohmann::json order_phi(const CatSpec& c, const nlohmann::json& f, const nlohmann::json& g);
nlohmann::json axioms(const CatSpec& c, int rank);
// One record per 0 <= r <= n <= rank.
nlohmann::json counts(const CatSpec& c, int rank);
nlohmann::json module_dims(const CatSpec& c, const std::string& module, int rank, const std::string& field);

struct HomologyArgs {
  std::string module = "P0";
  std::string variant = "plain";
  std::string field = "Q";
  int rank = 0;
  int truncation = -1;  // defaults to rank
  int degree = -1;      // defaults to max(rank - 1, 0)
  bool thresholds = false;
};
// The homology record, followed by the exactness report when requested.
nlohmann::json homology(const CatSpec& c, const HomologyArgs& a);

int parse_module(const std::string& s);

}  // namespace ficat::api
