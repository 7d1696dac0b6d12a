#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "ficat/category.hpp"

namespace ficat {

struct AxiomCheck {
  std::string name;
  bool passed = true;
  // "exhaustive": every tuple enumerated. "factored": exact, through transitivity
  // and invertibility of automorphisms. "sampled": deterministic sample.
  std::string method = "exhaustive";
  std::uint64_t checked = 0;
  std::string detail;
};

struct AxiomReport {
  std::string cat;
  int max_rank = 0;
  std::vector<AxiomCheck> checks;
  bool ok() const;
  nlohmann::json to_json() const;
};

/**
 * Unit laws, associativity, monomorphisms, initial unit object, injectivity of
 * Hom(V ⊛ V', W) -> Hom(V, W) x Hom(V', W), existence and uniqueness of
 * complements, and symmetry coherence for symmetric instances, up to max_rank.
 * Direct enumeration is used while the work stays below `direct_limit`.
 */
AxiomReport check_axioms(const Category& cat, int max_rank, std::uint64_t direct_limit = 20000000);

struct GroupStructureReport {
  std::string cat;
  int r = 0, n = 0;
  std::uint64_t hom_size = 0, aut_n = 0, aut_complement = 0;
  std::uint64_t orbit_size = 0, stabilizer_size = 0;
  bool transitive = false;
  bool embedding_injective = false;    // beta -> id_r ⊛ beta into the stabilizer
  bool stabilizer_is_image = false;    // ... and onto it
  bool counting_identity = false;      // |hom(r,n)| * |aut(n-r)| = |aut(n)|
  bool ok() const;
  nlohmann::json to_json() const;
};

GroupStructureReport group_structure_report(const Category& cat, int r, int n);

}  // namespace ficat
