#pragma once

#include <compare>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "ficat/category.hpp"
#include "ficat/field.hpp"
#include "ficat/linalg.hpp"

namespace ficat {

// Sparse coefficient vector with entries already reduced into the module's field.
using CoefVec = SparseVec<KOps>;

/**
 * A module over a category, known at ranks 0..N. act(f, x) applies the
 * structure map of f: X^m -> X^n to x in M_m.
 */
class TruncatedModule {
 public:
  virtual ~TruncatedModule() = default;
  virtual CategoryPtr category() const = 0;
  virtual int max_rank() const = 0;
  virtual CoefField field() const = 0;
  virtual std::size_t dim(int n) const = 0;
  virtual CoefVec act(const Morphism& f, const CoefVec& x) const = 0;
  virtual std::string name() const = 0;
  virtual nlohmann::json basis_label(int n, std::size_t i) const;

  KOps ops() const { return KOps{field()}; }
  std::vector<std::size_t> dims() const;
};

using ModulePtr = std::shared_ptr<const TruncatedModule>;

// P_d: the free space on hom(d, n) at rank n, acted on by postcomposition.
class Representable final : public TruncatedModule {
 public:
  Representable(CategoryPtr cat, int d, int max_rank, CoefField k);

  CategoryPtr category() const override { return cat_; }
  int max_rank() const override { return max_rank_; }
  CoefField field() const override { return k_; }
  std::size_t dim(int n) const override;
  CoefVec act(const Morphism& f, const CoefVec& x) const override;
  std::string name() const override { return "P" + std::to_string(d_); }
  nlohmann::json basis_label(int n, std::size_t i) const override;

  int degree() const { return d_; }
  const std::vector<Morphism>& basis(int n) const { return cat_->hom(d_, n); }
  CoefVec basis_vector(const Morphism& phi) const;

 private:
  CategoryPtr cat_;
  int d_;
  int max_rank_;
  CoefField k_;
};

using RepresentablePtr = std::shared_ptr<const Representable>;

RepresentablePtr representable(CategoryPtr cat, int d, int max_rank, CoefField k = CoefField::rationals());

struct Generator {
  int rank = 0;
  CoefVec vec;
};

// A submodule of a representable, stored as reduced row echelon spans.
class Submodule final : public TruncatedModule {
 public:
  Submodule(RepresentablePtr parent, std::vector<std::vector<CoefVec>> spans);

  CategoryPtr category() const override { return parent_->category(); }
  int max_rank() const override { return parent_->max_rank(); }
  CoefField field() const override { return parent_->field(); }
  std::size_t dim(int n) const override { return spans_.at(n).size(); }
  // Coordinates are taken with respect to the span rows.
  CoefVec act(const Morphism& f, const CoefVec& x) const override;
  std::string name() const override { return "sub(" + parent_->name() + ")"; }

  const RepresentablePtr& parent() const { return parent_; }
  const std::vector<CoefVec>& span(int n) const { return spans_.at(n); }
  bool contains(int n, const CoefVec& v) const;
  // Span coordinates of v; throws PreconditionError when v is not in the span.
  CoefVec coords(int n, const CoefVec& v) const;
  CoefVec lift(int n, const CoefVec& coords) const;

 private:
  CoefVec coords(int n, const CoefVec& v, bool unchecked) const;

  RepresentablePtr parent_;
  std::vector<std::vector<CoefVec>> spans_;
  std::vector<std::vector<std::uint32_t>> pivots_;
};

using SubmodulePtr = std::shared_ptr<const Submodule>;

/**
 * Smallest submodule containing the generators. Transitive categories use
 * canonical images plus Aut orbits rank by rank; ordered categories apply
 * every morphism from lower ranks.
 */
SubmodulePtr submodule_closure(RepresentablePtr parent, const std::vector<Generator>& gens);
// One more pass applying every morphism between ranks <= N leaves the spans unchanged.
bool closure_fixed_point(const Submodule& s);
// act(g∘f) = act(g) act(f) and act(id) = id on basis vectors; returns the number of checks.
std::size_t check_functoriality(const TruncatedModule& m, std::size_t limit = 200000);

// Module-total order on basis morphisms: OVIC and OSI only.
std::function<std::strong_ordering(const Morphism&, const Morphism&)> module_order(const Category& cat);

// Leading coefficient times the largest basis morphism present; empty for x = 0.
CoefVec init_of(const Representable& parent, int n, const CoefVec& x);
// Per rank, the sorted basis indices spanning the initial terms of s.
std::vector<std::vector<std::uint32_t>> init_module(const Submodule& s);

struct InitGapReport {
  int truncation = 0;
  std::vector<std::size_t> dims_n, dims_m, init_dims_n, init_dims_m;
  std::vector<bool> init_equal, module_equal;
  bool implication_holds = true;
  bool strict_init_somewhere = false;
  nlohmann::json to_json() const;
};

// Requires n ⊆ m (verified); compares initial modules and spans rank by rank.
InitGapReport init_gap_check(const Submodule& n, const Submodule& m);

}  // namespace ficat
