#pragma once

#include <memory>
#include <vector>

#include "ficat/category.hpp"
#include "ficat/matrix.hpp"

namespace ficat {

// A subgroup U of the unit group of a ring.
struct UnitSubgroup {
  RingPtr ring;
  std::vector<Elem> members;  // sorted

  static UnitSubgroup all(RingPtr r);
  // Throws PreconditionError unless the integers reduce to a subgroup of units.
  static UnitSubgroup make(RingPtr r, const std::vector<long long>& ints);
  bool contains(Elem x) const;
  bool is_all() const;
  nlohmann::json to_json() const;
};

/**
 * VIC(R, U) and its subcategory OVIC(R). A morphism R^m -> R^n is a pair
 * (f, f') with f: n x m, f': m x n and f' f = 1; at m = n also det(f) in U.
 * OVIC additionally requires f' column-adapted.
 *
 * Payload: f row-major, then f' row-major.
 */
class VicCategory final : public Category {
 public:
  VicCategory(RingPtr r, UnitSubgroup u, bool ordered, std::uint64_t budget = default_budget());

  std::string name() const override;
  std::string kind() const override { return ordered_ ? "OVIC" : "VIC"; }
  RingPtr ring() const override { return ring_; }
  bool symmetric() const override;
  bool complemented() const override { return !ordered_; }
  bool ordered() const { return ordered_; }
  const UnitSubgroup& units() const { return units_; }

  std::uint64_t hom_count(int m, int n) const override;
  // Count assembled from enumerations over the local factors, grouped by
  // determinant at equal ranks. Materializes only factor hom sets.
  std::uint64_t count_via_factors(int m, int n) const;

  Morphism compose(const Morphism& g, const Morphism& f) const override;
  Morphism identity(int n) const override;
  Morphism sum(const Morphism& f, const Morphism& g) const override;
  Morphism factor_map(int n, const std::vector<int>& positions) const override;
  std::optional<Morphism> join(const Morphism& f, const Morphism& g) const override;
  Morphism complement_of(const Morphism& f) const override;
  std::optional<Morphism> factor_through(const Morphism& big, const Morphism& small) const override;
  bool is_member(const Morphism& f) const override;
  nlohmann::json payload_json(const Morphism& f) const override;
  Morphism from_payload(int src, int dst, const nlohmann::json& payload) const override;

  Mat f_of(const Morphism& mor) const;
  Mat fp_of(const Morphism& mor) const;
  Morphism make(const Mat& f, const Mat& fp) const;

 protected:
  std::vector<Morphism> enumerate(int m, int n) const override;

 private:
  RingPtr ring_;
  UnitSubgroup units_;
  bool ordered_;
  mutable std::mutex factor_mu_;
  mutable std::vector<std::shared_ptr<const VicCategory>> factor_cats_;

  const std::vector<std::shared_ptr<const VicCategory>>& factor_categories() const;
  std::vector<Morphism> enumerate_local(int m, int n) const;
  std::vector<Morphism> enumerate_product(int m, int n) const;
  std::pair<Mat, Mat> complement_local(const Mat& f, const Mat& fp) const;
};

using VicPtr = std::shared_ptr<const VicCategory>;

VicPtr make_vic(RingPtr r, std::uint64_t budget = default_budget());
VicPtr make_vic(RingPtr r, UnitSubgroup u, std::uint64_t budget = default_budget());
VicPtr make_ovic(RingPtr r, std::uint64_t budget = default_budget());

// |GL_n(R)| by the local-factor order formula.
std::uint64_t gl_order(const FiniteRing& r, int n);
// |Hom_VIC(R)(m, n)| by the local-factor formula (U = all units).
std::uint64_t vic_hom_formula(const FiniteRing& r, int m, int n);

struct VicFactorization {
  Morphism ovic;  // in OVIC(R)
  Morphism aut;   // an automorphism of R^m in VIC(R)
};
// mor = ovic ∘ aut, using the column-adapted factorization of f'.
VicFactorization vic_factor(const VicCategory& cat, const Morphism& mor);

struct ViVCounts {
  std::uint64_t vi = 0;
  std::uint64_t v = 0;
};
// VI: maps R^m -> R^n with a left inverse (brute force). V: maps with free
// cokernel, summed over the free rank k of the image as
// surj(m, k) * vi(k, n) / |GL_k|.
ViVCounts vi_v_hom_counts(const RingPtr& r, int m, int n, std::uint64_t budget = default_budget());
// Brute-force count of maps R^m -> R^n with free cokernel.
std::uint64_t v_hom_count_bruteforce(const RingPtr& r, int m, int n, std::uint64_t budget = default_budget());

// All vectors of R^k in lexicographic index order, flattened.
std::vector<Elem> all_vectors(const FiniteRing& r, int k);

}  // namespace ficat
