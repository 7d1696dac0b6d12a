#pragma once

#include <memory>

#include "ficat/category.hpp"
#include "ficat/matrix.hpp"

namespace ficat {

// An alternating nondegenerate bilinear form on R^{2n}, given by its Gram matrix.
struct SymplecticForm {
  RingPtr ring;
  Mat gram;

  // Interleaved basis a_1, b_1, a_2, b_2, ... with omega(a_i, b_i) = 1.
  static SymplecticForm standard(RingPtr r, int pairs);
  int dim() const { return gram.rows; }
  // Alternating (zero diagonal, antisymmetric) with unit determinant.
  bool valid() const;
  Elem pair(const Mat& u, int i, const Mat& v, int j) const;  // omega(u[:,i], v[:,j])
  nlohmann::json to_json() const;
  static SymplecticForm from_json(const RingPtr& r, const nlohmann::json& j);

  friend bool operator==(const SymplecticForm& x, const SymplecticForm& y) { return x.gram == y.gram; }
};

// f^T * dst * f == src.
bool symplectic_check(const Mat& f, const SymplecticForm& src, const SymplecticForm& dst);
// Columns a_1, b_1, ... of `basis` satisfy the symplectic basis relations and span.
bool symplectic_basis_check(const Mat& basis, const SymplecticForm& form);
// A symplectic basis (as columns) of the perpendicular of the span of the
// columns of w. Throws PreconditionError when w is degenerate.
Mat perp(const Mat& w, const SymplecticForm& form);

// |Sp_{2n}(R)| by the local-factor formula.
std::uint64_t sp_order(const FiniteRing& r, int n);

/**
 * SI(R) and OSI(R). Objects are ranks n standing for (R^{2n}, std). A morphism
 * n -> n' is a 2n' x 2n matrix f with f^T omega f = omega. OSI also requires f
 * row-adapted. Payload: f row-major.
 */
class SiCategory final : public Category {
 public:
  SiCategory(RingPtr r, bool ordered, std::uint64_t budget = default_budget());

  std::string name() const override { return kind() + "(" + ring_->spec() + ")"; }
  std::string kind() const override { return ordered_ ? "OSI" : "SI"; }
  RingPtr ring() const override { return ring_; }
  bool symmetric() const override { return !ordered_; }
  bool complemented() const override { return !ordered_; }
  bool ordered() const { return ordered_; }

  std::uint64_t hom_count(int m, int n) const override;
  std::uint64_t enumeration_bound(int m, int n) const override;

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

  Mat mat_of(const Morphism& mor) const;
  Morphism make(const Mat& f) const;

 protected:
  std::vector<Morphism> enumerate(int m, int n) const override;

 private:
  RingPtr ring_;
  bool ordered_;
};

using SiPtr = std::shared_ptr<const SiCategory>;
SiPtr make_si(RingPtr r, std::uint64_t budget = default_budget());
SiPtr make_osi(RingPtr r, std::uint64_t budget = default_budget());

struct OsiFactorization {
  Mat f1;  // row-adapted, symplectic from (R^{2d}, lambda)
  Mat f2;  // iso (R^{2d}, std) -> (R^{2d}, lambda)
  SymplecticForm lambda;
};
// f = f1 * f2 for a symplectic map f out of (R^{2d}, std).
OsiFactorization osi_factor(const Mat& f);

}  // namespace ficat
