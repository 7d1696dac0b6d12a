#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ficat/category.hpp"
#include "ficat/module.hpp"

namespace ficat {

// Σ, Σ′ (Aut(X)^p orbits), Σ″ (𝔖_p orbits, signed), Σ‴ (𝔖_p ≀ Aut(X) orbits, signed).
enum class ShiftVariant { Plain, Prime, Double, Triple };

// "plain" (or "sigma"), "prime", "double", "triple".
ShiftVariant parse_shift_variant(const std::string& s);
std::string to_string(ShiftVariant v);

/**
 * Orbit identification of hom(p + d, n) for a shift variant: a basis morphism
 * phi is identified with sign(g) * phi ∘ (g ⊛ id_d) for g in the variant's group
 * acting on X^p. The representative of a class is its least member.
 */
class ShiftOrbits {
 public:
  ShiftOrbits(CategoryPtr cat, int d, ShiftVariant v);

  const CategoryPtr& category() const { return cat_; }
  int degree() const { return d_; }
  ShiftVariant variant() const { return v_; }

  // (representative, sign) with phi = sign * representative in the quotient;
  // sign 0 when the class vanishes.
  std::pair<Morphism, int> canonical(int p, const Morphism& phi) const;
  // Sum over i of (-1)^{i-1} phi ∘ (s_i ⊛ id_d), as canonical classes in degree p - 1.
  std::map<Morphism, long long> boundary(int p, const Morphism& phi) const;
  // phi-bar: X^{(p+1)+d} -> V ⊛ X, the new first factor sent to the new X.
  Morphism homotopy(int p, const Morphism& phi) const;
  // canonical(n, n+1) ∘ phi.
  Morphism stabilize(const Morphism& phi) const;
  // Sorted class representatives in hom(p + d, n).
  std::vector<Morphism> representatives(int n, int p) const;

 private:
  const std::vector<std::pair<Morphism, int>>& group(int p) const;

  CategoryPtr cat_;
  int d_;
  ShiftVariant v_;
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<std::pair<Morphism, int>>> groups_;
};

// Matrix of a linear map by columns, entries reduced into the field.
struct ChainMap {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<CoefVec> columns;
};

std::size_t rank_in_field(const CoefField& k, const std::vector<CoefVec>& vectors);

/**
 * Chain spaces (Σ_p M)_n and differentials d: C_p -> C_{p-1} at ranks 0..N and
 * degrees 0..q+1. d∘d = 0 is verified on construction.
 */
class ShiftComplex {
 public:
  // Representable route: C_p at rank n has basis the classes in hom(p + d, n).
  static ShiftComplex of_representable(CategoryPtr cat, int d, ShiftVariant v, int max_rank,
                                       CoefField k = CoefField::rationals(), int q = -1);
  // Complement route: C_p at rank n is the sum over classes h in hom(p, n) of
  // M_{n-p}, realized through complement_of(h).
  static ShiftComplex of_module(ModulePtr m, ShiftVariant v, int q = -1);

  ShiftVariant variant() const { return variant_; }
  const std::string& category_name() const { return cat_name_; }
  const std::string& module_name() const { return module_name_; }
  const CoefField& field() const { return field_; }
  int max_rank() const { return max_rank_; }
  int max_degree() const { return q_; }

  std::size_t dim(int n, int p) const;
  // d: C_p -> C_{p-1} at rank n, 1 <= p <= q + 1.
  const ChainMap& differential(int n, int p) const;
  std::size_t rank_of_differential(int n, int p) const;
  // H_0 .. H_q at rank n.
  std::vector<std::size_t> homology(int n) const;

  std::size_t dd_checks() const { return dd_checks_; }
  std::size_t equivariance_checks() const { return equivariance_checks_; }

 private:
  ShiftComplex() = default;
  void verify_dd();

  ShiftVariant variant_ = ShiftVariant::Plain;
  std::string cat_name_, module_name_;
  CoefField field_;
  int max_rank_ = 0;
  int q_ = 0;
  std::vector<std::vector<std::size_t>> dims_;
  std::vector<std::vector<ChainMap>> d_;  // d_[n][p], p >= 1
  std::vector<std::vector<std::size_t>> ranks_;
  std::size_t dd_checks_ = 0;
  std::size_t equivariance_checks_ = 0;
};

// {"cat","module","variant","rank","dims":{"H0":...},"truncation":N}.
nlohmann::json complex_homology(const ShiftComplex& c, int rank);

// Per degree, the least rank from which H_i vanishes through the truncation
// (null when H_i(N) != 0), plus anomalies where vanishing is not monotone.
nlohmann::json exactness_report(const ShiftComplex& c);

struct HomotopyDegree {
  int p = 0;
  std::size_t basis = 0;
  bool identity_holds = true;  // dG + Gd = I on every basis element
  std::size_t cycles = 0;
  bool induced_zero = true;
  std::string mode;  // "witness" or "witness+rank"
};

struct HomotopyReport {
  std::string cat, module, variant;
  int rank = 0;
  std::vector<HomotopyDegree> degrees;
  bool ok() const;
  nlohmann::json to_json() const;
};

/**
 * Checks dG + Gd = I from rank n to rank n + 1 degreewise, and that every cycle
 * z at rank n has I(z) = d(G z) one rank up; when the complex at rank n + 1 fits
 * the limit the boundary membership is also confirmed by a rank computation.
 */
HomotopyReport chain_homotopy_check(CategoryPtr cat, int d, ShiftVariant v, int n,
                                    CoefField k = CoefField::rationals(), std::size_t rank_limit = 60000);

struct GenerationReport {
  int truncation = 0;
  std::vector<std::size_t> dims, ranks;
  std::vector<bool> onto;
  std::optional<int> n0;
  nlohmann::json to_json() const;
};

// Surjectivity of d: (Σ_1 M)_n -> M_n at each rank, through complements.
GenerationReport generation_degree(const TruncatedModule& m);

}  // namespace ficat
