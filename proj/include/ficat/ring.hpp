#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ficat {

// Ring elements are indices 0..size-1 into the ring's canonical element order.
using Elem = std::uint16_t;

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

struct LocalDecomposition;

/**
 * A finite commutative ring of the form Z/n1 x Z/n2 x ... .
 *
 * Elements are indexed in mixed-radix order over the component residues, the
 * first component being the most significant digit. Z/n is the special case of
 * one component, where the index is the residue itself.
 *
 * Instances are immutable after construction and safe to share across threads.
 */
class FiniteRing {
 public:
  static constexpr std::size_t kDefaultSizeBound = 4096;

  // Parses "Z/n" or "Z/n1 x Z/n2 x ...". Throws PreconditionError on a malformed
  // spec, a modulus below 2, or a total size above `size_bound`.
  static RingPtr make(std::string_view spec, std::size_t size_bound = kDefaultSizeBound);

  const std::string& spec() const { return spec_; }
  std::size_t size() const { return size_; }
  const std::vector<int>& moduli() const { return moduli_; }

  Elem zero() const { return 0; }
  Elem one() const { return one_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;

  bool is_unit(Elem x) const { return inverse_[x] != kNoInverse; }
  // The unique y with x*y = 1, or empty when x is not a unit.
  std::optional<Elem> inverse(Elem x) const;

  // Image of an integer under the ring map Z -> R.
  Elem from_int(long long v) const;
  // Element with the given component residues (each reduced into its modulus).
  Elem from_components(std::span<const long long> residues) const;
  std::vector<int> components(Elem x) const;

  bool is_local() const { return local_; }
  // Decomposition into local factors. For a local ring the only factor is a
  // ring equal to this one.
  const LocalDecomposition& local_factors() const;

  bool valid(Elem x) const { return x < size_; }
  void check_elem(Elem x) const;

  // Rings are equal when their canonical specs agree.
  friend bool operator==(const FiniteRing& a, const FiniteRing& b) { return a.spec_ == b.spec_; }

  explicit FiniteRing(std::vector<int> moduli);

 private:
  static constexpr Elem kNoInverse = 0xffff;
  static constexpr std::size_t kTableBound = 256;

  std::string spec_;
  std::vector<int> moduli_;
  std::vector<int> radix_;  // weight of each component digit
  std::size_t size_ = 0;
  Elem one_ = 0;
  bool local_ = false;

  std::vector<Elem> add_table_;
  std::vector<Elem> mul_table_;
  std::vector<Elem> inverse_;

  mutable std::shared_ptr<const LocalDecomposition> decomposition_;
  mutable std::once_flag decomposition_once_;

  Elem add_slow(Elem a, Elem b) const;
  Elem mul_slow(Elem a, Elem b) const;
};

/**
 * R = R_1 x ... x R_q with every R_i local. Factors are ordered by size, then
 * by spec text, then by the index of their idempotent in R.
 */
struct LocalDecomposition {
  std::vector<RingPtr> factors;
  std::vector<Elem> idempotents;              // e_i in R, orthogonal, summing to 1
  std::vector<std::vector<Elem>> projection;  // projection[i][x] = component of x in R_i
  std::vector<std::vector<Elem>> embedding;   // embedding[i][y] = image of y in R (as y * e_i)
  std::vector<Elem> lift_table;                // indexed by factor components, first most significant

  std::size_t count() const { return factors.size(); }
  std::vector<Elem> project(Elem x) const;
  Elem lift(std::span<const Elem> parts) const;
};

inline const LocalDecomposition& local_factors(const FiniteRing& r) { return r.local_factors(); }

// The unique inverse of x when it is a unit.
inline std::optional<Elem> unit_test(const FiniteRing& r, Elem x) {
  r.check_elem(x);
  return r.inverse(x);
}

}  // namespace ficat
