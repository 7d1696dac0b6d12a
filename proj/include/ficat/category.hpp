#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "ficat/ring.hpp"

namespace ficat {

// A morphism X^src -> X^dst. The payload layout is owned by the category.
struct Morphism {
  int src = 0;
  int dst = 0;
  std::vector<Elem> data;

  friend auto operator<=>(const Morphism&, const Morphism&) = default;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

struct ElemVecHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept;
};

// Enumeration budget: FICAT_BUDGET if set, else one million morphisms.
std::uint64_t default_budget();

/**
 * A skeletal complemented category: objects are ranks n standing for X^n.
 *
 * hom(m, n) is materialized once, sorted by payload, and memoized under a mutex.
 * Materialization throws BudgetExceeded when hom_count(m, n) exceeds the budget.
 */
class Category {
 public:
  explicit Category(std::uint64_t budget = default_budget()) : budget_(budget) {}
  virtual ~Category() = default;
  Category(const Category&) = delete;
  Category& operator=(const Category&) = delete;

  virtual std::string name() const = 0;
  virtual std::string kind() const = 0;
  virtual RingPtr ring() const { return nullptr; }
  virtual bool symmetric() const { return true; }
  virtual bool complemented() const { return true; }

  std::uint64_t budget() const { return budget_; }
  void set_budget(std::uint64_t b) { budget_ = b; }

  const std::vector<Morphism>& hom(int m, int n) const;
  const std::vector<Morphism>& aut(int n) const { return hom(n, n); }
  // Cardinality without materializing where the instance supports it.
  virtual std::uint64_t hom_count(int m, int n) const;
  // Upper bound on |hom(m, n)| checked against the budget before enumerating.
  virtual std::uint64_t enumeration_bound(int m, int n) const { return hom_count(m, n); }
  std::optional<std::size_t> find(const Morphism& f) const;
  std::size_t index_of(const Morphism& f) const;

  virtual Morphism compose(const Morphism& g, const Morphism& f) const = 0;
  virtual Morphism identity(int n) const = 0;
  // Monoidal sum f ⊛ g.
  virtual Morphism sum(const Morphism& f, const Morphism& g) const = 0;
  // X^k -> X^n sending the j-th factor to factor positions[j] (0-based).
  virtual Morphism factor_map(int n, const std::vector<int>& positions) const = 0;
  Morphism canonical(int m, int n) const;
  Morphism canonical_second(int m, int n) const;
  // The morphism X^{a+b} -> V restricting to f and g on the two factors, if any.
  virtual std::optional<Morphism> join(const Morphism& f, const Morphism& g) const = 0;
  // Complement of the subobject presented by f, as a morphism X^{n-m} -> X^n.
  virtual Morphism complement_of(const Morphism& f) const = 0;
  // psi with big ∘ psi = small, if one exists.
  virtual std::optional<Morphism> factor_through(const Morphism& big, const Morphism& small) const;

  virtual bool is_member(const Morphism& f) const = 0;
  void check_member(const Morphism& f, const char* where) const;

  virtual nlohmann::json payload_json(const Morphism& f) const = 0;
  virtual Morphism from_payload(int src, int dst, const nlohmann::json& payload) const = 0;
  nlohmann::json to_json(const Morphism& f) const;
  Morphism from_json(const nlohmann::json& j) const;

 protected:
  virtual std::vector<Morphism> enumerate(int m, int n) const = 0;

 private:
  struct HomSet {
    std::vector<Morphism> items;
    std::unordered_map<std::vector<Elem>, std::size_t, ElemVecHash> index;
  };
  std::shared_ptr<const HomSet> hom_set(int m, int n) const;

  std::uint64_t budget_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<const HomSet>> cache_;
};

using CategoryPtr = std::shared_ptr<const Category>;

// FI: finite sets and injections. Payload: the injection table, 0-based.
CategoryPtr fi_category(std::uint64_t budget = default_budget());

/**
 * Parses a category descriptor: "FI", "VIC", "OVIC", "SI", "OSI", with a ring
 * for all but FI and an optional unit subgroup for VIC.
 */
CategoryPtr make_category(const std::string& kind, const std::string& ring_spec = "",
                          const std::vector<long long>& units = {}, std::uint64_t budget = default_budget());

// Factorial and falling products used by counting routines.
std::uint64_t falling(std::uint64_t n, std::uint64_t k);

}  // namespace ficat
