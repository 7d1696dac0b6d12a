#include "ficat/category.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "ficat/error.hpp"

namespace ficat {

std::size_t ElemVecHash::operator()(const std::vector<Elem>& v) const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ v.size();
  for (Elem e : v) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("FICAT_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1'000'000;
}

std::uint64_t falling(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < k; ++i) out *= (n - i);
  return out;
}

std::uint64_t Category::hom_count(int m, int n) const { return hom(m, n).size(); }

std::shared_ptr<const Category::HomSet> Category::hom_set(int m, int n) const {
  if (m < 0 || n < 0) throw PreconditionError("bad_rank", "negative rank");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find({m, n});
    if (it != cache_.end()) return it->second;
  }
  auto set = std::make_shared<HomSet>();
  if (m <= n) {
    std::uint64_t need = enumeration_bound(m, n);
    if (need > budget_) throw BudgetExceeded(need, budget_, name() + " hom(" + std::to_string(m) + "," + std::to_string(n) + ")");
    set->items = enumerate(m, n);
    if (!std::is_sorted(set->items.begin(), set->items.end()))
      std::sort(set->items.begin(), set->items.end());
    set->index.reserve(set->items.size());
    for (std::size_t i = 0; i < set->items.size(); ++i)
      if (!set->index.emplace(set->items[i].data, i).second)
        throw InvariantViolation(name() + ": duplicate morphism in enumeration");
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = cache_.emplace(std::make_pair(m, n), set);
  return it->second;
}

const std::vector<Morphism>& Category::hom(int m, int n) const { return hom_set(m, n)->items; }

std::optional<std::size_t> Category::find(const Morphism& f) const {
  auto set = hom_set(f.src, f.dst);
  auto it = set->index.find(f.data);
  if (it == set->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Category::index_of(const Morphism& f) const {
  auto i = find(f);
  if (!i) throw InvariantViolation(name() + ": morphism not found in its hom set");
  return *i;
}

Morphism Category::canonical(int m, int n) const {
  if (m > n) throw PreconditionError("bad_rank", "canonical(m,n) needs m <= n");
  std::vector<int> pos(m);
  std::iota(pos.begin(), pos.end(), 0);
  return factor_map(n, pos);
}

Morphism Category::canonical_second(int m, int n) const {
  if (m > n) throw PreconditionError("bad_rank", "canonical_second(m,n) needs m <= n");
  std::vector<int> pos(n - m);
  std::iota(pos.begin(), pos.end(), m);
  return factor_map(n, pos);
}

std::optional<Morphism> Category::factor_through(const Morphism& big, const Morphism& small) const {
  if (big.dst != small.dst || big.src < small.src) return std::nullopt;
  for (const auto& psi : hom(small.src, big.src))
    if (compose(big, psi) == small) return psi;
  return std::nullopt;
}

void Category::check_member(const Morphism& f, const char* where) const {
  if (!is_member(f)) throw InvariantViolation(name() + ": " + where + " produced a non-member");
}

nlohmann::json Category::to_json(const Morphism& f) const {
  return {{"cat", name()}, {"src", f.src}, {"dst", f.dst}, {"payload", payload_json(f)}};
}

Morphism Category::from_json(const nlohmann::json& j) const {
  if (!j.is_object() || !j.contains("payload"))
    throw PreconditionError("bad_morphism", "morphism JSON needs src, dst and payload");
  int src = j.value("src", -1), dst = j.value("dst", -1);
  Morphism f = from_payload(src, dst, j.at("payload"));
  if (!is_member(f)) throw PreconditionError("bad_morphism", "payload is not a morphism of " + name());
  return f;
}

}  // namespace ficat
