#include <algorithm>
#include <numeric>

#include "ficat/category.hpp"
#include "ficat/error.hpp"

namespace ficat {

namespace {

class FiCategory final : public Category {
 public:
  using Category::Category;

  std::string name() const override { return "FI"; }
  std::string kind() const override { return "FI"; }

  std::uint64_t hom_count(int m, int n) const override {
    return m > n ? 0 : falling(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m));
  }

  Morphism compose(const Morphism& g, const Morphism& f) const override {
    if (f.dst != g.src) throw PreconditionError("rank_mismatch", "FI compose: target of f is not source of g");
    Morphism h{f.src, g.dst, std::vector<Elem>(f.data.size())};
    for (std::size_t j = 0; j < f.data.size(); ++j) h.data[j] = g.data[f.data[j]];
    return h;
  }

  Morphism identity(int n) const override {
    Morphism id{n, n, std::vector<Elem>(n)};
    std::iota(id.data.begin(), id.data.end(), Elem{0});
    return id;
  }

  Morphism sum(const Morphism& f, const Morphism& g) const override {
    Morphism h{f.src + g.src, f.dst + g.dst, f.data};
    for (Elem x : g.data) h.data.push_back(static_cast<Elem>(x + f.dst));
    return h;
  }

  Morphism factor_map(int n, const std::vector<int>& positions) const override {
    Morphism h{static_cast<int>(positions.size()), n, {}};
    for (int p : positions) h.data.push_back(static_cast<Elem>(p));
    if (!is_member(h)) throw PreconditionError("bad_positions", "FI factor_map: positions must be distinct and < n");
    return h;
  }

  std::optional<Morphism> join(const Morphism& f, const Morphism& g) const override {
    if (f.dst != g.dst) throw PreconditionError("rank_mismatch", "FI join: different targets");
    Morphism h{f.src + g.src, f.dst, f.data};
    h.data.insert(h.data.end(), g.data.begin(), g.data.end());
    if (!is_member(h)) return std::nullopt;
    return h;
  }

  Morphism complement_of(const Morphism& f) const override {
    std::vector<char> used(f.dst, 0);
    for (Elem x : f.data) used[x] = 1;
    Morphism c{f.dst - f.src, f.dst, {}};
    for (int i = 0; i < f.dst; ++i)
      if (!used[i]) c.data.push_back(static_cast<Elem>(i));
    return c;
  }

  std::optional<Morphism> factor_through(const Morphism& big, const Morphism& small) const override {
    if (big.dst != small.dst) return std::nullopt;
    std::vector<int> where(big.dst, -1);
    for (std::size_t j = 0; j < big.data.size(); ++j) where[big.data[j]] = static_cast<int>(j);
    Morphism psi{small.src, big.src, {}};
    for (Elem x : small.data) {
      if (where[x] < 0) return std::nullopt;
      psi.data.push_back(static_cast<Elem>(where[x]));
    }
    return psi;
  }

  bool is_member(const Morphism& f) const override {
    if (f.src < 0 || f.dst < f.src || static_cast<int>(f.data.size()) != f.src) return false;
    std::vector<char> seen(f.dst, 0);
    for (Elem x : f.data) {
      if (x >= f.dst || seen[x]) return false;
      seen[x] = 1;
    }
    return true;
  }

  nlohmann::json payload_json(const Morphism& f) const override {
    auto out = nlohmann::json::array();
    for (Elem x : f.data) out.push_back(x + 1);
    return out;
  }

  Morphism from_payload(int src, int dst, const nlohmann::json& payload) const override {
    if (!payload.is_array()) throw PreconditionError("bad_morphism", "FI payload must be a list of images");
    Morphism f{src < 0 ? static_cast<int>(payload.size()) : src, dst, {}};
    for (const auto& v : payload) {
      long long x = v.get<long long>();
      if (x < 1 || x > dst) throw PreconditionError("bad_morphism", "FI image out of range");
      f.data.push_back(static_cast<Elem>(x - 1));
    }
    return f;
  }

 protected:
  std::vector<Morphism> enumerate(int m, int n) const override {
    std::vector<Morphism> out;
    out.reserve(hom_count(m, n));
    std::vector<Elem> cur(m);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int j) -> void {
      if (j == m) {
        out.push_back({m, n, cur});
        return;
      }
      for (int x = 0; x < n; ++x) {
        if (used[x]) continue;
        used[x] = 1;
        cur[j] = static_cast<Elem>(x);
        self(self, j + 1);
        used[x] = 0;
      }
    };
    rec(rec, 0);
    return out;
  }
};

}  // namespace

CategoryPtr fi_category(std::uint64_t budget) { return std::make_shared<FiCategory>(budget); }

}  // namespace ficat
